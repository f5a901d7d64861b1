#ifndef KSENDO_RAT_HPP
#define KSENDO_RAT_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace ksendo {

// Parse "p/q", "p" or a plain integer string into a canonical mpq.
mpq_class parse_rational(const std::string& s);

// Canonical text form "p/q" (or "p" when the denominator is 1).
std::string rational_to_string(const mpq_class& x);

// sign in {-1,0,1}
inline int sgn(const mpq_class& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(const mpz_class& x) { return mpz_sgn(x.get_mpz_t()); }

// Exact square root of a rational if it is a perfect square.
bool rational_sqrt(const mpq_class& x, mpq_class& root);

// Squarefree part: x = sf * s^2 with sf a squarefree integer carrying the
// sign of x.  Requires x != 0.  Denominators are cleared first
// (p/q ~ p*q mod squares).
mpz_class squarefree_part(const mpq_class& x);

// Factor |n| > 1 into primes (Miller-Rabin + Pollard rho).
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

bool is_probable_prime(const mpz_class& n);

} // namespace ksendo

#endif
