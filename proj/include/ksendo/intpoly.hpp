#ifndef KSENDO_INTPOLY_HPP
#define KSENDO_INTPOLY_HPP

#include <gmpxx.h>
#include <vector>

namespace ksendo {

// Dense univariate polynomials, ascending coefficients, no trailing zeros.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

namespace poly {

void normalize(QPoly& p);
void normalize(ZPoly& p);
int degree(const QPoly& p);   // -1 for the zero polynomial
int degree(const ZPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
// division with remainder, b != 0
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly gcd(QPoly a, QPoly b);  // monic gcd
QPoly derivative(const QPoly& a);
mpq_class eval(const QPoly& a, const mpq_class& x);

ZPoly mul(const ZPoly& a, const ZPoly& b);
mpz_class content(const ZPoly& a);
ZPoly primitive_part(const ZPoly& a);  // content removed, leading coeff > 0

QPoly to_q(const ZPoly& a);
// clear denominators and take the primitive part
ZPoly z_primitive_of(const QPoly& a);

} // namespace poly

// Complete factorization of a nonzero polynomial over Q, returned as
// primitive integer polynomials with positive leading coefficient together
// with multiplicities.  The rational content is dropped.
std::vector<std::pair<ZPoly, int>> factor_over_Q(const QPoly& f);

bool is_irreducible_over_Q(const QPoly& f);

} // namespace ksendo

#endif
