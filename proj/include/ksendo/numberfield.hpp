#ifndef KSENDO_NUMBERFIELD_HPP
#define KSENDO_NUMBERFIELD_HPP

#include "ksendo/intpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ksendo {

// An element of L = Q[t]/(f), stored as power-basis coordinates
// (length = deg f, ascending).
struct LElement {
    std::vector<mpq_class> c;

    bool operator==(const LElement& o) const { return c == o.c; }
    bool operator!=(const LElement& o) const { return c != o.c; }
    bool operator<(const LElement& o) const;  // coordinate-wise, for ordered maps
    bool is_zero() const;
};

// A Galois number field L/Q given by a monic integer minimal polynomial
// together with the full list of conjugate maps (polynomials in the
// generator rho, ascending coefficients; the first map must be the
// identity t).  Construction verifies irreducibility, that each map sends
// rho to a root of f, and that the maps form a group under composition.
class BaseField {
public:
    BaseField(ZPoly min_poly, std::vector<QPoly> conjugate_maps);

    int degree() const { return r_; }
    const ZPoly& min_poly() const { return f_; }
    const std::vector<QPoly>& conjugates() const { return conj_; }

    // composition table: comp(i,j) = k  <=>  conj_k = "apply j, then i"
    int compose(int i, int j) const { return comp_[i][j]; }
    int inverse_map(int i) const { return inv_[i]; }

    LElement zero() const;
    LElement one() const;
    LElement from_rational(const mpq_class& q) const;
    LElement from_coords(std::vector<mpq_class> coords) const;  // reduced mod f
    LElement gen() const;  // rho

    LElement add(const LElement& a, const LElement& b) const;
    LElement sub(const LElement& a, const LElement& b) const;
    LElement neg(const LElement& a) const;
    LElement mul(const LElement& a, const LElement& b) const;
    LElement mul_q(const LElement& a, const mpq_class& q) const;
    LElement inv(const LElement& a) const;  // DomainError on zero
    LElement conj(int i, const LElement& a) const;

    bool is_rational(const LElement& a) const;
    mpq_class to_rational(const LElement& a) const;  // DomainError if not rational

    // trace and norm over Q (sums/products of conjugates)
    mpq_class trace(const LElement& a) const;
    mpq_class norm(const LElement& a) const;

    // Exact square root in L if one exists (Trager's method: factor the
    // shifted norm of X^2 - w over Z, then gcd over L).  The returned root
    // is canonicalized so its first nonzero coordinate is positive.
    std::optional<LElement> is_square(const LElement& w) const;

    // Decide whether w = q * x^2 for some rational q and x in L; returns q
    // (squarefree integer) and x on success.  Candidates for q are read off
    // the squarefree part of the norm (r odd) or divisors of it (r even).
    std::optional<std::pair<mpz_class, LElement>> rational_square_split(const LElement& w) const;

    std::string to_string(const LElement& a) const;  // polynomial in rho

private:
    ZPoly f_;
    QPoly fq_;
    int r_;
    std::vector<QPoly> conj_;              // conjugate maps as polynomials
    std::vector<LElement> conj_elts_;      // g_i(rho) as elements
    std::vector<std::vector<int>> comp_;
    std::vector<int> inv_;

    QPoly reduce(QPoly p) const;
    LElement eval_poly_at(const QPoly& p, const LElement& x) const;
};

} // namespace ksendo

#endif
