#include "ksendo/numberfield.hpp"
#include "ksendo/errors.hpp"
#include "ksendo/rat.hpp"

#include <algorithm>
#include <sstream>

namespace ksendo {

bool LElement::operator<(const LElement& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t i = 0; i < c.size(); i++) {
        int cmp = mpq_cmp(c[i].get_mpq_t(), o.c[i].get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

bool LElement::is_zero() const {
    for (auto& x : c)
        if (x != 0) return false;
    return true;
}

BaseField::BaseField(ZPoly min_poly, std::vector<QPoly> conjugate_maps)
    : f_(std::move(min_poly)), conj_(std::move(conjugate_maps)) {
    poly::normalize(f_);
    r_ = poly::degree(f_);
    if (r_ < 1) throw ValidationError("min_poly must have degree >= 1");
    if (f_.back() != 1) throw ValidationError("min_poly must be monic");
    fq_ = poly::to_q(f_);
    if (r_ > 1 && !is_irreducible_over_Q(fq_))
        throw ValidationError("min_poly is not irreducible over Q");
    if ((int)conj_.size() != r_)
        throw ValidationError("need exactly [L:Q] conjugate maps");
    for (auto& g : conj_) poly::normalize(g);
    // first map must be the identity t
    QPoly ident = (r_ == 1) ? QPoly{} : QPoly{0, 1};
    if (r_ == 1) {
        // over Q the generator is the root of a linear polynomial; represent
        // the identity map by that constant
        ident = QPoly{mpq_class(-f_[0])};
        poly::normalize(ident);
    }
    if (reduce(conj_[0]) != reduce(ident))
        throw ValidationError("first conjugate map must be the identity");

    conj_elts_.reserve(r_);
    for (auto& g : conj_) {
        QPoly gr = reduce(g);
        gr.resize(r_, mpq_class(0));
        conj_elts_.push_back(LElement{gr});
    }
    // each map must send rho to a root of f
    for (int i = 0; i < r_; i++) {
        LElement v = eval_poly_at(fq_, conj_elts_[i]);
        if (!v.is_zero()) throw ValidationError("conjugate map does not satisfy f");
    }
    // pairwise distinct
    for (int i = 0; i < r_; i++)
        for (int j = i + 1; j < r_; j++)
            if (conj_elts_[i] == conj_elts_[j])
                throw ValidationError("conjugate maps are not distinct");
    // composition table (comp(i,j): apply j, then i)
    comp_.assign(r_, std::vector<int>(r_, -1));
    for (int i = 0; i < r_; i++) {
        for (int j = 0; j < r_; j++) {
            LElement target = conj(i, conj_elts_[j]);
            for (int k = 0; k < r_; k++)
                if (conj_elts_[k] == target) { comp_[i][j] = k; break; }
            if (comp_[i][j] < 0)
                throw ValidationError("conjugate maps are not closed under composition; L/Q not Galois");
        }
    }
    inv_.assign(r_, -1);
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < r_; j++)
            if (comp_[i][j] == 0) inv_[i] = j;
}

QPoly BaseField::reduce(QPoly p) const {
    QPoly q, r;
    poly::divmod(p, fq_, q, r);
    return r;
}

LElement BaseField::eval_poly_at(const QPoly& p, const LElement& x) const {
    // Horner over L
    LElement acc = zero();
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = mul(acc, x);
        acc.c[0] += *it;
    }
    return acc;
}

LElement BaseField::zero() const { return LElement{std::vector<mpq_class>(r_, mpq_class(0))}; }
LElement BaseField::one() const { return from_rational(1); }

LElement BaseField::from_rational(const mpq_class& q) const {
    LElement e = zero();
    e.c[0] = q;
    e.c[0].canonicalize();
    return e;
}

LElement BaseField::from_coords(std::vector<mpq_class> coords) const {
    for (auto& c : coords) c.canonicalize();
    QPoly p(coords.begin(), coords.end());
    poly::normalize(p);
    QPoly r = reduce(p);
    r.resize(r_, mpq_class(0));
    return LElement{r};
}

LElement BaseField::gen() const {
    if (r_ == 1) return from_rational(mpq_class(-f_[0]));
    LElement e = zero();
    e.c[1] = 1;
    return e;
}

LElement BaseField::add(const LElement& a, const LElement& b) const {
    LElement r = a;
    for (int i = 0; i < r_; i++) r.c[i] += b.c[i];
    return r;
}

LElement BaseField::sub(const LElement& a, const LElement& b) const {
    LElement r = a;
    for (int i = 0; i < r_; i++) r.c[i] -= b.c[i];
    return r;
}

LElement BaseField::neg(const LElement& a) const {
    LElement r = a;
    for (int i = 0; i < r_; i++) r.c[i] = -r.c[i];
    return r;
}

LElement BaseField::mul(const LElement& a, const LElement& b) const {
    QPoly pa(a.c.begin(), a.c.end()), pb(b.c.begin(), b.c.end());
    poly::normalize(pa);
    poly::normalize(pb);
    QPoly r = reduce(poly::mul(pa, pb));
    r.resize(r_, mpq_class(0));
    return LElement{r};
}

LElement BaseField::mul_q(const LElement& a, const mpq_class& q) const {
    LElement r = a;
    for (int i = 0; i < r_; i++) r.c[i] *= q;
    return r;
}

LElement BaseField::inv(const LElement& a) const {
    if (a.is_zero()) throw DomainError("inverse of zero in L");
    // extended Euclid in Q[t] against f
    QPoly pa(a.c.begin(), a.c.end());
    poly::normalize(pa);
    QPoly r0 = fq_, r1 = pa, s0 = {}, s1 = {1};
    while (!r1.empty()) {
        QPoly q, r;
        poly::divmod(r0, r1, q, r);
        QPoly s2 = poly::sub(s0, poly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly::degree(r0) != 0) throw DomainError("element not invertible (min_poly reducible?)");
    QPoly inv = poly::scale(s0, mpq_class(1) / r0[0]);
    inv = reduce(inv);
    inv.resize(r_, mpq_class(0));
    return LElement{inv};
}

LElement BaseField::conj(int i, const LElement& a) const {
    if (i < 0 || i >= r_) throw DomainError("conjugate index out of range");
    QPoly pa(a.c.begin(), a.c.end());
    poly::normalize(pa);
    return eval_poly_at(pa, conj_elts_[i]);
}

bool BaseField::is_rational(const LElement& a) const {
    for (int i = 1; i < r_; i++)
        if (a.c[i] != 0) return false;
    return true;
}

mpq_class BaseField::to_rational(const LElement& a) const {
    if (!is_rational(a)) throw DomainError("element is not rational");
    return a.c[0];
}

mpq_class BaseField::trace(const LElement& a) const {
    LElement s = zero();
    for (int i = 0; i < r_; i++) s = add(s, conj(i, a));
    if (!is_rational(s)) throw VerificationFailure("trace not rational");
    return s.c[0];
}

mpq_class BaseField::norm(const LElement& a) const {
    LElement p = one();
    for (int i = 0; i < r_; i++) p = mul(p, conj(i, a));
    if (!is_rational(p)) throw VerificationFailure("norm not rational");
    return p.c[0];
}

std::optional<LElement> BaseField::is_square(const LElement& w) const {
    if (w.is_zero()) throw DomainError("is_square expects nonzero input");
    auto canonical = [&](LElement x) {
        for (int i = 0; i < r_; i++) {
            if (x.c[i] != 0) {
                if (sgn(x.c[i]) < 0) x = neg(x);
                break;
            }
        }
        return x;
    };
    if (r_ == 1) {
        mpq_class root;
        if (!rational_sqrt(w.c[0], root)) return std::nullopt;
        return canonical(from_rational(root));
    }
    if (is_rational(w)) {
        mpq_class root;
        if (rational_sqrt(w.c[0], root)) return canonical(from_rational(root));
        // a rational can still be a square of an irrational element of L
        // when [L:Q] is even; fall through to the generic path then
        if (r_ % 2 == 1) return std::nullopt;
    }
    // Trager: N_s(X) = prod_i ((X - s*sigma_i(rho))^2 - sigma_i(w)),
    // an integer polynomial; factor it over Z and pull roots back by gcd.
    for (int shift = 0;; shift++) {
        QPoly N = {1};
        std::vector<std::vector<LElement>> fac_coeffs;  // (X - s*rho_i)^2 - w_i per i
        LElement s_elt = from_rational(shift);
        // product over i computed with L coefficients, must end rational
        std::vector<LElement> prod = {one()};
        for (int i = 0; i < r_; i++) {
            LElement rho_i = conj_elts_[i];
            LElement wi = conj(i, w);
            // (X - s*rho_i)^2 - w_i = X^2 - 2 s rho_i X + s^2 rho_i^2 - w_i
            std::vector<LElement> q(3, zero());
            q[2] = one();
            q[1] = mul_q(rho_i, mpq_class(-2 * shift));
            q[0] = sub(mul_q(mul(rho_i, rho_i), mpq_class((long)shift * shift)), wi);
            std::vector<LElement> np(prod.size() + 2, zero());
            for (size_t a = 0; a < prod.size(); a++)
                for (size_t b = 0; b < 3; b++)
                    np[a + b] = add(np[a + b], mul(prod[a], q[b]));
            prod = std::move(np);
        }
        N.assign(prod.size(), mpq_class(0));
        bool rational_ok = true;
        for (size_t i = 0; i < prod.size(); i++) {
            if (!is_rational(prod[i])) { rational_ok = false; break; }
            N[i] = prod[i].c[0];
        }
        if (!rational_ok) throw VerificationFailure("norm polynomial not rational");
        poly::normalize(N);
        // need N squarefree for Trager's correspondence
        QPoly g = poly::gcd(N, poly::derivative(N));
        if (poly::degree(g) > 0) continue;
        // F(X) = X^2 - w over L; for each integer factor u, gcd(F, u(X + s*rho))
        for (auto& [u, mult] : factor_over_Q(N)) {
            (void)mult;
            // compute u(X + s*rho) as a polynomial over L
            QPoly uq = poly::to_q(u);
            std::vector<LElement> ushift(uq.size(), zero());
            // binomial expansion: sum_k u_k (X + s rho)^k
            std::vector<std::vector<LElement>> pow;  // (X + s rho)^k coefficients
            pow.push_back({one()});
            LElement srho = mul_q(gen(), mpq_class(shift));
            for (size_t k = 1; k < uq.size(); k++) {
                const auto& prev = pow.back();
                std::vector<LElement> cur(prev.size() + 1, zero());
                for (size_t a = 0; a < prev.size(); a++) {
                    cur[a + 1] = add(cur[a + 1], prev[a]);
                    cur[a] = add(cur[a], mul(prev[a], srho));
                }
                pow.push_back(cur);
            }
            for (size_t k = 0; k < uq.size(); k++)
                for (size_t a = 0; a < pow[k].size(); a++)
                    ushift[a] = add(ushift[a], mul_q(pow[k][a], uq[k]));
            // Euclid of F = X^2 - w and ushift over L
            std::vector<LElement> F = {neg(w), zero(), one()};
            auto lnorm = [&](std::vector<LElement>& p) {
                while (!p.empty() && p.back().is_zero()) p.pop_back();
            };
            auto ldivmod = [&](std::vector<LElement> a, const std::vector<LElement>& b) {
                LElement binv = inv(b.back());
                while (a.size() >= b.size() && !a.empty()) {
                    LElement c = mul(a.back(), binv);
                    size_t sh = a.size() - b.size();
                    for (size_t i2 = 0; i2 < b.size(); i2++)
                        a[sh + i2] = sub(a[sh + i2], mul(c, b[i2]));
                    lnorm(a);
                }
                return a;
            };
            std::vector<LElement> A = F, B = ushift;
            lnorm(A);
            lnorm(B);
            while (!B.empty()) {
                auto R = ldivmod(A, B);
                A = std::move(B);
                B = std::move(R);
            }
            if (A.size() == 2) {
                // linear gcd c1*X + c0: root = -c0/c1
                LElement root = neg(mul(A[0], inv(A[1])));
                if (mul(root, root) == w) return canonical(root);
            }
        }
        return std::nullopt;
    }
}

std::optional<std::pair<mpz_class, LElement>> BaseField::rational_square_split(const LElement& w) const {
    if (w.is_zero()) throw DomainError("rational_square_split expects nonzero input");
    mpq_class nw = norm(w);
    mpz_class sf = squarefree_part(nw);
    std::vector<mpz_class> candidates;
    if (r_ % 2 == 1) {
        // N(q x^2) = q^r N(x)^2 forces q ~ squarefree part of the norm
        candidates = {sf, -sf};
    } else {
        // even degree: the norm is blind to q; enumerate signed squarefree
        // divisors of the squarefree norm part (desk scale)
        std::vector<mpz_class> divs = {1};
        for (auto& [p, e] : factor_integer(sf)) {
            (void)e;
            size_t n0 = divs.size();
            for (size_t i = 0; i < n0; i++) divs.push_back(divs[i] * p);
        }
        for (auto& d : divs) {
            candidates.push_back(d);
            candidates.push_back(-d);
        }
    }
    for (auto& q : candidates) {
        if (q == 0) continue;
        LElement scaled = mul_q(w, mpq_class(1) / mpq_class(q));
        if (auto root = is_square(scaled)) return std::make_pair(q, *root);
    }
    return std::nullopt;
}

std::string BaseField::to_string(const LElement& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < r_; i++) {
        if (a.c[i] == 0) continue;
        mpq_class coeff = a.c[i];
        if (!first) {
            os << (sgn(coeff) < 0 ? " - " : " + ");
            coeff = abs(coeff);
        } else if (sgn(coeff) < 0 && i > 0) {
            os << "-";
            coeff = abs(coeff);
        }
        if (i == 0) {
            os << rational_to_string(first ? coeff : coeff);
        } else {
            if (coeff != 1) os << rational_to_string(coeff) << "*";
            os << "rho";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace ksendo
