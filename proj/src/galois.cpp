#include "ksendo/galois.hpp"
#include "ksendo/errors.hpp"
#include "ksendo/rat.hpp"

#include <algorithm>
#include <sstream>

namespace ksendo {

GaloisGroup GaloisGroup::build(std::shared_ptr<const RadicalTower> tower, mpz_class max_order) {
    GaloisGroup G;
    G.tower_ = std::move(tower);
    const BaseField& L = G.tower_->base();
    int r = L.degree();
    G.t_ = G.tower_->num_radicals();
    if (G.tower_->field_degree() > max_order)
        throw ValidationError("Galois group order " + G.tower_->field_degree().get_str() +
                              " exceeds the configured bound");

    // image of each stored radical under each conjugate map of L
    G.rad_img_.assign(r, std::vector<RadicalExpr>(G.t_));
    for (int b = 0; b < r; b++) {
        for (int i = 0; i < G.t_; i++) {
            LElement v = L.conj(b, G.tower_->radicands()[i]);
            auto s = G.tower_->sqrt_in_F(v);
            if (!s)
                throw InconsistentTower("conjugate of a radicand has no square root in F; "
                                        "requested radicand set is not Galois stable");
            if (s->comp.size() != 1)
                throw InconsistentTower("unexpected non-monomial radical image");
            auto& [mask, coeff] = *s->comp.begin();
            G.rad_img_[b][i] = RadicalExpr{coeff, mask};
        }
    }

    int n = r << G.t_;
    G.elems_.reserve(n);
    for (int b = 0; b < r; b++)
        for (uint32_t s = 0; s < (1u << G.t_); s++) G.elems_.push_back(GaloisElement{b, s});

    // composition table: determine (g o h) by its effect on rho and on each
    // stored radical
    G.comp_.assign(n, std::vector<int>(n, -1));
    G.inv_.assign(n, -1);
    for (int gi = 0; gi < n; gi++) {
        for (int hi = 0; hi < n; hi++) {
            int b = L.compose(G.elems_[gi].base, G.elems_[hi].base);
            uint32_t signs = 0;
            for (int i = 0; i < G.t_; i++) {
                // (g o h)(sqrt u_i) = g( h(sqrt u_i) )
                const RadicalExpr& eh = G.rad_img_[G.elems_[hi].base][i];
                FElement himg = G.tower_->monomial(eh.mask, eh.coeff);
                if (G.elems_[hi].signs & (1u << i)) himg = G.tower_->neg(himg);
                FElement img = G.act(gi, himg);
                const RadicalExpr& ek = G.rad_img_[b][i];
                FElement ref = G.tower_->monomial(ek.mask, ek.coeff);
                if (G.monomial_sign(img, ref) < 0) signs |= 1u << i;
            }
            G.comp_[gi][hi] = G.id_of(b, signs);
        }
    }
    for (int gi = 0; gi < n; gi++)
        for (int hi = 0; hi < n; hi++)
            if (G.comp_[gi][hi] == G.identity()) G.inv_[gi] = hi;

    // sanity: tower relations are respected by every element
    for (int gi = 0; gi < n; gi++) {
        for (const TowerRelation& rel : G.tower_->relations()) {
            // u * prod_mask u_i = w^2  =>  g(u) * prod g(u_i) = g(w)^2
            LElement lhs = L.conj(G.elems_[gi].base, rel.radicand);
            for (int i = 0; i < G.t_; i++)
                if (rel.mask & (1u << i))
                    lhs = L.mul(lhs, L.conj(G.elems_[gi].base, G.tower_->radicands()[i]));
            LElement w = L.conj(G.elems_[gi].base, rel.witness);
            if (L.sub(lhs, L.mul(w, w)) != L.zero())
                throw InconsistentTower("tower relation not Galois stable");
        }
    }
    return G;
}

int GaloisGroup::id_of(int base, uint32_t signs) const {
    return (base << t_) | (int)signs;
}

int GaloisGroup::block_perm(int g, int i) const {
    return field().compose(elems_[g].base, i);
}

LElement GaloisGroup::act_on_l(int g, const LElement& x) const {
    return field().conj(elems_[g].base, x);
}

FElement GaloisGroup::act(int g, const FElement& x) const {
    const GaloisElement& e = elems_[g];
    FElement out;
    for (auto& [mask, coeff] : x.comp) {
        FElement term = tower_->from_l(field().conj(e.base, coeff));
        for (int i = 0; i < t_; i++) {
            if (!(mask & (1u << i))) continue;
            const RadicalExpr& re = rad_img_[e.base][i];
            FElement im = tower_->monomial(re.mask, re.coeff);
            if (e.signs & (1u << i)) im = tower_->neg(im);
            term = tower_->mul(term, im);
        }
        out = tower_->add(out, term);
    }
    return out;
}

int GaloisGroup::monomial_sign(const FElement& image, const FElement& reference) const {
    if (image.comp.size() != 1 || reference.comp.size() != 1)
        throw VerificationFailure("monomial_sign on non-monomial");
    auto& [mi, ci] = *image.comp.begin();
    auto& [mr, cr] = *reference.comp.begin();
    if (mi != mr) throw VerificationFailure("monomial_sign: different radical supports");
    if (ci == cr) return 1;
    if (field().add(ci, cr).is_zero()) return -1;
    throw VerificationFailure("monomial_sign: images differ by a non-sign factor");
}

std::vector<int> GaloisGroup::all_elements() const {
    std::vector<int> v(order());
    for (int i = 0; i < order(); i++) v[i] = i;
    return v;
}

std::vector<int> GaloisGroup::subgroup_closure(std::vector<int> gens) const {
    std::vector<char> in(order(), 0);
    std::vector<int> out = {identity()};
    in[identity()] = 1;
    for (int g : gens)
        if (!in[g]) { in[g] = 1; out.push_back(g); }
    for (size_t k = 0; k < out.size(); k++) {
        for (size_t j = 0; j < out.size(); j++) {
            int c = compose(out[k], out[j]);
            if (!in[c]) { in[c] = 1; out.push_back(c); }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool GaloisGroup::is_subgroup(const std::vector<int>& h) const {
    std::vector<char> in(order(), 0);
    for (int g : h) in[g] = 1;
    if (!in[identity()]) return false;
    for (int a : h)
        for (int b : h)
            if (!in[compose(a, b)]) return false;
    return true;
}

bool GaloisGroup::is_normal_in(const std::vector<int>& h, const std::vector<int>& g) const {
    std::vector<char> in(order(), 0);
    for (int x : h) in[x] = 1;
    for (int a : g)
        for (int x : h)
            if (!in[compose(compose(a, x), inverse(a))]) return false;
    return true;
}

bool GaloisGroup::fixes(const std::vector<int>& h, const FElement& e) const {
    for (int g : h)
        if (!(act(g, e) == e)) return false;
    return true;
}

bool GaloisGroup::is_abelian() const {
    for (int a = 0; a < order(); a++)
        for (int b = a + 1; b < order(); b++)
            if (compose(a, b) != compose(b, a)) return false;
    return true;
}

FieldDescription GaloisGroup::fixed_field(const std::vector<int>& subgroup) const {
    FieldDescription D;
    if (!is_subgroup(subgroup)) throw DomainError("fixed_field: not a subgroup");
    D.degree = mpz_class(order()) / mpz_class((long)subgroup.size());

    // fixed part of L: image of the subgroup in Gal(L/Q)
    std::vector<char> bases(field().degree(), 0);
    for (int g : subgroup) bases[elems_[g].base] = 1;
    int im = 0;
    for (char b : bases) im += b;
    D.l_part_degree = field().degree() / im;
    D.contains_L = (im == 1);

    // invariant radical monomials, plus the expressions of the requested
    // radicands (covers derived radicals such as sqrt(-1) when it is a
    // product of stored ones)
    std::vector<std::pair<FElement, LElement>> candidates;  // (e, e^2)
    for (uint32_t mask = 1; mask < (1u << t_); mask++) {
        FElement e = tower_->monomial(mask, field().one());
        LElement sq = field().one();
        for (int i = 0; i < t_; i++)
            if (mask & (1u << i)) sq = field().mul(sq, tower_->radicands()[i]);
        candidates.push_back({e, sq});
    }
    for (const TowerRelation& rel : tower_->relations()) {
        FElement e = tower_->sqrt_of(rel.radicand);
        if (e.comp.size() == 1 && e.comp.begin()->first != 0)
            candidates.push_back({e, rel.radicand});
    }
    // select invariant candidates with GF(2)-independent radical supports
    std::vector<uint32_t> basis;  // reduced vectors, pivot = highest set bit
    auto gf2_reduce = [&](uint32_t m) {
        for (uint32_t b : basis) {
            uint32_t pivot = 1u << (31 - __builtin_clz(b));
            if (m & pivot) m ^= b;
        }
        return m;
    };
    for (auto& [e, sq] : candidates) {
        if (!fixes(subgroup, e)) continue;
        uint32_t red = gf2_reduce(e.comp.begin()->first);
        if (red == 0) continue;
        basis.push_back(red);
        D.gens.push_back(e);
        D.gen_squares.push_back(sq);
    }

    // naming
    mpz_class explained = D.l_part_degree;
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, (unsigned long)D.gens.size());
    explained *= two_k;
    D.named_exactly = (explained == D.degree) &&
                      (D.contains_L || D.l_part_degree == 1);
    std::ostringstream os;
    if (D.degree == 1) {
        D.name = "Q";
        return D;
    }
    os << "Q(";
    bool first = true;
    for (size_t i = 0; i < D.gens.size(); i++) {
        if (!first) os << ", ";
        os << "sqrt(" << field().to_string(D.gen_squares[i]) << ")";
        first = false;
    }
    if (D.contains_L && field().degree() > 1) {
        if (!first) os << ", ";
        os << "rho";
        first = false;
    }
    os << ")";
    if (D.named_exactly) {
        D.name = os.str();
    } else {
        D.name = "degree-" + D.degree.get_str() + " subfield of F";
    }
    return D;
}

} // namespace ksendo
