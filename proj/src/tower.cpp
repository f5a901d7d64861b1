#include "ksendo/tower.hpp"
#include "ksendo/errors.hpp"
#include "ksendo/rat.hpp"

#include <sstream>

namespace ksendo {

RadicalTower RadicalTower::build(std::shared_ptr<const BaseField> base,
                                 const std::vector<LElement>& requested,
                                 int max_radicals) {
    RadicalTower T;
    T.base_ = std::move(base);
    for (const LElement& u : requested) {
        if (u.is_zero()) throw DomainError("zero radicand requested");
        if (T.sqrt_cache_.count(u)) continue;
        // try to express sqrt(u) over the current basis: u * prod_T(u_i) = w^2
        bool found = false;
        uint32_t tmask_count = 1u << T.radicands_.size();
        for (uint32_t mask = 0; mask < tmask_count && !found; mask++) {
            LElement prod = T.subset_product(mask);
            LElement probe = T.base_->mul(u, prod);
            if (auto w = T.base_->is_square(probe)) {
                // sqrt(u) = (w / prod_T u_i) * mu_T
                LElement coeff = T.base_->mul(*w, T.base_->inv(prod));
                T.sqrt_cache_[u] = RadicalExpr{coeff, mask};
                T.relations_.push_back(TowerRelation{u, mask, *w});
                found = true;
            }
        }
        if (!found) {
            if ((int)T.radicands_.size() >= max_radicals)
                throw SizeLimit("radical tower exceeds the configured size limit");
            uint32_t bit = 1u << T.radicands_.size();
            T.radicands_.push_back(u);
            T.sqrt_cache_[u] = RadicalExpr{T.base_->one(), bit};
        }
    }
    return T;
}

mpz_class RadicalTower::field_degree() const {
    mpz_class d = base_->degree();
    mpz_class two_t;
    mpz_ui_pow_ui(two_t.get_mpz_t(), 2, (unsigned long)radicands_.size());
    return d * two_t;
}

LElement RadicalTower::subset_product(uint32_t mask) const {
    LElement p = base_->one();
    for (size_t i = 0; i < radicands_.size(); i++)
        if (mask & (1u << i)) p = base_->mul(p, radicands_[i]);
    return p;
}

FElement RadicalTower::from_l(const LElement& a) const {
    FElement r;
    if (!a.is_zero()) r.comp[0] = a;
    return r;
}

FElement RadicalTower::monomial(uint32_t mask, const LElement& coeff) const {
    FElement r;
    if (!coeff.is_zero()) r.comp[mask] = coeff;
    return r;
}

FElement RadicalTower::add(const FElement& a, const FElement& b) const {
    FElement r = a;
    for (auto& [m, c] : b.comp) {
        auto it = r.comp.find(m);
        if (it == r.comp.end()) {
            r.comp[m] = c;
        } else {
            it->second = base_->add(it->second, c);
            if (it->second.is_zero()) r.comp.erase(it);
        }
    }
    return r;
}

FElement RadicalTower::neg(const FElement& a) const {
    FElement r = a;
    for (auto& [m, c] : r.comp) c = base_->neg(c);
    return r;
}

FElement RadicalTower::sub(const FElement& a, const FElement& b) const {
    return add(a, neg(b));
}

FElement RadicalTower::mul(const FElement& a, const FElement& b) const {
    FElement r;
    for (auto& [ma, ca] : a.comp) {
        for (auto& [mb, cb] : b.comp) {
            uint32_t m = ma ^ mb;
            LElement c = base_->mul(ca, cb);
            uint32_t common = ma & mb;
            if (common) c = base_->mul(c, subset_product(common));
            auto it = r.comp.find(m);
            if (it == r.comp.end()) {
                if (!c.is_zero()) r.comp[m] = c;
            } else {
                it->second = base_->add(it->second, c);
                if (it->second.is_zero()) r.comp.erase(it);
            }
        }
    }
    return r;
}

FElement RadicalTower::mul_l(const FElement& a, const LElement& c) const {
    FElement r;
    if (c.is_zero()) return r;
    for (auto& [m, x] : a.comp) r.comp[m] = base_->mul(x, c);
    return r;
}

FElement RadicalTower::inv_rec(const FElement& x, int level) const {
    if (x.is_zero()) throw DomainError("inverse of zero in F");
    if (level < 0) {
        // pure L element
        return from_l(base_->inv(x.comp.at(0)));
    }
    uint32_t bit = 1u << level;
    bool uses = false;
    for (auto& [m, c] : x.comp)
        if (m & bit) { uses = true; break; }
    if (!uses) return inv_rec(x, level - 1);
    // x = a + sqrt(u_level) * b
    FElement a, b;
    for (auto& [m, c] : x.comp) {
        if (m & bit) b.comp[m & ~bit] = c;
        else a.comp[m] = c;
    }
    // norm = a^2 - u * b^2 lives below `level`
    FElement nrm = sub(mul(a, a), mul_l(mul(b, b), radicands_[level]));
    FElement ninv = inv_rec(nrm, level - 1);
    // (a - sqrt(u) b) * ninv
    FElement conjx = a;
    FElement sb = neg(b);
    for (auto& [m, c] : sb.comp) {
        uint32_t mm = m | bit;
        conjx.comp[mm] = c;  // masks disjoint from a's by construction? not
                             // necessarily: a has no `bit`, these all do
    }
    return mul(conjx, ninv);
}

FElement RadicalTower::inv(const FElement& a) const {
    return inv_rec(a, (int)radicands_.size() - 1);
}

std::optional<FElement> RadicalTower::sqrt_in_F(const LElement& u) const {
    if (u.is_zero()) return from_l(u);
    auto it = sqrt_cache_.find(u);
    if (it != sqrt_cache_.end()) return monomial(it->second.mask, it->second.coeff);
    uint32_t tmask_count = 1u << radicands_.size();
    for (uint32_t mask = 0; mask < tmask_count; mask++) {
        LElement prod = subset_product(mask);
        if (auto w = base_->is_square(base_->mul(u, prod)))
            return monomial(mask, base_->mul(*w, base_->inv(prod)));
    }
    return std::nullopt;
}

FElement RadicalTower::sqrt_of(const LElement& u) const {
    auto it = sqrt_cache_.find(u);
    if (it != sqrt_cache_.end()) return monomial(it->second.mask, it->second.coeff);
    if (auto s = sqrt_in_F(u)) return *s;
    throw DomainError("square root not available in the tower");
}

std::string RadicalTower::to_string(const FElement& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : a.comp) {
        if (!first) os << " + ";
        os << "(" << base_->to_string(c) << ")";
        for (size_t i = 0; i < radicands_.size(); i++)
            if (m & (1u << i)) os << "*sqrt(" << base_->to_string(radicands_[i]) << ")";
        first = false;
    }
    return os.str();
}

} // namespace ksendo
