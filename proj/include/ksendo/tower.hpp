#ifndef KSENDO_TOWER_HPP
#define KSENDO_TOWER_HPP

#include "ksendo/numberfield.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>

namespace ksendo {

// Element of the multiquadratic tower F = L(sqrt(u_1),...,sqrt(u_t)):
// sparse map from radical-subset masks to L coefficients.  The monomial
// for mask S is prod_{i in S} sqrt(u_i).
struct FElement {
    std::map<uint32_t, LElement> comp;

    bool is_zero() const { return comp.empty(); }
    bool is_monomial() const { return comp.size() == 1; }
    bool operator==(const FElement& o) const { return comp == o.comp; }
    bool operator!=(const FElement& o) const { return comp != o.comp; }
};

// A square-root expression sqrt(u) = coeff * prod_{i in mask} sqrt(u_i).
struct RadicalExpr {
    LElement coeff;
    uint32_t mask = 0;
};

// A discovered multiplicative dependency: radicand * prod_{i in mask} u_i
// is the square of witness in L.
struct TowerRelation {
    LElement radicand;
    uint32_t mask = 0;
    LElement witness;
};

// The splitting tower.  Stored radicands are multiplicatively independent
// modulo squares in L; every requested radical is expressible as an
// L-element times a monomial in the stored ones.  Immutable once built.
class RadicalTower {
public:
    static RadicalTower build(std::shared_ptr<const BaseField> base,
                              const std::vector<LElement>& requested,
                              int max_radicals = 16);

    const BaseField& base() const { return *base_; }
    std::shared_ptr<const BaseField> base_ptr() const { return base_; }
    int num_radicals() const { return (int)radicands_.size(); }
    const std::vector<LElement>& radicands() const { return radicands_; }
    const std::vector<TowerRelation>& relations() const { return relations_; }

    // [F:Q] = r * 2^t
    mpz_class field_degree() const;

    FElement zero() const { return FElement{}; }
    FElement one() const { return from_l(base_->one()); }
    FElement from_l(const LElement& a) const;
    FElement from_rational(const mpq_class& q) const { return from_l(base_->from_rational(q)); }
    FElement monomial(uint32_t mask, const LElement& coeff) const;

    FElement add(const FElement& a, const FElement& b) const;
    FElement sub(const FElement& a, const FElement& b) const;
    FElement neg(const FElement& a) const;
    FElement mul(const FElement& a, const FElement& b) const;
    FElement mul_l(const FElement& a, const LElement& c) const;
    FElement inv(const FElement& a) const;  // DomainError on zero
    FElement square(const FElement& a) const { return mul(a, a); }

    // sqrt of an L-element inside F, when it exists as an L-multiple of a
    // radical monomial (always the case over a reduced tower).
    std::optional<FElement> sqrt_in_F(const LElement& u) const;
    // formal sqrt of a requested radicand (cached at build time);
    // DomainError if u is not expressible.
    FElement sqrt_of(const LElement& u) const;

    std::string to_string(const FElement& a) const;

private:
    std::shared_ptr<const BaseField> base_;
    std::vector<LElement> radicands_;
    std::vector<TowerRelation> relations_;
    std::map<LElement, RadicalExpr> sqrt_cache_;

    LElement subset_product(uint32_t mask) const;
    FElement inv_rec(const FElement& x, int level) const;
};

} // namespace ksendo

#endif
