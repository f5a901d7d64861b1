#ifndef KSENDO_GALOIS_HPP
#define KSENDO_GALOIS_HPP

#include "ksendo/errors.hpp"
#include "ksendo/tower.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ksendo {

// An automorphism of F/Q: a conjugate map of L together with a sign choice
// on each stored radical.  g(sqrt(u_i)) = sign_i * (expression of
// sqrt(conj_b(u_i)) over the stored radicals).
struct GaloisElement {
    int base = 0;        // index of the conjugate map of L
    uint32_t signs = 0;  // bit i set: extra factor -1 on sqrt(u_i)
};

struct FieldDescription {
    mpz_class degree = 1;       // [C : Q]
    int l_part_degree = 1;      // degree of the fixed subfield of L
    bool contains_L = false;
    // radical generators: invariant elements e with e^2 in L
    std::vector<FElement> gens;
    std::vector<LElement> gen_squares;
    std::string name;           // normalized display name, e.g. "Q(sqrt(-1), rho)"
    bool named_exactly = true;  // false when only the degree is certified
};

class GaloisGroup {
public:
    // Enumerates all automorphisms of F/Q.  Throws InconsistentTower if the
    // tower is not stable under Gal(L/Q).
    static GaloisGroup build(std::shared_ptr<const RadicalTower> tower,
                             mpz_class max_order = 4096);

    const RadicalTower& tower() const { return *tower_; }
    std::shared_ptr<const RadicalTower> tower_ptr() const { return tower_; }
    const BaseField& field() const { return tower_->base(); }

    int order() const { return (int)elems_.size(); }
    const GaloisElement& element(int id) const { return elems_[id]; }
    int id_of(int base, uint32_t signs) const;
    int identity() const { return id_of(0, 0); }
    int compose(int g, int h) const { return comp_[g][h]; }  // "apply h, then g"
    int inverse(int g) const { return inv_[g]; }

    // action of g on embeddings: g o sigma_i = sigma_{block_perm(g, i)}
    int block_perm(int g, int i) const;

    FElement act(int g, const FElement& x) const;
    LElement act_on_l(int g, const LElement& x) const;

    // For a monomial m, act(g, m) is again a monomial; returns +1/-1 if
    // act(g,m) = sign * reference, throws otherwise.
    int monomial_sign(const FElement& image, const FElement& reference) const;

    // subgroup utilities (subgroups are sorted id vectors)
    std::vector<int> all_elements() const;
    std::vector<int> subgroup_closure(std::vector<int> gens) const;
    bool is_subgroup(const std::vector<int>& h) const;
    bool is_normal_in(const std::vector<int>& h, const std::vector<int>& g) const;
    bool fixes(const std::vector<int>& h, const FElement& e) const;

    FieldDescription fixed_field(const std::vector<int>& subgroup) const;

    // structure helpers used by tests and reports
    bool is_abelian() const;

private:
    std::shared_ptr<const RadicalTower> tower_;
    std::vector<GaloisElement> elems_;
    std::vector<std::vector<int>> comp_;
    std::vector<int> inv_;
    // image of sqrt(u_i) under each base map, before the sign twist
    std::vector<std::vector<RadicalExpr>> rad_img_;
    int t_ = 0;
};

// Generic orbit/stabilizer over a finite acting set (a subgroup of G given
// by element ids).  The action callback must implement a left action;
// compatibility (gh).x = g.(h.x) is spot-checked.  Orbit is returned in
// deterministic BFS order; the stabilizer as sorted ids.
template <class Point>
std::pair<std::vector<Point>, std::vector<int>>
orbit_and_stabilizer(const GaloisGroup& G, const std::vector<int>& acting,
                     const std::function<Point(int, const Point&)>& act,
                     const Point& seed) {
    std::vector<Point> orbit = {seed};
    for (size_t k = 0; k < orbit.size(); k++) {
        for (int g : acting) {
            Point img = act(g, orbit[k]);
            bool known = false;
            for (auto& p : orbit)
                if (p == img) { known = true; break; }
            if (!known) orbit.push_back(img);
        }
    }
    std::vector<int> stab;
    for (int g : acting)
        if (act(g, seed) == seed) stab.push_back(g);
    // spot-check the action law on a few pairs
    int checks = 0;
    for (int g : acting) {
        for (int h : acting) {
            if (checks >= 16) break;
            if (!(act(G.compose(g, h), seed) == act(g, act(h, seed))))
                throw VerificationFailure("action law violated in orbit_and_stabilizer");
            checks++;
        }
        if (checks >= 16) break;
    }
    if ((size_t)orbit.size() * stab.size() != acting.size())
        throw VerificationFailure("orbit-stabilizer identity violated");
    return {orbit, stab};
}

} // namespace ksendo

#endif
