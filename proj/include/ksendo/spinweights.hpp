#ifndef KSENDO_SPINWEIGHTS_HPP
#define KSENDO_SPINWEIGHTS_HPP

#include "ksendo/galois.hpp"

#include <optional>
#include <vector>

namespace ksendo {

enum class FormKind { TotallyReal, CM };

// The diagonalized input form: Phi = sum d_i X_i^2 (totally real) or
// sum d_i X_i conj(X_i) (CM, with theta^2 in L).
struct FormInput {
    FormKind kind = FormKind::TotallyReal;
    int m = 0;                          // dim_E V
    std::vector<LElement> diag;         // d_1..d_m
    std::optional<LElement> theta_sq;   // CM only
    int l() const { return m / 2; }

    void validate(const BaseField& L) const;  // ValidationError on bad ranges
    // dim_Q V: m*r (real) or 2*m*r (CM)
    int dim_q(const BaseField& L) const;
};

// Highest-weight label of one irreducible factor of the restricted spin
// representation over F.  Exactly one family is populated:
//   real odd m:  the single spin tag (both vectors empty)
//   real even m: semi-spin signs per block, entries +1/-1
//   CM:          wedge degrees per block, entries 0..m
struct WeightTag {
    std::vector<int> signs;
    std::vector<int> degrees;

    bool operator==(const WeightTag& o) const {
        return signs == o.signs && degrees == o.degrees;
    }
    bool operator!=(const WeightTag& o) const { return !(*this == o); }
    // lexicographic; semi-spin '+' sorts before '-'
    bool operator<(const WeightTag& o) const;
};

// Per-block ideal label (beta_1..beta_l, gamma): the line spanned by
// f_{beta,gamma} in the Clifford algebra of one block.  gamma is unused for
// even m.
struct IdealLabel {
    uint32_t beta = 0;  // bit j set: beta_{j+1} = -1
    int gamma = +1;

    bool operator==(const IdealLabel& o) const { return beta == o.beta && gamma == o.gamma; }
    bool operator<(const IdealLabel& o) const {
        if (beta != o.beta) return beta < o.beta;
        return gamma > o.gamma;  // '+' first
    }
};

using LabelTuple = std::vector<IdealLabel>;  // one label per block
using SignTuple = std::vector<int>;          // CM: +-1 per block

// Everything derived from (L, Phi): the splitting tower, the Galois group,
// and the exact sign tables describing how the group moves the Gamma-type
// radical monomials of each block.
class SplittingData {
public:
    static SplittingData build(std::shared_ptr<const BaseField> L, FormInput input,
                               mpz_class max_group_order = 4096);

    const BaseField& field() const { return *L_; }
    const RadicalTower& tower() const { return *tower_; }
    std::shared_ptr<const RadicalTower> tower_ptr() const { return tower_; }
    const GaloisGroup& group() const { return S_; }
    const FormInput& input() const { return in_; }
    int blocks() const { return r_; }

    // sign of g on the monomial sqrt(sigma_i(d_j)) * sqrt(-sigma_i(d_{m-j+1})),
    // j in 1..l (0-based j here)
    int gamma_sign(int g, int block, int j) const { return eps_[g][block][j]; }
    // sign of g on sqrt(sigma_i(d_{l+1})) (odd m only)
    int gamma0_sign(int g, int block) const { return eps0_[g][block]; }
    // sign of g on the theta monomial of a block (CM only)
    int theta_sign(int g, int block) const { return theta_eps_[g][block]; }

    // the underlying monomials, for tests and reports
    const FElement& gamma_monomial(int block, int j) const { return mono_[block][j]; }

    // ----- highest weight combinatorics -----
    std::vector<WeightTag> highest_weight_set() const;
    mpz_class block_dim(const WeightTag& tag, int block) const;
    mpz_class tuple_dim(const WeightTag& tag) const;
    // uniform weight multiplicity M; verifies the accounting identity
    // sum over tags of M * d = 2^(dim_Q V - 1)
    mpz_class weight_multiplicity() const;

    WeightTag act_on_tag(int g, const WeightTag& tag) const;

    // ----- ideal-line and CM sign-tuple actions (Section 5 data) -----
    IdealLabel act_on_label(int g, int block, const IdealLabel& lab) const;
    LabelTuple act_on_label_tuple(int g, const LabelTuple& t) const;
    SignTuple act_on_sign_tuple(int g, const SignTuple& t) const;
    LabelTuple all_ones_tuple() const;
    SignTuple all_plus_tuple() const;

    // elements acting trivially on the all-ones line tuple
    std::vector<int> line_tuple_stabilizer() const;
    // CM: elements fixing (+,...,+) in the theta-sign action
    std::vector<int> theta_stabilizer() const;

private:
    std::shared_ptr<const BaseField> L_;
    FormInput in_;
    std::shared_ptr<const RadicalTower> tower_;
    GaloisGroup S_;
    int r_ = 1;
    // monomials and sign tables
    std::vector<std::vector<FElement>> mono_;   // [block][j], j < l
    std::vector<FElement> mono0_;               // [block], odd m
    std::vector<FElement> theta_mono_;          // [block], CM
    std::vector<std::vector<std::vector<int>>> eps_;
    std::vector<std::vector<int>> eps0_;
    std::vector<std::vector<int>> theta_eps_;

    SplittingData() : S_() {}
};

} // namespace ksendo

#endif
