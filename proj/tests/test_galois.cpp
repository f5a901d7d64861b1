#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksendo/errors.hpp"
#include "ksendo/galois.hpp"

#include <memory>

using namespace ksendo;

namespace {

std::shared_ptr<const BaseField> cubic_field() {
    ZPoly f = {mpz_class(1), mpz_class(-3), mpz_class(0), mpz_class(1)};
    std::vector<QPoly> conj = {
        {mpq_class(0), mpq_class(1)},
        {mpq_class(2), mpq_class(-1), mpq_class(-1)},
        {mpq_class(-2), mpq_class(0), mpq_class(1)},
    };
    return std::make_shared<BaseField>(f, conj);
}

std::shared_ptr<const BaseField> rational_field() {
    return std::make_shared<BaseField>(ZPoly{mpz_class(0), mpz_class(1)},
                                       std::vector<QPoly>{{mpq_class(0), mpq_class(1)}});
}

std::shared_ptr<const RadicalTower> example1_tower() {
    auto L = cubic_field();
    std::vector<LElement> req;
    for (int i = 0; i < 3; i++) req.push_back(L->conj(i, L->gen()));
    req.push_back(L->from_rational(-1));
    return std::make_shared<RadicalTower>(RadicalTower::build(L, req));
}

std::shared_ptr<const RadicalTower> example3_tower() {
    auto L = cubic_field();
    LElement u = L->add(L->from_rational(1), L->gen());
    std::vector<LElement> req;
    for (int i = 0; i < 3; i++) req.push_back(L->conj(i, u));
    req.push_back(L->from_rational(-1));
    return std::make_shared<RadicalTower>(RadicalTower::build(L, req));
}

} // namespace

TEST_CASE("group of example (1): order 24, nonabelian, (Z/2)^3 x| Z/3") {
    auto T = example1_tower();
    GaloisGroup S = GaloisGroup::build(T);
    CHECK(S.order() == 24);
    CHECK(!S.is_abelian());

    // the sign subgroup (base = identity) is normal, elementary abelian of
    // order 8, and the quotient has order 3
    std::vector<int> signs;
    for (int g = 0; g < S.order(); g++)
        if (S.element(g).base == 0) signs.push_back(g);
    CHECK(signs.size() == 8);
    CHECK(S.is_subgroup(signs));
    CHECK(S.is_normal_in(signs, S.all_elements()));
    for (int g : signs) CHECK(S.compose(g, g) == S.identity());

    // associativity on the full composition table
    for (int a = 0; a < S.order(); a += 5)
        for (int b = 0; b < S.order(); b += 3)
            for (int c = 0; c < S.order(); c += 7)
                CHECK(S.compose(S.compose(a, b), c) == S.compose(a, S.compose(b, c)));

    // every element has an inverse
    for (int g = 0; g < S.order(); g++)
        CHECK(S.compose(g, S.inverse(g)) == S.identity());
}

TEST_CASE("group of example (3): order 48 = Z/2 + G") {
    auto T = example3_tower();
    GaloisGroup S = GaloisGroup::build(T);
    CHECK(S.order() == 48);
    // the sign flip of sqrt(-1) alone is central (product decomposition)
    const BaseField& L = T->base();
    int i_index = -1;
    for (int i = 0; i < T->num_radicals(); i++)
        if (T->radicands()[i] == L.from_rational(-1)) i_index = i;
    REQUIRE(i_index >= 0);
    int h0 = S.id_of(0, 1u << i_index);
    for (int g = 0; g < S.order(); g++) CHECK(S.compose(h0, g) == S.compose(g, h0));
}

TEST_CASE("trivial tower gives the trivial group") {
    auto Q = rational_field();
    auto T = std::make_shared<RadicalTower>(RadicalTower::build(Q, {Q->from_rational(4)}));
    GaloisGroup S = GaloisGroup::build(T);
    CHECK(S.order() == 1);
}

TEST_CASE("action on F: example (1) generators") {
    auto T = example1_tower();
    GaloisGroup S = GaloisGroup::build(T);
    const BaseField& L = T->base();
    LElement rho = L.gen();

    // g: the lift of rho -> 1/(1-rho) with all + signs
    int g = S.id_of(1, 0);
    FElement sr = T->sqrt_of(rho);
    FElement sr2 = T->sqrt_of(L.conj(1, rho));
    CHECK(S.act(g, sr) == sr2);

    // g fixes sqrt(-1): derived by composing the three radical images and
    // reducing through the stored relation
    FElement i_expr = T->sqrt_of(L.from_rational(-1));
    CHECK(S.act(g, i_expr) == i_expr);

    // h_1 flips sqrt(rho), fixes L pointwise
    int h1 = S.id_of(0, 1u);
    CHECK(S.act(h1, sr) == T->neg(sr));
    CHECK(S.act_on_l(h1, rho) == rho);
    // ... and therefore flips sqrt(-1)
    CHECK(S.act(h1, i_expr) == T->neg(i_expr));

    // identity fixes everything
    FElement mixed = T->add(T->mul(sr, sr2), T->from_rational(5));
    CHECK(S.act(S.identity(), mixed) == mixed);

    // g(x)^2 = g(x^2) spot check
    CHECK(S.act(g, T->square(mixed)) == T->square(S.act(g, mixed)));

    // relations map to relations for every group element
    FElement prod = T->one();
    for (int i = 0; i < 3; i++) prod = T->mul(prod, T->sqrt_of(L.conj(i, rho)));
    for (int e = 0; e < S.order(); e++) {
        FElement lhs = S.act(e, prod);
        CHECK(T->square(lhs) == T->from_rational(-1));
    }
}

TEST_CASE("orbit and stabilizer: signs of sqrt(rho) under the full group") {
    auto T = example1_tower();
    GaloisGroup S = GaloisGroup::build(T);
    const BaseField& L = T->base();
    FElement seed = T->sqrt_of(L.gen());
    // orbit of sqrt(rho) under the full group: +- the three conjugate radicals
    std::function<FElement(int, const FElement&)> act = [&](int g, const FElement& x) {
        return S.act(g, x);
    };
    auto [orbit, stab] = orbit_and_stabilizer<FElement>(S, S.all_elements(), act, seed);
    CHECK(orbit.size() == 6);
    CHECK(stab.size() == 4);
}

TEST_CASE("fixed fields: full group and named subfields") {
    auto T = example1_tower();
    GaloisGroup S = GaloisGroup::build(T);

    FieldDescription full = S.fixed_field(S.all_elements());
    CHECK(full.degree == 1);
    CHECK(full.name == "Q");

    // subgroup generated by the lift g of the 3-cycle and pairwise sign
    // flips: fixes Q(sqrt(-1))  (this is the stabilizer arising in example
    // (2) for the tag (+,+,+))
    std::vector<int> H = S.subgroup_closure({S.id_of(1, 0), S.id_of(0, 3u), S.id_of(0, 5u)});
    CHECK(H.size() == 12);
    FieldDescription D1 = S.fixed_field(H);
    CHECK(D1.degree == 2);
    CHECK(D1.name == "Q(sqrt(-1))");

    // even sign flips alone fix Q(sqrt(-1), rho)
    std::vector<int> H2 = S.subgroup_closure({S.id_of(0, 3u), S.id_of(0, 5u)});
    CHECK(H2.size() == 4);
    FieldDescription D2 = S.fixed_field(H2);
    CHECK(D2.degree == 6);
    CHECK(D2.contains_L);
    CHECK(D2.name == "Q(sqrt(-1), rho)");
}
