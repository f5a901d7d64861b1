#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksendo/errors.hpp"
#include "ksendo/tower.hpp"

#include <memory>
#include <random>

using namespace ksendo;

namespace {

// The cyclic cubic L = Q[t]/(t^3 - 3t + 1) with conjugates
// rho -> 1/(1-rho) = 2 - rho - rho^2 and rho -> 1 - 1/rho = -2 + rho^2.
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

} // namespace

TEST_CASE("base field arithmetic in the cyclic cubic") {
    auto L = cubic_field();
    LElement rho = L->gen();

    // product of all three conjugates of rho equals -constant term = -1
    LElement prod = L->one();
    for (int i = 0; i < 3; i++) prod = L->mul(prod, L->conj(i, rho));
    CHECK(prod == L->from_rational(-1));
    CHECK(L->norm(rho) == mpq_class(-1));

    // each conjugate map satisfies f
    for (int i = 0; i < 3; i++) {
        LElement c = L->conj(i, rho);
        LElement v = L->sub(L->mul(L->mul(c, c), c),
                            L->sub(L->mul_q(c, 3), L->from_rational(1)));
        CHECK(v.is_zero());
    }

    // conjugation is a group of order 3 under composition
    CHECK(L->compose(1, 1) == 2);
    CHECK(L->compose(1, 2) == 0);
    CHECK(L->compose(2, 1) == 0);

    CHECK_THROWS_AS(L->inv(L->zero()), DomainError);
    LElement x = L->from_coords({mpq_class(1, 2), mpq_class(-3), mpq_class(7, 5)});
    CHECK(L->mul(x, L->inv(x)) == L->one());
}

TEST_CASE("square testing in L") {
    auto L = cubic_field();
    auto Q = rational_field();

    CHECK(!Q->is_square(Q->from_rational(3)).has_value());
    auto r4 = Q->is_square(Q->from_rational(4));
    REQUIRE(r4.has_value());
    CHECK(*r4 == Q->from_rational(2));

    LElement rho = L->gen();
    auto rr = L->is_square(L->mul(rho, rho));
    REQUIRE(rr.has_value());
    CHECK(L->mul(*rr, *rr) == L->mul(rho, rho));

    // 3 is not a square in the cubic field either
    CHECK(!L->is_square(L->from_rational(3)).has_value());
    // -1 is not a square in a totally real field
    CHECK(!L->is_square(L->from_rational(-1)).has_value());

    // a nontrivial square: (1 + 2 rho - rho^2)^2
    LElement y = L->from_coords({mpq_class(1), mpq_class(2), mpq_class(-1)});
    auto ry = L->is_square(L->mul(y, y));
    REQUIRE(ry.has_value());
    CHECK(L->mul(*ry, *ry) == L->mul(y, y));

    // rational square split: 12*rho^2 = 3*(2 rho)^2
    auto split = L->rational_square_split(L->mul_q(L->mul(rho, rho), 12));
    REQUIRE(split.has_value());
    CHECK(split->first == 3);
}

TEST_CASE("tower of example (1): three conjugate radicals absorb -1") {
    auto L = cubic_field();
    LElement rho = L->gen();
    std::vector<LElement> req;
    for (int i = 0; i < 3; i++) req.push_back(L->conj(i, rho));
    req.push_back(L->from_rational(-1));
    RadicalTower T = RadicalTower::build(L, req);
    CHECK(T.num_radicals() == 3);
    CHECK(T.field_degree() == 24);
    REQUIRE(T.relations().size() == 1);
    // the recorded relation: (-1) * rho * rho' * rho'' = witness^2
    const TowerRelation& rel = T.relations()[0];
    LElement lhs = rel.radicand;
    for (int i = 0; i < 3; i++)
        if (rel.mask & (1u << i)) lhs = L->mul(lhs, T.radicands()[i]);
    CHECK(lhs == L->mul(rel.witness, rel.witness));
    // sqrt(-1) really squares to -1
    FElement i_expr = T.sqrt_of(L->from_rational(-1));
    CHECK(T.square(i_expr) == T.from_rational(-1));
}

TEST_CASE("tower of example (3): -1 stays independent") {
    auto L = cubic_field();
    LElement a_plus_rho = L->add(L->from_rational(1), L->gen());
    std::vector<LElement> req;
    for (int i = 0; i < 3; i++) req.push_back(L->conj(i, a_plus_rho));
    req.push_back(L->from_rational(-1));
    RadicalTower T = RadicalTower::build(L, req);
    CHECK(T.num_radicals() == 4);
    CHECK(T.field_degree() == 48);
}

TEST_CASE("requesting a perfect square adjoins nothing") {
    auto Q = rational_field();
    RadicalTower T = RadicalTower::build(Q, {Q->from_rational(4)});
    CHECK(T.num_radicals() == 0);
    CHECK(T.field_degree() == 1);
    FElement two = T.sqrt_of(Q->from_rational(4));
    CHECK(two == T.from_rational(2));
}

TEST_CASE("F arithmetic: squares of radicals and random inverses") {
    auto L = cubic_field();
    LElement rho = L->gen();
    std::vector<LElement> req;
    for (int i = 0; i < 3; i++) req.push_back(L->conj(i, rho));
    req.push_back(L->from_rational(-1));
    RadicalTower T = RadicalTower::build(L, req);

    FElement s = T.sqrt_of(rho);
    CHECK(T.mul(s, s) == T.from_l(rho));

    // relation table: product of the three conjugate radicals equals
    // witness * sqrt(-1) monomial
    FElement prod = T.one();
    for (int i = 0; i < 3; i++) prod = T.mul(prod, T.sqrt_of(L->conj(i, rho)));
    FElement i_expr = T.sqrt_of(L->from_rational(-1));
    CHECK(T.square(prod) == T.square(i_expr));

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; trial++) {
        FElement x;
        for (int k = 0; k < 3; k++) {
            uint32_t mask = rng() % (1u << T.num_radicals());
            std::vector<mpq_class> coords;
            for (int j = 0; j < 3; j++)
                coords.push_back(mpq_class((long)(rng() % 9) - 4, 1 + rng() % 3));
            x = T.add(x, T.monomial(mask, L->from_coords(coords)));
        }
        if (x.is_zero()) continue;
        CHECK(T.mul(x, T.inv(x)) == T.one());
    }
    CHECK_THROWS_AS(T.inv(T.zero()), DomainError);
}
