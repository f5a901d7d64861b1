#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksendo/intpoly.hpp"
#include "ksendo/rat.hpp"

#include <random>

using namespace ksendo;

namespace {

ZPoly zp(std::initializer_list<long> c) {
    ZPoly r;
    for (long x : c) r.push_back(mpz_class(x));
    poly::normalize(r);
    return r;
}

bool same_factors(std::vector<std::pair<ZPoly, int>> got,
                  std::vector<std::pair<ZPoly, int>> want) {
    auto key = [](const std::pair<ZPoly, int>& f) {
        std::string s = std::to_string(f.second) + "|";
        for (auto& c : f.first) s += c.get_str() + ",";
        return s;
    };
    std::sort(got.begin(), got.end(),
              [&](auto& a, auto& b) { return key(a) < key(b); });
    std::sort(want.begin(), want.end(),
              [&](auto& a, auto& b) { return key(a) < key(b); });
    return got == want;
}

} // namespace

TEST_CASE("factor quadratics and products") {
    // x^2 - 1 = (x-1)(x+1)
    auto f = factor_over_Q(poly::to_q(zp({-1, 0, 1})));
    CHECK(same_factors(f, {{zp({-1, 1}), 1}, {zp({1, 1}), 1}}));

    // x^2 + 1 irreducible
    CHECK(is_irreducible_over_Q(poly::to_q(zp({1, 0, 1}))));

    // t^3 - 3t + 1 irreducible (the cyclic cubic used throughout)
    CHECK(is_irreducible_over_Q(poly::to_q(zp({1, -3, 0, 1}))));

    // (x^2+x+1)^2 (x-2)
    ZPoly a = zp({1, 1, 1});
    ZPoly b = zp({-2, 1});
    ZPoly prod = poly::mul(poly::mul(a, a), b);
    auto g = factor_over_Q(poly::to_q(prod));
    CHECK(same_factors(g, {{a, 2}, {b, 1}}));
}

TEST_CASE("factor with nontrivial leading coefficient") {
    // (2x+1)(3x-5)(x^2+7)
    ZPoly prod = poly::mul(poly::mul(zp({1, 2}), zp({-5, 3})), zp({7, 0, 1}));
    auto f = factor_over_Q(poly::to_q(prod));
    CHECK(same_factors(f, {{zp({1, 2}), 1}, {zp({-5, 3}), 1}, {zp({7, 0, 1}), 1}}));
}

TEST_CASE("norm-style polynomials of Trager kind") {
    // prod over the three roots of t^3-3t+1 of (X^2 - root) — degree 6,
    // this is (up to sign) f(X^2) with f = t^3-3t+1: X^6 - 3X^2 + ... careful:
    // prod (X^2 - r_i) = f(X^2) since f monic: X^6 - 3X^2 + 1
    ZPoly n = zp({1, 0, -3, 0, 0, 0, 1});
    auto f = factor_over_Q(poly::to_q(n));
    int total = 0;
    for (auto& [p, m] : f) total += m * poly::degree(p);
    CHECK(total == 6);
    // each factor must divide exactly
    for (auto& [p, m] : f) {
        QPoly q, r;
        poly::divmod(poly::to_q(n), poly::to_q(p), q, r);
        CHECK(r.empty());
    }
}

TEST_CASE("random product recombination") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 12; trial++) {
        // two random monic-ish irreducible-or-not small polys; check that
        // factoring their product and multiplying back gives the product
        auto rnd_poly = [&](int deg) {
            ZPoly p;
            for (int i = 0; i < deg; i++) p.push_back(mpz_class((long)(rng() % 11) - 5));
            p.push_back(mpz_class((long)(rng() % 3) + 1));
            poly::normalize(p);
            return p;
        };
        ZPoly a = rnd_poly(3), b = rnd_poly(4);
        ZPoly prod = poly::mul(a, b);
        if (poly::degree(prod) < 1) continue;
        auto f = factor_over_Q(poly::to_q(prod));
        QPoly back = {mpq_class(1)};
        for (auto& [p, m] : f)
            for (int k = 0; k < m; k++) back = poly::mul(back, poly::to_q(p));
        // compare up to rational scale
        QPoly target = poly::to_q(prod);
        mpq_class scale = target.back() / back.back();
        CHECK(poly::sub(target, poly::scale(back, scale)).empty());
        for (auto& [p, m] : f) CHECK(is_irreducible_over_Q(poly::to_q(p)));
    }
}

TEST_CASE("integer utilities") {
    CHECK(squarefree_part(mpq_class(18)) == 2);
    CHECK(squarefree_part(mpq_class(-75)) == -3);
    CHECK(squarefree_part(mpq_class(4, 9)) == 1);
    mpq_class root;
    CHECK(rational_sqrt(mpq_class(49, 16), root));
    CHECK(root == mpq_class(7, 4));
    CHECK(!rational_sqrt(mpq_class(3), root));
    auto fac = factor_integer(mpz_class(360360));
    mpz_class back = 1;
    for (auto& [p, e] : fac)
        for (unsigned i = 0; i < e; i++) back *= p;
    CHECK(back == 360360);
}
