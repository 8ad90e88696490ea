#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qso/weights.hpp"

using namespace qso;

namespace {

RationalVec rv(std::initializer_list<Rational> xs) { return RationalVec(xs); }

WeylElement random_weyl(int n, std::mt19937_64& rng) {
    int k = rank_of(n);
    std::uniform_int_distribution<int> pick(1, k);
    WeylElement w = WeylElement::identity(n);
    for (int step = 0; step < 6; ++step) w = w * simple_reflection(n, pick(rng));
    return w;
}

}  // namespace

TEST_CASE("simple roots follow the stated convention") {
    auto r4 = simple_roots(4);
    REQUIRE(r4.size() == 2);
    CHECK(r4[0] == rv({1, -1}));
    CHECK(r4[1] == rv({1, 1}));

    auto r5 = simple_roots(5);
    REQUIRE(r5.size() == 2);
    CHECK(r5[0] == rv({1, -1}));
    CHECK(r5[1] == rv({0, 1}));

    auto r3 = simple_roots(3);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0] == rv({1}));

    CHECK_THROWS_AS(simple_roots(2), std::domain_error);
}

TEST_CASE("rho and positive roots") {
    CHECK(weyl_rho(3) == rv({Rational(1, 2)}));
    CHECK(weyl_rho(5) == rv({Rational(3, 2), Rational(1, 2)}));
    CHECK(weyl_rho(4) == rv({1, 0}));
    CHECK(positive_roots(5).size() == 4);
    CHECK(positive_roots(4).size() == 2);
    CHECK(positive_roots(7).size() == 9);
}

TEST_CASE("dot action on so4 matches the closed forms") {
    // s1.lambda = lambda - (r1+1) alpha1 with r1 = lambda1 - lambda2
    FormalWeight lam = FormalWeight::classical(4, rv({3, 1}));
    auto s1 = simple_reflection(4, 1), s2 = simple_reflection(4, 2);
    FormalWeight a = dot_action(s1, lam);
    CHECK(a.coords == rv({0, 4}));  // (3,1) - 3*(1,-1)
    FormalWeight b = dot_action(s2, lam);
    CHECK(b.coords == rv({-2, -4}));  // (3,1) - 5*(1,1)
    FormalWeight c = dot_action(WeylElement::identity(4), lam);
    CHECK(c == lam);
}

TEST_CASE("dot action is a group action") {
    std::mt19937_64 rng(4242);
    for (int n : {4, 5, 7}) {
        FormalWeight lam = FormalWeight::classical(
            n, n == 4 ? rv({2, 1}) : (n == 5 ? rv({3, 1}) : rv({3, 2, 1})));
        for (int trial = 0; trial < 15; ++trial) {
            WeylElement w1 = random_weyl(n, rng), w2 = random_weyl(n, rng);
            CHECK(w1.valid());
            CHECK(w2.valid());
            CHECK(dot_action(w1, dot_action(w2, lam)) == dot_action(w1 * w2, lam));
        }
    }
}

TEST_CASE("weyl_dimension closed cases") {
    CHECK(weyl_dimension(3, rv({2})) == 5);            // 2*lambda + 1
    CHECK(weyl_dimension(3, rv({Rational(5, 2)})) == 6);
    CHECK(weyl_dimension(5, rv({Rational(1, 2), Rational(1, 2)})) == 4);
    CHECK(weyl_dimension(4, rv({1, 0})) == 4);         // (l1-l2+1)(l1+l2+1)
    CHECK(weyl_dimension(4, rv({2, 1})) == 8);
    CHECK(weyl_dimension(5, rv({1, 0})) == 5);
    CHECK(weyl_dimension(5, rv({1, 1})) == 10);
    CHECK(weyl_dimension(7, rv({1, 0, 0})) == 7);
    CHECK_THROWS_AS(weyl_dimension(5, rv({0, 1})), std::domain_error);
}

TEST_CASE("weyl_dimension against a direct product oracle for so4") {
    for (long a = 0; a <= 3; ++a)
        for (long b = -a; b <= a; ++b) {
            RationalVec lam = rv({Rational(a), Rational(b)});
            long oracle = (a - b + 1) * (a + b + 1);
            CHECK(weyl_dimension(4, lam) == oracle);
        }
}

TEST_CASE("weyl_dimension is invariant on dominant conjugates") {
    // For so4 the weight (a, -b) with a >= b >= 0 is dominant too.
    for (long a = 1; a <= 3; ++a)
        for (long b = 0; b <= a; ++b) {
            CHECK(weyl_dimension(4, rv({Rational(a), Rational(b)})) ==
                  weyl_dimension(4, rv({Rational(a), Rational(-b)})));
        }
}

TEST_CASE("q_weight values and formal distinctness") {
    FormalWeight cl = FormalWeight::classical(4, rv({1, 0}));
    auto vals = q_weight(cl);
    CHECK(vals[0] == QScalar::one());
    CHECK(vals[1] == QScalar::zero());

    FormalWeight plus = FormalWeight::nonclassical(3, rv({Rational(1, 2)}));
    CHECK(q_weight(plus)[0] == bracket_plus(Rational(1, 2)));

    FormalWeight minus = FormalWeight::nonclassical(3, rv({Rational(-1, 2)}));
    // scalar values agree, formal weights do not
    CHECK(q_weight(plus)[0] == q_weight(minus)[0]);
    CHECK(plus != minus);

    FormalWeight flipped = FormalWeight::nonclassical(3, rv({Rational(1, 2)}), {-1});
    CHECK(q_weight(flipped)[0] == -q_weight(plus)[0]);
    CHECK(flipped != plus);
}

TEST_CASE("regular dominance") {
    CHECK(FormalWeight::classical(5, rv({2, 1})).regularly_dominant());
    CHECK(FormalWeight::nonclassical(5, rv({Rational(3, 2), Rational(1, 2)})).regularly_dominant());
    CHECK_FALSE(FormalWeight::nonclassical(5, rv({1, 0})).regularly_dominant());
    CHECK_FALSE(FormalWeight::classical(5, rv({1, 2})).regularly_dominant());
    CHECK(FormalWeight::classical(4, rv({2, -1})).regularly_dominant());
    CHECK_FALSE(FormalWeight::classical(3, rv({Rational(-1, 2)})).regularly_dominant());
}
