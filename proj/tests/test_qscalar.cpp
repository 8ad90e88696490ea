#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "qso/qscalar.hpp"

using namespace qso;

namespace {

QScalar q_power(int k) { return QScalar::s_power(2 * k); }

QScalar q_minus_qinv() { return q_power(1) - q_power(-1); }

/// Small random scalar in s (and optionally t1), nonzero denominator.
QScalar random_qscalar(std::mt19937_64& rng, bool with_t = false) {
    std::uniform_int_distribution<int> exp_dist(-3, 3), coef_dist(-4, 4), len_dist(1, 3);
    auto random_poly = [&](bool must_be_nonzero) {
        Poly p;
        int len = len_dist(rng);
        for (int t = 0; t < len; ++t) {
            Monomial m = Monomial::var(kVarS, exp_dist(rng));
            if (with_t) m = m * Monomial::var(var_t(1), exp_dist(rng) / 2);
            p += Poly(m, GRat(Rational(coef_dist(rng)), Rational(coef_dist(rng))));
        }
        if (must_be_nonzero && p.is_zero()) p = Poly::one();
        return p;
    };
    Poly num = random_poly(false), den = random_poly(true);
    return QScalar(num, den);
}

std::complex<double> eval2(const QScalar& x) {
    GRat g = x.eval_rational(Rational(2));
    return {g.real_double(), g.imag_double()};
}

}  // namespace

TEST_CASE("bracket basics") {
    CHECK(bracket(Rational(0)) == QScalar::zero());
    CHECK(bracket(Rational(1)) == QScalar::one());
    CHECK(bracket(Rational(2)) == q_power(1) + q_power(-1));
    CHECK(bracket(Rational(-1)) == -QScalar::one());
    CHECK(bracket(Rational(-2)) == -bracket(Rational(2)));
    CHECK_THROWS_AS(bracket(Rational(1, 3)), std::domain_error);
}

TEST_CASE("bracket at half-integers via division oracle") {
    // Independent oracle: x = [1/2] must satisfy x * (s + s^-1) = 1,
    // because (s - s^-1)(s + s^-1) = s^2 - s^-2.
    QScalar x = bracket(Rational(1, 2));
    QScalar splus = QScalar::s_power(1) + QScalar::s_power(-1);
    CHECK(x * splus == QScalar::one());
    CHECK(x == QScalar::one() / splus);
}

TEST_CASE("bracket_plus basics") {
    // [0]+ = 2i/(q - q^-1)
    QScalar expected = QScalar(GRat(Rational(2))) * QScalar::i() / q_minus_qinv();
    CHECK(bracket_plus(Rational(0)) == expected);
    // evenness
    for (Rational n : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
        CHECK(bracket_plus(n) == bracket_plus(-n));
    }
}

TEST_CASE("bracket_plus vs bracket square identity at s=2") {
    // [k]^2 - [k]+^2 = 2 {2k} / (q - q^-1)^2, checked numerically at s=2.
    for (Rational k : {Rational(1, 2), Rational(1), Rational(5, 2)}) {
        QScalar lhs = bracket(k) * bracket(k) - bracket_plus(k) * bracket_plus(k);
        QScalar rhs = QScalar(2L) * curly(2 * k) / (q_minus_qinv() * q_minus_qinv());
        CHECK(lhs.eval_rational(Rational(2)) == rhs.eval_rational(Rational(2)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("curly basics") {
    CHECK(curly(Rational(0)) == QScalar(2L));
    CHECK(curly(Rational(1)) == bracket(Rational(2)));
    CHECK(curly(Rational(3)) - (bracket(Rational(4)) - bracket(Rational(2))) == QScalar::zero());
    // structural identity {k} = [k+1] - [k-1] for several k
    for (Rational k : {Rational(1, 2), Rational(2), Rational(7, 2)}) {
        CHECK(curly(k) == bracket(k + 1) - bracket(k - 1));
    }
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 40; ++trial) {
        QScalar a = random_qscalar(rng), b = random_qscalar(rng), c = random_qscalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == QScalar::one());
        }
        CHECK(a - a == QScalar::zero());
    }
}

TEST_CASE("q-integer addition law") {
    // [a+b] (q - q^-1) = q^a [b] (q - q^-1) + q^-b [a] (q - q^-1)
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> half(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a(half(rng), 2), b(half(rng), 2);
        a.canonicalize();
        b.canonicalize();
        QScalar qa = QScalar::s_power(static_cast<int>(2 * a.get_d()));
        QScalar qmb = QScalar::s_power(static_cast<int>(-2 * b.get_d()));
        QScalar d = q_minus_qinv();
        CHECK(bracket(a + b) * d == qa * bracket(b) * d + qmb * bracket(a) * d);
    }
}

TEST_CASE("three-term recursion for both weight families") {
    std::mt19937_64 rng(91);
    std::uniform_int_distribution<int> half(-5, 5);
    QScalar two = bracket(Rational(2));
    for (int trial = 0; trial < 20; ++trial) {
        Rational n(half(rng), 2);
        n.canonicalize();
        CHECK(two * bracket(n) == bracket(n + 1) + bracket(n - 1));
        CHECK(two * bracket_plus(n) == bracket_plus(n + 1) + bracket_plus(n - 1));
    }
}

TEST_CASE("eval_at_root basics") {
    for (long ell : {3L, 4L, 5L, 6L}) {
        CHECK(std::abs(bracket(Rational(ell)).eval_at_root(ell)) < 1e-12);
    }
    // [lambda]+ = [lambda + ell/4] at ell = 4
    for (Rational lam : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
        auto lhs = bracket_plus(lam).eval_at_root(4);
        auto rhs = bracket(lam + 1).eval_at_root(4);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    // q = 1 pole
    QScalar pole = QScalar::one() / q_minus_qinv();
    CHECK_THROWS_AS(pole.eval_at_root(1), std::domain_error);
    // unresolved weight variable
    CHECK_THROWS_AS(sym_bracket(var_t(1), Rational(0)).eval_at_root(5), std::domain_error);
}

TEST_CASE("eval_at_root is a ring homomorphism") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        QScalar a = random_qscalar(rng), b = random_qscalar(rng);
        long ell = 5 + (trial % 3);
        try {
            auto ea = a.eval_at_root(ell), eb = b.eval_at_root(ell);
            auto es = (a + b).eval_at_root(ell), ep = (a * b).eval_at_root(ell);
            CHECK(std::abs(es - (ea + eb)) < 1e-10 * (1.0 + std::abs(ea) + std::abs(eb)));
            CHECK(std::abs(ep - ea * eb) < 1e-10 * (1.0 + std::abs(ea * eb)));
        } catch (const std::domain_error&) {
            // pole at this root; skip the sample
        }
    }
}

TEST_CASE("symbolic weight brackets specialize correctly") {
    // [lambda + a] with t1 = q^lambda, then lambda := 3/2, matches the direct value.
    int tv = var_t(1);
    for (Rational a : {Rational(0), Rational(1), Rational(-1, 2)}) {
        QScalar sym = sym_bracket(tv, a);
        QScalar specialized = sym.subst(tv, QScalar::s_power(3));  // q^{3/2} = s^3
        CHECK(specialized == bracket(Rational(3, 2) + a));
        QScalar symp = sym_bracket_plus(tv, a);
        CHECK(symp.subst(tv, QScalar::s_power(3)) == bracket_plus(Rational(3, 2) + a));
        CHECK(sym_curly(tv, a).subst(tv, QScalar::s_power(3)) == curly(Rational(3, 2) + a));
    }
    // {lambda+a} = [lambda+a+1] - [lambda+a-1] as rational functions of (s, t1)
    CHECK(sym_curly(tv, Rational(1)) == sym_bracket(tv, Rational(2)) - sym_bracket(tv, Rational(0)));
}

TEST_CASE("canonical string round-trip") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        QScalar a = random_qscalar(rng, trial % 2 == 0);
        std::string s1 = a.to_string();
        QScalar b = QScalar::from_string(s1);
        CHECK(a == b);
        CHECK(b.to_string() == s1);
    }
    CHECK(QScalar::from_string("(0+0i)") == QScalar::zero());
    CHECK(QScalar::from_string("(1+0i)*s^2+(1+0i)*s^-2") == bracket(Rational(2)));
}

TEST_CASE("eval_rational exactness") {
    QScalar x = bracket(Rational(2));  // q + q^-1 = s^2 + s^-2
    GRat v = x.eval_rational(Rational(2));
    CHECK(v == GRat(Rational(17, 4)));
    QScalar y = bracket_plus(Rational(0));
    GRat w = y.eval_rational(Rational(2));  // 2i/(4 - 1/4) = 8i/15
    CHECK(w == GRat(Rational(0), Rational(8, 15)));
}
