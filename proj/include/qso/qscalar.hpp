/**
 * @file qscalar.hpp
 * @brief Exact scalars: the fraction field of Laurent polynomials in s = q^{1/2}
 *        and formal weight variables, over the Gaussian rationals.
 *
 * Everything is kept in a fixed canonical form (common monomial content
 * stripped, fraction reduced by polynomial gcd, denominator's leading
 * coefficient 1), so operator== decides mathematical equality.
 *
 * q-numbers:
 *   [n]   = (q^n - q^-n)/(q - q^-1)         (bracket)
 *   [n]+  = i (q^n + q^-n)/(q - q^-1)       (bracket_plus)
 *   {k}   = q^k + q^-k                      (curly)
 * with q = s^2, so any half-integer exponent of q is an integer power of s.
 */
#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

#include "qso/laurent.hpp"

namespace qso {

using ComplexApprox = std::complex<double>;

class QScalar {
public:
    QScalar() : num_(), den_(Poly::one()) {}
    QScalar(long v) : num_(Poly(GRat(v))), den_(Poly::one()) {}
    explicit QScalar(const GRat& c) : num_(Poly(c)), den_(Poly::one()) {}
    explicit QScalar(const Rational& r) : num_(Poly(GRat(r))), den_(Poly::one()) {}
    QScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
        canonicalize();
    }

    static QScalar zero() { return QScalar(); }
    static QScalar one() { return QScalar(1L); }
    static QScalar i() { return QScalar(GRat::i()); }
    static QScalar variable(int v, int k = 1) { return QScalar(Poly::variable(v, k), Poly::one()); }
    static QScalar s_power(int k) { return variable(kVarS, k); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GRat constant_value() const {
        assert(is_constant());
        if (num_.is_zero()) return GRat(0L);
        return num_.constant_value() / den_.constant_value();
    }
    uint32_t var_mask() const { return num_.var_mask() | den_.var_mask(); }

    QScalar operator-() const {
        QScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend QScalar operator+(const QScalar& a, const QScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return QScalar(a.num_ + b.num_, a.den_);
        return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }
    friend QScalar operator*(const QScalar& a, const QScalar& b) {
        if (a.is_zero() || b.is_zero()) return QScalar();
        return QScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    QScalar inverse() const {
        if (is_zero()) throw std::domain_error("QScalar: inverse of zero");
        return QScalar(den_, num_);
    }
    friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }

    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    QScalar pow(int k) const {
        if (k == 0) return one();
        QScalar base = (k > 0) ? *this : inverse();
        int e = std::abs(k);
        QScalar r = one();
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }
    friend bool operator<(const QScalar& a, const QScalar& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    /// Substitutes a QScalar value for one variable (value must be invertible
    /// when negative powers of the variable occur).
    QScalar subst(int v, const QScalar& value) const {
        return subst_poly(num_, v, value) / subst_poly(den_, v, value);
    }

    /// Exact evaluation at a rational value of s; all other variables must be absent.
    GRat eval_rational(const Rational& s0) const {
        require_only_s();
        if (s0 == 0) throw std::domain_error("eval_rational: s = 0");
        GRat n = eval_poly_rational(num_, s0), d = eval_poly_rational(den_, s0);
        if (d.is_zero()) throw std::domain_error("eval_rational: denominator vanishes");
        return n / d;
    }

    /**
     * Evaluation at a primitive root of unity: s is sent to exp(+-i*pi/ell),
     * so q = s^2 is a primitive ell-th root with q^{ell/2} = -1 for even ell.
     * branch 0 takes exp(+i*pi/ell), branch 1 the conjugate.
     */
    ComplexApprox eval_at_root(long ell, int branch = 0) const {
        require_only_s();
        if (ell < 1) throw std::domain_error("eval_at_root: ell must be >= 1");
        double theta = M_PI / static_cast<double>(ell);
        ComplexApprox s0 = std::polar(1.0, branch == 0 ? theta : -theta);
        std::array<ComplexApprox, kNumVars> vals{};
        vals[kVarS] = s0;
        ComplexApprox n = num_.eval(vals), d = den_.eval(vals);
        if (std::abs(d) < 1e-12) throw std::domain_error("eval_at_root: pole at the chosen root");
        ComplexApprox r = n / d;
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
            throw std::domain_error("eval_at_root: non-finite value");
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "(0+0i)";
        std::string out = poly_to_string(num_);
        if (!(den_ == Poly::one())) {
            out += " / ";
            out += poly_to_string(den_);
        }
        return out;
    }

    static QScalar from_string(const std::string& text);

    static std::string poly_to_string(const Poly& p) {
        if (p.is_zero()) return "(0+0i)";
        std::string out;
        bool first = true;
        for (auto& t : p.terms()) {
            if (!first) out += "+";
            first = false;
            out += t.second.to_string();
            for (int v = 0; v < kNumVars; ++v) {
                int e = t.first.e[v];
                if (e == 0) continue;
                out += "*";
                out += var_name(v);
                if (e != 1) {
                    out += "^";
                    out += std::to_string(e);
                }
            }
        }
        return out;
    }

private:
    Poly num_, den_;

    void require_only_s() const {
        if ((var_mask() & ~(1u << kVarS)) != 0)
            throw std::domain_error("QScalar: weight variables must be substituted before evaluation");
    }

    static GRat eval_poly_rational(const Poly& p, const Rational& s0) {
        GRat acc(0L);
        for (auto& t : p.terms()) {
            int e = t.first.e[kVarS];
            Rational pw(1);
            if (e != 0) {
                mpz_class nump, denp;
                mpz_pow_ui(nump.get_mpz_t(), s0.get_num().get_mpz_t(), std::abs(e));
                mpz_pow_ui(denp.get_mpz_t(), s0.get_den().get_mpz_t(), std::abs(e));
                pw = (e > 0) ? Rational(nump, denp) : Rational(denp, nump);
                pw.canonicalize();
            }
            acc += t.second * GRat(pw);
        }
        return acc;
    }

    static QScalar subst_poly(const Poly& p, int v, const QScalar& value) {
        if (!p.uses_var(v)) return QScalar(p, Poly::one());
        QScalar acc;
        for (auto& [d, c] : p.coeffs_in(v)) acc += QScalar(c, Poly::one()) * value.pow(d);
        return acc;
    }

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        // Clear common monomial content so both parts are honest polynomials.
        Monomial shift = Monomial::one();
        for (int v = 0; v < kNumVars; ++v) {
            int d = std::min(num_.min_exp(v), den_.min_exp(v));
            shift.e[v] = static_cast<int16_t>(-d);
        }
        if (!shift.is_one()) {
            num_ = num_.scaled_by(shift, GRat(1L));
            den_ = den_.scaled_by(shift, GRat(1L));
        }
        Poly g = poly_gcd(num_, den_);
        if (!(g == Poly::one())) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        GRat lead = den_.leading().second;
        if (!lead.is_one()) {
            GRat inv = lead.inverse();
            num_ = num_.scaled_by(inv);
            den_ = den_.scaled_by(inv);
        }
    }
};

// --- q-numbers -----------------------------------------------------------

namespace detail {
/// 2n as an integer; throws if n is not a half-integer.
inline long twice_int(const Rational& n) {
    Rational two_n = n * 2;
    if (two_n.get_den() != 1) throw std::domain_error("q-number index must be a half-integer");
    if (!two_n.get_num().fits_slong_p()) throw std::domain_error("q-number index out of range");
    return two_n.get_num().get_si();
}
inline Poly s_pow_poly(long k) { return Poly::variable(kVarS, static_cast<int>(k)); }
/// q - q^-1 = s^2 - s^-2 as a polynomial numerator over s^2.
inline Poly q_minus_qinv() { return s_pow_poly(2) - s_pow_poly(-2); }
}  // namespace detail

/// [n] = (s^{2n} - s^{-2n})/(s^2 - s^{-2}); n must be a half-integer.
inline QScalar bracket(const Rational& n) {
    long k = detail::twice_int(n);
    return QScalar(detail::s_pow_poly(k) - detail::s_pow_poly(-k), detail::q_minus_qinv());
}

/// [n]+ = i (s^{2n} + s^{-2n})/(s^2 - s^{-2}).
inline QScalar bracket_plus(const Rational& n) {
    long k = detail::twice_int(n);
    Poly num = (detail::s_pow_poly(k) + detail::s_pow_poly(-k)).scaled_by(GRat::i());
    return QScalar(num, detail::q_minus_qinv());
}

/// {k} = s^{2k} + s^{-2k} = [k+1] - [k-1].
inline QScalar curly(const Rational& k) {
    long e = detail::twice_int(k);
    return QScalar(detail::s_pow_poly(e) + detail::s_pow_poly(-e), Poly::one());
}

// Symbolic variants: the weight enters through a formal variable tv = q^lambda,
// so [lambda + a] etc. are honest rational functions of (s, tv).

/// q^{lambda+a} as a Laurent monomial tv * s^{2a}.
inline Poly sym_qpow(int tv, const Rational& a, bool inverted = false) {
    long k = detail::twice_int(a);
    Monomial m = Monomial::var(tv, inverted ? -1 : 1) * Monomial::var(kVarS, static_cast<int>(inverted ? -k : k));
    return Poly(m, GRat(1L));
}

/// [lambda + a] with tv = q^lambda.
inline QScalar sym_bracket(int tv, const Rational& a) {
    return QScalar(sym_qpow(tv, a) - sym_qpow(tv, a, true), detail::q_minus_qinv());
}

/// [lambda + a]+ with tv = q^lambda.
inline QScalar sym_bracket_plus(int tv, const Rational& a) {
    Poly num = (sym_qpow(tv, a) + sym_qpow(tv, a, true)).scaled_by(GRat::i());
    return QScalar(num, detail::q_minus_qinv());
}

/// {lambda + a} = q^{lambda+a} + q^{-lambda-a}.
inline QScalar sym_curly(int tv, const Rational& a) {
    return QScalar(sym_qpow(tv, a) + sym_qpow(tv, a, true), Poly::one());
}

/// q^{lambda+a} - q^{-lambda-a}; the curly-bracket replacement in the
/// non-classical action formulas.
inline QScalar sym_qdiff(int tv, const Rational& a) {
    return QScalar(sym_qpow(tv, a) - sym_qpow(tv, a, true), Poly::one());
}

// --- parsing -------------------------------------------------------------

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool consume(char c) {
        if (!eof() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) throw std::invalid_argument("QScalar parse: expected '" + std::string(1, c) + "' in " + s);
    }
};

inline Rational parse_rational(Cursor& c) {
    std::size_t start = c.pos;
    if (!c.eof() && (c.peek() == '-' || c.peek() == '+')) ++c.pos;
    while (!c.eof() && (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '/')) ++c.pos;
    return rat_from_string(c.s.substr(start, c.pos - start));
}

inline GRat parse_grat(Cursor& c) {
    c.expect('(');
    Rational re = parse_rational(c);
    char sign = c.peek();
    if (sign != '+' && sign != '-') throw std::invalid_argument("QScalar parse: bad coefficient");
    ++c.pos;
    Rational im = parse_rational(c);
    if (sign == '-') im = -im;
    c.expect('i');
    c.expect(')');
    return GRat(re, im);
}

inline Poly parse_poly(Cursor& c) {
    Poly p;
    while (true) {
        GRat coeff = parse_grat(c);
        Monomial m = Monomial::one();
        while (c.consume('*')) {
            std::size_t start = c.pos;
            while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())))) ++c.pos;
            int v = var_from_name(c.s.substr(start, c.pos - start));
            int e = 1;
            if (c.consume('^')) {
                std::size_t es = c.pos;
                if (!c.eof() && c.peek() == '-') ++c.pos;
                while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
                e = std::stoi(c.s.substr(es, c.pos - es));
            }
            m = m * Monomial::var(v, e);
        }
        p += Poly(m, coeff);
        if (!c.consume('+')) break;
    }
    return p;
}

}  // namespace detail

inline QScalar QScalar::from_string(const std::string& text) {
    std::size_t slash = text.find(" / ");
    std::string ntext = text.substr(0, slash);
    detail::Cursor cn{ntext};
    Poly num = detail::parse_poly(cn);
    Poly den = Poly::one();
    if (slash != std::string::npos) {
        std::string dtext = text.substr(slash + 3);
        detail::Cursor cd{dtext};
        den = detail::parse_poly(cd);
    }
    return QScalar(num, den);
}

}  // namespace qso
