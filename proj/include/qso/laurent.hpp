/**
 * @file laurent.hpp
 * @brief Sparse multivariate Laurent polynomials over the Gaussian rationals.
 *
 * Variables are drawn from a fixed slate:
 *   s           -- s^2 = q, so half-integer powers of q are integer powers of s
 *   t1..t4      -- t_i stands for q^{lambda_i} (formal highest-weight coordinates)
 *   w1..w4      -- abstract Cartan eigenvalues m_i of a Verma quotient
 *   x1..x4      -- abstract second parameters n~_i of a Verma quotient
 *
 * Polynomial gcd (primitive PRS, univariate Euclid at the base) keeps
 * fractions in qscalar.hpp reduced, so structural equality of canonical
 * forms decides mathematical equality.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qso/gaussian.hpp"

namespace qso {

inline constexpr int kNumVars = 13;
inline constexpr int kVarS = 0;

/// t_i = q^{lambda_i}, 1-based, i <= 4.
inline int var_t(int i) {
    assert(i >= 1 && i <= 4);
    return i;
}
/// w_i: abstract weight eigenvalue m_i, 1-based.
inline int var_w(int i) {
    assert(i >= 1 && i <= 4);
    return 4 + i;
}
/// x_i: abstract n~_i, 1-based.
inline int var_x(int i) {
    assert(i >= 1 && i <= 4);
    return 8 + i;
}

inline const char* var_name(int v) {
    static const char* names[kNumVars] = {"s",  "t1", "t2", "t3", "t4", "w1", "w2",
                                          "w3", "w4", "x1", "x2", "x3", "x4"};
    assert(v >= 0 && v < kNumVars);
    return names[v];
}

inline int var_from_name(const std::string& n) {
    for (int v = 0; v < kNumVars; ++v)
        if (n == var_name(v)) return v;
    throw std::invalid_argument("unknown variable: " + n);
}

struct Monomial {
    std::array<int16_t, kNumVars> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial var(int v, int k = 1) {
        Monomial m;
        m.e[v] = static_cast<int16_t>(k);
        return m;
    }

    bool is_one() const {
        for (int v = 0; v < kNumVars; ++v)
            if (e[v] != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int v = 0; v < kNumVars; ++v) m.e[v] = static_cast<int16_t>(e[v] + o.e[v]);
        return m;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial m;
        for (int v = 0; v < kNumVars; ++v) m.e[v] = static_cast<int16_t>(e[v] - o.e[v]);
        return m;
    }
    bool divides(const Monomial& o) const {
        for (int v = 0; v < kNumVars; ++v)
            if (e[v] > o.e[v]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
    /// Lexicographic order, s most significant.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }
};

class Poly {
public:
    // Terms sorted by monomial descending; no zero coefficients stored.
    using Term = std::pair<Monomial, GRat>;

    Poly() = default;
    explicit Poly(const GRat& c) {
        if (!c.is_zero()) terms_.emplace_back(Monomial::one(), c);
    }
    Poly(const Monomial& m, const GRat& c) {
        if (!c.is_zero()) terms_.emplace_back(m, c);
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(GRat(1L)); }
    static Poly variable(int v, int k = 1) { return Poly(Monomial::var(v, k), GRat(1L)); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    const Term& leading() const {
        assert(!terms_.empty());
        return terms_.front();
    }
    GRat constant_value() const {
        assert(is_constant());
        return terms_.empty() ? GRat(0L) : terms_[0].second;
    }

    bool uses_var(int v) const {
        for (auto& t : terms_)
            if (t.first.e[v] != 0) return true;
        return false;
    }
    uint32_t var_mask() const {
        uint32_t m = 0;
        for (auto& t : terms_)
            for (int v = 0; v < kNumVars; ++v)
                if (t.first.e[v] != 0) m |= (1u << v);
        return m;
    }
    int min_exp(int v) const {
        int r = 0;
        bool first = true;
        for (auto& t : terms_) {
            if (first || t.first.e[v] < r) r = t.first.e[v];
            first = false;
        }
        return r;
    }
    int max_exp(int v) const {
        int r = 0;
        bool first = true;
        for (auto& t : terms_) {
            if (first || t.first.e[v] > r) r = t.first.e[v];
            first = false;
        }
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first > ib->first)
                r.terms_.push_back(*ia++);
            else if (ib->first > ia->first)
                r.terms_.push_back(*ib++);
            else {
                GRat c = ia->second + ib->second;
                if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        if (a.is_monomial()) return b.scaled_by(a.terms_[0].first, a.terms_[0].second);
        if (b.is_monomial()) return a.scaled_by(b.terms_[0].first, b.terms_[0].second);
        // Merge term-by-term products through an ordered map.
        std::map<Monomial, GRat, std::greater<Monomial>> acc;
        for (auto& ta : a.terms_)
            for (auto& tb : b.terms_) {
                Monomial m = ta.first * tb.first;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, ta.second * tb.second);
                else {
                    it->second += ta.second * tb.second;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        Poly r;
        r.terms_.assign(acc.begin(), acc.end());
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled_by(const Monomial& m, const GRat& c) const {
        if (c.is_zero()) return Poly();
        Poly r = *this;
        for (auto& t : r.terms_) {
            t.first = t.first * m;
            t.second = t.second * c;
        }
        return r;
    }
    Poly scaled_by(const GRat& c) const { return scaled_by(Monomial::one(), c); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) {
        // Arbitrary total order for use as map keys.
        if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
            if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
        }
        return false;
    }

    /// Exact quotient; throws std::domain_error when the division is not exact.
    friend Poly exact_div(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("exact_div: zero divisor");
        if (a.is_zero()) return Poly();
        if (b.is_monomial()) {
            GRat inv = b.terms_[0].second.inverse();
            return a.scaled_by(Monomial::one() / b.terms_[0].first, inv);
        }
        Poly r = a, q;
        const Monomial& lbm = b.terms_[0].first;
        GRat lbc_inv = b.terms_[0].second.inverse();
        while (!r.is_zero()) {
            const Monomial& lm = r.terms_[0].first;
            if (!lbm.divides(lm)) throw std::domain_error("exact_div: not divisible");
            Monomial qm = lm / lbm;
            GRat qc = r.terms_[0].second * lbc_inv;
            Poly qt(qm, qc);
            q += qt;
            r -= b * qt;
        }
        return q;
    }

    /// Coefficients of *this viewed as a polynomial in variable v.
    std::map<int, Poly> coeffs_in(int v) const {
        std::map<int, Poly> out;
        for (auto& t : terms_) {
            Monomial m = t.first;
            int d = m.e[v];
            m.e[v] = 0;
            out[d] += Poly(m, t.second);
        }
        return out;
    }

    static Poly from_coeffs(int v, const std::map<int, Poly>& cs) {
        Poly r;
        for (auto& [d, c] : cs) r += c * Poly::variable(v, d);
        return r;
    }

    int degree_in(int v) const { return max_exp(v); }

    Poly leading_coeff_in(int v) const {
        int d = degree_in(v);
        Poly r;
        for (auto& t : terms_)
            if (t.first.e[v] == d) {
                Monomial m = t.first;
                m.e[v] = 0;
                r += Poly(m, t.second);
            }
        return r;
    }

    /// Evaluate with complex values supplied for every variable that occurs.
    std::complex<double> eval(const std::array<std::complex<double>, kNumVars>& vals) const {
        std::complex<double> acc = 0.0;
        for (auto& t : terms_) {
            std::complex<double> term(t.second.real_double(), t.second.imag_double());
            for (int v = 0; v < kNumVars; ++v) {
                int e = t.first.e[v];
                if (e == 0) continue;
                term *= std::pow(vals[v], e);
            }
            acc += term;
        }
        return acc;
    }

private:
    std::vector<Term> terms_;
};

// --- gcd machinery (non-negative exponents assumed) ---------------------

namespace detail {

inline bool nonneg_exps(const Poly& p) {
    for (auto& t : p.terms())
        for (int v = 0; v < kNumVars; ++v)
            if (t.first.e[v] < 0) return false;
    return true;
}

/// Pseudo-remainder of a by b in variable v (both nonzero, deg_v(a) >= deg_v(b) not required).
inline Poly prem(const Poly& a, const Poly& b, int v) {
    int db = b.degree_in(v);
    Poly lb = b.leading_coeff_in(v);
    Poly r = a;
    while (!r.is_zero()) {
        int dr = r.degree_in(v);
        if (dr < db) break;
        Poly lr = r.leading_coeff_in(v);
        r = lb * r - lr * Poly::variable(v, dr - db) * b;
    }
    return r;
}

Poly gcd_poly(const Poly& a, const Poly& b);

/// gcd of the v-coefficients of p.
inline Poly content_in(const Poly& p, int v) {
    Poly g;
    for (auto& [d, c] : p.coeffs_in(v)) {
        g = gcd_poly(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

/// Makes the leading (lex-largest) coefficient equal to 1.
inline Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled_by(p.leading().second.inverse());
}

/// Univariate Euclid over Q(i); both polynomials use only variable v.
inline Poly gcd_univariate(Poly a, Poly b, int v) {
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        // remainder of a by b
        int db = b.degree_in(v);
        while (!a.is_zero() && a.degree_in(v) >= db) {
            int da = a.degree_in(v);
            GRat c = a.leading().second;  // b is monic, lex-leading term is the v-leading term
            a -= b * Poly(Monomial::var(v, da - db), c);
        }
        std::swap(a, b);
        b = monic(b);
    }
    return monic(a);
}

inline Poly gcd_poly(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    assert(nonneg_exps(a) && nonneg_exps(b));
    if (a.is_constant() || b.is_constant()) return Poly::one();
    uint32_t shared = a.var_mask() & b.var_mask();
    if (shared == 0) return Poly::one();
    int v = 0;
    while (!(shared & (1u << v))) ++v;
    uint32_t others = (a.var_mask() | b.var_mask()) & ~(1u << v);
    if (others == 0) return gcd_univariate(a, b, v);

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly g0 = gcd_poly(ca, cb);
    Poly pa = exact_div(a, ca), pb = exact_div(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = prem(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = Poly();
        } else {
            pb = monic(exact_div(r, content_in(r, v)));
        }
    }
    Poly pp = exact_div(pa, content_in(pa, v));
    return monic(g0 * pp);
}

}  // namespace detail

/// gcd of two polynomials with non-negative exponents, monic-normalized.
inline Poly poly_gcd(const Poly& a, const Poly& b) { return detail::gcd_poly(a, b); }

}  // namespace qso
