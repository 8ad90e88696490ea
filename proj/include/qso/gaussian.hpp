/**
 * @file gaussian.hpp
 * @brief Exact Gaussian rationals a + b*i with GMP rational parts.
 *
 * All scalar coefficients in the library live here: the plus-type
 * q-numbers carry a factor of sqrt(-1), so the coefficient field is
 * Q(i) rather than Q.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qso {

using Rational = mpq_class;

/// Renders "p" or "p/q" in lowest terms.
inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on junk.
inline Rational rat_from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(const Rational& re) : re_(re), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// re^2 + im^2, the field norm down to Q.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    GaussianRational inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        return GaussianRational(re_ / n, -im_ / n);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Total order (real part, then imaginary part); used only for canonical sorting.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    /// Canonical form "(a+bi)", e.g. "(1/2+3i)", "(0-2/3i)".
    std::string to_string() const {
        std::string out = "(";
        out += rat_to_string(re_);
        out += (sgn(im_) < 0) ? "-" : "+";
        Rational a = abs(im_);
        out += rat_to_string(a);
        out += "i)";
        return out;
    }

    double real_double() const { return re_.get_d(); }
    double imag_double() const { return im_.get_d(); }

private:
    Rational re_, im_;
};

using GRat = GaussianRational;

}  // namespace qso
