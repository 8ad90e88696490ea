/**
 * @file weights.hpp
 * @brief Weight lattice of so_n, Weyl group with dot action, the Weyl
 *        dimension formula, and formal weights that keep [mu]+ and [-mu]+
 *        apart even though their scalar values coincide.
 *
 * Conventions: rank k = floor(n/2); simple roots
 *   alpha_i = e_i - e_{i+1}           for i <= (n-2)/2,
 *   alpha_k = e_{k-1} + e_k           for n = 2k,
 *   alpha_k = e_k                     for n = 2k+1.
 */
#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qso/qscalar.hpp"

namespace qso {

using RationalVec = std::vector<Rational>;

inline int rank_of(int n) {
    if (n < 3) throw std::domain_error("so_n needs n >= 3");
    return n / 2;
}

/// Simple roots of so_n as rational coordinate vectors.
inline std::vector<RationalVec> simple_roots(int n) {
    int k = rank_of(n);
    if (k == 1 && n % 2 == 0) throw std::domain_error("so_2 is not supported");
    std::vector<RationalVec> roots;
    for (int i = 0; i + 1 < k; ++i) {
        RationalVec a(k, Rational(0));
        a[i] = 1;
        a[i + 1] = -1;
        roots.push_back(a);
    }
    RationalVec last(k, Rational(0));
    if (n % 2 == 0) {
        last[k - 2] = 1;
        last[k - 1] = 1;
    } else {
        last[k - 1] = 1;
    }
    roots.push_back(last);
    return roots;
}

/// All positive roots: e_i +- e_j (i<j), plus e_i for odd n.
inline std::vector<RationalVec> positive_roots(int n) {
    int k = rank_of(n);
    std::vector<RationalVec> roots;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            RationalVec a(k, Rational(0)), b(k, Rational(0));
            a[i] = 1;
            a[j] = -1;
            b[i] = 1;
            b[j] = 1;
            roots.push_back(a);
            roots.push_back(b);
        }
    if (n % 2 == 1)
        for (int i = 0; i < k; ++i) {
            RationalVec a(k, Rational(0));
            a[i] = 1;
            roots.push_back(a);
        }
    return roots;
}

/// rho = half the sum of the positive roots.
inline RationalVec weyl_rho(int n) {
    int k = rank_of(n);
    RationalVec rho(k, Rational(0));
    for (auto& a : positive_roots(n))
        for (int i = 0; i < k; ++i) rho[i] += a[i] / 2;
    return rho;
}

inline Rational dot(const RationalVec& a, const RationalVec& b) {
    assert(a.size() == b.size());
    Rational r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

// --- Weyl group ----------------------------------------------------------

/**
 * Signed permutation in the hyperoctahedral group; for n even the number of
 * sign flips must be even.  Acts by (w.mu)_i = sign[i] * mu_{perm[i]}.
 */
struct WeylElement {
    std::vector<int> perm;   // images: coordinate i reads from perm[i]
    std::vector<int> sign;   // +-1 per coordinate
    bool even_parity_group;  // n even: only an even number of -1s allowed

    static WeylElement identity(int n) {
        int k = rank_of(n);
        WeylElement w;
        w.perm.resize(k);
        std::iota(w.perm.begin(), w.perm.end(), 0);
        w.sign.assign(k, 1);
        w.even_parity_group = (n % 2 == 0);
        return w;
    }

    bool valid() const {
        std::vector<int> seen(perm.size(), 0);
        for (int p : perm) {
            if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p]) return false;
            seen[p] = 1;
        }
        int flips = 0;
        for (int s : sign) {
            if (s != 1 && s != -1) return false;
            if (s == -1) ++flips;
        }
        if (even_parity_group && flips % 2 != 0) return false;
        return true;
    }

    RationalVec apply(const RationalVec& mu) const {
        assert(mu.size() == perm.size());
        RationalVec out(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) out[i] = Rational(sign[i]) * mu[perm[i]];
        return out;
    }

    /// Composition: (a*b).apply(mu) == a.apply(b.apply(mu)).
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        assert(a.perm.size() == b.perm.size());
        WeylElement c;
        c.even_parity_group = a.even_parity_group;
        c.perm.resize(a.perm.size());
        c.sign.resize(a.perm.size());
        for (std::size_t i = 0; i < a.perm.size(); ++i) {
            c.perm[i] = b.perm[a.perm[i]];
            c.sign[i] = a.sign[i] * b.sign[a.perm[i]];
        }
        return c;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.perm == b.perm && a.sign == b.sign;
    }
};

/// The i-th simple reflection (1-based), matching simple_roots(n).
inline WeylElement simple_reflection(int n, int i) {
    int k = rank_of(n);
    if (i < 1 || i > k) throw std::domain_error("simple_reflection: index out of range");
    WeylElement w = WeylElement::identity(n);
    if (i < k) {
        std::swap(w.perm[i - 1], w.perm[i]);
        return w;
    }
    if (n % 2 == 1) {
        // s_k: flip the last coordinate
        w.sign[k - 1] = -1;
    } else {
        // s_k: swap the last two coordinates and flip both signs
        std::swap(w.perm[k - 2], w.perm[k - 1]);
        w.sign[k - 2] = -1;
        w.sign[k - 1] = -1;
    }
    return w;
}

// --- formal weights ------------------------------------------------------

enum class WeightKind { Classical, NonClassical };

/**
 * A weight of the Cartan subalgebra, kept formal: coordinates lambda_i plus
 * the kind ([lambda] vs [lambda]+) and, for the non-classical kind, a sign
 * per coordinate.  [mu]+ = [-mu]+ as scalars, so the sign is genuine extra
 * data rather than something recoverable from eigenvalues.
 */
struct FormalWeight {
    int n = 3;
    WeightKind kind = WeightKind::Classical;
    RationalVec coords;       // lambda_i
    std::vector<int> signs;   // +-1; all +1 for classical weights

    static FormalWeight classical(int n, RationalVec lam) {
        FormalWeight w;
        w.n = n;
        w.kind = WeightKind::Classical;
        w.signs.assign(lam.size(), 1);
        w.coords = std::move(lam);
        w.check();
        return w;
    }
    static FormalWeight nonclassical(int n, RationalVec lam, std::vector<int> signs = {}) {
        FormalWeight w;
        w.n = n;
        w.kind = WeightKind::NonClassical;
        if (signs.empty()) signs.assign(lam.size(), 1);
        w.signs = std::move(signs);
        w.coords = std::move(lam);
        w.check();
        return w;
    }

    void check() const {
        if (static_cast<int>(coords.size()) != rank_of(n))
            throw std::domain_error("FormalWeight: coordinate count must equal rank");
        if (signs.size() != coords.size()) throw std::domain_error("FormalWeight: sign count mismatch");
        for (int s : signs)
            if (s != 1 && s != -1) throw std::domain_error("FormalWeight: signs must be +-1");
    }

    int rank() const { return static_cast<int>(coords.size()); }

    bool regularly_dominant() const {
        // dominant integral weight; all half-integer coordinates for the
        // non-classical kind
        int k = rank();
        for (int i = 0; i + 1 < k; ++i)
            if (coords[i] < coords[i + 1]) return false;
        if (n % 2 == 1) {
            if (coords[k - 1] < 0) return false;
        } else {
            if (k >= 2 && coords[k - 2] < abs(coords[k - 1])) return false;
        }
        bool all_int = true, all_half = true;
        for (auto& c : coords) {
            Rational twice = c * 2;
            if (twice.get_den() != 1) return false;
            bool integer = (c.get_den() == 1);
            all_int = all_int && integer;
            all_half = all_half && !integer;
        }
        if (kind == WeightKind::NonClassical) return all_half;
        return all_int || all_half;
    }

    friend bool operator==(const FormalWeight& a, const FormalWeight& b) {
        return a.n == b.n && a.kind == b.kind && a.coords == b.coords && a.signs == b.signs;
    }
    friend bool operator!=(const FormalWeight& a, const FormalWeight& b) { return !(a == b); }
    friend bool operator<(const FormalWeight& a, const FormalWeight& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.kind != b.kind) return a.kind < b.kind;
        for (std::size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
            int c = cmp(a.coords[i], b.coords[i]);
            if (c != 0) return c < 0;
        }
        if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
        return a.signs < b.signs;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ",";
            if (kind == WeightKind::NonClassical && signs[i] < 0) out += "-";
            out += rat_to_string(coords[i]);
        }
        out += (kind == WeightKind::Classical) ? "]" : "]+";
        return out;
    }
};

/// w.mu = w(mu + rho) - rho; the kind and signs ride along unchanged.
inline FormalWeight dot_action(const WeylElement& w, const FormalWeight& lam) {
    if (static_cast<int>(w.perm.size()) != lam.rank())
        throw std::domain_error("dot_action: rank mismatch");
    RationalVec rho = weyl_rho(lam.n);
    RationalVec shifted = lam.coords;
    for (int i = 0; i < lam.rank(); ++i) shifted[i] += rho[i];
    RationalVec moved = w.apply(shifted);
    for (int i = 0; i < lam.rank(); ++i) moved[i] -= rho[i];
    FormalWeight out = lam;
    out.coords = std::move(moved);
    return out;
}

/// Plain (undotted) action.
inline FormalWeight weyl_action(const WeylElement& w, const FormalWeight& lam) {
    FormalWeight out = lam;
    out.coords = w.apply(lam.coords);
    return out;
}

/// Weyl dimension formula: prod_{alpha>0} (lambda+rho, alpha)/(rho, alpha).
inline long weyl_dimension(int n, const RationalVec& lam) {
    int k = rank_of(n);
    if (static_cast<int>(lam.size()) != k) throw std::domain_error("weyl_dimension: rank mismatch");
    // dominance check
    for (int i = 0; i + 1 < k; ++i)
        if (lam[i] < lam[i + 1]) throw std::domain_error("weyl_dimension: weight not dominant");
    if (n % 2 == 1 && lam[k - 1] < 0) throw std::domain_error("weyl_dimension: weight not dominant");
    if (n % 2 == 0 && k >= 2 && lam[k - 2] < abs(lam[k - 1]))
        throw std::domain_error("weyl_dimension: weight not dominant");
    bool all_int = true, all_half = true;
    for (auto& c : lam) {
        Rational twice = c * 2;
        if (twice.get_den() != 1) throw std::domain_error("weyl_dimension: weight not (half-)integral");
        all_int = all_int && (c.get_den() == 1);
        all_half = all_half && (c.get_den() != 1);
    }
    if (!all_int && !all_half) throw std::domain_error("weyl_dimension: mixed integrality");

    RationalVec rho = weyl_rho(n);
    RationalVec shifted = lam;
    for (int i = 0; i < k; ++i) shifted[i] += rho[i];
    Rational prod(1);
    for (auto& a : positive_roots(n)) prod *= dot(shifted, a) / dot(rho, a);
    if (prod.get_den() != 1) throw std::logic_error("weyl_dimension: non-integer result");
    return prod.get_num().get_si();
}

/// Cartan eigenvalues of the weight: [lambda_i] or sign_i * [lambda_i]+.
inline std::vector<QScalar> q_weight(const FormalWeight& lam) {
    std::vector<QScalar> out;
    out.reserve(lam.coords.size());
    for (std::size_t i = 0; i < lam.coords.size(); ++i) {
        if (lam.kind == WeightKind::Classical)
            out.push_back(bracket(lam.coords[i]));
        else
            out.push_back(QScalar(static_cast<long>(lam.signs[i])) * bracket_plus(lam.coords[i]));
    }
    return out;
}

}  // namespace qso
