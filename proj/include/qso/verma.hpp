/**
 * @file verma.hpp
 * @brief Verma modules V_{m,n~} = U'_q(so_n) / I_{m,n~}: the even-r monomial
 *        basis, generator action by reduction modulo the left ideal,
 *        truncations, Cartan matrices and weight multiplicities.
 *
 * The left ideal is generated by (B_{2i-1} - m_i) and
 * (B_{2i-1} B_{2i} - n~_i B_{2i}); reduction combines the free-algebra
 * rewriting with the two suffix rules these generators induce.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qso/freealg.hpp"
#include "qso/linalg.hpp"
#include "qso/weights.hpp"

namespace qso {

/// Highest-weight data of a Verma quotient.
struct HighestWeightData {
    int n = 3;
    std::vector<QScalar> m;       // eigenvalues of B_1, B_3, ...; floor(n/2) entries
    std::vector<QScalar> ntilde;  // n~_i, floor((n-1)/2) entries
    std::optional<FormalWeight> tag;
    bool standard = false;

    /// Standard Verma data: m_i = [lambda_i], n~_i = [lambda_i - 1] (same kind).
    static HighestWeightData standard_from(const FormalWeight& lam) {
        if (!lam.regularly_dominant())
            throw std::domain_error("standard Verma data requires a regularly dominant weight");
        HighestWeightData hw;
        hw.n = lam.n;
        hw.m = q_weight(lam);
        int ncount = (lam.n - 1) / 2;
        for (int i = 0; i < ncount; ++i) {
            if (lam.kind == WeightKind::Classical)
                hw.ntilde.push_back(bracket(lam.coords[i] - 1));
            else
                hw.ntilde.push_back(QScalar(static_cast<long>(lam.signs[i])) *
                                    bracket_plus(lam.coords[i] - 1));
        }
        hw.tag = lam;
        hw.standard = true;
        return hw;
    }

    /// Fully symbolic data: m_i = w_i, n~_i = x_i as formal variables.
    static HighestWeightData symbolic(int n) {
        HighestWeightData hw;
        hw.n = n;
        for (int i = 1; i <= n / 2; ++i) hw.m.push_back(QScalar::variable(var_w(i)));
        for (int i = 1; i <= (n - 1) / 2; ++i) hw.ntilde.push_back(QScalar::variable(var_x(i)));
        return hw;
    }

    /// m_i^2 - [2] m_i n~_i + n~_i^2 = 1 for every pair; the basis condition.
    bool basis_condition_holds() const {
        QScalar two = bracket(Rational(2));
        for (std::size_t i = 0; i < ntilde.size(); ++i) {
            QScalar lhs = m[i] * m[i] - two * m[i] * ntilde[i] + ntilde[i] * ntilde[i];
            if (lhs != QScalar::one()) return false;
        }
        return true;
    }
};

/// Per-generator caps: monomials using B_{2i} at most s_i times.
struct Truncation {
    std::vector<int> caps;
    explicit Truncation(std::vector<int> s) : caps(std::move(s)) {
        for (int c : caps)
            if (c < 0) throw std::domain_error("Truncation: caps must be non-negative");
    }
};

/// Coefficient vector of a module element in an indexed monomial basis.
using ModuleVector = AlgebraElement;  // words are even-r normal monomials

class VermaModule {
public:
    explicit VermaModule(HighestWeightData hw)
        : hw_(std::move(hw)), rw_(hw_.n, hw_.m, hw_.ntilde) {}

    const HighestWeightData& hw() const { return hw_; }
    int n() const { return hw_.n; }
    Rewriter& rewriter() { return rw_; }

    /// Image of a word in V_{m,n~}, expanded in the even-r basis.
    ModuleVector reduce(const Word& w) { return rw_.reduce_word(w); }
    ModuleVector reduce(const AlgebraElement& e) { return rw_.normal_form(e); }

    /// B_g . v for v in the even-r basis expansion.
    ModuleVector act(int g, const ModuleVector& v) {
        ModuleVector out;
        for (auto& [w, c] : v.terms()) out += rw_.reduce_word(Word(1, static_cast<char>(g)) + w).scaled(c);
        return out;
    }

    /// Even-r factors available in U'_q(so_n): (k, r) with r even, r < k <= n.
    std::vector<std::pair<int, int>> even_factors() const {
        std::vector<std::pair<int, int>> fs;
        for (int k = 3; k <= n(); ++k)
            for (int r = 2; r < k; r += 2) fs.emplace_back(k, r);
        return fs;
    }

    /**
     * All even-r monomials whose B_{2i} usage stays within the caps,
     * ordered by total length then by the word order.
     */
    std::vector<Word> truncation_basis(const Truncation& s) const {
        if (static_cast<int>(s.caps.size()) != (n() - 1) / 2)
            throw std::domain_error("truncation_basis: cap count must be floor((n-1)/2)");
        auto factors = even_factors();
        std::vector<Word> out;
        std::vector<int> usage(s.caps.size(), 0);
        NormalMonomial current;
        enumerate(factors, 0, s, usage, current, out);
        std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return word_compare(a, b) < 0;
        });
        return out;
    }

    /**
     * Matrix of a Cartan generator B_{2i-1} on the truncation basis; the
     * truncation is a module of the Cartan subalgebra, so the action closes.
     */
    Matrix<QScalar> cartan_matrix_on_truncation(const Truncation& s, int i) {
        if (i < 1 || 2 * i - 1 >= n()) throw std::domain_error("cartan index out of range");
        auto basis = truncation_basis(s);
        std::map<Word, std::size_t> index;
        for (std::size_t j = 0; j < basis.size(); ++j) index[basis[j]] = j;
        Matrix<QScalar> mat(basis.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            ModuleVector img = act(2 * i - 1, ModuleVector(basis[j]));
            for (auto& [w, c] : img.terms()) {
                auto it = index.find(w);
                if (it == index.end())
                    throw std::logic_error("Cartan action left the truncation");
                mat(it->second, j) += c;
            }
        }
        return mat;
    }

    /**
     * Multiplicity of the weight mu inside the truncation, computed as the
     * dimension of the nested generalized eigenspace intersection at an
     * exact rational specialization of s (default 2; retries 3, 5, 7 when a
     * denominator vanishes).
     */
    int weight_multiplicity(const FormalWeight& mu, const Truncation& s,
                            std::optional<Rational> q0 = std::nullopt) {
        std::vector<Rational> tries;
        if (q0)
            tries.push_back(*q0);
        else
            tries = {Rational(2), Rational(3), Rational(5), Rational(7)};
        std::string last_err;
        for (auto& s0 : tries) {
            try {
                return weight_multiplicity_at(mu, s, s0);
            } catch (const std::domain_error& e) {
                last_err = e.what();
            }
        }
        throw std::domain_error("weight_multiplicity: no usable specialization point (" + last_err + ")");
    }

private:
    HighestWeightData hw_;
    Rewriter rw_;

    void enumerate(const std::vector<std::pair<int, int>>& factors, std::size_t idx,
                   const Truncation& s, std::vector<int>& usage, NormalMonomial& current,
                   std::vector<Word>& out) const {
        if (idx == factors.size()) {
            out.push_back(current.word());
            return;
        }
        auto [k, r] = factors[idx];
        // how many copies of B_{k,r} still fit
        enumerate(factors, idx + 1, s, usage, current, out);
        std::vector<int> saved = usage;
        int copies = 0;
        while (true) {
            bool fits = true;
            for (std::size_t i = 0; i < usage.size(); ++i) {
                int g = static_cast<int>(2 * (i + 1));
                if (r <= g && g < k && usage[i] + 1 > s.caps[i]) fits = false;
            }
            if (!fits) break;
            for (std::size_t i = 0; i < usage.size(); ++i) {
                int g = static_cast<int>(2 * (i + 1));
                if (r <= g && g < k) ++usage[i];
            }
            ++copies;
            current.exps[{k, r}] = copies;
            enumerate(factors, idx + 1, s, usage, current, out);
        }
        current.exps.erase({k, r});
        usage = saved;
    }

    int weight_multiplicity_at(const FormalWeight& mu, const Truncation& s, const Rational& s0) {
        int k = rank_of(n());
        if (mu.rank() != k) throw std::domain_error("weight_multiplicity: rank mismatch");
        auto basis = truncation_basis(s);
        auto values = q_weight(mu);
        // ambient Cartan matrices over Q(i) at s = s0
        std::vector<Matrix<GRat>> cartan;
        for (int i = 1; i <= k; ++i) {
            Matrix<QScalar> mq = cartan_matrix_on_truncation(s, i);
            Matrix<GRat> mg(mq.rows(), mq.cols());
            for (std::size_t a = 0; a < mq.rows(); ++a)
                for (std::size_t b = 0; b < mq.cols(); ++b) mg(a, b) = mq(a, b).eval_rational(s0);
            cartan.push_back(std::move(mg));
        }
        // nested generalized eigenspaces
        std::size_t dim = basis.size();
        // columns of W span the current subspace in ambient coordinates
        Matrix<GRat> W = Matrix<GRat>::identity(dim);
        std::size_t wcols = dim;
        for (int i = 0; i < k; ++i) {
            GRat mu_i = values[i].eval_rational(s0);
            // restriction A of cartan[i] to span(W): cartan[i] * W = W * A
            Matrix<GRat> img = cartan[i] * W;
            Matrix<GRat> A = solve_in_span(W, wcols, img);
            for (std::size_t d = 0; d < wcols; ++d) A(d, d) = A(d, d) - mu_i;
            Matrix<GRat> Apow = A.pow(static_cast<unsigned>(wcols));
            auto null_basis = kernel(Apow);
            // lift back to ambient coordinates
            Matrix<GRat> W2(dim, null_basis.size());
            for (std::size_t c = 0; c < null_basis.size(); ++c)
                for (std::size_t rr = 0; rr < dim; ++rr) {
                    GRat acc(0L);
                    for (std::size_t d = 0; d < wcols; ++d) acc += W(rr, d) * null_basis[c][d];
                    W2(rr, c) = acc;
                }
            W = std::move(W2);
            wcols = W.cols();
            if (wcols == 0) break;
        }
        return static_cast<int>(wcols);
    }

    /// Solves W * A = img where W has full column rank wcols.
    static Matrix<GRat> solve_in_span(const Matrix<GRat>& W, std::size_t wcols,
                                      const Matrix<GRat>& img) {
        std::size_t dim = W.rows();
        Matrix<GRat> aug(dim, wcols + img.cols());
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < wcols; ++j) aug(i, j) = W(i, j);
            for (std::size_t j = 0; j < img.cols(); ++j) aug(i, wcols + j) = img(i, j);
        }
        auto pivots = rref(aug);
        Matrix<GRat> A(wcols, img.cols());
        std::size_t prow = 0;
        for (auto c : pivots) {
            if (c >= wcols) throw std::domain_error("solve_in_span: image not inside the span");
            for (std::size_t j = 0; j < img.cols(); ++j) A(c, j) = aug(prow, wcols + j);
            ++prow;
        }
        return A;
    }
};

}  // namespace qso
