/**
 * @file freealg.hpp
 * @brief Words in the generators B_1..B_{n-1}, the length-then-right-to-left
 *        word order, and reduction to the PBW-type spanning set
 *
 *            B_{2,1}^{e(2,1)} B_{3,1}^{e(3,1)} B_{3,2}^{e(3,2)} ... ,
 *
 *        where B_{k,r} = B_{k-1} B_{k-2} ... B_r and factors are sorted by
 *        (k, r) lexicographically.
 *
 * The rewriting rule set consists of the two exchange relations
 *
 *   (a)  B_{n,k} B_k = [2] B_k B_{n,k} - B_k^2 B_{n,k+1} + B_{n,k+1}
 *   (a') B_{n-1} B_{n,k} = [2] B_{n,k} B_{n-1} - B_{n-1,k} B_{n-1}^2 + B_{n-1,k}
 *
 * the two commutator exchange forms
 *
 *   (b<) B_r B_{n,k} = B_{n,k} B_r + B_{n,r+2}(B_r B_{r,k} B_r B_{r+1}
 *                                              - B_{r,k} B_r B_{r+1} B_r)
 *   (b>) B_{n,k} B_r = B_r B_{n,k} + B_{r-1} B_r B_{n,r+1} B_r B_{r-1,k}
 *                                  - B_r B_{r-1} B_r B_{n,r+1} B_{r-1,k}
 *
 * (both valid for k < r < n-1), the distant commutation B_i B_j = B_j B_i for
 * |i-j| > 1, and the defining cubic relation (used directly as the macro
 * B_c B_{K,c} = (1/[2]) B_{K,c+2}(B_c^2 B_{c+1} + B_{c+1} B_c^2 - B_{c+1})
 * and as the inversion B_r B_{r+1}^2 = B_r + [2] B_{r+1} B_r B_{r+1}
 * - B_{r+1}^2 B_r).
 *
 * In module mode the two suffix rules of the Verma quotient are active as
 * well:  w B_{2i-1} = m_i w  and  w B_{2i-1} B_{2i} = n~_i w B_{2i}.
 */
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qso/qscalar.hpp"

namespace qso {

/// A word in the generators; byte i holds a generator index in 1..n-1.
using Word = std::string;

inline Word word_of(std::initializer_list<int> letters) {
    Word w;
    for (int l : letters) w.push_back(static_cast<char>(l));
    return w;
}

/// Letters of the descending string B_{k,r} = B_{k-1} ... B_r.
inline Word descending_string(int k, int r) {
    assert(r >= 1 && r < k);
    Word w;
    for (int j = k - 1; j >= r; --j) w.push_back(static_cast<char>(j));
    return w;
}

/**
 * Word order: shorter words come first; words of equal length are compared
 * from the right, and at the first difference the word with the larger
 * generator index is the smaller one.
 */
inline int word_compare(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_compare(a, b) < 0; }
};
struct WordGreater {
    bool operator()(const Word& a, const Word& b) const { return word_compare(a, b) > 0; }
};

/// Finite QScalar-linear combination of words; no zero coefficients stored.
class AlgebraElement {
public:
    using Terms = std::map<Word, QScalar, WordLess>;

    AlgebraElement() = default;
    explicit AlgebraElement(const Word& w) { terms_[w] = QScalar::one(); }
    AlgebraElement(const Word& w, const QScalar& c) {
        if (!c.is_zero()) terms_[w] = c;
    }

    static AlgebraElement unit() { return AlgebraElement(Word{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Word& w, const QScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement operator-() const {
        AlgebraElement r;
        for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    AlgebraElement scaled(const QScalar& c) const {
        AlgebraElement r;
        if (c.is_zero()) return r;
        for (auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
        return r;
    }

    /// Free-algebra product: bilinear concatenation.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement r;
        for (auto& [wa, ca] : a.terms_)
            for (auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
        return r;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

private:
    Terms terms_;
};

// --- normal monomials ----------------------------------------------------

/// One descending-string factor B_{k,r} located inside a word.
struct Factor {
    int k, r;
    int pos;  // byte offset of the factor's first letter
    int len() const { return k - r; }
    bool operator<(const Factor& o) const { return k != o.k ? k < o.k : r < o.r; }
    bool same_kr(const Factor& o) const { return k == o.k && r == o.r; }
};

/// Greedy parse into maximal descending-by-one runs.
inline std::vector<Factor> parse_factors(const Word& w) {
    std::vector<Factor> fs;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j + 1 < w.size() && w[j + 1] == w[j] - 1) ++j;
        fs.push_back(Factor{w[i] + 1, w[j], static_cast<int>(i)});
        i = j + 1;
    }
    return fs;
}

/**
 * Exponent table e(k, r) of a PBW-type monomial prod B_{k,r}^{e(k,r)} with
 * factors in (k, r)-lexicographic order.
 */
struct NormalMonomial {
    std::map<std::pair<int, int>, int> exps;

    static std::optional<NormalMonomial> parse(const Word& w) {
        NormalMonomial m;
        auto fs = parse_factors(w);
        for (std::size_t i = 0; i + 1 < fs.size(); ++i)
            if (fs[i + 1] < fs[i]) return std::nullopt;
        for (auto& f : fs) m.exps[{f.k, f.r}] += 1;
        return m;
    }

    Word word() const {
        Word w;
        for (auto& [kr, e] : exps)
            for (int c = 0; c < e; ++c) w += descending_string(kr.first, kr.second);
        return w;
    }

    bool even_r_only() const {
        for (auto& [kr, e] : exps)
            if (e > 0 && kr.second % 2 != 0) return false;
        return true;
    }

    /// Number of occurrences of the generator B_g.
    int letter_count(int g) const {
        int c = 0;
        for (auto& [kr, e] : exps)
            if (kr.second <= g && g < kr.first) c += e;
        return c;
    }

    friend bool operator==(const NormalMonomial& a, const NormalMonomial& b) { return a.exps == b.exps; }
    friend bool operator<(const NormalMonomial& a, const NormalMonomial& b) { return a.exps < b.exps; }
};

inline bool is_normal_word(const Word& w) { return NormalMonomial::parse(w).has_value(); }

// --- rewriting engine ----------------------------------------------------

struct BudgetExceeded : std::runtime_error {
    Word stuck;
    explicit BudgetExceeded(Word w)
        : std::runtime_error("rewrite budget exceeded near word of length " + std::to_string(w.size())),
          stuck(std::move(w)) {}
};

struct RewriteCycle : std::runtime_error {
    Word word;
    explicit RewriteCycle(Word w)
        : std::runtime_error("rewrite strategy revisited a word; order-dependent case"), word(std::move(w)) {}
};

/**
 * Reduction engine for one algebra U'_q(so_n).  In module mode the suffix
 * rules for the left ideal I_{m,n~} are switched on and the target set is
 * the even-r monomial basis of the Verma quotient.
 */
class Rewriter {
public:
    explicit Rewriter(int n) : n_(n) {
        if (n < 3) throw std::domain_error("Rewriter: n >= 3 required");
    }
    /// Module mode; m has floor(n/2) entries, ntilde floor((n-1)/2).
    Rewriter(int n, std::vector<QScalar> m, std::vector<QScalar> ntilde)
        : n_(n), module_(true), m_(std::move(m)), ntilde_(std::move(ntilde)) {
        if (n < 3) throw std::domain_error("Rewriter: n >= 3 required");
        if (static_cast<int>(m_.size()) != n / 2 || static_cast<int>(ntilde_.size()) != (n - 1) / 2)
            throw std::domain_error("Rewriter: highest-weight data has wrong rank");
    }

    int n() const { return n_; }
    bool module_mode() const { return module_; }
    long long budget() const { return budget_; }
    void set_budget(long long b) { budget_ = b; }
    long long steps_used() const { return steps_; }

    bool is_normal(const Word& w) const {
        auto m = NormalMonomial::parse(w);
        if (!m) return false;
        return module_ ? m->even_r_only() : true;
    }

    /// One sanctioned rewrite applied to one word; nullopt when normal.
    std::optional<std::pair<AlgebraElement, const char*>> step_word(const Word& w) const;

    /// Full reduction of a single word, memoized.
    const AlgebraElement& reduce_word(const Word& w);

    /// Linear extension of reduce_word.
    AlgebraElement normal_form(const AlgebraElement& e) {
        AlgebraElement out;
        for (auto& [w, c] : e.terms()) out += reduce_word(w).scaled(c);
        return out;
    }

    /**
     * One engine step on an element: rewrites the largest non-normal word.
     * Returns nullopt when every word is normal.
     */
    std::optional<AlgebraElement> rewrite_step(const AlgebraElement& e) const {
        for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
            auto st = step_word(it->first);
            if (st) {
                AlgebraElement out;
                for (auto& [w, c] : e.terms())
                    if (w != it->first) out.add(w, c);
                out += st->first.scaled(it->second);
                return out;
            }
        }
        return std::nullopt;
    }

    void clear_cache() { cache_.clear(); }

private:
    int n_;
    bool module_ = false;
    std::vector<QScalar> m_, ntilde_;
    long long budget_ = 10'000'000;
    mutable long long steps_ = 0;
    std::map<Word, AlgebraElement> cache_;

    void check_letters(const Word& w) const {
        for (char c : w)
            if (c < 1 || c >= n_) throw std::domain_error("word letter out of range for so_n");
    }

    /**
     * Resolves one order violation F > G between adjacent parsed factors.
     * When F reaches strictly above G (K > K2) the move acts on F plus the
     * first letter of G, pushing F's top generator right; same-level pairs
     * are sorted by splitting off F's last letter.
     */
    AlgebraElement algebra_junction(const Word& w, const Factor& F, const Factor& G) const {
        const int K = F.k, R1 = F.r, K2 = G.k, R2 = G.r;
        const std::size_t fpos = F.pos, gpos = G.pos, gend = gpos + G.len();
        if (K == K2) {
            if (F.len() == 1) return splice(w, fpos, gend, rule_a_prime(K2, R2));
            return splice(w, gpos - 1, gend, rule_b_letter_factor(R1, K2, R2));
        }
        // K > K2: act on F and the first letter of G, c = K2 - 1.
        const int c = K2 - 1;
        if (c <= R1 - 2) {
            // B_c commutes with every letter of F; hop it to F's left
            Word mid = w.substr(gpos, 1) + w.substr(fpos, F.len());
            return splice(w, fpos, gpos + 1, AlgebraElement(mid));
        }
        if (c == R1 - 1) throw std::logic_error("parse invariant broken: mergeable junction");
        if (c == R1) return splice(w, fpos, gpos + 1, rule_a(K, c));
        // R1 < c < K - 1 (c = K2-1 <= K-2 since K > K2)
        return splice(w, fpos, gpos + 1, rule_b_factor_letter(K, R1, c));
    }

    // Replace w[a, b) by each word of repl (coefficients ride along).
    static AlgebraElement splice(const Word& w, std::size_t a, std::size_t b, const AlgebraElement& repl) {
        AlgebraElement out;
        Word pre = w.substr(0, a), post = w.substr(b);
        for (auto& [mid, c] : repl.terms()) out.add(pre + mid + post, c);
        return out;
    }

    static QScalar two_bracket() { return bracket(Rational(2)); }

    // (a)  B_{K,k} B_k -> [2] B_k B_{K,k} - B_k^2 B_{K,k+1} + B_{K,k+1}
    static AlgebraElement rule_a(int K, int k) {
        assert(K > k + 1);
        Word bk(1, static_cast<char>(k));
        Word full = descending_string(K, k), tail = descending_string(K, k + 1);
        AlgebraElement r;
        r.add(bk + full, two_bracket());
        r.add(bk + bk + tail, -QScalar::one());
        r.add(tail, QScalar::one());
        return r;
    }

    // (a') B_{K-1} B_{K,k} -> [2] B_{K,k} B_{K-1} - B_{K-1,k} B_{K-1}^2 + B_{K-1,k}
    static AlgebraElement rule_a_prime(int K, int k) {
        assert(k < K - 1);
        Word top(1, static_cast<char>(K - 1));
        Word full = descending_string(K, k), low = descending_string(K - 1, k);
        AlgebraElement r;
        r.add(full + top, two_bracket());
        r.add(low + top + top, -QScalar::one());
        r.add(low, QScalar::one());
        return r;
    }

    // (b<) B_r B_{K,k} -> B_{K,k} B_r + B_{K,r+2}(B_r B_{r,k} B_r B_{r+1} - B_{r,k} B_r B_{r+1} B_r)
    static AlgebraElement rule_b_letter_factor(int r, int K, int k) {
        assert(k < r && r < K - 1);
        Word br(1, static_cast<char>(r)), br1(1, static_cast<char>(r + 1));
        Word full = descending_string(K, k);
        Word head = (r + 2 < K) ? descending_string(K, r + 2) : Word{};
        Word mid = descending_string(r, k);
        AlgebraElement out;
        out.add(full + br, QScalar::one());
        out.add(head + br + mid + br + br1, QScalar::one());
        out.add(head + mid + br + br1 + br, -QScalar::one());
        return out;
    }

    // (b>) B_{K,k} B_r -> B_r B_{K,k} + B_{r-1} B_r B_{K,r+1} B_r B_{r-1,k} - B_r B_{r-1} B_r B_{K,r+1} B_{r-1,k}
    static AlgebraElement rule_b_factor_letter(int K, int k, int r) {
        assert(k < r && r < K - 1);
        Word br(1, static_cast<char>(r)), brm(1, static_cast<char>(r - 1));
        Word full = descending_string(K, k);
        Word upper = descending_string(K, r + 1);
        Word lower = (r - 1 > k) ? descending_string(r - 1, k) : Word{};
        AlgebraElement out;
        out.add(br + full, QScalar::one());
        out.add(brm + br + upper + br + lower, QScalar::one());
        out.add(br + brm + br + upper + lower, -QScalar::one());
        return out;
    }

    // cubic macro: B_c B_{K,c} -> (1/[2]) B_{K,c+2} (B_c^2 B_{c+1} + B_{c+1} B_c^2 - B_{c+1})
    static AlgebraElement rule_cubic_macro(int c, int K) {
        assert(K >= c + 2);
        Word bc(1, static_cast<char>(c)), bc1(1, static_cast<char>(c + 1));
        Word head = (c + 2 < K) ? descending_string(K, c + 2) : Word{};
        QScalar inv2 = two_bracket().inverse();
        AlgebraElement out;
        out.add(head + bc + bc + bc1, inv2);
        out.add(head + bc1 + bc + bc, inv2);
        out.add(head + bc1, -inv2);
        return out;
    }

    // cubic inversion: B_r B_{r+1}^2 -> B_r + [2] B_{r+1} B_r B_{r+1} - B_{r+1}^2 B_r
    static AlgebraElement rule_cubic_inversion(int r) {
        Word br(1, static_cast<char>(r)), br1(1, static_cast<char>(r + 1));
        AlgebraElement out;
        out.add(br, QScalar::one());
        out.add(br1 + br + br1, two_bracket());
        out.add(br1 + br1 + br, -QScalar::one());
        return out;
    }

    /**
     * The waiting pair against a deeper string of the same base index:
     *   B_r B_{r+1} B_{K,r+1} = (1/[2]) ( B_{K,r+3} B_r B_{r+1}^2 B_{r+2}
     *                                   + B_{K,r+2} B_r B_{r+1}^2
     *                                   - B_{K,r+2} B_r ),  K >= r+3.
     * This is the cubic macro applied to B_{r+1} B_{K,r+1} with B_r already
     * commuted into place, so the emitted words cannot be re-compressed by
     * the factor sorter.
     */
    static AlgebraElement rule_pair_cubic(int r, int K) {
        assert(K >= r + 3);
        Word br(1, static_cast<char>(r)), br1(1, static_cast<char>(r + 1)),
            br2(1, static_cast<char>(r + 2));
        Word head3 = (r + 3 < K) ? descending_string(K, r + 3) : Word{};
        Word head2 = descending_string(K, r + 2);
        QScalar inv2 = two_bracket().inverse();
        AlgebraElement out;
        out.add(head3 + br + br1 + br1 + br2, inv2);
        out.add(head2 + br + br1 + br1, inv2);
        out.add(head2 + br, -inv2);
        return out;
    }

    /**
     * The waiting pair pushed through a factor lying strictly below it:
     *   B_r B_{r+1} B_{K,R} =
     *       B_{K,R} B_r B_{r+1}
     *     + B_{K,r+2} (B_r B_{r,R} B_r B_{r+1}^2 - B_{r,R} B_r B_{r+1} B_r B_{r+1})
     *     + B_{K,r+3} (B_r B_{r+1} B_{r+1,R} B_{r+1} B_{r+2}
     *                  - B_r B_{r+1,R} B_{r+1} B_{r+2} B_{r+1}),
     * for R <= r-1 and K >= r+3 (both exchange forms composed, B_r kept
     * adjacent to its partner wherever it can hop).
     */
    static AlgebraElement rule_pair_through(int r, int K, int R) {
        assert(R <= r - 1 && K >= r + 3);
        Word br(1, static_cast<char>(r)), br1(1, static_cast<char>(r + 1)),
            br2(1, static_cast<char>(r + 2));
        Word full = descending_string(K, R);
        Word head2 = descending_string(K, r + 2);
        Word head3 = (r + 3 < K) ? descending_string(K, r + 3) : Word{};
        Word midr = descending_string(r, R);       // B_{r,R}
        Word midr1 = descending_string(r + 1, R);  // B_{r+1,R}
        AlgebraElement out;
        out.add(full + br + br1, QScalar::one());
        out.add(head2 + br + midr + br + br1 + br1, QScalar::one());
        out.add(head2 + midr + br + br1 + br + br1, -QScalar::one());
        out.add(head3 + br + br1 + midr1 + br1 + br2, QScalar::one());
        out.add(head3 + br + midr1 + br1 + br2 + br1, -QScalar::one());
        return out;
    }
};

inline std::optional<std::pair<AlgebraElement, const char*>> Rewriter::step_word(const Word& w) const {
    check_letters(w);
    if (++steps_ > budget_) throw BudgetExceeded(w);
    const std::size_t L = w.size();
    if (L < 2) {
        if (module_ && L == 1 && w[0] % 2 == 1)
            return std::make_pair(AlgebraElement(Word{}, m_[(w[0] + 1) / 2 - 1]), "suffix-m");
        return std::nullopt;
    }

    if (module_) {
        int last = w[L - 1];
        if (last % 2 == 1)
            return std::make_pair(AlgebraElement(w.substr(0, L - 1), m_[(last + 1) / 2 - 1]), "suffix-m");
        int prev = w[L - 2];
        if (prev % 2 == 1 && last == prev + 1) {
            Word rest = w.substr(0, L - 2) + w.substr(L - 1);
            return std::make_pair(AlgebraElement(rest, ntilde_[(prev + 1) / 2 - 1]), "suffix-ntilde");
        }
    }

    auto fs = parse_factors(w);

    if (module_) {
        // Work at the boundary of the longest clean suffix (sorted, even-r
        // factors only).  Odd material is pushed into the clean tail; an
        // even-even order violation at the boundary is sorted in place.
        // Acting anywhere left of this boundary could undo boundary moves.
        std::size_t p = fs.size();
        while (p > 0) {
            if (fs[p - 1].r % 2 == 1) break;
            if (p < fs.size() && fs[p] < fs[p - 1]) break;
            --p;
        }
        if (p == 0) return std::nullopt;  // clean everywhere: normal monomial

        const Factor& F = fs[p - 1];
        if (F.r % 2 == 1) {
            if (p >= fs.size())
                throw std::logic_error("suffix rule should have fired on a trailing odd letter");
            const Factor& G = fs[p];
            const int r = F.r, K2 = G.k, R2 = G.r;
            const std::size_t lastF = static_cast<std::size_t>(G.pos) - 1;
            const std::size_t gend = static_cast<std::size_t>(G.pos) + G.len();

            if (G.len() == 1 && R2 == r + 1) {
                // waiting pair B_r B_{r+1}; act on the junction with the next factor
                if (p + 1 >= fs.size())
                    throw std::logic_error("suffix rule should have fired on a trailing pair");
                const Factor& H = fs[p + 1];
                const int K3 = H.k, R3 = H.r;
                const std::size_t hpos = H.pos, hend = hpos + H.len();
                if (K3 <= r) {
                    // everything in H sits below the pair; B_{r+1} hops over it
                    Word mid = w.substr(hpos, H.len()) + w.substr(gend - 1, 1);
                    return std::make_pair(splice(w, gend - 1, hend, AlgebraElement(mid)), "hop");
                }
                if (R3 >= r + 3) {
                    Word mid = w.substr(hpos, H.len()) + w.substr(lastF, 2);
                    return std::make_pair(splice(w, lastF, hend, AlgebraElement(mid)), "hop-pair");
                }
                if (R3 == r + 1) {
                    if (H.len() == 1)
                        return std::make_pair(splice(w, lastF, hend, rule_cubic_inversion(r)),
                                              "cubic-inv");
                    return std::make_pair(splice(w, lastF, hend, rule_pair_cubic(r, K3)),
                                          "pair-cubic");
                }
                // R3 <= r - 1
                if (K3 == r + 2)
                    return std::make_pair(splice(w, gend - 1, hend, rule_a_prime(K3, R3)), "a'");
                return std::make_pair(splice(w, lastF, hend, rule_pair_through(r, K3, R3)),
                                      "pair-b<");
            }

            if (r >= K2 + 1) {
                Word mid = w.substr(G.pos, G.len()) + w.substr(lastF, 1);
                return std::make_pair(splice(w, lastF, gend, AlgebraElement(mid)), "hop");
            }
            if (r == K2) throw std::logic_error("parse invariant broken: mergeable junction");
            if (r == K2 - 1)
                return std::make_pair(splice(w, lastF, gend, rule_a_prime(K2, R2)), "a'");
            // r <= K2 - 2
            if (R2 < r)
                return std::make_pair(splice(w, lastF, gend, rule_b_letter_factor(r, K2, R2)), "b<");
            if (r == R2 - 1) {
                // G is multi-letter (the single case is the pair above); B_r hops
                // over everything except G's final letter B_{r+1}
                Word mid =
                    w.substr(G.pos, G.len() - 1) + w.substr(lastF, 1) + w.substr(gend - 1, 1);
                return std::make_pair(splice(w, lastF, gend, AlgebraElement(mid)), "hop-part");
            }
            if (r <= R2 - 2) {
                Word mid = w.substr(G.pos, G.len()) + w.substr(lastF, 1);
                return std::make_pair(splice(w, lastF, gend, AlgebraElement(mid)), "hop");
            }
            throw std::logic_error("module reduction: unexpected junction shape");
        }
        // Even-even order violation at the boundary.
        return std::make_pair(algebra_junction(w, F, fs[p]), "sort");
    }

    // Algebra mode: leftmost adjacent factor violation.
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
        if (fs[i + 1] < fs[i]) return std::make_pair(algebra_junction(w, fs[i], fs[i + 1]), "sort");
    }
    return std::nullopt;
}

inline const AlgebraElement& Rewriter::reduce_word(const Word& w0) {
    auto hit = cache_.find(w0);
    if (hit != cache_.end()) return hit->second;

    struct Frame {
        Word w;
        std::vector<std::pair<Word, QScalar>> children;
        std::size_t next = 0;
        AlgebraElement acc;
    };
    std::vector<Frame> stack;
    std::set<Word> in_progress;

    auto open = [&](const Word& w) {
        auto st = step_word(w);
        Frame f;
        f.w = w;
        if (!st) {
            f.acc.add(w, QScalar::one());
        } else {
            for (auto& [u, c] : st->first.terms()) f.children.emplace_back(u, c);
        }
        in_progress.insert(w);
        stack.push_back(std::move(f));
    };

    open(w0);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < f.children.size()) {
            auto& [u, c] = f.children[f.next];
            auto it = cache_.find(u);
            if (it != cache_.end()) {
                f.acc += it->second.scaled(c);
                ++f.next;
                continue;
            }
            if (in_progress.count(u)) throw RewriteCycle(u);
            open(u);
            continue;
        }
        cache_.emplace(f.w, std::move(f.acc));
        in_progress.erase(f.w);
        stack.pop_back();
    }
    return cache_.at(w0);
}

}  // namespace qso
