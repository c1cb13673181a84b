#ifndef NCREP_TESTS_ORACLES_HPP
#define NCREP_TESTS_ORACLES_HPP

// Independent reference computations for the tests. They work on plain
// letter sequences and dense rational vectors, and deliberately avoid the
// library's canonical forms, contraction code and Bareiss elimination.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "ncrep/double_derivation.hpp"
#include "ncrep/forms.hpp"
#include "ncrep/linalg.hpp"

namespace oracle
{

using ncrep::Rational;

// A form word spelled out: letters (arrow, is_differential), endpoints.
struct Word {
    std::vector<std::pair<int, bool>> letters;
    int head = 0;
    int tail = 0;

    int degree() const
    {
        return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](const auto &l) { return l.second; }));
    }

    friend bool operator<(const Word &a, const Word &b)
    {
        return std::tie(a.letters, a.head, a.tail) < std::tie(b.letters, b.head, b.tail);
    }
    friend bool operator==(const Word &a, const Word &b)
    {
        return a.letters == b.letters && a.head == b.head && a.tail == b.tail;
    }
};

using Comb = std::map<Word, Rational>;
using TensorComb = std::map<std::pair<Word, Word>, Rational>;

inline void add(Comb &c, const Word &w, const Rational &k)
{
    c[w] += k;
    if (c[w] == 0) {
        c.erase(w);
    }
}

inline void add(TensorComb &c, const std::pair<Word, Word> &w, const Rational &k)
{
    c[w] += k;
    if (c[w] == 0) {
        c.erase(w);
    }
}

inline Word from_form_word(const ncrep::FormWord &w)
{
    Word out;
    out.head = w.head();
    out.tail = w.tail();
    for (std::size_t i = 0; i < w.length(); ++i) {
        const auto l = w.letter(i);
        out.letters.emplace_back(l.arrow, l.differential);
    }
    return out;
}

inline Word from_path(const ncrep::Path &p)
{
    Word out;
    out.head = p.head();
    out.tail = p.tail();
    for (auto a : p.arrows()) {
        out.letters.emplace_back(a, false);
    }
    return out;
}

inline Comb from_form(const ncrep::NCForm &u)
{
    Comb c;
    for (const auto &[w, k] : u.terms()) {
        add(c, from_form_word(w), k);
    }
    return c;
}

inline ncrep::NCForm to_form(const ncrep::QuiverPtr &q, const Comb &c)
{
    ncrep::NCForm out(q);
    for (const auto &[w, k] : c) {
        if (w.letters.empty()) {
            out += ncrep::NCForm::word(q, ncrep::FormWord::trivial(w.head), k);
            continue;
        }
        std::vector<ncrep::FormLetter> letters;
        for (const auto &[a, d] : w.letters) {
            letters.push_back({a, d});
        }
        out += ncrep::NCForm::word(q, ncrep::FormWord::from_letters(*q, letters), k);
    }
    return out;
}

// Concatenation; false if the endpoints do not match.
inline bool join(const Word &a, const Word &b, Word &out)
{
    if (a.tail != b.head) {
        return false;
    }
    out.head = a.head;
    out.tail = b.tail;
    out.letters = a.letters;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return true;
}

inline Comb mul(const Comb &a, const Comb &b)
{
    Comb out;
    for (const auto &[wa, ka] : a) {
        for (const auto &[wb, kb] : b) {
            Word w;
            if (join(wa, wb, w)) {
                add(out, w, ka * kb);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense linear algebra by textbook Gaussian elimination over Q.

inline std::size_t rank_gauss(std::vector<std::vector<Rational>> rows)
{
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) {
                continue;
            }
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                rows[i][j] -= f * rows[r][j];
            }
        }
        ++r;
    }
    return r;
}

// Leibniz expansion over all permutations.
inline Rational det_leibniz(const ncrep::QMatrix &m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) {
                    ++inversions;
                }
            }
        }
        Rational term = (inversions % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) {
            term *= m(i, perm[i]);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Largest r with a nonzero r x r minor.
inline std::size_t rank_minors(const ncrep::QMatrix &m)
{
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t r = top; r > 0; --r) {
        std::vector<bool> rsel(m.rows(), false);
        std::fill(rsel.begin(), rsel.begin() + static_cast<long>(r), true);
        do {
            std::vector<bool> csel(m.cols(), false);
            std::fill(csel.begin(), csel.begin() + static_cast<long>(r), true);
            do {
                ncrep::QMatrix sub(r, r);
                std::size_t si = 0;
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    if (!rsel[i]) {
                        continue;
                    }
                    std::size_t sj = 0;
                    for (std::size_t j = 0; j < m.cols(); ++j) {
                        if (csel[j]) {
                            sub(si, sj++) = m(i, j);
                        }
                    }
                    ++si;
                }
                if (det_leibniz(sub) != 0) {
                    return r;
                }
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Karoubi-de Rham equality: u - v lies in the span of graded commutators.
// Spanning set on the rotation closure of the words involved: every open
// word, and ab - (-1)^{|a||b|} ba for each split of a closed word.

inline Word rotate_left(const ncrep::Quiver &q, const Word &w, std::size_t k)
{
    Word out;
    out.letters.assign(w.letters.begin() + static_cast<long>(k), w.letters.end());
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<long>(k));
    out.head = out.tail = q.arrow(out.letters.front().first).head;
    return out;
}

inline int count_d(const std::vector<std::pair<int, bool>> &ls, std::size_t first, std::size_t last)
{
    int n = 0;
    for (std::size_t i = first; i < last; ++i) {
        n += ls[i].second ? 1 : 0;
    }
    return n;
}

inline bool in_commutator_span(const ncrep::Quiver &q, const Comb &f)
{
    if (f.empty()) {
        return true;
    }
    std::set<Word> closure;
    for (const auto &kv : f) {
        const Word &w = kv.first;
        if (w.head != w.tail || w.letters.empty()) {
            closure.insert(w);
            continue;
        }
        for (std::size_t k = 0; k < w.letters.size(); ++k) {
            closure.insert(rotate_left(q, w, k));
        }
    }
    std::vector<Word> basis(closure.begin(), closure.end());
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        index[basis[i]] = i;
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto &w : basis) {
        if (w.head != w.tail) {
            std::vector<Rational> row(basis.size());
            row[index[w]] = 1;
            rows.push_back(row);
            continue;
        }
        const std::size_t n = w.letters.size();
        for (std::size_t k = 1; k < n; ++k) {
            const int da = count_d(w.letters, 0, k);
            const int db = count_d(w.letters, k, n);
            const Word ba = rotate_left(q, w, k);
            std::vector<Rational> row(basis.size());
            row[index[w]] += 1;
            row[index[ba]] -= ((da * db) % 2 == 0) ? 1 : -1;
            rows.push_back(row);
        }
    }
    const std::size_t base_rank = rank_gauss(rows);
    std::vector<Rational> target(basis.size());
    for (const auto &[w, k] : f) {
        target[index[w]] += k;
    }
    rows.push_back(target);
    return rank_gauss(rows) == base_rank;
}

inline bool dr_equal(const ncrep::NCForm &u, const ncrep::NCForm &v)
{
    return in_commutator_span(*u.quiver(), from_form(u - v));
}

// ---------------------------------------------------------------------------
// Contraction, transcribed from the 1-form decomposition
// w = (p_0 da_1 p_1)(da_2 p_2)...(da_n p_n):
//   i(al_1...al_n) = sum_k (-1)^{k-1} (al_1...al_{k-1} i'(al_k)) (x) (i''(al_k) al_{k+1}...al_n)
// with i(p da q) = p Theta'(a) (x) Theta''(a) q.

struct OneForm {
    Word prefix; // p (only for the first factor; trivial otherwise)
    int arrow;
    Word suffix; // q
    Word whole;
};

inline std::vector<OneForm> decompose(const ncrep::Quiver &q, const Word &w)
{
    std::vector<OneForm> out;
    std::vector<std::size_t> dpos;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (w.letters[i].second) {
            dpos.push_back(i);
        }
    }
    const auto slice = [&](std::size_t first, std::size_t last, int boundary) {
        Word s;
        s.letters.assign(w.letters.begin() + static_cast<long>(first), w.letters.begin() + static_cast<long>(last));
        if (s.letters.empty()) {
            s.head = s.tail = boundary;
        } else {
            s.head = q.arrow(s.letters.front().first).head;
            s.tail = q.arrow(s.letters.back().first).tail;
        }
        return s;
    };
    for (std::size_t k = 0; k < dpos.size(); ++k) {
        const auto pos = dpos[k];
        const auto &arr = q.arrow(w.letters[pos].first);
        OneForm f;
        f.arrow = w.letters[pos].first;
        f.prefix = k == 0 ? slice(0, pos, arr.head) : slice(pos, pos, arr.head);
        const auto end = k + 1 < dpos.size() ? dpos[k + 1] : w.letters.size();
        f.suffix = slice(pos + 1, end, arr.tail);
        const auto start = k == 0 ? 0 : pos;
        f.whole = slice(start, end, arr.head);
        out.push_back(f);
    }
    return out;
}

inline Comb single(const Word &w)
{
    Comb c;
    c[w] = 1;
    return c;
}

inline Comb path_comb(const ncrep::Path &p)
{
    return single(from_path(p));
}

inline TensorComb contract_word(const ncrep::DoubleDerivation &theta, const Word &w)
{
    const auto &q = *theta.quiver();
    TensorComb out;
    const auto forms = decompose(q, w);
    const std::size_t n = forms.size();
    for (std::size_t k = 0; k < n; ++k) {
        Comb before;
        if (k == 0) {
            before = single(forms[0].prefix);
        } else {
            before = single(forms[0].whole);
            for (std::size_t j = 1; j < k; ++j) {
                before = mul(before, single(forms[j].whole));
            }
        }
        Comb after = single(forms[k].suffix);
        for (std::size_t j = k + 1; j < n; ++j) {
            after = mul(after, single(forms[j].whole));
        }
        const Rational sign = (k % 2 == 0) ? 1 : -1;
        const auto value = theta.value(forms[k].arrow);
        for (const auto &[uv, c] : value.terms()) {
            const Comb left = mul(before, path_comb(uv.first));
            const Comb right = mul(path_comb(uv.second), after);
            for (const auto &[l, cl] : left) {
                for (const auto &[r, cr] : right) {
                    add(out, {l, r}, sign * c * cl * cr);
                }
            }
        }
    }
    return out;
}

inline TensorComb contract(const ncrep::DoubleDerivation &theta, const ncrep::NCForm &u)
{
    TensorComb out;
    for (const auto &[w, k] : from_form(u)) {
        for (const auto &[uv, c] : contract_word(theta, w)) {
            add(out, uv, k * c);
        }
    }
    return out;
}

// (c1 (x) c2)° = (-1)^{|c1||c2|} c2 c1
inline Comb flatten(const TensorComb &t)
{
    Comb out;
    for (const auto &[uv, c] : t) {
        Word w;
        if (!join(uv.second, uv.first, w)) {
            continue;
        }
        const int s = uv.first.degree() * uv.second.degree();
        add(out, w, (s % 2 == 0) ? c : Rational(-c));
    }
    return out;
}

// The explicit k-sum for the reduced contraction:
//   sum_k (-1)^{(k-1)(n-k+1)} (i''al_k) al_{k+1}...al_n al_1...al_{k-1} (i'al_k)
inline Comb reduced_contract(const ncrep::DoubleDerivation &theta, const ncrep::NCForm &u)
{
    const auto &q = *theta.quiver();
    Comb out;
    for (const auto &[w, coeff] : from_form(u)) {
        const auto forms = decompose(q, w);
        const std::size_t n = forms.size();
        for (std::size_t k = 1; k <= n; ++k) {
            const auto &fk = forms[k - 1];
            Comb tail_part = single(fk.suffix);
            for (std::size_t j = k + 1; j <= n; ++j) {
                tail_part = mul(tail_part, single(forms[j - 1].whole));
            }
            Comb head_part;
            if (k == 1) {
                head_part = single(fk.prefix);
            } else {
                head_part = single(forms[0].whole);
                for (std::size_t j = 2; j < k; ++j) {
                    head_part = mul(head_part, single(forms[j - 1].whole));
                }
                // For k > 1 the prefix of al_k is trivial; the word before
                // d a_k is exactly al_1...al_{k-1}.
            }
            const long e = static_cast<long>((k - 1) * (n - k + 1));
            const Rational sign = (e % 2 == 0) ? 1 : -1;
            const auto value = theta.value(fk.arrow);
            for (const auto &[uv, c] : value.terms()) {
                const Comb t = mul(mul(mul(path_comb(uv.second), tail_part), head_part), path_comb(uv.first));
                for (const auto &[x, cx] : t) {
                    add(out, x, sign * coeff * c * cx);
                }
            }
        }
    }
    return out;
}

} // namespace oracle

#endif
