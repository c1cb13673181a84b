#include "ncrep/forms.hpp"

#include <algorithm>
#include <string>

#include "ncrep/error.hpp"

namespace ncrep
{

namespace
{

int encode(FormLetter l)
{
    return 2 * l.arrow + (l.differential ? 1 : 0);
}

int letter_arrow(int code)
{
    return code / 2;
}

bool letter_is_differential(int code)
{
    return (code & 1) != 0;
}

int count_differentials(std::span<const int> codes)
{
    return static_cast<int>(std::count_if(codes.begin(), codes.end(), letter_is_differential));
}

} // namespace

FormWord::FormWord(VertexId head, VertexId tail, std::vector<int> codes)
    : m_head(head), m_tail(tail), m_degree(count_differentials(codes)), m_codes(std::move(codes))
{
}

FormWord FormWord::trivial(VertexId v)
{
    return FormWord(v, v, {});
}

FormWord FormWord::from_letters(const Quiver &q, const std::vector<FormLetter> &letters)
{
    if (letters.empty()) {
        throw AlgebraError("a nontrivial form word needs at least one letter");
    }
    std::vector<int> codes;
    codes.reserve(letters.size());
    for (const auto &l : letters) {
        if (l.arrow < 0 || static_cast<std::size_t>(l.arrow) >= q.num_arrows()) {
            throw AlgebraError("arrow id " + std::to_string(l.arrow) + " out of range");
        }
        codes.push_back(encode(l));
    }
    for (std::size_t j = 0; j + 1 < letters.size(); ++j) {
        if (q.arrow(letters[j].arrow).tail != q.arrow(letters[j + 1].arrow).head) {
            throw AlgebraError("letters '" + q.arrow(letters[j].arrow).name + "' and '"
                               + q.arrow(letters[j + 1].arrow).name + "' do not compose");
        }
    }
    return FormWord(q.arrow(letters.front().arrow).head, q.arrow(letters.back().arrow).tail, std::move(codes));
}

FormWord FormWord::from_path(const Quiver &q, const Path &p)
{
    if (p.is_trivial()) {
        return trivial(p.head());
    }
    std::vector<FormLetter> letters;
    for (auto a : p.arrows()) {
        letters.push_back({a, false});
    }
    return from_letters(q, letters);
}

FormWord FormWord::from_parts(const Quiver &q, const std::vector<Path> &paths, const std::vector<ArrowId> &arrows)
{
    if (paths.size() != arrows.size() + 1) {
        throw AlgebraError("a form word p0 da1 ... dan pn needs n+1 paths");
    }
    std::optional<FormWord> w = from_path(q, paths[0]);
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        auto da = from_letters(q, {{arrows[k], true}});
        w = concat(*w, da);
        if (w) {
            w = concat(*w, from_path(q, paths[k + 1]));
        }
        if (!w) {
            throw AlgebraError("form word parts do not compose");
        }
    }
    return *w;
}

std::vector<Path> FormWord::paths(const Quiver &q) const
{
    std::vector<Path> out;
    std::size_t start = 0;
    auto emit = [&](std::size_t first, std::size_t last) {
        out.push_back(slice(q, first, last).to_path(q));
    };
    for (std::size_t i = 0; i < m_codes.size(); ++i) {
        if (letter_is_differential(m_codes[i])) {
            emit(start, i);
            start = i + 1;
        }
    }
    emit(start, m_codes.size());
    return out;
}

std::vector<ArrowId> FormWord::differentials() const
{
    std::vector<ArrowId> out;
    for (int c : m_codes) {
        if (letter_is_differential(c)) {
            out.push_back(letter_arrow(c));
        }
    }
    return out;
}

Path FormWord::to_path(const Quiver &q) const
{
    if (m_degree != 0) {
        throw AlgebraError("form word of positive degree is not a path");
    }
    if (m_codes.empty()) {
        return Path::trivial(m_head);
    }
    std::vector<ArrowId> arrows;
    arrows.reserve(m_codes.size());
    for (int c : m_codes) {
        arrows.push_back(letter_arrow(c));
    }
    return Path::from_arrows(q, std::move(arrows));
}

FormWord FormWord::slice(const Quiver &q, std::size_t first, std::size_t last) const
{
    if (first >= last) {
        const VertexId v = first == 0 ? m_head : q.arrow(letter_arrow(m_codes[first - 1])).tail;
        return trivial(v);
    }
    std::vector<int> codes(m_codes.begin() + static_cast<std::ptrdiff_t>(first),
                           m_codes.begin() + static_cast<std::ptrdiff_t>(last));
    const VertexId h = q.arrow(letter_arrow(codes.front())).head;
    const VertexId t = q.arrow(letter_arrow(codes.back())).tail;
    return FormWord(h, t, std::move(codes));
}

std::strong_ordering operator<=>(const FormWord &a, const FormWord &b)
{
    if (auto c = a.m_codes.size() <=> b.m_codes.size(); c != 0) {
        return c;
    }
    if (a.m_codes.empty()) {
        return a.m_head <=> b.m_head;
    }
    return std::lexicographical_compare_three_way(a.m_codes.begin(), a.m_codes.end(), b.m_codes.begin(),
                                                  b.m_codes.end());
}

std::optional<FormWord> concat(const FormWord &u, const FormWord &v)
{
    if (u.tail() != v.head()) {
        return std::nullopt;
    }
    if (u.is_trivial()) {
        return v;
    }
    if (v.is_trivial()) {
        return u;
    }
    std::vector<int> codes;
    codes.reserve(u.length() + v.length());
    codes.insert(codes.end(), u.m_codes.begin(), u.m_codes.end());
    codes.insert(codes.end(), v.m_codes.begin(), v.m_codes.end());
    return FormWord(u.head(), v.tail(), std::move(codes));
}

FormWord rotate(const Quiver &q, const FormWord &w, std::size_t k)
{
    if (!w.is_closed()) {
        throw AlgebraError("only closed form words can be rotated");
    }
    if (w.is_trivial()) {
        return w;
    }
    k %= w.length();
    std::vector<int> codes(w.m_codes);
    std::rotate(codes.begin(), codes.begin() + static_cast<std::ptrdiff_t>(k), codes.end());
    const VertexId h = q.arrow(letter_arrow(codes.front())).head;
    return FormWord(h, h, std::move(codes));
}

// ---------------------------------------------------------------------------

NCForm NCForm::word(QuiverPtr q, const FormWord &w, const Rational &c)
{
    return NCForm(std::move(q), LinComb<FormWord>(w, c));
}

NCForm NCForm::from_algebra(const AlgebraElement &x)
{
    LinComb<FormWord> t;
    for (const auto &[p, c] : x.terms()) {
        t.add(FormWord::from_path(*x.quiver(), p), c);
    }
    return NCForm(x.quiver(), std::move(t));
}

bool NCForm::is_homogeneous() const
{
    if (m_terms.empty()) {
        return true;
    }
    const int d = m_terms.begin()->first.degree();
    return std::all_of(m_terms.begin(), m_terms.end(), [d](const auto &kv) { return kv.first.degree() == d; });
}

std::optional<int> NCForm::degree() const
{
    if (m_terms.empty() || !is_homogeneous()) {
        return std::nullopt;
    }
    return m_terms.begin()->first.degree();
}

std::optional<int> NCForm::require_homogeneous(const char *what) const
{
    if (!is_homogeneous()) {
        throw AlgebraError(std::string(what) + ": form is not homogeneous");
    }
    return degree();
}

AlgebraElement NCForm::to_algebra() const
{
    LinComb<Path> t;
    for (const auto &[w, c] : m_terms) {
        t.add(w.to_path(*m_quiver), c);
    }
    return AlgebraElement(m_quiver, std::move(t));
}

NCForm &NCForm::operator+=(const NCForm &o)
{
    require_same_quiver(m_quiver, o.m_quiver);
    m_terms += o.m_terms;
    return *this;
}

NCForm &NCForm::operator-=(const NCForm &o)
{
    require_same_quiver(m_quiver, o.m_quiver);
    m_terms -= o.m_terms;
    return *this;
}

NCForm &NCForm::operator*=(const Rational &s)
{
    m_terms *= s;
    return *this;
}

NCForm operator*(const NCForm &u, const NCForm &v)
{
    require_same_quiver(u.m_quiver, v.m_quiver);
    LinComb<FormWord> out;
    for (const auto &[a, c] : u.m_terms) {
        for (const auto &[b, e] : v.m_terms) {
            if (auto ab = concat(a, b)) {
                out.add(std::move(*ab), c * e);
            }
        }
    }
    return NCForm(u.m_quiver, std::move(out));
}

NCForm form_mul(const NCForm &u, const NCForm &v)
{
    return u * v;
}

NCForm d_form(const NCForm &u)
{
    const Quiver &q = *u.quiver();
    LinComb<FormWord> out;
    for (const auto &[w, c] : u.terms()) {
        int seen = 0;
        for (std::size_t k = 0; k < w.length(); ++k) {
            const FormLetter l = w.letter(k);
            if (l.differential) {
                ++seen;
                continue;
            }
            std::vector<FormLetter> letters;
            letters.reserve(w.length());
            for (std::size_t j = 0; j < w.length(); ++j) {
                letters.push_back(w.letter(j));
            }
            letters[k].differential = true;
            out.add(FormWord::from_letters(q, letters), (seen % 2 == 0) ? c : Rational(-c));
        }
    }
    return NCForm(u.quiver(), std::move(out));
}

NCForm d_algebra(const AlgebraElement &x)
{
    return d_form(NCForm::from_algebra(x));
}

// ---------------------------------------------------------------------------

std::optional<std::pair<FormWord, int>> dr_canonical(const Quiver &q, const FormWord &w)
{
    if (!w.is_closed()) {
        return std::nullopt;
    }
    if (w.is_trivial()) {
        return std::pair{w, 1};
    }
    const int n = w.degree();
    const auto codes = w.codes();
    std::optional<FormWord> best;
    int best_sign = 1;
    int prefix_degree = 0;
    for (std::size_t k = 0; k < w.length(); ++k) {
        if (k > 0 && letter_is_differential(codes[k - 1])) {
            ++prefix_degree;
        }
        // u v = (-1)^{|u||v|} v u in the quotient.
        const int sign = (prefix_degree * (n - prefix_degree)) % 2 == 0 ? 1 : -1;
        FormWord r = rotate(q, w, k);
        if (k > 0 && r == w && sign == -1) {
            return std::nullopt;
        }
        if (!best || r < *best) {
            best = std::move(r);
            best_sign = sign;
        }
    }
    return std::pair{std::move(*best), best_sign};
}

DRClass &DRClass::operator+=(const DRClass &o)
{
    require_same_quiver(m_quiver, o.m_quiver);
    if (m_degree != o.m_degree) {
        throw AlgebraError("adding classes of different degrees");
    }
    m_terms += o.m_terms;
    return *this;
}

DRClass &DRClass::operator*=(const Rational &s)
{
    m_terms *= s;
    return *this;
}

DRClass dr_project(const NCForm &u, std::optional<int> degree)
{
    const auto deg = u.require_homogeneous("dr_project");
    if (deg && degree && *deg != *degree) {
        throw AlgebraError("dr_project: form degree does not match the requested degree");
    }
    DRClass out(u.quiver(), deg.value_or(degree.value_or(0)));
    const Quiver &q = *u.quiver();
    for (const auto &[w, c] : u.terms()) {
        if (auto canon = dr_canonical(q, w)) {
            out.m_terms.add(canon->first, canon->second == 1 ? c : Rational(-c));
        }
    }
    return out;
}

DRClass dr_d(const DRClass &w)
{
    return dr_project(d_form(w.representative()), w.degree() + 1);
}

bool is_closed(const DRClass &w)
{
    if (w.degree() != 2) {
        throw AlgebraError("is_closed expects a class of degree 2, got degree " + std::to_string(w.degree()));
    }
    return dr_d(w).is_zero();
}

} // namespace ncrep
