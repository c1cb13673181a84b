#include "ncrep/double_derivation.hpp"

#include <algorithm>
#include <map>

#include "ncrep/error.hpp"

namespace ncrep
{

TensorElement TensorElement::pure(QuiverPtr q, const Path &u, const Path &v, const Rational &c)
{
    return TensorElement(std::move(q), LinComb<Key>(Key{u, v}, c));
}

bool TensorElement::is_constant() const
{
    return std::all_of(m_terms.begin(), m_terms.end(),
                       [](const auto &kv) { return kv.first.first.is_trivial() && kv.first.second.is_trivial(); });
}

TensorElement &TensorElement::operator+=(const TensorElement &o)
{
    require_same_quiver(m_quiver, o.m_quiver);
    m_terms += o.m_terms;
    return *this;
}

TensorElement &TensorElement::operator*=(const Rational &s)
{
    m_terms *= s;
    return *this;
}

TensorElement outer(const AlgebraElement &a, const TensorElement &t, const AlgebraElement &b)
{
    require_same_quiver(a.quiver(), t.quiver());
    require_same_quiver(b.quiver(), t.quiver());
    LinComb<TensorElement::Key> out;
    for (const auto &[uv, c] : t.terms()) {
        for (const auto &[p, cp] : a.terms()) {
            auto left = concat(p, uv.first);
            if (!left) {
                continue;
            }
            for (const auto &[r, cr] : b.terms()) {
                if (auto right = concat(uv.second, r)) {
                    out.add({*left, std::move(*right)}, c * cp * cr);
                }
            }
        }
    }
    return TensorElement(t.quiver(), std::move(out));
}

TensorElement inner(const AlgebraElement &a, const TensorElement &t, const AlgebraElement &b)
{
    require_same_quiver(a.quiver(), t.quiver());
    require_same_quiver(b.quiver(), t.quiver());
    LinComb<TensorElement::Key> out;
    for (const auto &[uv, c] : t.terms()) {
        for (const auto &[r, cr] : b.terms()) {
            auto left = concat(uv.first, r);
            if (!left) {
                continue;
            }
            for (const auto &[p, cp] : a.terms()) {
                if (auto right = concat(p, uv.second)) {
                    out.add({*left, std::move(*right)}, c * cp * cr);
                }
            }
        }
    }
    return TensorElement(t.quiver(), std::move(out));
}

// ---------------------------------------------------------------------------

void DoubleDerivation::set(ArrowId a, TensorElement value)
{
    require_same_quiver(m_quiver, value.quiver());
    const Arrow &arr = m_quiver->arrow(a);
    for (const auto &[uv, c] : value.terms()) {
        if (uv.first.head() != arr.head || uv.second.tail() != arr.tail) {
            throw AlgebraError("value on arrow '" + arr.name + "' violates e_h Theta(a) e_t = Theta(a)");
        }
    }
    if (value.is_zero()) {
        m_values.erase(a);
    } else {
        m_values.insert_or_assign(a, std::move(value));
    }
}

TensorElement DoubleDerivation::value(ArrowId a) const
{
    auto it = m_values.find(a);
    return it == m_values.end() ? TensorElement(m_quiver) : it->second;
}

DoubleDerivation partial(const QuiverPtr &q, ArrowId a)
{
    if (a < 0 || static_cast<std::size_t>(a) >= q->num_arrows()) {
        throw AlgebraError("unknown arrow id " + std::to_string(a));
    }
    DoubleDerivation theta(q);
    const Arrow &arr = q->arrow(a);
    theta.set(a, TensorElement::pure(q, Path::trivial(arr.head), Path::trivial(arr.tail)));
    return theta;
}

DoubleDerivation inner_sandwich(const DoubleDerivation &theta, VertexId i, VertexId j)
{
    const auto &q = theta.quiver();
    const auto ei = AlgebraElement::idempotent(q, i);
    const auto ej = AlgebraElement::idempotent(q, j);
    DoubleDerivation out(q);
    for (const auto &[a, t] : theta.values()) {
        out.set(a, inner(ei, t, ej));
    }
    return out;
}

TensorElement apply(const DoubleDerivation &theta, const AlgebraElement &x)
{
    require_same_quiver(theta.quiver(), x.quiver());
    const auto &qp = theta.quiver();
    const Quiver &q = *qp;
    LinComb<TensorElement::Key> out;
    for (const auto &[p, c] : x.terms()) {
        const auto arrows = p.arrows();
        for (std::size_t k = 0; k < arrows.size(); ++k) {
            auto it = theta.values().find(arrows[k]);
            if (it == theta.values().end()) {
                continue;
            }
            const Arrow &arr = q.arrow(arrows[k]);
            const Path prefix = k == 0 ? Path::trivial(arr.head)
                                       : Path::from_arrows(q, {arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(k)});
            const Path suffix = k + 1 == arrows.size()
                                    ? Path::trivial(arr.tail)
                                    : Path::from_arrows(q, {arrows.begin() + static_cast<std::ptrdiff_t>(k) + 1, arrows.end()});
            for (const auto &[uv, cv] : it->second.terms()) {
                auto left = concat(prefix, uv.first);
                auto right = concat(uv.second, suffix);
                if (left && right) {
                    out.add({std::move(*left), std::move(*right)}, c * cv);
                }
            }
        }
    }
    return TensorElement(qp, std::move(out));
}

// ---------------------------------------------------------------------------

FormTensor &FormTensor::operator+=(const FormTensor &o)
{
    require_same_quiver(m_quiver, o.m_quiver);
    m_terms += o.m_terms;
    return *this;
}

FormTensor outer_left(const NCForm &u, const FormTensor &t)
{
    require_same_quiver(u.quiver(), t.quiver());
    LinComb<FormTensor::Key> out;
    for (const auto &[lr, c] : t.terms()) {
        for (const auto &[w, cw] : u.terms()) {
            if (auto l = concat(w, lr.first)) {
                out.add({std::move(*l), lr.second}, c * cw);
            }
        }
    }
    return FormTensor(t.quiver(), std::move(out));
}

FormTensor outer_right(const FormTensor &t, const NCForm &v)
{
    require_same_quiver(v.quiver(), t.quiver());
    LinComb<FormTensor::Key> out;
    for (const auto &[lr, c] : t.terms()) {
        for (const auto &[w, cw] : v.terms()) {
            if (auto r = concat(lr.second, w)) {
                out.add({lr.first, std::move(*r)}, c * cw);
            }
        }
    }
    return FormTensor(t.quiver(), std::move(out));
}

NCForm flatten(const FormTensor &t)
{
    LinComb<FormWord> out;
    for (const auto &[lr, c] : t.terms()) {
        if (auto rl = concat(lr.second, lr.first)) {
            const bool odd = (lr.first.degree() * lr.second.degree()) % 2 != 0;
            out.add(std::move(*rl), odd ? Rational(-c) : c);
        }
    }
    return NCForm(t.quiver(), std::move(out));
}

namespace
{

// Calls f(k, position, value) for the k-th (1-based) differential letter of w
// at `position`, with Theta(a) for that letter's arrow, skipping zeros.
template <typename F>
void for_each_differential(const DoubleDerivation &theta, const FormWord &w, F &&f)
{
    int k = 0;
    for (std::size_t pos = 0; pos < w.length(); ++pos) {
        const FormLetter l = w.letter(pos);
        if (!l.differential) {
            continue;
        }
        ++k;
        auto it = theta.values().find(l.arrow);
        if (it != theta.values().end()) {
            f(k, pos, it->second);
        }
    }
}

} // namespace

FormTensor contract(const DoubleDerivation &theta, const NCForm &u)
{
    require_same_quiver(theta.quiver(), u.quiver());
    u.require_homogeneous("contract");
    const Quiver &q = *u.quiver();
    FormTensor out(u.quiver());
    for (const auto &[w, c] : u.terms()) {
        for_each_differential(theta, w, [&](int k, std::size_t pos, const TensorElement &val) {
            const FormWord before = w.slice(q, 0, pos);
            const FormWord after = w.slice(q, pos + 1, w.length());
            const Rational sign = (k - 1) % 2 == 0 ? 1 : -1;
            for (const auto &[uv, cv] : val.terms()) {
                auto left = concat(before, FormWord::from_path(q, uv.first));
                auto right = concat(FormWord::from_path(q, uv.second), after);
                if (left && right) {
                    out.terms().add({std::move(*left), std::move(*right)}, sign * c * cv);
                }
            }
        });
    }
    return out;
}

NCForm reduced_contract(const DoubleDerivation &theta, const NCForm &u)
{
    require_same_quiver(theta.quiver(), u.quiver());
    u.require_homogeneous("reduced_contract");
    const Quiver &q = *u.quiver();
    LinComb<FormWord> out;
    for (const auto &[w, c] : u.terms()) {
        const int n = w.degree();
        for_each_differential(theta, w, [&](int k, std::size_t pos, const TensorElement &val) {
            const FormWord before = w.slice(q, 0, pos);
            const FormWord after = w.slice(q, pos + 1, w.length());
            const Rational sign = ((k - 1) * (n - k + 1)) % 2 == 0 ? 1 : -1;
            for (const auto &[uv, cv] : val.terms()) {
                auto word = concat(FormWord::from_path(q, uv.second), after);
                if (word) {
                    word = concat(*word, before);
                }
                if (word) {
                    word = concat(*word, FormWord::from_path(q, uv.first));
                }
                if (word) {
                    out.add(std::move(*word), sign * c * cv);
                }
            }
        });
    }
    return NCForm(u.quiver(), std::move(out));
}

NCForm reduced_contract_dr(const DoubleDerivation &theta, const DRClass &w)
{
    return reduced_contract(theta, w.representative());
}

// ---------------------------------------------------------------------------

std::string to_string(Verdict v)
{
    switch (v) {
        case Verdict::yes:
            return "yes";
        case Verdict::no:
            return "no";
        case Verdict::undetermined:
            return "undetermined";
    }
    return "undetermined";
}

BiSymplecticMatrix bisymplectic_matrix(const DRClass &omega)
{
    if (omega.degree() != 2) {
        throw AlgebraError("bisymplectic_matrix expects a class of degree 2");
    }
    if (!is_closed(omega)) {
        throw AlgebraError("bisymplectic_matrix expects a closed class");
    }
    const auto &qp = omega.quiver();
    const Quiver &q = *qp;
    const std::size_t n = q.num_arrows();
    BiSymplecticMatrix m{qp, std::vector<std::vector<TensorElement>>(n, std::vector<TensorElement>(n, TensorElement(qp)))};
    for (std::size_t b = 0; b < n; ++b) {
        const NCForm row = reduced_contract_dr(partial(qp, static_cast<ArrowId>(b)), omega);
        for (const auto &[w, c] : row.terms()) {
            const auto ds = w.differentials();
            if (ds.size() != 1) {
                throw AlgebraError("internal error: reduced contraction of a 2-form is not a 1-form");
            }
            const auto ps = w.paths(q);
            m.entries[b][static_cast<std::size_t>(ds[0])] += TensorElement::pure(qp, ps[0], ps[1], c);
        }
    }
    return m;
}

BiSymplecticCertificate is_bisymplectic(const DRClass &omega)
{
    BiSymplecticCertificate cert;
    if (omega.degree() != 2) {
        cert.reason = "class has degree " + std::to_string(omega.degree()) + ", expected 2";
        return cert;
    }
    cert.closed = is_closed(omega);
    if (!cert.closed) {
        cert.reason = "class is not closed";
        return cert;
    }
    cert.matrix = bisymplectic_matrix(omega);
    const auto &m = *cert.matrix;
    const Quiver &q = *omega.quiver();
    const std::size_t n = q.num_arrows();

    for (std::size_t b = 0; b < n; ++b) {
        bool zero_row = true;
        bool zero_col = true;
        for (std::size_t a = 0; a < n; ++a) {
            zero_row = zero_row && m.entries[b][a].is_zero();
            zero_col = zero_col && m.entries[a][b].is_zero();
        }
        if (zero_row) {
            cert.reason = "generator d/d" + q.arrow(static_cast<ArrowId>(b)).name + " maps to zero";
            return cert;
        }
        if (zero_col) {
            cert.reason = "basis form d" + q.arrow(static_cast<ArrowId>(b)).name + " does not occur in the image";
            return cert;
        }
    }
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!m.entries[b][a].is_constant()) {
                cert.verdict = Verdict::undetermined;
                cert.reason = "entry (" + q.arrow(static_cast<ArrowId>(b)).name + ", "
                              + q.arrow(static_cast<ArrowId>(a)).name
                              + ") involves nontrivial paths; invertibility over A (x) A is not decided";
                return cert;
            }
        }
    }

    std::map<std::pair<VertexId, VertexId>, SectorBlock> sectors;
    for (std::size_t b = 0; b < n; ++b) {
        const Arrow &arr = q.arrow(static_cast<ArrowId>(b));
        auto &s = sectors[{arr.tail, arr.head}];
        s.left = arr.tail;
        s.right = arr.head;
        s.rows.push_back(static_cast<ArrowId>(b));
    }
    for (std::size_t a = 0; a < n; ++a) {
        const Arrow &arr = q.arrow(static_cast<ArrowId>(a));
        auto &s = sectors[{arr.head, arr.tail}];
        s.left = arr.head;
        s.right = arr.tail;
        s.cols.push_back(static_cast<ArrowId>(a));
    }
    cert.sectors.reserve(sectors.size());
    for (auto &kv : sectors) {
        cert.sectors.push_back(std::move(kv.second));
    }

    const auto num_sectors = static_cast<long>(cert.sectors.size());
    // Sector blocks are independent; each slot is written by one iteration.
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < num_sectors; ++s) {
        auto &sec = cert.sectors[static_cast<std::size_t>(s)];
        sec.block = QMatrix(sec.rows.size(), sec.cols.size());
        const Path ei = Path::trivial(sec.left);
        const Path ej = Path::trivial(sec.right);
        for (std::size_t r = 0; r < sec.rows.size(); ++r) {
            for (std::size_t c = 0; c < sec.cols.size(); ++c) {
                const auto &entry
                    = m.entries[static_cast<std::size_t>(sec.rows[r])][static_cast<std::size_t>(sec.cols[c])];
                sec.block(r, c) = entry.terms().coeff({ei, ej});
            }
        }
        sec.det = sec.rows.size() == sec.cols.size() ? determinant(sec.block) : Rational(0);
    }

    for (const auto &sec : cert.sectors) {
        if (sec.rows.size() != sec.cols.size()) {
            cert.reason = "sector (" + q.vertex_name(sec.left) + ", " + q.vertex_name(sec.right) + ") is "
                          + std::to_string(sec.rows.size()) + "x" + std::to_string(sec.cols.size());
            return cert;
        }
        if (sgn(sec.det) == 0) {
            cert.reason = "sector (" + q.vertex_name(sec.left) + ", " + q.vertex_name(sec.right) + ") is singular";
            return cert;
        }
    }
    cert.verdict = Verdict::yes;
    cert.reason = "all sector blocks invertible";
    return cert;
}

DRClass canonical_form(const QuiverPtr &q)
{
    if (!q->is_double()) {
        throw AlgebraError("the canonical form needs a double quiver");
    }
    NCForm omega(q);
    for (std::size_t a = 0; a < q->num_arrows(); ++a) {
        const auto id = static_cast<ArrowId>(a);
        if (q->is_starred(id)) {
            continue;
        }
        omega += NCForm::word(q, FormWord::from_letters(*q, {{id, true}, {*q->star(id), true}}));
    }
    return dr_project(omega, 2);
}

} // namespace ncrep
