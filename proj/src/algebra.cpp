#include "ncrep/algebra.hpp"

#include <string>

#include "ncrep/error.hpp"

namespace ncrep
{

AlgebraElement AlgebraElement::path(QuiverPtr q, const Path &p, const Rational &c)
{
    return AlgebraElement(std::move(q), LinComb<Path>(p, c));
}

AlgebraElement AlgebraElement::idempotent(QuiverPtr q, VertexId v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= q->num_vertices()) {
        throw AlgebraError("vertex id " + std::to_string(v) + " out of range");
    }
    return path(std::move(q), Path::trivial(v));
}

AlgebraElement AlgebraElement::arrow(QuiverPtr q, ArrowId a)
{
    auto p = Path::arrow(*q, a);
    return path(std::move(q), p);
}

AlgebraElement AlgebraElement::arrow(QuiverPtr q, std::string_view name)
{
    auto a = q->find_arrow(name);
    if (!a) {
        throw AlgebraError("unknown arrow '" + std::string(name) + "'");
    }
    return arrow(std::move(q), *a);
}

AlgebraElement AlgebraElement::unit(QuiverPtr q)
{
    return scalar(std::move(q), 1);
}

AlgebraElement AlgebraElement::scalar(QuiverPtr q, const Rational &c)
{
    LinComb<Path> t;
    for (std::size_t v = 0; v < q->num_vertices(); ++v) {
        t.add(Path::trivial(static_cast<VertexId>(v)), c);
    }
    return AlgebraElement(std::move(q), std::move(t));
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o)
{
    require_same_quiver(m_quiver, o.m_quiver);
    m_terms += o.m_terms;
    return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &o)
{
    require_same_quiver(m_quiver, o.m_quiver);
    m_terms -= o.m_terms;
    return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Rational &s)
{
    m_terms *= s;
    return *this;
}

AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b)
{
    require_same_quiver(a.m_quiver, b.m_quiver);
    LinComb<Path> out;
    for (const auto &[p, c] : a.m_terms) {
        for (const auto &[r, d] : b.m_terms) {
            if (auto pr = concat(p, r)) {
                out.add(std::move(*pr), c * d);
            }
        }
    }
    return AlgebraElement(a.m_quiver, std::move(out));
}

AlgebraElement path_compose(const QuiverPtr &q, const Path &p, const Path &r)
{
    AlgebraElement out(q);
    if (auto pr = concat(p, r)) {
        out = AlgebraElement::path(q, *pr);
    }
    return out;
}

} // namespace ncrep
