#include "ncrep/matrices.hpp"

#include "ncrep/error.hpp"

namespace ncrep
{

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t arity)
{
    PolyMatrix m(n, arity);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Polynomial::constant(arity, 1);
    }
    return m;
}

PolyMatrix &PolyMatrix::operator+=(const PolyMatrix &o)
{
    if (m_n != o.m_n || m_arity != o.m_arity) {
        throw AlgebraError("matrix shape mismatch");
    }
    for (std::size_t k = 0; k < m_data.size(); ++k) {
        m_data[k] += o.m_data[k];
    }
    return *this;
}

PolyMatrix &PolyMatrix::operator*=(const Rational &s)
{
    for (auto &p : m_data) {
        p *= s;
    }
    return *this;
}

Polynomial PolyMatrix::trace() const
{
    Polynomial t(m_arity);
    for (std::size_t i = 0; i < m_n; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

FormMatrix FormMatrix::from_polys(const PolyMatrix &m)
{
    FormMatrix out(m.size(), m.arity(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out(i, j).add({}, m(i, j));
        }
    }
    return out;
}

FormMatrix FormMatrix::differential(const PolyMatrix &m)
{
    FormMatrix out(m.size(), m.arity(), 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out(i, j) = comm_d(m(i, j));
        }
    }
    return out;
}

CommForm FormMatrix::trace() const
{
    CommForm t(m_arity, m_degree);
    for (std::size_t i = 0; i < m_n; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

} // namespace ncrep
