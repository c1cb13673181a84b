#ifndef NCREP_MATRICES_HPP
#define NCREP_MATRICES_HPP

#include <cstddef>
#include <vector>

#include "ncrep/comm_form.hpp"
#include "ncrep/polynomial.hpp"

namespace ncrep
{

// N x N matrix of polynomials (an element of End V (x) A_V).
class PolyMatrix
{
public:
    PolyMatrix(std::size_t n, std::size_t arity) : m_n(n), m_arity(arity), m_data(n * n, Polynomial(arity)) {}
    static PolyMatrix identity(std::size_t n, std::size_t arity);

    std::size_t size() const { return m_n; }
    std::size_t arity() const { return m_arity; }
    Polynomial &operator()(std::size_t i, std::size_t j) { return m_data[i * m_n + j]; }
    const Polynomial &operator()(std::size_t i, std::size_t j) const { return m_data[i * m_n + j]; }

    PolyMatrix &operator+=(const PolyMatrix &o);
    PolyMatrix &operator*=(const Rational &s);
    Polynomial trace() const;

    friend bool operator==(const PolyMatrix &, const PolyMatrix &) = default;

private:
    std::size_t m_n;
    std::size_t m_arity;
    std::vector<Polynomial> m_data;
};

// N x N matrix of exterior forms of one common degree.
class FormMatrix
{
public:
    FormMatrix(std::size_t n, std::size_t arity, int degree)
        : m_n(n), m_arity(arity), m_degree(degree), m_data(n * n, CommForm(arity, degree))
    {
    }
    static FormMatrix from_polys(const PolyMatrix &m);
    // Entrywise differential.
    static FormMatrix differential(const PolyMatrix &m);

    std::size_t size() const { return m_n; }
    std::size_t arity() const { return m_arity; }
    int degree() const { return m_degree; }
    CommForm &operator()(std::size_t i, std::size_t j) { return m_data[i * m_n + j]; }
    const CommForm &operator()(std::size_t i, std::size_t j) const { return m_data[i * m_n + j]; }

    CommForm trace() const;

    friend bool operator==(const FormMatrix &, const FormMatrix &) = default;

private:
    std::size_t m_n;
    std::size_t m_arity;
    int m_degree;
    std::vector<CommForm> m_data;
};

} // namespace ncrep

#endif
