#ifndef NCREP_LINALG_HPP
#define NCREP_LINALG_HPP

#include <cstddef>
#include <vector>

#include "ncrep/rational.hpp"

namespace ncrep
{

// Dense rational matrix, row-major.
class QMatrix
{
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, const std::vector<Rational> &row_major);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Rational &operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
    friend bool operator==(const QMatrix &a, const QMatrix &b)
    {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
    }

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Rational> m_data;
};

// Exact rank by fraction-free (Bareiss) elimination after clearing row
// denominators.
std::size_t rank(const QMatrix &m);

// Exact determinant, same elimination. Throws AlgebraError if not square.
Rational determinant(const QMatrix &m);

} // namespace ncrep

#endif
