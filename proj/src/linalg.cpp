#include "ncrep/linalg.hpp"

#include <utility>

#include "ncrep/error.hpp"

namespace ncrep
{

QMatrix::QMatrix(std::size_t rows, std::size_t cols, const std::vector<Rational> &row_major)
    : m_rows(rows), m_cols(cols), m_data(row_major)
{
    if (m_data.size() != rows * cols) {
        throw AlgebraError("matrix data size does not match its shape");
    }
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b)
{
    if (a.cols() != b.rows()) {
        throw AlgebraError("matrix shapes do not agree");
    }
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

namespace
{

struct Elimination {
    std::size_t rank = 0;
    // Product of pivots bookkeeping for square full-rank inputs.
    Integer last_pivot = 1;
    int swap_sign = 1;
    Rational row_scale = 1;
};

Elimination bareiss(const QMatrix &m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    Elimination out;
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        }
        out.row_scale *= Rational(l);
    }

    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            std::swap(a[p], a[r]);
            out.swap_sign = -out.swap_sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    out.rank = r;
    out.last_pivot = prev;
    return out;
}

} // namespace

std::size_t rank(const QMatrix &m)
{
    return bareiss(m).rank;
}

Rational determinant(const QMatrix &m)
{
    if (m.rows() != m.cols()) {
        throw AlgebraError("determinant of a non-square matrix");
    }
    if (m.rows() == 0) {
        return 1;
    }
    const auto e = bareiss(m);
    if (e.rank < m.rows()) {
        return 0;
    }
    Rational d(e.last_pivot * e.swap_sign);
    d /= e.row_scale;
    return d;
}

} // namespace ncrep
