#include "ncrep/kernels.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "ncrep/error.hpp"

namespace ncrep::kernels
{

namespace
{

void require_square_match(std::size_t n1, std::size_t n2, std::size_t a1, std::size_t a2)
{
    if (n1 != n2 || a1 != a2) {
        throw AlgebraError("matrix shape or arity mismatch");
    }
}

Polynomial poly_entry(const PolyMatrix &a, const PolyMatrix &b, std::size_t i, std::size_t j)
{
    Polynomial s(a.arity());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) {
            continue;
        }
        s += a(i, k) * b(k, j);
    }
    return s;
}

CommForm form_entry(const FormMatrix &a, const FormMatrix &b, std::size_t i, std::size_t j)
{
    CommForm s(a.arity(), a.degree() + b.degree());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) {
            continue;
        }
        s += wedge(a(i, k), b(k, j));
    }
    return s;
}

} // namespace

PolyMatrix multiply(const PolyMatrix &a, const PolyMatrix &b)
{
    require_square_match(a.size(), b.size(), a.arity(), b.arity());
    const auto n = a.size();
    PolyMatrix c(n, a.arity());
    const auto cells = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic)
    for (long cell = 0; cell < cells; ++cell) {
        const auto i = static_cast<std::size_t>(cell) / n;
        const auto j = static_cast<std::size_t>(cell) % n;
        c(i, j) = poly_entry(a, b, i, j);
    }
    return c;
}

FormMatrix multiply(const FormMatrix &a, const FormMatrix &b)
{
    require_square_match(a.size(), b.size(), a.arity(), b.arity());
    const auto n = a.size();
    FormMatrix c(n, a.arity(), a.degree() + b.degree());
    const auto cells = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic)
    for (long cell = 0; cell < cells; ++cell) {
        const auto i = static_cast<std::size_t>(cell) / n;
        const auto j = static_cast<std::size_t>(cell) % n;
        c(i, j) = form_entry(a, b, i, j);
    }
    return c;
}

std::vector<Polynomial> apply_all(const std::vector<PolyDerivation> &ds, const Polynomial &f)
{
    std::vector<Polynomial> out(ds.size(), Polynomial(f.arity()));
    const auto count = static_cast<long>(ds.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
        out[static_cast<std::size_t>(k)] = apply_derivation(ds[static_cast<std::size_t>(k)], f);
    }
    return out;
}

namespace serial
{

PolyMatrix multiply(const PolyMatrix &a, const PolyMatrix &b)
{
    require_square_match(a.size(), b.size(), a.arity(), b.arity());
    const auto n = a.size();
    PolyMatrix c(n, a.arity());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            c(i, j) = poly_entry(a, b, i, j);
        }
    }
    return c;
}

FormMatrix multiply(const FormMatrix &a, const FormMatrix &b)
{
    require_square_match(a.size(), b.size(), a.arity(), b.arity());
    const auto n = a.size();
    FormMatrix c(n, a.arity(), a.degree() + b.degree());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            c(i, j) = form_entry(a, b, i, j);
        }
    }
    return c;
}

std::vector<Polynomial> apply_all(const std::vector<PolyDerivation> &ds, const Polynomial &f)
{
    std::vector<Polynomial> out;
    out.reserve(ds.size());
    for (const auto &d : ds) {
        out.push_back(apply_derivation(d, f));
    }
    return out;
}

} // namespace serial

bool parallel_enabled()
{
#if defined(_OPENMP)
    return true;
#else
    return false;
#endif
}

int max_threads()
{
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace ncrep::kernels
