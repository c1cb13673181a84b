#ifndef NCREP_KERNELS_HPP
#define NCREP_KERNELS_HPP

#include <vector>

#include "ncrep/comm_form.hpp"
#include "ncrep/matrices.hpp"

// Hot loops of the representation side. Each kernel has an OpenMP version
// (entries or generators distributed over threads, each output slot written
// by exactly one iteration) and a serial reference kept for testing and
// benchmarking. Both produce identical results.
namespace ncrep::kernels
{

// Matrix product of polynomial matrices.
PolyMatrix multiply(const PolyMatrix &a, const PolyMatrix &b);
// Matrix product of form matrices with wedge-multiplied entries.
FormMatrix multiply(const FormMatrix &a, const FormMatrix &b);
// Images D(f) for every derivation in `ds`.
std::vector<Polynomial> apply_all(const std::vector<PolyDerivation> &ds, const Polynomial &f);

namespace serial
{
PolyMatrix multiply(const PolyMatrix &a, const PolyMatrix &b);
FormMatrix multiply(const FormMatrix &a, const FormMatrix &b);
std::vector<Polynomial> apply_all(const std::vector<PolyDerivation> &ds, const Polynomial &f);
} // namespace serial

// Whether the build has OpenMP, and the thread count it would use.
bool parallel_enabled();
int max_threads();

} // namespace ncrep::kernels

#endif
