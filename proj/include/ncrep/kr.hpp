#ifndef NCREP_KR_HPP
#define NCREP_KR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncrep/comm_form.hpp"
#include "ncrep/double_derivation.hpp"
#include "ncrep/forms.hpp"
#include "ncrep/rep.hpp"

namespace ncrep
{

struct KROptions {
    // Generator seed for the sampling point (only used when the induced
    // 2-form has nonconstant coefficients).
    std::uint64_t seed = 1;
    // Evaluation point for the rank, overriding the sampled one. Must have
    // one coordinate per variable.
    std::optional<std::vector<Rational>> point;
    // Compare against the canonical cotangent form even if omega is not
    // recognised as the canonical class.
    bool canonical_requested = false;
    std::string description;
};

// End-to-end check that a 2-class on a quiver induces a symplectic form on
// a representation space.
struct KRReport {
    std::string description;
    std::vector<int> dims;
    bool closed = false;
    BiSymplecticCertificate bisymplectic;
    // Omega = Tr(pi(omega)).
    CommForm omega{0, 2};
    bool comm_closed = false;
    std::size_t rank = 0;
    std::size_t num_vars = 0;
    // Set when the canonical comparison ran.
    std::optional<bool> canonical_match;
    std::optional<std::vector<Rational>> sample_point;
    Verdict verdict = Verdict::no;
    std::vector<std::string> notes;
};

// Expanded sum over the arrows a of the base quiver, and entries i, j, of
// dx_{a,ij} ^ dx_{a*,ji}. Requires a double quiver.
CommForm canonical_comm_form(const RepSetup &s);

// Throws AlgebraError unless omega has degree 2, or if opts.point has the
// wrong length.
KRReport kr_verify(const RepSetup &s, const DRClass &omega, const KROptions &opts = {});

} // namespace ncrep

#endif
