#ifndef NCREP_RANDOM_HPP
#define NCREP_RANDOM_HPP

#include <cstddef>
#include <random>

#include "ncrep/algebra.hpp"
#include "ncrep/forms.hpp"

// Seeded generators of random algebra data, used by the sampled checks and
// the property suites.
namespace ncrep::random
{

using Engine = std::mt19937_64;

// Small nonzero rational with numerator in [-5, 5] and denominator in [1, 4].
Rational coefficient(Engine &rng);

// A random walk of at most `max_len` arrows (possibly trivial). With
// `closed`, retries until the walk closes up; falls back to a trivial path.
Path path(const Quiver &q, Engine &rng, std::size_t max_len, bool closed = false);

// Sum of up to `terms` random paths with random coefficients.
AlgebraElement element(const QuiverPtr &q, Engine &rng, std::size_t terms, std::size_t max_len,
                       bool closed = false);

// A random form word of exactly `degree` differential letters and at most
// `max_extra` further plain letters. nullopt when the quiver has no arrows
// or no suitable word was found.
std::optional<FormWord> form_word(const Quiver &q, Engine &rng, int degree, std::size_t max_extra,
                                  bool closed = false);

// Homogeneous random form of the given degree.
NCForm form(const QuiverPtr &q, Engine &rng, int degree, std::size_t terms, std::size_t max_extra,
            bool closed = false);

} // namespace ncrep::random

#endif
