#ifndef NCREP_NECKLACE_HPP
#define NCREP_NECKLACE_HPP

#include "ncrep/algebra.hpp"

namespace ncrep
{

/// An element of A/[A,A]. Keys are closed paths stored as their
/// lexicographically least rotation (trivial paths are their own class).
class NecklaceElement
{
public:
    explicit NecklaceElement(QuiverPtr q) : m_quiver(std::move(q)) {}

    const QuiverPtr &quiver() const { return m_quiver; }
    const LinComb<Path> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    // `p` must be closed; it is replaced by its canonical rotation.
    void add(const Path &p, const Rational &c);

    friend bool operator==(const NecklaceElement &a, const NecklaceElement &b) { return a.m_terms == b.m_terms; }

private:
    QuiverPtr m_quiver;
    LinComb<Path> m_terms;
};

// Lexicographically least rotation of a closed path.
Path necklace_representative(const Quiver &q, const Path &p);

// Projection kQ -> kQ/[kQ,kQ]: open paths vanish, closed paths go to their
// rotation class.
NecklaceElement necklace_class(const AlgebraElement &x);

} // namespace ncrep

#endif
