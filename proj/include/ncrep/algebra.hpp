#ifndef NCREP_ALGEBRA_HPP
#define NCREP_ALGEBRA_HPP

#include <string_view>

#include "ncrep/lincomb.hpp"
#include "ncrep/path.hpp"
#include "ncrep/quiver.hpp"
#include "ncrep/rational.hpp"

namespace ncrep
{

/// An element of the path algebra kQ: a finite Q-combination of basis paths.
class AlgebraElement
{
public:
    explicit AlgebraElement(QuiverPtr q) : m_quiver(std::move(q)) {}
    AlgebraElement(QuiverPtr q, LinComb<Path> terms) : m_quiver(std::move(q)), m_terms(std::move(terms)) {}

    static AlgebraElement path(QuiverPtr q, const Path &p, const Rational &c = 1);
    static AlgebraElement idempotent(QuiverPtr q, VertexId v);
    static AlgebraElement arrow(QuiverPtr q, ArrowId a);
    // Throws AlgebraError for an unknown name.
    static AlgebraElement arrow(QuiverPtr q, std::string_view name);
    // 1 = sum of all e_i.
    static AlgebraElement unit(QuiverPtr q);
    static AlgebraElement scalar(QuiverPtr q, const Rational &c);

    const QuiverPtr &quiver() const { return m_quiver; }
    const LinComb<Path> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    AlgebraElement &operator+=(const AlgebraElement &o);
    AlgebraElement &operator-=(const AlgebraElement &o);
    AlgebraElement &operator*=(const Rational &s);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
    friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
    friend AlgebraElement operator*(const Rational &s, AlgebraElement a) { return a *= s; }
    // Bilinear extension of path concatenation. Throws AlgebraError on
    // operands over different quivers.
    friend AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b);

    friend bool operator==(const AlgebraElement &a, const AlgebraElement &b) { return a.m_terms == b.m_terms; }

private:
    QuiverPtr m_quiver;
    LinComb<Path> m_terms;
};

// p * q as an algebra element (a single path or zero).
AlgebraElement path_compose(const QuiverPtr &q, const Path &p, const Path &r);

} // namespace ncrep

#endif
