#ifndef NCREP_POLYNOMIAL_HPP
#define NCREP_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncrep/lincomb.hpp"
#include "ncrep/rational.hpp"

namespace ncrep
{

// Ordered list of named commuting variables.
class PolyRing
{
public:
    PolyRing() = default;
    // Throws AlgebraError on duplicate names.
    explicit PolyRing(std::vector<std::string> names);

    std::size_t arity() const { return m_names.size(); }
    const std::string &name(std::size_t i) const { return m_names.at(i); }
    const std::vector<std::string> &names() const { return m_names; }
    std::optional<std::size_t> find(std::string_view name) const;

    friend bool operator==(const PolyRing &, const PolyRing &) = default;

private:
    std::vector<std::string> m_names;
};

// Dense exponent vector; its size is the ring arity.
using Monomial = std::vector<std::uint32_t>;

/// Sparse polynomial over Q in a fixed number of variables.
class Polynomial
{
public:
    explicit Polynomial(std::size_t arity = 0) : m_arity(arity) {}
    static Polynomial constant(std::size_t arity, const Rational &c);
    static Polynomial variable(std::size_t arity, std::size_t i);

    std::size_t arity() const { return m_arity; }
    const LinComb<Monomial> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const;
    // Constant coefficient (zero monomial).
    Rational constant_term() const;

    void add_term(const Monomial &m, const Rational &c);

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Rational &s);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Rational &s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

    Polynomial derivative(std::size_t var) const;
    Rational evaluate(std::span<const Rational> point) const;

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.m_arity == b.m_arity && a.m_terms == b.m_terms;
    }

    // Human-readable, e.g. "x_1_1^2 - 1/2*x_1_2 + 3". Uses the ring names.
    std::string to_string(const PolyRing &ring) const;

private:
    std::size_t m_arity;
    LinComb<Monomial> m_terms;
};

} // namespace ncrep

#endif
