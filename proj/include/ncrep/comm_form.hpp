#ifndef NCREP_COMM_FORM_HPP
#define NCREP_COMM_FORM_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ncrep/linalg.hpp"
#include "ncrep/polynomial.hpp"

namespace ncrep
{

// Exterior degree cap. 2-forms and their differentials are all that the
// closedness checks need.
inline constexpr int max_form_degree = 3;

// Strictly increasing variable indices i_1 < ... < i_n of dx_{i_1} ^ ... ^ dx_{i_n}.
using FormIndex = std::vector<int>;

/// Exterior differential form of fixed degree n <= 3 with polynomial
/// coefficients. Only sorted index tuples are stored, so antisymmetry is
/// structural.
class CommForm
{
public:
    CommForm(std::size_t arity, int degree);
    static CommForm from_poly(const Polynomial &f);
    // dx_i
    static CommForm differential(std::size_t arity, std::size_t i);

    std::size_t arity() const { return m_arity; }
    int degree() const { return m_degree; }
    const std::map<FormIndex, Polynomial> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    bool has_constant_coefficients() const;

    // Adds f * dx_I for an arbitrary index list; reorders with the
    // permutation sign and drops repeated indices.
    void add(const std::vector<int> &indices, const Polynomial &f);
    Polynomial coefficient(const FormIndex &sorted) const;

    CommForm &operator+=(const CommForm &o);
    CommForm &operator-=(const CommForm &o);
    CommForm &operator*=(const Rational &s);
    friend CommForm operator+(CommForm a, const CommForm &b) { return a += b; }
    friend CommForm operator-(CommForm a, const CommForm &b) { return a -= b; }
    friend CommForm operator-(CommForm a) { return a *= Rational(-1); }
    // Multiplication by a function.
    friend CommForm operator*(const Polynomial &f, const CommForm &u);

    friend bool operator==(const CommForm &a, const CommForm &b)
    {
        return a.m_arity == b.m_arity && a.m_degree == b.m_degree && a.m_terms == b.m_terms;
    }

    std::string to_string(const PolyRing &ring) const;

private:
    std::size_t m_arity;
    int m_degree;
    std::map<FormIndex, Polynomial> m_terms;
};

// Graded-commutative product. Throws AlgebraError when the degrees add past
// the cap.
CommForm wedge(const CommForm &u, const CommForm &v);

// de Rham differential. Inputs of degree > 2 are rejected.
CommForm comm_d(const Polynomial &f);
CommForm comm_d(const CommForm &u);

// M[i][j] = coefficient of dx_i ^ dx_j at `point` for i < j, M[j][i] = -M[i][j].
QMatrix skew_matrix(const CommForm &omega2, std::span<const Rational> point);

/// Derivation of the polynomial ring, given by the images of the variables.
class PolyDerivation
{
public:
    explicit PolyDerivation(std::size_t arity) : m_images(arity, Polynomial(arity)) {}
    explicit PolyDerivation(std::vector<Polynomial> images);
    // The coordinate vector field d/dx_i.
    static PolyDerivation coordinate(std::size_t arity, std::size_t i);

    std::size_t arity() const { return m_images.size(); }
    const Polynomial &image(std::size_t i) const { return m_images.at(i); }
    void set_image(std::size_t i, Polynomial f);
    bool is_zero() const;

    friend bool operator==(const PolyDerivation &, const PolyDerivation &) = default;

private:
    std::vector<Polynomial> m_images;
};

Polynomial apply_derivation(const PolyDerivation &d, const Polynomial &f);
// Interior product i_D, degree >= 1.
CommForm interior(const PolyDerivation &d, const CommForm &u);
// Lie derivative by Cartan's formula L_D = i_D d + d i_D; degree <= 2.
CommForm apply_derivation(const PolyDerivation &d, const CommForm &u);

} // namespace ncrep

#endif
