#ifndef NCREP_FORMS_HPP
#define NCREP_FORMS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ncrep/algebra.hpp"

namespace ncrep
{

struct FormLetter {
    ArrowId arrow = 0;
    bool differential = false;

    friend bool operator==(const FormLetter &, const FormLetter &) = default;
};

/// Basis monomial p0 da1 p1 ... dan pn of the R-relative forms.
///
/// Since d e_i = 0, the forms on kQ are the path algebra on the letters
/// {a, da}; a word is a composable sequence of such letters in written order
/// (or a trivial e_i), and its degree is the number of differential letters.
/// Letters are packed as 2*arrow + (differential ? 1 : 0), which fixes the
/// lexicographic order used for canonical representatives.
class FormWord
{
public:
    static FormWord trivial(VertexId v);
    // Throws AlgebraError on an empty list, unknown arrows or a composition
    // failure.
    static FormWord from_letters(const Quiver &q, const std::vector<FormLetter> &letters);
    static FormWord from_path(const Quiver &q, const Path &p);
    // Builds p0 da1 p1 ... dan pn; paths.size() must equal arrows.size() + 1.
    static FormWord from_parts(const Quiver &q, const std::vector<Path> &paths, const std::vector<ArrowId> &arrows);

    bool is_trivial() const { return m_codes.empty(); }
    std::size_t length() const { return m_codes.size(); }
    int degree() const { return m_degree; }
    VertexId head() const { return m_head; }
    VertexId tail() const { return m_tail; }
    bool is_closed() const { return m_head == m_tail; }

    std::span<const int> codes() const { return m_codes; }
    FormLetter letter(std::size_t i) const { return {m_codes[i] / 2, (m_codes[i] & 1) != 0}; }

    // Decomposition into the paths p0..pn (possibly trivial).
    std::vector<Path> paths(const Quiver &q) const;
    // The arrows a1..an under d.
    std::vector<ArrowId> differentials() const;
    // Degree-0 words only.
    Path to_path(const Quiver &q) const;

    // Sub-word of letters [first, last). An empty range yields the trivial
    // word at the vertex sitting at that boundary.
    FormWord slice(const Quiver &q, std::size_t first, std::size_t last) const;

    friend std::strong_ordering operator<=>(const FormWord &a, const FormWord &b);
    friend bool operator==(const FormWord &a, const FormWord &b) { return (a <=> b) == 0; }

private:
    FormWord(VertexId head, VertexId tail, std::vector<int> codes);

    friend std::optional<FormWord> concat(const FormWord &u, const FormWord &v);
    friend FormWord rotate(const Quiver &q, const FormWord &w, std::size_t k);

    VertexId m_head;
    VertexId m_tail;
    int m_degree;
    std::vector<int> m_codes;
};

std::optional<FormWord> concat(const FormWord &u, const FormWord &v);
// Moves the first k letters of a closed word to the end.
FormWord rotate(const Quiver &q, const FormWord &w, std::size_t k);

/// An element of the forms: finite Q-combination of form words. Mixed
/// degrees are representable; degree-specific operations reject them.
class NCForm
{
public:
    explicit NCForm(QuiverPtr q) : m_quiver(std::move(q)) {}
    NCForm(QuiverPtr q, LinComb<FormWord> terms) : m_quiver(std::move(q)), m_terms(std::move(terms)) {}
    static NCForm word(QuiverPtr q, const FormWord &w, const Rational &c = 1);
    static NCForm from_algebra(const AlgebraElement &x);

    const QuiverPtr &quiver() const { return m_quiver; }
    const LinComb<FormWord> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    bool is_homogeneous() const;
    // Common degree; nullopt for the zero form or a mixed form.
    std::optional<int> degree() const;
    // Throws AlgebraError if mixed; returns the degree (nullopt for zero).
    std::optional<int> require_homogeneous(const char *what) const;

    // Degree-0 forms only.
    AlgebraElement to_algebra() const;

    NCForm &operator+=(const NCForm &o);
    NCForm &operator-=(const NCForm &o);
    NCForm &operator*=(const Rational &s);
    friend NCForm operator+(NCForm a, const NCForm &b) { return a += b; }
    friend NCForm operator-(NCForm a, const NCForm &b) { return a -= b; }
    friend NCForm operator-(NCForm a) { return a *= Rational(-1); }
    friend NCForm operator*(const Rational &s, NCForm a) { return a *= s; }
    // Graded product (concatenation through the middle path product).
    friend NCForm operator*(const NCForm &u, const NCForm &v);

    friend bool operator==(const NCForm &a, const NCForm &b) { return a.m_terms == b.m_terms; }

private:
    QuiverPtr m_quiver;
    LinComb<FormWord> m_terms;
};

NCForm form_mul(const NCForm &u, const NCForm &v);

// Universal (R-relative) derivation A -> forms of degree 1.
NCForm d_algebra(const AlgebraElement &x);

// The differential on forms, extended by the graded Leibniz rule.
NCForm d_form(const NCForm &u);

/// A class in the Karoubi-de Rham quotient forms / [forms, forms]
/// (graded commutators).
///
/// Stored words are closed and are the canonical representatives of their
/// signed rotation orbits.
class DRClass
{
public:
    DRClass(QuiverPtr q, int degree) : m_quiver(std::move(q)), m_degree(degree) {}
    static DRClass zero(QuiverPtr q, int degree) { return DRClass(std::move(q), degree); }

    const QuiverPtr &quiver() const { return m_quiver; }
    int degree() const { return m_degree; }
    const LinComb<FormWord> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    // The canonical representative as a form.
    NCForm representative() const { return NCForm(m_quiver, m_terms); }

    DRClass &operator+=(const DRClass &o);
    DRClass &operator*=(const Rational &s);
    friend DRClass operator+(DRClass a, const DRClass &b) { return a += b; }
    friend DRClass operator-(DRClass a, const DRClass &b)
    {
        DRClass nb = b;
        nb *= Rational(-1);
        return a += nb;
    }

    friend bool operator==(const DRClass &a, const DRClass &b)
    {
        return a.m_degree == b.m_degree && a.m_terms == b.m_terms;
    }

private:
    friend DRClass dr_project(const NCForm &u, std::optional<int> degree);

    QuiverPtr m_quiver;
    int m_degree;
    LinComb<FormWord> m_terms;
};

// Canonical representative of the signed rotation orbit of a word: the
// lexicographically least rotation and the Koszul sign (+1/-1) relating it
// to `w`. nullopt when `w` is open or its orbit contains -w (the class is 0).
std::optional<std::pair<FormWord, int>> dr_canonical(const Quiver &q, const FormWord &w);

// Projection to the quotient. `u` must be homogeneous; `degree` fixes the
// degree of a zero input (defaults to 0 in that case).
DRClass dr_project(const NCForm &u, std::optional<int> degree = std::nullopt);

// d descended to the quotient.
DRClass dr_d(const DRClass &w);

// d w == 0 in degree 3. Requires degree 2 (AlgebraError otherwise).
bool is_closed(const DRClass &w);

} // namespace ncrep

#endif
