#ifndef NCREP_DOUBLE_DERIVATION_HPP
#define NCREP_DOUBLE_DERIVATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncrep/algebra.hpp"
#include "ncrep/forms.hpp"
#include "ncrep/linalg.hpp"

namespace ncrep
{

/// An element of A (x) A: a finite sum of path pairs u (x) v.
class TensorElement
{
public:
    using Key = std::pair<Path, Path>;

    explicit TensorElement(QuiverPtr q) : m_quiver(std::move(q)) {}
    TensorElement(QuiverPtr q, LinComb<Key> terms) : m_quiver(std::move(q)), m_terms(std::move(terms)) {}
    static TensorElement pure(QuiverPtr q, const Path &u, const Path &v, const Rational &c = 1);

    const QuiverPtr &quiver() const { return m_quiver; }
    const LinComb<Key> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    // Every term is a pair of trivial paths (an element of R (x) R).
    bool is_constant() const;

    TensorElement &operator+=(const TensorElement &o);
    TensorElement &operator*=(const Rational &s);
    friend TensorElement operator+(TensorElement a, const TensorElement &b) { return a += b; }

    friend bool operator==(const TensorElement &a, const TensorElement &b) { return a.m_terms == b.m_terms; }

private:
    QuiverPtr m_quiver;
    LinComb<Key> m_terms;
};

// Outer bimodule structure: a (u (x) v) b = au (x) vb.
TensorElement outer(const AlgebraElement &a, const TensorElement &t, const AlgebraElement &b);
// Inner bimodule structure: a * (u (x) v) * b = ub (x) av.
TensorElement inner(const AlgebraElement &a, const TensorElement &t, const AlgebraElement &b);

/// A double derivation A -> (A (x) A)_out vanishing on the vertex
/// idempotents, given by its values on arrows.
class DoubleDerivation
{
public:
    explicit DoubleDerivation(QuiverPtr q) : m_quiver(std::move(q)) {}

    // Sets the value on `a`. Throws AlgebraError unless every term u (x) v
    // satisfies h(u) = h(a) and t(v) = t(a), i.e. e_h Theta(a) e_t = Theta(a).
    void set(ArrowId a, TensorElement value);

    const QuiverPtr &quiver() const { return m_quiver; }
    // Theta(a); zero when unset.
    TensorElement value(ArrowId a) const;
    const std::map<ArrowId, TensorElement> &values() const { return m_values; }

private:
    QuiverPtr m_quiver;
    std::map<ArrowId, TensorElement> m_values;
};

// d/da: a |-> e_{h(a)} (x) e_{t(a)}, zero on every other arrow.
DoubleDerivation partial(const QuiverPtr &q, ArrowId a);

// Inner sandwich e_i * Theta * e_j.
DoubleDerivation inner_sandwich(const DoubleDerivation &theta, VertexId i, VertexId j);

// Theta(x) via Theta(ab) = a Theta(b) + Theta(a) b (outer action).
TensorElement apply(const DoubleDerivation &theta, const AlgebraElement &x);

/// A finite sum of pairs of forms L (x) R, the target of the contraction.
class FormTensor
{
public:
    using Key = std::pair<FormWord, FormWord>;

    explicit FormTensor(QuiverPtr q) : m_quiver(std::move(q)) {}
    FormTensor(QuiverPtr q, LinComb<Key> terms) : m_quiver(std::move(q)), m_terms(std::move(terms)) {}

    const QuiverPtr &quiver() const { return m_quiver; }
    const LinComb<Key> &terms() const { return m_terms; }
    LinComb<Key> &terms() { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    FormTensor &operator+=(const FormTensor &o);
    friend FormTensor operator+(FormTensor a, const FormTensor &b) { return a += b; }
    friend bool operator==(const FormTensor &a, const FormTensor &b) { return a.m_terms == b.m_terms; }

private:
    QuiverPtr m_quiver;
    LinComb<Key> m_terms;
};

// Outer actions of forms on pair sums: u (L (x) R) = uL (x) R and
// (L (x) R) v = L (x) Rv.
FormTensor outer_left(const NCForm &u, const FormTensor &t);
FormTensor outer_right(const FormTensor &t, const NCForm &v);
// The flattening L (x) R |-> (-1)^{|L||R|} R L.
NCForm flatten(const FormTensor &t);

// Contraction i_Theta: the degree -1 double derivation of the forms
// extending da |-> Theta(a). `u` must be homogeneous; degree 0 gives zero.
FormTensor contract(const DoubleDerivation &theta, const NCForm &u);

// Reduced contraction iota_Theta; on a word a_1 ... a_n of 1-forms:
//   sum_k (-1)^{(k-1)(n-k+1)} i''(a_k) a_{k+1} ... a_n a_1 ... a_{k-1} i'(a_k).
NCForm reduced_contract(const DoubleDerivation &theta, const NCForm &u);

// Reduced contraction applied to the canonical representative of a class.
NCForm reduced_contract_dr(const DoubleDerivation &theta, const DRClass &w);

/// Matrix of iota(omega) on the generators d/db of the double derivations,
/// expanded over the free basis {da} of the 1-forms: entry (b, a) collects
/// the p (x) q with p da q occurring in iota_{d/db} omega. Rows and columns
/// follow the arrow order.
struct BiSymplecticMatrix {
    QuiverPtr quiver;
    std::vector<std::vector<TensorElement>> entries;
};

// Requires omega of degree 2 and closed (AlgebraError otherwise).
BiSymplecticMatrix bisymplectic_matrix(const DRClass &omega);

enum class Verdict { yes, no, undetermined };

std::string to_string(Verdict v);

// Constant block of the matrix for one idempotent sector (i, j): rows are
// the d/db with (t(b), h(b)) = (i, j), columns the da with (h(a), t(a)) =
// (i, j), entries the coefficients of e_i (x) e_j.
struct SectorBlock {
    VertexId left = 0;
    VertexId right = 0;
    std::vector<ArrowId> rows;
    std::vector<ArrowId> cols;
    QMatrix block;
    Rational det;
};

struct BiSymplecticCertificate {
    Verdict verdict = Verdict::no;
    bool closed = false;
    std::string reason;
    std::vector<SectorBlock> sectors;
    // Present whenever omega has degree 2 and is closed.
    std::optional<BiSymplecticMatrix> matrix;
};

// Decision procedure: `no` if omega is not a closed 2-class, if a generator
// maps to zero (zero row) or a basis 1-form is missed (zero column), or if a
// constant sector block is singular or non-square; `yes` if all entries are
// constant and every sector block is invertible; `undetermined` when some
// entry involves nontrivial paths.
BiSymplecticCertificate is_bisymplectic(const DRClass &omega);

// Sum over the arrows a of Q of da da*. Requires a double quiver.
DRClass canonical_form(const QuiverPtr &q);

} // namespace ncrep

#endif
