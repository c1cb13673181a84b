#ifndef NCREP_REP_HPP
#define NCREP_REP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncrep/algebra.hpp"
#include "ncrep/comm_form.hpp"
#include "ncrep/double_derivation.hpp"
#include "ncrep/forms.hpp"
#include "ncrep/matrices.hpp"
#include "ncrep/necklace.hpp"
#include "ncrep/polynomial.hpp"

namespace ncrep
{

// Positive dimension per vertex, in vertex order.
class DimensionVector
{
public:
    // Throws AlgebraError on an entry < 1.
    explicit DimensionVector(std::vector<int> dims);

    std::size_t size() const { return m_dims.size(); }
    int operator[](std::size_t v) const { return m_dims.at(v); }
    const std::vector<int> &values() const { return m_dims; }
    // N = sum of the entries.
    std::size_t total() const;

private:
    std::vector<int> m_dims;
};

/// The representation space of kQ at a dimension vector and its coordinate
/// ring A_V.
///
/// Index convention, used by every formula on this side: vertex i owns the
/// contiguous block [offset(i), offset(i) + v_i) of 0..N-1; an arrow a: s -> t
/// becomes the generic matrix in block (t, s), and the variable x_{a,i,j} is
/// its entry in row i (in the target block) and column j (in the source
/// block). Variables are ordered by arrow, then row, then column, and named
/// "<arrow>_<i>_<j>" with 1-based local indices.
class RepSetup
{
public:
    struct Variable {
        ArrowId arrow;
        // Global 0-based indices into the N x N matrix.
        std::size_t row;
        std::size_t col;
    };

    RepSetup(QuiverPtr q, DimensionVector dims);

    const QuiverPtr &quiver() const { return m_quiver; }
    const DimensionVector &dims() const { return m_dims; }
    const PolyRing &ring() const { return m_ring; }
    std::size_t size() const { return m_n; }
    std::size_t num_vars() const { return m_vars.size(); }
    std::size_t offset(VertexId v) const { return m_offsets.at(static_cast<std::size_t>(v)); }
    // Vertex owning a global index.
    VertexId block_of(std::size_t index) const { return m_block_of.at(index); }

    const Variable &variable(std::size_t k) const { return m_vars.at(k); }
    // Variable at global (row, col) of arrow a's matrix; throws if (row, col)
    // lies outside the arrow's block.
    std::size_t var_index(ArrowId a, std::size_t row, std::size_t col) const;

private:
    QuiverPtr m_quiver;
    DimensionVector m_dims;
    std::size_t m_n = 0;
    std::vector<std::size_t> m_offsets;
    std::vector<VertexId> m_block_of;
    std::vector<Variable> m_vars;
    // First variable of each arrow.
    std::vector<std::size_t> m_arrow_base;
    PolyRing m_ring;
};

// Throws AlgebraError if the dimension vector does not match the vertices.
RepSetup rep_setup(QuiverPtr q, DimensionVector dims);

// Universal representation: unital algebra map A -> End V (x) A_V.
PolyMatrix universal_rep(const RepSetup &s, const AlgebraElement &x);
// Generic matrix of one arrow / projector of one vertex.
PolyMatrix arrow_matrix(const RepSetup &s, ArrowId a);
PolyMatrix idempotent_matrix(const RepSetup &s, VertexId v);

// Tr(pi(x)).
Polynomial trace_fn(const RepSetup &s, const AlgebraElement &x);

// Tr of pi extended to forms (arrows to generic matrices, da to their
// entrywise differentials, products wedge-multiplied). Degree <= 3.
CommForm rep_form(const RepSetup &s, const NCForm &u);
CommForm rep_form(const RepSetup &s, const DRClass &w);
// The matrix itself, before the trace, for one form word.
FormMatrix rep_form_matrix(const RepSetup &s, const FormWord &w);

// Materialization of the 1-forms functor on a path algebra.
struct OneFormsCheck {
    std::size_t generators = 0; // symbols (da)_{ij}
    std::size_t variables = 0;
    // (da)_{ij} |-> dx_{a,ij} is a bijection onto the coordinate differentials.
    bool generators_match = false;
    // (b m)_{jl} = sum_r b_{jr} m_{rl} under the map, for sampled b, m.
    bool left_relations = false;
    // (m b)_{jl} = sum_r m_{jr} b_{rl} under the map.
    bool right_relations = false;
    // (d b)_{jl} = d(b_{jl}) for sampled algebra elements b.
    bool differential_compatible = false;

    bool ok() const
    {
        return generators == variables && generators_match && left_relations && right_relations
               && differential_compatible;
    }
};

// `samples` random algebra elements / 1-forms drawn from `seed`.
OneFormsCheck vdb_one_forms(const RepSetup &s, std::uint64_t seed = 1, int samples = 20);

// The N^2 derivations (indexed i * N + j) induced by a double derivation:
// D_{ij}(x_{a,u,v}) = sum pi(Theta'(a))_{u j} * pi(Theta''(a))_{i v}.
std::vector<PolyDerivation> vdb_double_derivation(const RepSetup &s, const DoubleDerivation &theta);

// Product of the traces of the given closed paths (a monomial of
// Sym(A/[A,A])); the empty monomial maps to 1.
Polynomial sym_necklace_map(const RepSetup &s, const std::vector<Path> &monomial);

// Infinitesimal conjugation generators E_{kl}, one per (k, l) in a common
// vertex block: x_{a,i,j} |-> [i == k] x_{a,l,j} - [j == l] x_{a,i,k}.
std::vector<PolyDerivation> conjugation_generators(const RepSetup &s);

// Every E_{kl} kills f.
bool invariance_check(const RepSetup &s, const Polynomial &f);

} // namespace ncrep

#endif
