#ifndef NCREP_PATH_HPP
#define NCREP_PATH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncrep/quiver.hpp"

namespace ncrep
{

/// A basis path of kQ: either the trivial path e_i or a nonempty arrow
/// sequence a_l ... a_1.
///
/// Arrows are stored in written order (leftmost first), so the arrow applied
/// first is the last entry and concatenation of written words is the path
/// product. Head and tail are cached at construction.
class Path
{
public:
    static Path trivial(VertexId v);
    // Throws AlgebraError if the sequence is empty, an arrow id is out of
    // range, or consecutive arrows do not compose.
    static Path from_arrows(const Quiver &q, std::vector<ArrowId> arrows);
    static Path arrow(const Quiver &q, ArrowId a) { return from_arrows(q, {a}); }

    bool is_trivial() const { return m_arrows.empty(); }
    std::size_t length() const { return m_arrows.size(); }
    VertexId head() const { return m_head; }
    VertexId tail() const { return m_tail; }
    bool is_closed() const { return m_head == m_tail; }
    std::span<const ArrowId> arrows() const { return m_arrows; }

    // Canonical term order: by length, then vertex (trivial) or arrow ids
    // (lexicographic).
    friend std::strong_ordering operator<=>(const Path &a, const Path &b);
    friend bool operator==(const Path &a, const Path &b) { return (a <=> b) == 0; }

private:
    Path(VertexId head, VertexId tail, std::vector<ArrowId> arrows)
        : m_head(head), m_tail(tail), m_arrows(std::move(arrows))
    {
    }

    friend std::optional<Path> concat(const Path &p, const Path &q);
    friend Path rotate(const Quiver &q, const Path &p, std::size_t k);

    VertexId m_head;
    VertexId m_tail;
    std::vector<ArrowId> m_arrows;
};

// p * q when t(p) = h(q), following the trivial-path rules; nullopt (zero)
// otherwise.
std::optional<Path> concat(const Path &p, const Path &q);

// Cyclic rotation of a closed path moving the first k written arrows to the
// end. Requires p closed; k taken modulo the length.
Path rotate(const Quiver &q, const Path &p, std::size_t k);

} // namespace ncrep

#endif
