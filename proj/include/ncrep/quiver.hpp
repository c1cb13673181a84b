#ifndef NCREP_QUIVER_HPP
#define NCREP_QUIVER_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncrep
{

using VertexId = int;
using ArrowId = int;

// Default reserved character for the name of a doubled arrow: the double of
// `a` is `a~`.
inline constexpr char default_star_suffix = '~';

struct Arrow {
    std::string name;
    VertexId tail = 0;
    VertexId head = 0;

    friend bool operator==(const Arrow &, const Arrow &) = default;
};

/// A finite quiver (vertices, arrows with tail and head) with an optional
/// star involution a <-> a* recording that it is a double quiver.
///
/// Vertex and arrow order is the order given at construction; all canonical
/// term orders downstream are expressed in these indices.
class Quiver
{
public:
    // Validates: vertex names unique and nonempty, arrow names unique and
    // nonempty, endpoints in range, and no arrow name containing `suffix`.
    // Throws AlgebraError.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, char suffix = default_star_suffix);

    std::size_t num_vertices() const { return m_vertices.size(); }
    std::size_t num_arrows() const { return m_arrows.size(); }

    const std::string &vertex_name(VertexId v) const { return m_vertices.at(static_cast<std::size_t>(v)); }
    const Arrow &arrow(ArrowId a) const { return m_arrows.at(static_cast<std::size_t>(a)); }
    const std::vector<std::string> &vertices() const { return m_vertices; }
    const std::vector<Arrow> &arrows() const { return m_arrows; }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<ArrowId> find_arrow(std::string_view name) const;

    char suffix() const { return m_suffix; }

    // True when the star involution is present.
    bool is_double() const { return m_doubled; }
    // a*; nullopt on quivers without the involution.
    std::optional<ArrowId> star(ArrowId a) const;
    // True for the arrows added by doubling (a* rather than a).
    bool is_starred(ArrowId a) const;

    friend bool operator==(const Quiver &, const Quiver &);

private:
    struct unchecked_tag {
    };
    Quiver(unchecked_tag, std::vector<std::string> vertices, std::vector<Arrow> arrows, char suffix,
           std::vector<ArrowId> star, std::vector<bool> starred);
    void validate_common() const;

    friend Quiver double_quiver(const Quiver &q, std::optional<char> suffix);

    std::vector<std::string> m_vertices;
    std::vector<Arrow> m_arrows;
    char m_suffix;
    std::vector<ArrowId> m_star;
    std::vector<bool> m_starred;
    bool m_doubled = false;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr make_quiver(Quiver q)
{
    return std::make_shared<const Quiver>(std::move(q));
}

// The double quiver: each arrow a: i -> j gains a partner a*: j -> i named
// `a` + suffix; original arrows keep their order, starred arrows are
// appended in the same order. `suffix` defaults to the quiver's reserved
// character. Throws AlgebraError if `q` already carries a star involution or
// a new name collides with an existing arrow.
Quiver double_quiver(const Quiver &q, std::optional<char> suffix = std::nullopt);

// Both operands must live over the same quiver (pointer identity or
// structural equality). Throws AlgebraError otherwise.
void require_same_quiver(const QuiverPtr &a, const QuiverPtr &b);

} // namespace ncrep

#endif
