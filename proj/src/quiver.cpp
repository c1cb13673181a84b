#include "ncrep/quiver.hpp"

#include <set>
#include <utility>

#include "ncrep/error.hpp"

namespace ncrep
{

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, char suffix)
    : m_vertices(std::move(vertices)), m_arrows(std::move(arrows)), m_suffix(suffix)
{
    validate_common();
    for (const auto &a : m_arrows) {
        if (a.name.find(m_suffix) != std::string::npos) {
            throw AlgebraError("arrow name '" + a.name + "' contains the reserved suffix '" + std::string(1, m_suffix)
                               + "'");
        }
    }
    m_starred.assign(m_arrows.size(), false);
}

Quiver::Quiver(unchecked_tag, std::vector<std::string> vertices, std::vector<Arrow> arrows, char suffix,
               std::vector<ArrowId> star, std::vector<bool> starred)
    : m_vertices(std::move(vertices)), m_arrows(std::move(arrows)), m_suffix(suffix), m_star(std::move(star)),
      m_starred(std::move(starred)), m_doubled(true)
{
    validate_common();
    for (std::size_t a = 0; a < m_star.size(); ++a) {
        const auto b = static_cast<std::size_t>(m_star[a]);
        if (b == a || static_cast<std::size_t>(m_star[b]) != a || m_arrows[a].tail != m_arrows[b].head
            || m_arrows[a].head != m_arrows[b].tail) {
            throw AlgebraError("star pairing is not a fixed-point-free involution reversing arrows");
        }
    }
}

void Quiver::validate_common() const
{
    std::set<std::string_view> seen;
    for (const auto &v : m_vertices) {
        if (v.empty()) {
            throw AlgebraError("empty vertex name");
        }
        if (!seen.insert(v).second) {
            throw AlgebraError("duplicate vertex name '" + v + "'");
        }
    }
    seen.clear();
    const auto nv = static_cast<VertexId>(m_vertices.size());
    for (const auto &a : m_arrows) {
        if (a.name.empty()) {
            throw AlgebraError("empty arrow name");
        }
        if (!seen.insert(a.name).second) {
            throw AlgebraError("duplicate arrow name '" + a.name + "'");
        }
        if (a.tail < 0 || a.tail >= nv || a.head < 0 || a.head >= nv) {
            throw AlgebraError("arrow '" + a.name + "' references a vertex out of range");
        }
    }
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const
{
    for (std::size_t i = 0; i < m_vertices.size(); ++i) {
        if (m_vertices[i] == name) {
            return static_cast<VertexId>(i);
        }
    }
    return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const
{
    for (std::size_t i = 0; i < m_arrows.size(); ++i) {
        if (m_arrows[i].name == name) {
            return static_cast<ArrowId>(i);
        }
    }
    return std::nullopt;
}

std::optional<ArrowId> Quiver::star(ArrowId a) const
{
    if (!m_doubled) {
        return std::nullopt;
    }
    return m_star.at(static_cast<std::size_t>(a));
}

bool Quiver::is_starred(ArrowId a) const
{
    return m_starred.at(static_cast<std::size_t>(a));
}

bool operator==(const Quiver &a, const Quiver &b)
{
    return a.m_vertices == b.m_vertices && a.m_arrows == b.m_arrows && a.m_suffix == b.m_suffix
           && a.m_star == b.m_star && a.m_starred == b.m_starred && a.m_doubled == b.m_doubled;
}

Quiver double_quiver(const Quiver &q, std::optional<char> suffix)
{
    if (q.is_double()) {
        throw AlgebraError("quiver already carries a star involution");
    }
    const char sfx = suffix.value_or(q.suffix());
    const auto n = q.num_arrows();
    std::vector<Arrow> arrows = q.arrows();
    std::vector<ArrowId> star(2 * n);
    std::vector<bool> starred(2 * n, false);
    for (std::size_t a = 0; a < n; ++a) {
        Arrow s{q.arrows()[a].name + sfx, q.arrows()[a].head, q.arrows()[a].tail};
        if (q.find_arrow(s.name)) {
            throw AlgebraError("arrow name collision: '" + s.name + "' already exists");
        }
        arrows.push_back(std::move(s));
        star[a] = static_cast<ArrowId>(n + a);
        star[n + a] = static_cast<ArrowId>(a);
        starred[n + a] = true;
    }
    return Quiver(Quiver::unchecked_tag{}, q.vertices(), std::move(arrows), sfx, std::move(star), std::move(starred));
}

void require_same_quiver(const QuiverPtr &a, const QuiverPtr &b)
{
    if (a == b) {
        return;
    }
    if (!a || !b || !(*a == *b)) {
        throw AlgebraError("operands live over different quivers");
    }
}

} // namespace ncrep
