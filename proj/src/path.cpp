#include "ncrep/path.hpp"

#include <algorithm>
#include <string>

#include "ncrep/error.hpp"

namespace ncrep
{

Path Path::trivial(VertexId v)
{
    return Path(v, v, {});
}

Path Path::from_arrows(const Quiver &q, std::vector<ArrowId> arrows)
{
    if (arrows.empty()) {
        throw AlgebraError("a nontrivial path needs at least one arrow");
    }
    for (auto a : arrows) {
        if (a < 0 || static_cast<std::size_t>(a) >= q.num_arrows()) {
            throw AlgebraError("arrow id " + std::to_string(a) + " out of range");
        }
    }
    for (std::size_t j = 0; j + 1 < arrows.size(); ++j) {
        if (q.arrow(arrows[j]).tail != q.arrow(arrows[j + 1]).head) {
            throw AlgebraError("arrows '" + q.arrow(arrows[j]).name + "' and '" + q.arrow(arrows[j + 1]).name
                               + "' do not compose");
        }
    }
    const VertexId h = q.arrow(arrows.front()).head;
    const VertexId t = q.arrow(arrows.back()).tail;
    return Path(h, t, std::move(arrows));
}

std::strong_ordering operator<=>(const Path &a, const Path &b)
{
    if (auto c = a.length() <=> b.length(); c != 0) {
        return c;
    }
    if (a.is_trivial()) {
        return a.m_head <=> b.m_head;
    }
    return std::lexicographical_compare_three_way(a.m_arrows.begin(), a.m_arrows.end(), b.m_arrows.begin(),
                                                  b.m_arrows.end());
}

std::optional<Path> concat(const Path &p, const Path &q)
{
    if (p.tail() != q.head()) {
        return std::nullopt;
    }
    if (p.is_trivial()) {
        return q;
    }
    if (q.is_trivial()) {
        return p;
    }
    std::vector<ArrowId> arrows;
    arrows.reserve(p.length() + q.length());
    arrows.insert(arrows.end(), p.m_arrows.begin(), p.m_arrows.end());
    arrows.insert(arrows.end(), q.m_arrows.begin(), q.m_arrows.end());
    return Path(p.head(), q.tail(), std::move(arrows));
}

Path rotate(const Quiver &q, const Path &p, std::size_t k)
{
    if (!p.is_closed()) {
        throw AlgebraError("only closed paths can be rotated");
    }
    if (p.is_trivial()) {
        return p;
    }
    k %= p.length();
    std::vector<ArrowId> arrows(p.m_arrows);
    std::rotate(arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(k), arrows.end());
    const VertexId h = q.arrow(arrows.front()).head;
    return Path(h, h, std::move(arrows));
}

} // namespace ncrep
