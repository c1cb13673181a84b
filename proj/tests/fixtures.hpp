#ifndef NCREP_TESTS_FIXTURES_HPP
#define NCREP_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "ncrep/quiver.hpp"

namespace fixtures
{

inline ncrep::QuiverPtr jordan()
{
    return ncrep::make_quiver(ncrep::Quiver({"v"}, {{"x", 0, 0}}));
}

inline ncrep::QuiverPtr jordan_double()
{
    return ncrep::make_quiver(ncrep::double_quiver(*jordan()));
}

// 1 --a--> 2
inline ncrep::QuiverPtr a2()
{
    return ncrep::make_quiver(ncrep::Quiver({"1", "2"}, {{"a", 0, 1}}));
}

inline ncrep::QuiverPtr a2_double()
{
    return ncrep::make_quiver(ncrep::double_quiver(*a2()));
}

// 1 --a--> 2 --b--> 3
inline ncrep::QuiverPtr a3_double()
{
    return ncrep::make_quiver(ncrep::double_quiver(ncrep::Quiver({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}})));
}

// Kronecker quiver, two parallel arrows.
inline ncrep::QuiverPtr kronecker_double()
{
    return ncrep::make_quiver(ncrep::double_quiver(ncrep::Quiver({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}})));
}

// d loops x1..xd at one vertex.
inline ncrep::QuiverPtr loops(int d)
{
    std::vector<ncrep::Arrow> arrows;
    for (int k = 1; k <= d; ++k) {
        arrows.push_back({"x" + std::to_string(k), 0, 0});
    }
    return ncrep::make_quiver(ncrep::Quiver({"v"}, arrows));
}

} // namespace fixtures

#endif
