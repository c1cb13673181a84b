#include "ncrep/necklace.hpp"

#include "ncrep/error.hpp"

namespace ncrep
{

Path necklace_representative(const Quiver &q, const Path &p)
{
    if (!p.is_closed()) {
        throw AlgebraError("necklace classes are only defined for closed paths");
    }
    Path best = p;
    for (std::size_t k = 1; k < p.length(); ++k) {
        Path r = rotate(q, p, k);
        if (r < best) {
            best = std::move(r);
        }
    }
    return best;
}

void NecklaceElement::add(const Path &p, const Rational &c)
{
    m_terms.add(necklace_representative(*m_quiver, p), c);
}

NecklaceElement necklace_class(const AlgebraElement &x)
{
    NecklaceElement out(x.quiver());
    for (const auto &[p, c] : x.terms()) {
        if (p.is_closed()) {
            out.add(p, c);
        }
    }
    return out;
}

} // namespace ncrep
