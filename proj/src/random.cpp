#include "ncrep/random.hpp"

#include <algorithm>
#include <vector>

namespace ncrep::random
{

namespace
{

constexpr int max_attempts = 64;

std::size_t uniform(Engine &rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Arrows in written order; the next written arrow must have its head at the
// current tail.
std::vector<ArrowId> walk(const Quiver &q, Engine &rng, std::size_t len)
{
    std::vector<ArrowId> arrows;
    if (q.num_arrows() == 0 || len == 0) {
        return arrows;
    }
    arrows.push_back(static_cast<ArrowId>(uniform(rng, 0, q.num_arrows() - 1)));
    std::vector<ArrowId> candidates;
    while (arrows.size() < len) {
        const VertexId at = q.arrow(arrows.back()).tail;
        candidates.clear();
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            if (q.arrow(static_cast<ArrowId>(a)).head == at) {
                candidates.push_back(static_cast<ArrowId>(a));
            }
        }
        if (candidates.empty()) {
            break;
        }
        arrows.push_back(candidates[uniform(rng, 0, candidates.size() - 1)]);
    }
    return arrows;
}

bool walk_closed(const Quiver &q, const std::vector<ArrowId> &arrows)
{
    return q.arrow(arrows.front()).head == q.arrow(arrows.back()).tail;
}

} // namespace

Rational coefficient(Engine &rng)
{
    long num = 0;
    while (num == 0) {
        num = std::uniform_int_distribution<long>(-5, 5)(rng);
    }
    const long den = std::uniform_int_distribution<long>(1, 4)(rng);
    Rational c(num, den);
    c.canonicalize();
    return c;
}

Path path(const Quiver &q, Engine &rng, std::size_t max_len, bool closed)
{
    const auto trivial = [&] {
        return Path::trivial(static_cast<VertexId>(uniform(rng, 0, q.num_vertices() - 1)));
    };
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const std::size_t len = uniform(rng, 0, max_len);
        auto arrows = walk(q, rng, len);
        if (arrows.empty()) {
            return trivial();
        }
        if (closed && !walk_closed(q, arrows)) {
            continue;
        }
        return Path::from_arrows(q, std::move(arrows));
    }
    return trivial();
}

AlgebraElement element(const QuiverPtr &q, Engine &rng, std::size_t terms, std::size_t max_len, bool closed)
{
    AlgebraElement x(q);
    const std::size_t n = uniform(rng, 1, std::max<std::size_t>(terms, 1));
    for (std::size_t k = 0; k < n; ++k) {
        x += AlgebraElement::path(q, path(*q, rng, max_len, closed), coefficient(rng));
    }
    return x;
}

std::optional<FormWord> form_word(const Quiver &q, Engine &rng, int degree, std::size_t max_extra, bool closed)
{
    if (degree == 0) {
        return FormWord::from_path(q, path(q, rng, max_extra, closed));
    }
    if (q.num_arrows() == 0) {
        return std::nullopt;
    }
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const std::size_t len = static_cast<std::size_t>(degree) + uniform(rng, 0, max_extra);
        auto arrows = walk(q, rng, len);
        if (arrows.size() < static_cast<std::size_t>(degree)) {
            continue;
        }
        if (closed && !walk_closed(q, arrows)) {
            continue;
        }
        std::vector<std::size_t> positions(arrows.size());
        for (std::size_t i = 0; i < positions.size(); ++i) {
            positions[i] = i;
        }
        std::shuffle(positions.begin(), positions.end(), rng);
        std::vector<FormLetter> letters;
        for (auto a : arrows) {
            letters.push_back({a, false});
        }
        for (int k = 0; k < degree; ++k) {
            letters[positions[static_cast<std::size_t>(k)]].differential = true;
        }
        return FormWord::from_letters(q, letters);
    }
    return std::nullopt;
}

NCForm form(const QuiverPtr &q, Engine &rng, int degree, std::size_t terms, std::size_t max_extra, bool closed)
{
    NCForm u(q);
    const std::size_t n = uniform(rng, 1, std::max<std::size_t>(terms, 1));
    for (std::size_t k = 0; k < n; ++k) {
        if (auto w = form_word(*q, rng, degree, max_extra, closed)) {
            u += NCForm::word(q, *w, coefficient(rng));
        }
    }
    return u;
}

} // namespace ncrep::random
