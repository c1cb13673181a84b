#include "ncrep/kr.hpp"

#include <random>

#include "ncrep/error.hpp"
#include "ncrep/linalg.hpp"

namespace ncrep
{

namespace
{

std::vector<Rational> sample_point(std::size_t arity, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rational> point;
    point.reserve(arity);
    for (std::size_t k = 0; k < arity; ++k) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        point.push_back(c);
    }
    return point;
}

} // namespace

CommForm canonical_comm_form(const RepSetup &s)
{
    const auto &q = *s.quiver();
    if (!q.is_double()) {
        throw AlgebraError("the canonical form needs a double quiver");
    }
    CommForm out(s.num_vars(), 2);
    const auto one = Polynomial::constant(s.num_vars(), 1);
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto id = static_cast<ArrowId>(a);
        if (q.is_starred(id)) {
            continue;
        }
        const auto star = *q.star(id);
        const auto &arr = q.arrow(id);
        for (int i = 0; i < s.dims()[static_cast<std::size_t>(arr.head)]; ++i) {
            for (int j = 0; j < s.dims()[static_cast<std::size_t>(arr.tail)]; ++j) {
                const auto row = s.offset(arr.head) + static_cast<std::size_t>(i);
                const auto col = s.offset(arr.tail) + static_cast<std::size_t>(j);
                out.add({static_cast<int>(s.var_index(id, row, col)), static_cast<int>(s.var_index(star, col, row))},
                        one);
            }
        }
    }
    return out;
}

KRReport kr_verify(const RepSetup &s, const DRClass &omega, const KROptions &opts)
{
    require_same_quiver(s.quiver(), omega.quiver());
    if (omega.degree() != 2) {
        throw AlgebraError("kr_verify expects a 2-class, got degree " + std::to_string(omega.degree()));
    }
    if (opts.point && opts.point->size() != s.num_vars()) {
        throw AlgebraError("evaluation point has " + std::to_string(opts.point->size()) + " coordinates, expected "
                           + std::to_string(s.num_vars()));
    }
    const auto &q = s.quiver();

    KRReport r;
    r.description = opts.description;
    r.dims = s.dims().values();
    r.num_vars = s.num_vars();
    r.closed = is_closed(omega);
    r.bisymplectic = is_bisymplectic(omega);
    r.omega = rep_form(s, omega);
    r.comm_closed = comm_d(r.omega).is_zero();

    if (r.omega.has_constant_coefficients()) {
        const std::vector<Rational> origin(s.num_vars());
        r.rank = rank(skew_matrix(r.omega, origin));
    } else {
        r.sample_point = opts.point ? *opts.point : sample_point(s.num_vars(), opts.seed);
        r.rank = rank(skew_matrix(r.omega, *r.sample_point));
        r.notes.push_back(opts.point ? "rank evaluated at the given point" : "rank evaluated at a sampled point");
    }

    const bool canonical = q->is_double() && omega == canonical_form(q);
    if (opts.canonical_requested && !q->is_double()) {
        r.notes.push_back("canonical match skipped: quiver is not a double quiver");
    } else if (canonical || opts.canonical_requested) {
        r.canonical_match = r.omega == canonical_comm_form(s);
    }

    const bool definite_failure = !r.closed || r.bisymplectic.verdict == Verdict::no || !r.comm_closed
                                  || r.rank != r.num_vars || r.canonical_match == false;
    if (definite_failure) {
        r.verdict = Verdict::no;
    } else if (r.bisymplectic.verdict == Verdict::undetermined) {
        r.verdict = Verdict::undetermined;
    } else {
        r.verdict = Verdict::yes;
    }
    return r;
}

} // namespace ncrep
