#include <doctest.h>

#include "fixtures.hpp"
#include "ncrep/error.hpp"
#include "ncrep/expr.hpp"
#include "ncrep/kr.hpp"
#include "ncrep/report.hpp"

using namespace ncrep;

namespace
{

std::size_t expected_rank(const RepSetup &s)
{
    const auto &q = *s.quiver();
    std::size_t total = 0;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto &arr = q.arrow(static_cast<ArrowId>(a));
        if (q.is_starred(static_cast<ArrowId>(a))) {
            continue;
        }
        total += static_cast<std::size_t>(s.dims()[static_cast<std::size_t>(arr.head)]
                                          * s.dims()[static_cast<std::size_t>(arr.tail)]);
    }
    return 2 * total;
}

} // namespace

TEST_CASE("canonical pipeline on small double quivers")
{
    const std::vector<std::tuple<QuiverPtr, std::vector<int>, std::size_t>> cases = {
        {fixtures::jordan_double(), {1}, 2},         {fixtures::jordan_double(), {2}, 8},
        {fixtures::jordan_double(), {3}, 18},        {fixtures::a2_double(), {1, 1}, 2},
        {fixtures::a2_double(), {2, 3}, 12},         {fixtures::a3_double(), {1, 2, 1}, 8},
        {fixtures::kronecker_double(), {2, 1}, 8}};
    for (const auto &[q, dims, rank] : cases) {
        const auto s = rep_setup(q, DimensionVector(dims));
        const auto r = kr_verify(s, canonical_form(q));
        CHECK(r.closed);
        CHECK(r.bisymplectic.verdict == Verdict::yes);
        CHECK(r.comm_closed);
        CHECK(r.rank == rank);
        CHECK(r.rank == expected_rank(s));
        CHECK(r.num_vars == rank);
        REQUIRE(r.canonical_match.has_value());
        CHECK(*r.canonical_match);
        CHECK_FALSE(r.sample_point.has_value());
        CHECK(r.verdict == Verdict::yes);
    }
}

TEST_CASE("canonical skew matrix pairs each coordinate with its dual")
{
    const auto q = fixtures::kronecker_double();
    const auto s = rep_setup(q, DimensionVector({2, 3}));
    const std::vector<Rational> origin(s.num_vars());
    const auto m = skew_matrix(canonical_comm_form(s), origin);
    for (std::size_t k = 0; k < s.num_vars(); ++k) {
        const auto &v = s.variable(k);
        const auto partner = s.var_index(*q->star(v.arrow), v.col, v.row);
        const Rational sign = q->is_starred(v.arrow) ? -1 : 1;
        for (std::size_t j = 0; j < s.num_vars(); ++j) {
            CHECK(m(k, j) == (j == partner ? sign : Rational(0)));
        }
    }
}

TEST_CASE("zero class")
{
    const auto q = fixtures::jordan_double();
    const auto s = rep_setup(q, DimensionVector({2}));
    const auto r = kr_verify(s, DRClass::zero(q, 2));
    CHECK(r.closed);
    CHECK(r.bisymplectic.verdict == Verdict::no);
    CHECK(r.rank == 0);
    CHECK(r.verdict == Verdict::no);
    CHECK_FALSE(r.canonical_match.has_value());
}

TEST_CASE("explicitly requested canonical comparison")
{
    const auto q = fixtures::jordan_double();
    const auto s = rep_setup(q, DimensionVector({1}));
    KROptions opts;
    opts.canonical_requested = true;
    const auto r = kr_verify(s, dr_project(parse_form("2*d(x)*d(x~)", q)), opts);
    REQUIRE(r.canonical_match.has_value());
    CHECK_FALSE(*r.canonical_match);
    CHECK(r.verdict == Verdict::no);

    const auto plain = fixtures::jordan();
    const auto t = rep_setup(plain, DimensionVector({1}));
    const auto r2 = kr_verify(t, DRClass::zero(plain, 2), opts);
    CHECK_FALSE(r2.canonical_match.has_value());
    REQUIRE(r2.notes.size() == 1);
    CHECK(r2.notes[0].find("not a double quiver") != std::string::npos);
}

TEST_CASE("nonconstant forms are ranked at a seeded point")
{
    const auto q = fixtures::jordan_double();
    const auto s = rep_setup(q, DimensionVector({2}));
    const auto omega = dr_project(parse_form("d(x)*d(x~) + d(x*x)*d(x~)", q));
    KROptions opts;
    opts.seed = 7;
    const auto r = kr_verify(s, omega, opts);
    CHECK(r.closed);
    CHECK(r.comm_closed);
    REQUIRE(r.sample_point.has_value());
    CHECK(r.sample_point->size() == s.num_vars());
    CHECK(r.bisymplectic.verdict == Verdict::undetermined);
    CHECK(r.verdict == (r.rank == r.num_vars ? Verdict::undetermined : Verdict::no));

    const auto again = kr_verify(s, omega, opts);
    CHECK(to_json(again, s).dump() == to_json(r, s).dump());
    opts.seed = 8;
    CHECK(*kr_verify(s, omega, opts).sample_point != *r.sample_point);
}

TEST_CASE("a given point overrides the sampled one")
{
    const auto q = fixtures::jordan_double();
    const auto s = rep_setup(q, DimensionVector({1}));
    // Omega = (2x + 1) dx ^ dx~ degenerates at x = -1/2.
    const auto omega = dr_project(parse_form("d(x)*d(x~) + d(x*x)*d(x~)", q));
    KROptions opts;
    opts.point = std::vector<Rational>{Rational(-1, 2), Rational(3)};
    const auto r = kr_verify(s, omega, opts);
    REQUIRE(r.sample_point.has_value());
    CHECK(*r.sample_point == *opts.point);
    CHECK(r.rank == 0);
    CHECK(r.verdict == Verdict::no);
    CHECK(r.notes.back() == "rank evaluated at the given point");
    opts.point = std::vector<Rational>{Rational(1), Rational(0)};
    CHECK(kr_verify(s, omega, opts).rank == 2);
    opts.point = std::vector<Rational>{Rational(1)};
    CHECK_THROWS_AS(kr_verify(s, omega, opts), AlgebraError);
}

TEST_CASE("kr needs a 2-class")
{
    const auto q = fixtures::jordan_double();
    const auto s = rep_setup(q, DimensionVector({1}));
    CHECK_THROWS_AS(kr_verify(s, dr_project(parse_form("d(x)", q))), AlgebraError);
    CHECK_THROWS_AS(canonical_comm_form(rep_setup(fixtures::jordan(), DimensionVector({1}))), AlgebraError);
}

TEST_CASE("report renderings")
{
    const auto q = fixtures::jordan_double();
    const auto s = rep_setup(q, DimensionVector({1}));
    KROptions opts;
    opts.description = "jordan";
    const auto r = kr_verify(s, canonical_form(q), opts);
    const auto j = to_json(r, s);
    for (const char *key : {"closed", "bisymplectic", "rank", "num_vars", "canonical_match", "sample_point"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["rank"] == 2);
    CHECK(j["bisymplectic"] == "yes");
    CHECK(j["sample_point"].is_null());
    CHECK(j["omega"] == "dx_1_1^dx~_1_1");
    const auto text = to_text(r, s);
    CHECK(text.find("rank: 2 of 2 variables") != std::string::npos);
    CHECK(text.find("verdict: yes") != std::string::npos);
}
