// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "ncrep/expr.hpp"
#include "ncrep/kr.hpp"
#include "ncrep/linalg.hpp"
#include "ncrep/rep.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace ncrep;

namespace
{

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            detail << "first failure: " << what << "; ";
        }
        ok = ok && cond;
    }
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void kr_pipeline(Outcome &o)
{
    struct Case {
        const char *name;
        QuiverPtr q;
        std::vector<int> dims;
        std::size_t rank;
    };
    const std::vector<Case> cases = {{"jordan N=1", fixtures::jordan_double(), {1}, 2},
                                     {"jordan N=2", fixtures::jordan_double(), {2}, 8},
                                     {"jordan N=3", fixtures::jordan_double(), {3}, 18},
                                     {"A2 (1,1)", fixtures::a2_double(), {1, 1}, 2},
                                     {"A2 (2,3)", fixtures::a2_double(), {2, 3}, 12}};
    for (const auto &c : cases) {
        const auto t0 = Clock::now();
        const auto s = rep_setup(c.q, DimensionVector(c.dims));
        const auto r = kr_verify(s, canonical_form(c.q));
        const double secs = seconds_since(t0);
        o.require(r.closed && r.comm_closed, std::string(c.name) + " closedness");
        o.require(r.bisymplectic.verdict == Verdict::yes, std::string(c.name) + " bi-symplectic");
        o.require(r.rank == c.rank && r.num_vars == c.rank, std::string(c.name) + " rank");
        o.require(r.canonical_match.value_or(false), std::string(c.name) + " canonical match");
        o.require(r.verdict == Verdict::yes, std::string(c.name) + " verdict");
        o.require(secs < 10.0, std::string(c.name) + " time");
        o.detail << c.name << " rank " << r.rank << " (" << secs << "s); ";
    }
}

void golden_contraction(Outcome &o)
{
    const auto q = fixtures::jordan_double();
    const auto omega = parse_form("d(x)*d(x~)", q);
    const auto dxs = parse_form("d(x~)", q);
    const auto mdx = parse_form("-d(x)", q);
    o.require(reduced_contract(partial(q, 0), omega) == dxs, "iota_{d/dx}");
    o.require(reduced_contract(partial(q, 1), omega) == mdx, "iota_{d/dx~}");
    o.require(oracle::to_form(q, oracle::reduced_contract(partial(q, 0), omega)) == dxs, "oracle iota_{d/dx}");
    o.require(oracle::to_form(q, oracle::reduced_contract(partial(q, 1), omega)) == mdx, "oracle iota_{d/dx~}");

    random::Engine rng(11);
    int n = 0;
    for (const auto &qq : properties::quivers()) {
        for (int k = 0; k < 50; ++k, ++n) {
            const auto theta = testing_support::random_theta(qq, rng);
            const auto u = random::form(qq, rng, 1 + k % 3, 3, 2);
            o.require(reduced_contract(theta, u) == oracle::to_form(qq, oracle::reduced_contract(theta, u)),
                      "oracle cross-check");
        }
    }
    o.detail << n << " oracle comparisons";
}

void trace_descent(Outcome &o)
{
    random::Engine rng(12);
    int pairs = 0;
    const std::vector<std::pair<QuiverPtr, std::vector<int>>> setups = {
        {fixtures::jordan_double(), {1}}, {fixtures::jordan_double(), {2}}, {fixtures::jordan_double(), {3}},
        {fixtures::a2_double(), {1, 1}},  {fixtures::a2_double(), {2, 1}},  {fixtures::a2_double(), {1, 2}}};
    for (const auto &[q, dims] : setups) {
        const auto s = rep_setup(q, DimensionVector(dims));
        for (int k = 0; k < 40; ++k, ++pairs) {
            const auto x = random::element(q, rng, 3, 3);
            const auto y = random::element(q, rng, 3, 3);
            o.require(trace_fn(s, x * y - y * x).is_zero(), "Tr(xy - yx) = 0");
        }
        for (int k = 0; k < 10; ++k) {
            const auto u = random::form(q, rng, 1 + k % 2, 3, 2);
            o.require(rep_form(s, u) == rep_form(s, dr_project(u)), "form trace on classes");
        }
    }
    o.detail << pairs << " pairs";
}

void invariance(Outcome &o)
{
    random::Engine rng(13);
    int necklaces = 0;
    int variables = 0;
    const std::vector<std::pair<QuiverPtr, std::vector<int>>> setups = {
        {fixtures::jordan_double(), {2}}, {fixtures::a2_double(), {2, 1}}, {fixtures::kronecker_double(), {1, 2}}};
    for (const auto &[q, dims] : setups) {
        const auto s = rep_setup(q, DimensionVector(dims));
        for (int k = 0; k < 20; ++k, ++necklaces) {
            const auto x = random::element(q, rng, 3, 4, true);
            o.require(invariance_check(s, trace_fn(s, x)), "Tr of a necklace is invariant");
        }
        for (std::size_t v = 0; v < s.num_vars(); ++v, ++variables) {
            o.require(!invariance_check(s, Polynomial::variable(s.num_vars(), v)), "bare variable is not invariant");
        }
    }
    o.detail << necklaces << " necklaces, " << variables << " variables";
}

void closedness_transfer(Outcome &o)
{
    random::Engine rng(14);
    int classes = 0;
    const std::vector<std::pair<QuiverPtr, std::vector<int>>> setups = {
        {fixtures::jordan_double(), {2}}, {fixtures::a2_double(), {1, 2}}, {fixtures::kronecker_double(), {2, 1}}};
    for (const auto &[q, dims] : setups) {
        const auto s = rep_setup(q, DimensionVector(dims));
        for (int k = 0; k < 20; ++k, ++classes) {
            const auto omega = dr_project(d_form(random::form(q, rng, 1, 3, 2)), 2);
            o.require(is_closed(omega), "d of a 1-form is closed");
            const auto induced = rep_form(s, omega);
            o.require(comm_d(induced).is_zero(), "induced form is closed");
        }
    }
    o.detail << classes << " classes";
}

void one_forms(Outcome &o)
{
    for (int d = 1; d <= 3; ++d) {
        for (int n = 1; n <= 3; ++n) {
            const auto q = fixtures::loops(d);
            const auto s = rep_setup(q, DimensionVector({n}));
            const auto check = vdb_one_forms(s);
            o.require(check.ok(), "one-forms functor");
            o.require(check.generators == s.num_vars(), "generator count");
            QMatrix m(static_cast<std::size_t>(d * n * n), s.num_vars());
            std::size_t row = 0;
            for (int a = 0; a < d; ++a) {
                for (const auto &der : vdb_double_derivation(s, partial(q, a))) {
                    for (std::size_t v = 0; v < s.num_vars(); ++v) {
                        o.require(der.image(v).is_constant(), "constant coordinate field");
                        m(row, v) = der.image(v).constant_term();
                    }
                    ++row;
                }
            }
            o.require(rank(m) == static_cast<std::size_t>(d * n * n), "derivation family rank");
        }
    }
    const auto a = rep_setup(fixtures::a2_double(), DimensionVector({2, 3}));
    const auto check = vdb_one_forms(a);
    o.require(check.ok() && check.generators == a.num_vars(), "A2 one-forms");
    o.detail << "loops d,N <= 3 and A2 (2,3)";
}

void property_suites(Outcome &o)
{
    const auto t0 = Clock::now();
    for (const auto &r : properties::run_all(2024, 250)) {
        o.require(r.cases >= 200, r.name + " case count");
        o.require(r.ok(), r.name + ": " + r.first_failure);
        o.detail << r.name << " " << r.cases << "; ";
    }
    const double secs = seconds_since(t0);
    o.require(secs < 60.0, "time budget");
    o.detail << "total " << secs << "s";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, void (*)(Outcome &)>> criteria = {
        {"KR pipeline on Jordan and A2 doubles", kr_pipeline},
        {"golden reduced contraction", golden_contraction},
        {"trace descends to necklaces", trace_descent},
        {"trace functions are invariant", invariance},
        {"closedness transfers to representation spaces", closedness_transfer},
        {"one-forms and double derivations on representation spaces", one_forms},
        {"property suites", property_suites}};
    int failed = 0;
    int index = 0;
    for (const auto &[name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            run(o);
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail << "exception: " << e.what();
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << o.detail.str() << "\n";
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
