// ncrep: command-line front end for the noncommutative calculus library.
//
//   ncrep double  <quiver>
//   ncrep bisymp  <quiver> --form <expr>
//   ncrep rep     <quiver> --dim <v-list>
//   ncrep trace   <quiver> --dim <v-list> --elem <expr>
//   ncrep kr      <quiver> --dim <v-list> (--form <expr> | --canonical) [--point <q-list>]
//
// Global flags: --json, --seed <n>. Exit codes: 0 yes/success, 1 no,
// 2 undetermined, 64 usage, 65 bad input data, 66 unreadable file.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncrep/error.hpp"
#include "ncrep/expr.hpp"
#include "ncrep/kr.hpp"
#include "ncrep/quiver_io.hpp"
#include "ncrep/rep.hpp"
#include "ncrep/report.hpp"

namespace
{

constexpr int exit_no = 1;
constexpr int exit_undetermined = 2;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_no_input = 66;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingFile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int verdict_code(ncrep::Verdict v)
{
    switch (v) {
    case ncrep::Verdict::yes:
        return 0;
    case ncrep::Verdict::no:
        return exit_no;
    default:
        return exit_undetermined;
    }
}

std::vector<int> parse_dims(const std::string &text)
{
    std::vector<int> dims;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw UsageError("malformed dimension vector '" + text + "'");
        }
        if (used != item.size()) {
            throw UsageError("malformed dimension vector '" + text + "'");
        }
        dims.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return dims;
}

std::vector<ncrep::Rational> parse_point(const std::string &text)
{
    std::vector<ncrep::Rational> point;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            point.push_back(ncrep::parse_rational(item));
        } catch (const std::exception &) {
            throw UsageError("malformed point coordinate '" + item + "'");
        }
        if (comma == std::string::npos) {
            return point;
        }
        start = comma + 1;
    }
}

ncrep::QuiverPtr read_quiver(const std::string &path)
{
    if (!std::filesystem::is_regular_file(path)) {
        throw MissingFile("cannot read quiver file '" + path + "'");
    }
    try {
        return ncrep::make_quiver(ncrep::load_quiver(path));
    } catch (const ncrep::ParseError &e) {
        throw ncrep::ParseError(e.message() + " (in " + path + ")", e.line(), e.column());
    }
}

ncrep::DRClass read_class(const std::string &text, const ncrep::QuiverPtr &q)
{
    const auto u = ncrep::parse_form(text, q);
    const auto deg = u.require_homogeneous("form");
    return ncrep::dr_project(u, deg.value_or(2));
}

void emit(const ncrep::Json &j, bool json, const std::string &text)
{
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

ncrep::Json quiver_json(const ncrep::Quiver &q)
{
    ncrep::Json j;
    j["vertices"] = q.vertices();
    ncrep::Json arrows = ncrep::Json::array();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto id = static_cast<ncrep::ArrowId>(a);
        const auto &arr = q.arrow(id);
        ncrep::Json e;
        e["name"] = arr.name;
        e["tail"] = q.vertex_name(arr.tail);
        e["head"] = q.vertex_name(arr.head);
        if (auto s = q.star(id)) {
            e["star"] = q.arrow(*s).name;
        }
        arrows.push_back(e);
    }
    j["arrows"] = arrows;
    j["double"] = q.is_double();
    return j;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Noncommutative differential calculus on quiver path algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", json, "Machine-readable output");
    app.add_option("--seed", seed, "Seed of the sampling point generator");

    std::string quiver_path;
    std::string form_text;
    std::string dim_text;
    std::string elem_text;
    std::string point_text;
    bool canonical = false;

    auto *dbl = app.add_subcommand("double", "Print the double quiver");
    dbl->add_option("quiver", quiver_path, "Quiver file")->required();

    auto *bisymp = app.add_subcommand("bisymp", "Decide whether a 2-form is bi-symplectic");
    bisymp->add_option("quiver", quiver_path, "Quiver file")->required();
    bisymp->add_option("--form", form_text, "Form expression")->required();

    auto *rep = app.add_subcommand("rep", "List the coordinates of the representation space");
    rep->add_option("quiver", quiver_path, "Quiver file")->required();
    rep->add_option("--dim", dim_text, "Dimension vector, comma separated in vertex order")->required();

    auto *trace = app.add_subcommand("trace", "Trace function of an algebra element");
    trace->add_option("quiver", quiver_path, "Quiver file")->required();
    trace->add_option("--dim", dim_text, "Dimension vector")->required();
    trace->add_option("--elem", elem_text, "Element expression")->required();

    auto *kr = app.add_subcommand("kr", "Verify that a 2-form induces a symplectic form");
    kr->add_option("quiver", quiver_path, "Quiver file")->required();
    kr->add_option("--dim", dim_text, "Dimension vector")->required();
    auto *form_opt = kr->add_option("--form", form_text, "Form expression");
    auto *canon_opt = kr->add_flag("--canonical", canonical, "Use the canonical form on the double quiver");
    form_opt->excludes(canon_opt);
    kr->add_option("--point", point_text, "Evaluation point for the rank, comma separated rationals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (kr->parsed() && form_text.empty() && !canonical) {
            throw UsageError("kr needs --form or --canonical");
        }
        auto q = read_quiver(quiver_path);

        if (dbl->parsed()) {
            const auto d = ncrep::double_quiver(*q);
            emit(quiver_json(d), json, ncrep::print_quiver(d));
            return 0;
        }
        if (bisymp->parsed()) {
            const auto cert = ncrep::is_bisymplectic(read_class(form_text, q));
            emit(ncrep::to_json(cert, *q), json, ncrep::to_text(cert, *q));
            return verdict_code(cert.verdict);
        }

        const auto dims = parse_dims(dim_text);
        std::vector<std::string> notes;
        if (kr->parsed() && canonical && !q->is_double()) {
            q = ncrep::make_quiver(ncrep::double_quiver(*q));
            notes.push_back("quiver doubled for the canonical form");
        }
        const auto setup = ncrep::rep_setup(q, ncrep::DimensionVector(dims));

        if (rep->parsed()) {
            emit(ncrep::inventory_json(setup), json, ncrep::inventory_text(setup));
            return 0;
        }
        if (trace->parsed()) {
            const auto x = ncrep::parse_element(elem_text, q);
            const auto f = ncrep::trace_fn(setup, x);
            ncrep::Json j;
            j["element"] = ncrep::print_expr(x);
            j["dims"] = dims;
            j["trace"] = f.to_string(setup.ring());
            emit(j, json, f.to_string(setup.ring()) + "\n");
            return 0;
        }

        ncrep::KROptions opts;
        opts.seed = seed;
        if (!point_text.empty()) {
            opts.point = parse_point(point_text);
        }
        opts.canonical_requested = canonical;
        opts.description = quiver_path + (canonical ? " --canonical" : " --form " + form_text);
        const auto omega = canonical ? ncrep::canonical_form(q) : read_class(form_text, q);
        auto report = ncrep::kr_verify(setup, omega, opts);
        report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
        emit(ncrep::to_json(report, setup), json, ncrep::to_text(report, setup));
        return verdict_code(report.verdict);
    } catch (const UsageError &e) {
        std::cerr << "ncrep: " << e.what() << "\n";
        return exit_usage;
    } catch (const MissingFile &e) {
        std::cerr << "ncrep: " << e.what() << "\n";
        return exit_no_input;
    } catch (const ncrep::ParseError &e) {
        std::cerr << "ncrep: " << e.what() << "\n";
        return exit_data;
    } catch (const ncrep::AlgebraError &e) {
        std::cerr << "ncrep: " << e.what() << "\n";
        return exit_data;
    }
}
