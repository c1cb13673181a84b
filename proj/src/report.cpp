#include "ncrep/report.hpp"

#include <sstream>

#include "ncrep/expr.hpp"

namespace ncrep
{

namespace
{

Json arrow_names(const Quiver &q, const std::vector<ArrowId> &ids)
{
    Json out = Json::array();
    for (auto a : ids) {
        out.push_back(q.arrow(a).name);
    }
    return out;
}

std::string join_names(const Quiver &q, const std::vector<ArrowId> &ids)
{
    std::string out;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        out += (k == 0 ? "" : ", ") + q.arrow(ids[k]).name;
    }
    return out;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string dims_text(const std::vector<int> &dims)
{
    std::string out;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        out += (k == 0 ? "" : ",") + std::to_string(dims[k]);
    }
    return out;
}

} // namespace

Json to_json(const BiSymplecticCertificate &c, const Quiver &q)
{
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["closed"] = c.closed;
    j["reason"] = c.reason;
    Json sectors = Json::array();
    for (const auto &s : c.sectors) {
        Json e;
        e["left"] = q.vertex_name(s.left);
        e["right"] = q.vertex_name(s.right);
        e["rows"] = arrow_names(q, s.rows);
        e["cols"] = arrow_names(q, s.cols);
        Json block = Json::array();
        for (std::size_t r = 0; r < s.block.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t col = 0; col < s.block.cols(); ++col) {
                row.push_back(to_string(s.block(r, col)));
            }
            block.push_back(row);
        }
        e["block"] = block;
        e["det"] = to_string(s.det);
        sectors.push_back(e);
    }
    j["sectors"] = sectors;
    return j;
}

std::string to_text(const BiSymplecticCertificate &c, const Quiver &q)
{
    std::ostringstream out;
    out << "bi-symplectic: " << to_string(c.verdict) << "\n";
    out << "  closed: " << yes_no(c.closed) << "\n";
    out << "  reason: " << c.reason << "\n";
    for (const auto &s : c.sectors) {
        out << "  sector (" << q.vertex_name(s.left) << ", " << q.vertex_name(s.right) << "): rows d/d["
            << join_names(q, s.rows) << "] cols d[" << join_names(q, s.cols) << "] " << s.block.rows() << "x"
            << s.block.cols();
        if (s.block.rows() == s.block.cols()) {
            out << " det " << to_string(s.det);
        }
        out << "\n";
    }
    return out.str();
}

Json to_json(const KRReport &r, const RepSetup &s)
{
    const auto &q = *s.quiver();
    Json j;
    j["description"] = r.description;
    j["dims"] = r.dims;
    j["closed"] = r.closed;
    j["bisymplectic"] = to_string(r.bisymplectic.verdict);
    j["certificate"] = to_json(r.bisymplectic, q);
    j["omega"] = r.omega.to_string(s.ring());
    j["comm_closed"] = r.comm_closed;
    j["rank"] = r.rank;
    j["num_vars"] = r.num_vars;
    j["canonical_match"] = r.canonical_match ? Json(*r.canonical_match) : Json(nullptr);
    if (r.sample_point) {
        Json p = Json::array();
        for (const auto &c : *r.sample_point) {
            p.push_back(to_string(c));
        }
        j["sample_point"] = p;
    } else {
        j["sample_point"] = nullptr;
    }
    j["verdict"] = to_string(r.verdict);
    j["notes"] = r.notes;
    return j;
}

std::string to_text(const KRReport &r, const RepSetup &s)
{
    const auto &q = *s.quiver();
    std::ostringstream out;
    if (!r.description.empty()) {
        out << "input: " << r.description << "\n";
    }
    out << "dimension vector: (" << dims_text(r.dims) << ")\n";
    out << "closed in DR: " << yes_no(r.closed) << "\n";
    out << to_text(r.bisymplectic, q);
    out << "induced 2-form: " << r.omega.to_string(s.ring()) << "\n";
    out << "induced 2-form closed: " << yes_no(r.comm_closed) << "\n";
    out << "rank: " << r.rank << " of " << r.num_vars << " variables\n";
    if (r.canonical_match) {
        out << "canonical match: " << yes_no(*r.canonical_match) << "\n";
    }
    if (r.sample_point) {
        out << "sample point:";
        for (const auto &c : *r.sample_point) {
            out << " " << to_string(c);
        }
        out << "\n";
    }
    for (const auto &n : r.notes) {
        out << "note: " << n << "\n";
    }
    out << "verdict: " << to_string(r.verdict) << "\n";
    return out.str();
}

Json inventory_json(const RepSetup &s)
{
    const auto &q = *s.quiver();
    Json j;
    j["dims"] = s.dims().values();
    j["size"] = s.size();
    Json blocks = Json::array();
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        Json b;
        b["vertex"] = q.vertex_name(static_cast<VertexId>(v));
        b["first"] = s.offset(static_cast<VertexId>(v)) + 1;
        b["last"] = s.offset(static_cast<VertexId>(v)) + static_cast<std::size_t>(s.dims()[v]);
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    j["num_vars"] = s.num_vars();
    Json vars = Json::array();
    for (std::size_t k = 0; k < s.num_vars(); ++k) {
        const auto &var = s.variable(k);
        Json e;
        e["name"] = s.ring().name(k);
        e["arrow"] = q.arrow(var.arrow).name;
        e["row"] = var.row + 1;
        e["col"] = var.col + 1;
        vars.push_back(e);
    }
    j["variables"] = vars;
    return j;
}

std::string inventory_text(const RepSetup &s)
{
    const auto &q = *s.quiver();
    std::ostringstream out;
    out << "dimension vector: (" << dims_text(s.dims().values()) << "), N = " << s.size() << "\n";
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        const auto first = s.offset(static_cast<VertexId>(v)) + 1;
        out << "block " << q.vertex_name(static_cast<VertexId>(v)) << ": " << first << ".."
            << first + static_cast<std::size_t>(s.dims()[v]) - 1 << "\n";
    }
    out << s.num_vars() << " variables\n";
    for (std::size_t k = 0; k < s.num_vars(); ++k) {
        const auto &var = s.variable(k);
        out << "  " << s.ring().name(k) << "  (" << q.arrow(var.arrow).name << " entry " << var.row + 1 << ","
            << var.col + 1 << ")\n";
    }
    return out.str();
}

} // namespace ncrep
