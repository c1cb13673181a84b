#include "ncrep/rep.hpp"

#include <set>
#include <string>

#include "ncrep/error.hpp"
#include "ncrep/kernels.hpp"
#include "ncrep/random.hpp"

namespace ncrep
{

DimensionVector::DimensionVector(std::vector<int> dims) : m_dims(std::move(dims))
{
    for (int d : m_dims) {
        if (d < 1) {
            throw AlgebraError("dimension vector entries must be positive, got " + std::to_string(d));
        }
    }
}

std::size_t DimensionVector::total() const
{
    std::size_t n = 0;
    for (int d : m_dims) {
        n += static_cast<std::size_t>(d);
    }
    return n;
}

namespace
{

std::vector<std::string> variable_names(const Quiver &q, const DimensionVector &dims)
{
    if (dims.size() != q.num_vertices()) {
        throw AlgebraError("dimension vector has " + std::to_string(dims.size()) + " entries but the quiver has "
                           + std::to_string(q.num_vertices()) + " vertices");
    }
    std::vector<std::string> names;
    for (const auto &a : q.arrows()) {
        for (int i = 1; i <= dims[static_cast<std::size_t>(a.head)]; ++i) {
            for (int j = 1; j <= dims[static_cast<std::size_t>(a.tail)]; ++j) {
                names.push_back(a.name + "_" + std::to_string(i) + "_" + std::to_string(j));
            }
        }
    }
    return names;
}

PolyMatrix path_matrix(const RepSetup &s, const Path &p)
{
    if (p.is_trivial()) {
        return idempotent_matrix(s, p.head());
    }
    const auto arrows = p.arrows();
    PolyMatrix m = arrow_matrix(s, arrows[0]);
    for (std::size_t k = 1; k < arrows.size(); ++k) {
        m = kernels::multiply(m, arrow_matrix(s, arrows[k]));
    }
    return m;
}

} // namespace

RepSetup::RepSetup(QuiverPtr q, DimensionVector dims)
    : m_quiver(std::move(q)), m_dims(std::move(dims)), m_ring(variable_names(*m_quiver, m_dims))
{
    for (std::size_t v = 0; v < m_dims.size(); ++v) {
        m_offsets.push_back(m_n);
        for (int k = 0; k < m_dims[v]; ++k) {
            m_block_of.push_back(static_cast<VertexId>(v));
        }
        m_n += static_cast<std::size_t>(m_dims[v]);
    }
    for (std::size_t a = 0; a < m_quiver->num_arrows(); ++a) {
        const auto &arr = m_quiver->arrow(static_cast<ArrowId>(a));
        m_arrow_base.push_back(m_vars.size());
        const auto rows = static_cast<std::size_t>(m_dims[static_cast<std::size_t>(arr.head)]);
        const auto cols = static_cast<std::size_t>(m_dims[static_cast<std::size_t>(arr.tail)]);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m_vars.push_back({static_cast<ArrowId>(a), offset(arr.head) + i, offset(arr.tail) + j});
            }
        }
    }
}

std::size_t RepSetup::var_index(ArrowId a, std::size_t row, std::size_t col) const
{
    const auto &arr = m_quiver->arrow(a);
    const auto r0 = offset(arr.head);
    const auto c0 = offset(arr.tail);
    const auto rows = static_cast<std::size_t>(m_dims[static_cast<std::size_t>(arr.head)]);
    const auto cols = static_cast<std::size_t>(m_dims[static_cast<std::size_t>(arr.tail)]);
    if (row < r0 || row >= r0 + rows || col < c0 || col >= c0 + cols) {
        throw AlgebraError("entry (" + std::to_string(row) + ", " + std::to_string(col)
                           + ") is outside the block of arrow " + arr.name);
    }
    return m_arrow_base.at(static_cast<std::size_t>(a)) + (row - r0) * cols + (col - c0);
}

RepSetup rep_setup(QuiverPtr q, DimensionVector dims)
{
    return RepSetup(std::move(q), std::move(dims));
}

PolyMatrix arrow_matrix(const RepSetup &s, ArrowId a)
{
    PolyMatrix m(s.size(), s.num_vars());
    const auto &arr = s.quiver()->arrow(a);
    const auto r0 = s.offset(arr.head);
    const auto c0 = s.offset(arr.tail);
    for (int i = 0; i < s.dims()[static_cast<std::size_t>(arr.head)]; ++i) {
        for (int j = 0; j < s.dims()[static_cast<std::size_t>(arr.tail)]; ++j) {
            const auto row = r0 + static_cast<std::size_t>(i);
            const auto col = c0 + static_cast<std::size_t>(j);
            m(row, col) = Polynomial::variable(s.num_vars(), s.var_index(a, row, col));
        }
    }
    return m;
}

PolyMatrix idempotent_matrix(const RepSetup &s, VertexId v)
{
    PolyMatrix m(s.size(), s.num_vars());
    const auto r0 = s.offset(v);
    for (int i = 0; i < s.dims()[static_cast<std::size_t>(v)]; ++i) {
        const auto k = r0 + static_cast<std::size_t>(i);
        m(k, k) = Polynomial::constant(s.num_vars(), 1);
    }
    return m;
}

PolyMatrix universal_rep(const RepSetup &s, const AlgebraElement &x)
{
    require_same_quiver(s.quiver(), x.quiver());
    PolyMatrix m(s.size(), s.num_vars());
    for (const auto &[p, c] : x.terms()) {
        PolyMatrix t = path_matrix(s, p);
        t *= c;
        m += t;
    }
    return m;
}

Polynomial trace_fn(const RepSetup &s, const AlgebraElement &x)
{
    require_same_quiver(s.quiver(), x.quiver());
    Polynomial f(s.num_vars());
    for (const auto &[p, c] : x.terms()) {
        if (!p.is_closed()) {
            continue;
        }
        f += c * path_matrix(s, p).trace();
    }
    return f;
}

FormMatrix rep_form_matrix(const RepSetup &s, const FormWord &w)
{
    if (w.degree() > max_form_degree) {
        throw AlgebraError("forms of degree above " + std::to_string(max_form_degree)
                           + " are not supported on the representation side");
    }
    if (w.is_trivial()) {
        return FormMatrix::from_polys(idempotent_matrix(s, w.head()));
    }
    const auto letter_matrix = [&](std::size_t i) {
        const auto l = w.letter(i);
        const auto m = arrow_matrix(s, l.arrow);
        return l.differential ? FormMatrix::differential(m) : FormMatrix::from_polys(m);
    };
    FormMatrix m = letter_matrix(0);
    for (std::size_t i = 1; i < w.length(); ++i) {
        m = kernels::multiply(m, letter_matrix(i));
    }
    return m;
}

CommForm rep_form(const RepSetup &s, const NCForm &u)
{
    require_same_quiver(s.quiver(), u.quiver());
    const auto deg = u.require_homogeneous("rep_form");
    CommForm out(s.num_vars(), deg.value_or(0));
    for (const auto &[w, c] : u.terms()) {
        if (!w.is_closed()) {
            continue;
        }
        CommForm t = rep_form_matrix(s, w).trace();
        t *= c;
        out += t;
    }
    return out;
}

CommForm rep_form(const RepSetup &s, const DRClass &w)
{
    require_same_quiver(s.quiver(), w.quiver());
    CommForm out(s.num_vars(), w.degree());
    if (!w.is_zero()) {
        out += rep_form(s, w.representative());
    }
    return out;
}

OneFormsCheck vdb_one_forms(const RepSetup &s, std::uint64_t seed, int samples)
{
    OneFormsCheck check;
    const auto &q = *s.quiver();
    std::set<std::size_t> seen;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto &arr = q.arrow(static_cast<ArrowId>(a));
        for (int i = 0; i < s.dims()[static_cast<std::size_t>(arr.head)]; ++i) {
            for (int j = 0; j < s.dims()[static_cast<std::size_t>(arr.tail)]; ++j) {
                ++check.generators;
                seen.insert(s.var_index(static_cast<ArrowId>(a), s.offset(arr.head) + static_cast<std::size_t>(i),
                                        s.offset(arr.tail) + static_cast<std::size_t>(j)));
            }
        }
    }
    check.variables = s.num_vars();
    check.generators_match = seen.size() == check.generators && seen.size() == s.num_vars();

    const auto phi = [&](const NCForm &m) {
        FormMatrix out(s.size(), s.num_vars(), 1);
        for (const auto &[w, c] : m.terms()) {
            const auto t = rep_form_matrix(s, w);
            for (std::size_t i = 0; i < s.size(); ++i) {
                for (std::size_t j = 0; j < s.size(); ++j) {
                    CommForm e = t(i, j);
                    e *= c;
                    out(i, j) += e;
                }
            }
        }
        return out;
    };

    random::Engine rng(seed);
    check.left_relations = true;
    check.right_relations = true;
    check.differential_compatible = true;
    for (int k = 0; k < samples; ++k) {
        const auto b = random::element(s.quiver(), rng, 3, 2);
        const auto m = random::form(s.quiver(), rng, 1, 3, 2);
        const auto pb = FormMatrix::from_polys(universal_rep(s, b));
        const auto pm = phi(m);
        const auto bm = NCForm::from_algebra(b) * m;
        const auto mb = m * NCForm::from_algebra(b);
        if (!(phi(bm) == kernels::multiply(pb, pm))) {
            check.left_relations = false;
        }
        if (!(phi(mb) == kernels::multiply(pm, pb))) {
            check.right_relations = false;
        }
        if (!(phi(d_algebra(b)) == FormMatrix::differential(universal_rep(s, b)))) {
            check.differential_compatible = false;
        }
    }
    return check;
}

std::vector<PolyDerivation> vdb_double_derivation(const RepSetup &s, const DoubleDerivation &theta)
{
    require_same_quiver(s.quiver(), theta.quiver());
    const auto n = s.size();
    std::vector<PolyDerivation> out(n * n, PolyDerivation(s.num_vars()));
    for (const auto &[a, value] : theta.values()) {
        const auto &arr = s.quiver()->arrow(a);
        for (const auto &[key, c] : value.terms()) {
            const auto left = path_matrix(s, key.first);
            const auto right = path_matrix(s, key.second);
            for (int r = 0; r < s.dims()[static_cast<std::size_t>(arr.head)]; ++r) {
                for (int t = 0; t < s.dims()[static_cast<std::size_t>(arr.tail)]; ++t) {
                    const auto u = s.offset(arr.head) + static_cast<std::size_t>(r);
                    const auto v = s.offset(arr.tail) + static_cast<std::size_t>(t);
                    const auto var = s.var_index(a, u, v);
                    for (std::size_t i = 0; i < n; ++i) {
                        if (right(i, v).is_zero()) {
                            continue;
                        }
                        for (std::size_t j = 0; j < n; ++j) {
                            if (left(u, j).is_zero()) {
                                continue;
                            }
                            auto &d = out[i * n + j];
                            d.set_image(var, d.image(var) + c * (left(u, j) * right(i, v)));
                        }
                    }
                }
            }
        }
    }
    return out;
}

Polynomial sym_necklace_map(const RepSetup &s, const std::vector<Path> &monomial)
{
    Polynomial f = Polynomial::constant(s.num_vars(), 1);
    for (const auto &p : monomial) {
        f = f * trace_fn(s, AlgebraElement::path(s.quiver(), p));
    }
    return f;
}

std::vector<PolyDerivation> conjugation_generators(const RepSetup &s)
{
    std::vector<PolyDerivation> gens;
    const auto nv = s.num_vars();
    for (std::size_t v = 0; v < s.dims().size(); ++v) {
        const auto base = s.offset(static_cast<VertexId>(v));
        const auto dim = static_cast<std::size_t>(s.dims()[v]);
        for (std::size_t k = base; k < base + dim; ++k) {
            for (std::size_t l = base; l < base + dim; ++l) {
                PolyDerivation e(nv);
                for (std::size_t x = 0; x < nv; ++x) {
                    const auto &var = s.variable(x);
                    Polynomial img(nv);
                    if (var.row == k) {
                        img += Polynomial::variable(nv, s.var_index(var.arrow, l, var.col));
                    }
                    if (var.col == l) {
                        img -= Polynomial::variable(nv, s.var_index(var.arrow, var.row, k));
                    }
                    e.set_image(x, std::move(img));
                }
                gens.push_back(std::move(e));
            }
        }
    }
    return gens;
}

bool invariance_check(const RepSetup &s, const Polynomial &f)
{
    if (f.arity() != s.num_vars()) {
        throw AlgebraError("polynomial arity does not match the representation space");
    }
    for (const auto &g : kernels::apply_all(conjugation_generators(s), f)) {
        if (!g.is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace ncrep
