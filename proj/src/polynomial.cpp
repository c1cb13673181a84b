#include "ncrep/polynomial.hpp"

#include <algorithm>
#include <set>

#include "ncrep/error.hpp"

namespace ncrep
{

PolyRing::PolyRing(std::vector<std::string> names) : m_names(std::move(names))
{
    std::set<std::string_view> seen;
    for (const auto &n : m_names) {
        if (!seen.insert(n).second) {
            throw AlgebraError("duplicate variable name '" + n + "'");
        }
    }
}

std::optional<std::size_t> PolyRing::find(std::string_view name) const
{
    auto it = std::find(m_names.begin(), m_names.end(), name);
    if (it == m_names.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - m_names.begin());
}

Polynomial Polynomial::constant(std::size_t arity, const Rational &c)
{
    Polynomial p(arity);
    p.m_terms.add(Monomial(arity, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t i)
{
    if (i >= arity) {
        throw AlgebraError("variable index out of range");
    }
    Polynomial p(arity);
    Monomial m(arity, 0);
    m[i] = 1;
    p.m_terms.add(std::move(m), 1);
    return p;
}

bool Polynomial::is_constant() const
{
    return std::all_of(m_terms.begin(), m_terms.end(), [](const auto &kv) {
        return std::all_of(kv.first.begin(), kv.first.end(), [](auto e) { return e == 0; });
    });
}

Rational Polynomial::constant_term() const
{
    return m_terms.coeff(Monomial(m_arity, 0));
}

void Polynomial::add_term(const Monomial &m, const Rational &c)
{
    if (m.size() != m_arity) {
        throw AlgebraError("monomial arity mismatch");
    }
    m_terms.add(m, c);
}

namespace
{

void require_arity(std::size_t a, std::size_t b)
{
    if (a != b) {
        throw AlgebraError("polynomial arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

} // namespace

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    require_arity(m_arity, o.m_arity);
    m_terms += o.m_terms;
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    require_arity(m_arity, o.m_arity);
    m_terms -= o.m_terms;
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &s)
{
    m_terms *= s;
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    require_arity(a.m_arity, b.m_arity);
    Polynomial out(a.m_arity);
    Monomial m(a.m_arity);
    for (const auto &[ma, ca] : a.m_terms) {
        for (const auto &[mb, cb] : b.m_terms) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
            }
            out.m_terms.add(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    if (var >= m_arity) {
        throw AlgebraError("variable index out of range");
    }
    Polynomial out(m_arity);
    for (const auto &[m, c] : m_terms) {
        if (m[var] == 0) {
            continue;
        }
        Monomial d = m;
        --d[var];
        out.m_terms.add(std::move(d), c * m[var]);
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != m_arity) {
        throw AlgebraError("evaluation point has the wrong arity");
    }
    Rational sum = 0;
    for (const auto &[m, c] : m_terms) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::uint32_t e = 0; e < m[i]; ++e) {
                t *= point[i];
            }
        }
        sum += t;
    }
    return sum;
}

std::string Polynomial::to_string(const PolyRing &ring) const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    const auto &terms = m_terms.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto &[m, c] = *it;
        Rational mag = abs(c);
        if (first) {
            out += sgn(c) < 0 ? "-" : "";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += ring.name(i);
            if (m[i] > 1) {
                mono += "^" + std::to_string(m[i]);
            }
        }
        if (mono.empty()) {
            out += ncrep::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += ncrep::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

} // namespace ncrep
