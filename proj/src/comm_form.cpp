#include "ncrep/comm_form.hpp"

#include <algorithm>

#include "ncrep/error.hpp"

namespace ncrep
{

CommForm::CommForm(std::size_t arity, int degree) : m_arity(arity), m_degree(degree)
{
    if (degree < 0 || degree > max_form_degree) {
        throw AlgebraError("form degree " + std::to_string(degree) + " outside 0.." + std::to_string(max_form_degree));
    }
}

CommForm CommForm::from_poly(const Polynomial &f)
{
    CommForm u(f.arity(), 0);
    u.add({}, f);
    return u;
}

CommForm CommForm::differential(std::size_t arity, std::size_t i)
{
    CommForm u(arity, 1);
    u.add({static_cast<int>(i)}, Polynomial::constant(arity, 1));
    return u;
}

bool CommForm::has_constant_coefficients() const
{
    return std::all_of(m_terms.begin(), m_terms.end(), [](const auto &kv) { return kv.second.is_constant(); });
}

void CommForm::add(const std::vector<int> &indices, const Polynomial &f)
{
    if (static_cast<int>(indices.size()) != m_degree) {
        throw AlgebraError("index tuple length does not match the form degree");
    }
    if (f.arity() != m_arity) {
        throw AlgebraError("coefficient arity mismatch");
    }
    if (f.is_zero()) {
        return;
    }
    FormIndex idx = indices;
    bool odd = false;
    // Insertion sort, counting transpositions.
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
            std::swap(idx[j - 1], idx[j]);
            odd = !odd;
        }
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || static_cast<std::size_t>(idx[i]) >= m_arity) {
            throw AlgebraError("form index out of range");
        }
        if (i > 0 && idx[i] == idx[i - 1]) {
            return;
        }
    }
    auto it = m_terms.find(idx);
    if (it == m_terms.end()) {
        m_terms.emplace(std::move(idx), odd ? -f : f);
    } else {
        if (odd) {
            it->second -= f;
        } else {
            it->second += f;
        }
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

Polynomial CommForm::coefficient(const FormIndex &sorted) const
{
    auto it = m_terms.find(sorted);
    return it == m_terms.end() ? Polynomial(m_arity) : it->second;
}

namespace
{

void require_compatible(const CommForm &a, const CommForm &b)
{
    if (a.arity() != b.arity() || a.degree() != b.degree()) {
        throw AlgebraError("forms differ in arity or degree");
    }
}

} // namespace

CommForm &CommForm::operator+=(const CommForm &o)
{
    require_compatible(*this, o);
    for (const auto &[idx, f] : o.m_terms) {
        add(idx, f);
    }
    return *this;
}

CommForm &CommForm::operator-=(const CommForm &o)
{
    require_compatible(*this, o);
    for (const auto &[idx, f] : o.m_terms) {
        add(idx, -f);
    }
    return *this;
}

CommForm &CommForm::operator*=(const Rational &s)
{
    if (sgn(s) == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &kv : m_terms) {
        kv.second *= s;
    }
    return *this;
}

CommForm operator*(const Polynomial &f, const CommForm &u)
{
    CommForm out(u.arity(), u.degree());
    for (const auto &[idx, g] : u.terms()) {
        out.add(idx, f * g);
    }
    return out;
}

std::string CommForm::to_string(const PolyRing &ring) const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[idx, f] : m_terms) {
        std::string basis;
        for (auto i : idx) {
            basis += (basis.empty() ? "d" : "^d") + ring.name(static_cast<std::size_t>(i));
        }
        if (f.is_constant()) {
            const Rational c = f.constant_term();
            const Rational mag = abs(c);
            if (out.empty()) {
                out += sgn(c) < 0 ? "-" : "";
            } else {
                out += sgn(c) < 0 ? " - " : " + ";
            }
            if (basis.empty()) {
                out += ncrep::to_string(mag);
            } else {
                out += (mag == 1 ? "" : ncrep::to_string(mag) + "*") + basis;
            }
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + f.to_string(ring) + ")" + (basis.empty() ? "" : "*" + basis);
    }
    return out;
}

CommForm wedge(const CommForm &u, const CommForm &v)
{
    if (u.arity() != v.arity()) {
        throw AlgebraError("forms differ in arity");
    }
    const int deg = u.degree() + v.degree();
    if (deg > max_form_degree) {
        throw AlgebraError("wedge product exceeds the supported degree " + std::to_string(max_form_degree));
    }
    CommForm out(u.arity(), deg);
    std::vector<int> idx;
    for (const auto &[iu, fu] : u.terms()) {
        for (const auto &[iv, fv] : v.terms()) {
            idx = iu;
            idx.insert(idx.end(), iv.begin(), iv.end());
            out.add(idx, fu * fv);
        }
    }
    return out;
}

CommForm comm_d(const Polynomial &f)
{
    CommForm out(f.arity(), 1);
    for (std::size_t i = 0; i < f.arity(); ++i) {
        out.add({static_cast<int>(i)}, f.derivative(i));
    }
    return out;
}

CommForm comm_d(const CommForm &u)
{
    if (u.degree() > 2) {
        throw AlgebraError("comm_d is only supported up to degree 2");
    }
    CommForm out(u.arity(), u.degree() + 1);
    std::vector<int> idx;
    for (const auto &[iu, f] : u.terms()) {
        for (std::size_t i = 0; i < u.arity(); ++i) {
            Polynomial df = f.derivative(i);
            if (df.is_zero()) {
                continue;
            }
            idx.clear();
            idx.push_back(static_cast<int>(i));
            idx.insert(idx.end(), iu.begin(), iu.end());
            out.add(idx, df);
        }
    }
    return out;
}

QMatrix skew_matrix(const CommForm &omega2, std::span<const Rational> point)
{
    if (omega2.degree() != 2) {
        throw AlgebraError("skew_matrix expects a 2-form");
    }
    const std::size_t n = omega2.arity();
    QMatrix m(n, n);
    for (const auto &[idx, f] : omega2.terms()) {
        const auto i = static_cast<std::size_t>(idx[0]);
        const auto j = static_cast<std::size_t>(idx[1]);
        Rational v = f.is_constant() ? f.constant_term() : f.evaluate(point);
        m(i, j) = v;
        m(j, i) = -v;
    }
    return m;
}

// ---------------------------------------------------------------------------

PolyDerivation::PolyDerivation(std::vector<Polynomial> images) : m_images(std::move(images))
{
    for (const auto &f : m_images) {
        if (f.arity() != m_images.size()) {
            throw AlgebraError("derivation image arity does not match the ring");
        }
    }
}

PolyDerivation PolyDerivation::coordinate(std::size_t arity, std::size_t i)
{
    PolyDerivation d(arity);
    d.set_image(i, Polynomial::constant(arity, 1));
    return d;
}

void PolyDerivation::set_image(std::size_t i, Polynomial f)
{
    if (f.arity() != m_images.size()) {
        throw AlgebraError("derivation image arity does not match the ring");
    }
    m_images.at(i) = std::move(f);
}

bool PolyDerivation::is_zero() const
{
    return std::all_of(m_images.begin(), m_images.end(), [](const auto &f) { return f.is_zero(); });
}

Polynomial apply_derivation(const PolyDerivation &d, const Polynomial &f)
{
    if (d.arity() != f.arity()) {
        throw AlgebraError("derivation and polynomial arities differ");
    }
    Polynomial out(f.arity());
    for (std::size_t i = 0; i < f.arity(); ++i) {
        if (d.image(i).is_zero()) {
            continue;
        }
        Polynomial df = f.derivative(i);
        if (!df.is_zero()) {
            out += d.image(i) * df;
        }
    }
    return out;
}

CommForm interior(const PolyDerivation &d, const CommForm &u)
{
    if (u.degree() == 0) {
        throw AlgebraError("interior product of a function");
    }
    CommForm out(u.arity(), u.degree() - 1);
    std::vector<int> rest;
    for (const auto &[idx, f] : u.terms()) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const auto &img = d.image(static_cast<std::size_t>(idx[k]));
            if (img.is_zero()) {
                continue;
            }
            rest.clear();
            for (std::size_t j = 0; j < idx.size(); ++j) {
                if (j != k) {
                    rest.push_back(idx[j]);
                }
            }
            Polynomial c = img * f;
            if (k % 2 == 1) {
                c *= Rational(-1);
            }
            out.add(rest, c);
        }
    }
    return out;
}

CommForm apply_derivation(const PolyDerivation &d, const CommForm &u)
{
    if (u.degree() > 2) {
        throw AlgebraError("Lie derivative is only supported up to degree 2");
    }
    if (u.degree() == 0) {
        CommForm out(u.arity(), 0);
        out.add({}, apply_derivation(d, u.coefficient({})));
        return out;
    }
    CommForm out = interior(d, comm_d(u));
    out += comm_d(interior(d, u));
    return out;
}

} // namespace ncrep
