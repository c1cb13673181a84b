#ifndef NCREP_LINCOMB_HPP
#define NCREP_LINCOMB_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "ncrep/rational.hpp"

namespace ncrep
{

/// Finite formal Q-linear combination of basis keys.
///
/// Zero coefficients are never stored and keys are kept in the key type's
/// total order, so two combinations are equal iff their term maps are equal.
template <typename Key>
class LinComb
{
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    LinComb(const Key &k, const Rational &c = 1) { add(k, c); }

    void add(const Key &k, const Rational &c)
    {
        if (sgn(c) == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) {
                m_terms.erase(it);
            }
        }
    }

    void add(Key &&k, const Rational &c)
    {
        if (sgn(c) == 0) {
            return;
        }
        auto it = m_terms.find(k);
        if (it == m_terms.end()) {
            m_terms.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) {
                m_terms.erase(it);
            }
        }
    }

    Rational coeff(const Key &k) const
    {
        auto it = m_terms.find(k);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    LinComb &operator+=(const LinComb &o)
    {
        for (const auto &[k, c] : o.m_terms) {
            add(k, c);
        }
        return *this;
    }

    LinComb &operator-=(const LinComb &o)
    {
        for (const auto &[k, c] : o.m_terms) {
            add(k, -c);
        }
        return *this;
    }

    LinComb &operator*=(const Rational &s)
    {
        if (sgn(s) == 0) {
            m_terms.clear();
        } else {
            for (auto &kv : m_terms) {
                kv.second *= s;
            }
        }
        return *this;
    }

    bool empty() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }
    const map_type &terms() const { return m_terms; }
    const_iterator begin() const { return m_terms.begin(); }
    const_iterator end() const { return m_terms.end(); }

    friend bool operator==(const LinComb &a, const LinComb &b) { return a.m_terms == b.m_terms; }

private:
    map_type m_terms;
};

} // namespace ncrep

#endif
