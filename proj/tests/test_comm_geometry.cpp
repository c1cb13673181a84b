#include <doctest.h>

#include <random>

#include "ncrep/comm_form.hpp"
#include "ncrep/error.hpp"
#include "ncrep/linalg.hpp"
#include "ncrep/polynomial.hpp"
#include "ncrep/random.hpp"
#include "oracles.hpp"

using namespace ncrep;

namespace
{

constexpr std::size_t arity = 4;

Polynomial random_poly(random::Engine &rng, int terms = 3, int max_exp = 2)
{
    std::uniform_int_distribution<int> e(0, max_exp);
    std::uniform_int_distribution<int> n(0, terms);
    Polynomial f(arity);
    for (int k = n(rng); k > 0; --k) {
        Monomial m(arity);
        for (auto &x : m) {
            x = static_cast<std::uint32_t>(e(rng));
        }
        f.add_term(m, random::coefficient(rng));
    }
    return f;
}

CommForm random_form(random::Engine &rng, int degree)
{
    std::uniform_int_distribution<int> var(0, arity - 1);
    CommForm u(arity, degree);
    for (int k = 0; k < 3; ++k) {
        std::vector<int> idx;
        for (int j = 0; j < degree; ++j) {
            idx.push_back(var(rng));
        }
        u.add(idx, random_poly(rng, 2, 1));
    }
    return u;
}

std::vector<Rational> random_point(random::Engine &rng)
{
    std::vector<Rational> p;
    for (std::size_t i = 0; i < arity; ++i) {
        p.push_back(random::coefficient(rng));
    }
    return p;
}

QMatrix from_digits(std::size_t rows, std::size_t cols, long code, int base, int offset)
{
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Rational(code % base - offset);
            code /= base;
        }
    }
    return m;
}

std::vector<std::vector<Rational>> rows_of(const QMatrix &m)
{
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = m(i, j);
        }
    }
    return out;
}

} // namespace

TEST_CASE("polynomial ring axioms on random inputs")
{
    random::Engine rng(1);
    for (int k = 0; k < 200; ++k) {
        const auto f = random_poly(rng);
        const auto g = random_poly(rng);
        const auto h = random_poly(rng);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
        const auto p = random_point(rng);
        CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
        for (std::size_t i = 0; i < arity; ++i) {
            CHECK((f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i));
        }
    }
}

TEST_CASE("polynomial basics")
{
    const PolyRing ring({"a", "b"});
    const auto a = Polynomial::variable(2, 0);
    const auto b = Polynomial::variable(2, 1);
    const auto f = a * a - Rational(1, 2) * b + Polynomial::constant(2, 3);
    CHECK(f.to_string(ring) == "a^2 - 1/2*b + 3");
    CHECK(f.derivative(0) == Rational(2) * a);
    CHECK(Polynomial(2).to_string(ring) == "0");
    CHECK(f.constant_term() == 3);
    CHECK_FALSE(f.is_constant());
    CHECK_THROWS_AS(PolyRing({"a", "a"}), AlgebraError);
    CHECK_THROWS_AS(a + Polynomial::variable(3, 0), AlgebraError);
}

TEST_CASE("exterior forms are antisymmetric")
{
    CommForm u(3, 2);
    const auto one = Polynomial::constant(3, 1);
    u.add({1, 0}, one);
    CHECK(u.coefficient({0, 1}) == -one);
    u.add({0, 1}, one);
    CHECK(u.is_zero());
    u.add({2, 2}, one);
    CHECK(u.is_zero());
    CHECK_THROWS_AS(CommForm(3, 4), AlgebraError);
    const auto dx0 = CommForm::differential(3, 0);
    const auto dx1 = CommForm::differential(3, 1);
    CHECK(wedge(dx0, dx1) == -wedge(dx1, dx0));
    CHECK(wedge(dx0, dx0).is_zero());
}

TEST_CASE("wedge product is associative and graded commutative")
{
    random::Engine rng(2);
    for (int k = 0; k < 200; ++k) {
        const auto a = random_form(rng, 1);
        const auto b = random_form(rng, 1);
        const auto c = random_form(rng, 1);
        const auto f = random_form(rng, 0);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        CHECK(wedge(a, b) == -wedge(b, a));
        CHECK(wedge(f, a) == wedge(a, f));
        const auto ab = wedge(a, b);
        CHECK(wedge(ab, c) == wedge(c, ab));
    }
}

TEST_CASE("de Rham differential squares to zero and obeys Leibniz")
{
    random::Engine rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto f = random_poly(rng);
        const auto g = random_poly(rng);
        CHECK(comm_d(comm_d(f)).is_zero());
        CHECK(comm_d(f * g) == f * comm_d(g) + g * comm_d(f));
        const auto u = random_form(rng, 1);
        const auto v = random_form(rng, 1);
        CHECK(comm_d(comm_d(u)).is_zero());
        CHECK(comm_d(wedge(u, v)) == wedge(comm_d(u), v) - wedge(u, comm_d(v)));
        const auto h = random_form(rng, 0);
        CHECK(comm_d(wedge(h, u)) == wedge(comm_d(h), u) + wedge(h, comm_d(u)));
    }
    CHECK_THROWS_AS(comm_d(CommForm(2, 3)), AlgebraError);
}

TEST_CASE("Lie derivative commutes with d and contracts correctly")
{
    random::Engine rng(4);
    for (int k = 0; k < 100; ++k) {
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < arity; ++i) {
            images.push_back(random_poly(rng, 2, 1));
        }
        const PolyDerivation d(images);
        const auto f = random_poly(rng);
        CHECK(interior(d, comm_d(f)) == CommForm::from_poly(apply_derivation(d, f)));
        CHECK(apply_derivation(d, comm_d(f)) == comm_d(apply_derivation(d, f)));
        const auto u = random_form(rng, 1);
        CHECK(apply_derivation(d, comm_d(u)) == comm_d(apply_derivation(d, u)));
    }
    const auto dx = PolyDerivation::coordinate(2, 0);
    const auto x = Polynomial::variable(2, 0);
    const auto y = Polynomial::variable(2, 1);
    CHECK(apply_derivation(dx, x * x * y) == Rational(2) * x * y);
}

TEST_CASE("skew matrix of a constant 2-form")
{
    CommForm u(3, 2);
    u.add({0, 2}, Polynomial::constant(3, 5));
    const std::vector<Rational> origin(3);
    const auto m = skew_matrix(u, origin);
    CHECK(m(0, 2) == 5);
    CHECK(m(2, 0) == -5);
    CHECK(m(1, 1) == 0);
    CHECK(rank(m) == 2);
    CHECK_THROWS_AS(skew_matrix(CommForm(3, 1), origin), AlgebraError);
}

TEST_CASE("rank and determinant, exhaustive small matrices")
{
    // 2x2 and 2x3 with entries in -2..2, 3x3 with entries in -1..1.
    for (long code = 0; code < 625; ++code) {
        const auto m = from_digits(2, 2, code, 5, 2);
        CHECK(determinant(m) == oracle::det_leibniz(m));
        CHECK(rank(m) == oracle::rank_minors(m));
    }
    for (long code = 0; code < 15625; ++code) {
        const auto m = from_digits(2, 3, code, 5, 2);
        REQUIRE(rank(m) == oracle::rank_minors(m));
    }
    for (long code = 0; code < 19683; ++code) {
        const auto m = from_digits(3, 3, code, 3, 1);
        REQUIRE(determinant(m) == oracle::det_leibniz(m));
        REQUIRE(rank(m) == oracle::rank_minors(m));
    }
}

TEST_CASE("rank and determinant, sampled larger matrices")
{
    random::Engine rng(5);
    std::uniform_int_distribution<int> shape(1, 5);
    std::uniform_int_distribution<int> zero(0, 2);
    for (int k = 0; k < 2000; ++k) {
        const auto r = static_cast<std::size_t>(shape(rng));
        const auto c = static_cast<std::size_t>(shape(rng));
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                m(i, j) = zero(rng) == 0 ? Rational(0) : random::coefficient(rng);
            }
        }
        REQUIRE(rank(m) == oracle::rank_gauss(rows_of(m)));
        if (r == c && r <= 4) {
            REQUIRE(determinant(m) == oracle::det_leibniz(m));
        }
    }
    CHECK_THROWS_AS(determinant(QMatrix(2, 3)), AlgebraError);
    CHECK(rank(QMatrix()) == 0);
    CHECK(determinant(QMatrix::identity(4)) == 1);
}
