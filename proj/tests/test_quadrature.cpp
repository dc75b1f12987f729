#include "skhp/errors.hpp"
#include "skhp/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace skhp::quadrature;

namespace {

// normalized hydrogenic ground state with Bohr radius 2 and its sine transform
double u_hydrogen(double r) { return r * std::exp(-r / 2) / std::sqrt(2.0); }
double w_hydrogen(double p) { return p / (std::sqrt(std::numbers::pi) * std::pow(0.25 + p * p, 2)); }

} // namespace

TEST_CASE("policy validation") {
    CHECK_NOTHROW(QuadraturePolicy{}.validate());
    CHECK_THROWS_AS((QuadraturePolicy{1, 1e-10, 1e-14, 4096, 1e-16}.validate()), skhp::DomainError);
    CHECK_THROWS_AS((QuadraturePolicy{64, 0.0, 1e-14, 4096, 1e-16}.validate()), skhp::DomainError);
    CHECK_THROWS_AS((QuadraturePolicy{64, 1e-10, -1.0, 4096, 1e-16}.validate()), skhp::DomainError);
    CHECK_THROWS_AS((QuadraturePolicy{64, 1e-10, 1e-14, 0, 1e-16}.validate()), skhp::DomainError);
}

TEST_CASE("Gauss-Legendre rules") {
    auto const& two = gauss_legendre_rule(2);
    REQUIRE(two.nodes.size() == 2);
    CHECK(two.nodes[0] == doctest::Approx(-1 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(two.nodes[1] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(two.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(two.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

    for (int n : {3, 8, 16, 33, 64, 128}) {
        auto const& rule = gauss_legendre_rule(n);
        double odd = 0.0, even = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            odd += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 1);
            even += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
        }
        CHECK(std::abs(odd) < 1e-14);
        CHECK(even == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
    }
    CHECK(&gauss_legendre_rule(16) == &gauss_legendre_rule(16));
    CHECK_THROWS(gauss_legendre_rule(1));
}

TEST_CASE("finite intervals") {
    CHECK(integrate_finite([](double x) { return x * x; }, 0.0, 1.0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(integrate_finite([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(integrate_finite([](double x) { return std::sqrt(x); }, 0.0, 1.0) == doctest::Approx(2.0 / 3).epsilon(1e-10));
    CHECK(integrate_finite([](double x) { return std::exp(x); }, 0.0, 1.0, 8, QuadraturePolicy{}) ==
          doctest::Approx(std::exp(1.0) - 1).epsilon(1e-14));

    QuadraturePolicy tight;
    tight.panel_order = 4;
    tight.rel_tol = 1e-15;
    tight.abs_tol = 1e-300;
    tight.max_panels = 2;
    CHECK_THROWS_AS(integrate_finite([](double x) { return std::sqrt(x); }, 0.0, 1.0, tight), skhp::NonConvergence);
}

TEST_CASE("composite rule reuse") {
    auto const rule = adaptive_rule([](double x) { return std::exp(-x) * std::sin(3 * x); }, 0.0, 10.0, 4, {});
    double length = 0.0, cosine = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        length += rule.weights[i];
        cosine += rule.weights[i] * std::exp(-rule.nodes[i]) * std::cos(3 * rule.nodes[i]);
    }
    CHECK(length == doctest::Approx(10.0).epsilon(1e-14));
    double const exact = (1 - std::exp(-10.0) * (std::cos(30.0) - 3 * std::sin(30.0))) / 10;
    CHECK(cosine == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("semi-infinite intervals") {
    CHECK(integrate_semi_infinite([](double r) { return std::exp(-r); }, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_semi_infinite([](double r) { return r * r * std::exp(-2 * r); }, 2.0) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(integrate_semi_infinite([](double r) { return u_hydrogen(r) * u_hydrogen(r); }, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(truncation_radius([](double r) { return std::exp(-r); }, 1.0) >= 50.0);
    double const R = truncation_radius([](double r) { return std::exp(-0.01 * r); }, 0.01);
    CHECK(std::exp(-0.01 * R) <= 1e-16 * 1.0001);
}

TEST_CASE("sine transforms") {
    CHECK(sine_transform([](double r) { return std::exp(-r); }, 1.0, 1.0) ==
          doctest::Approx(std::sqrt(2 / std::numbers::pi) * 0.5).epsilon(1e-12));
    for (double p : {0.01, 0.2, 0.5, 1.0, 3.0, 10.0, 40.0}) {
        CHECK(sine_transform(u_hydrogen, 0.5, p) == doctest::Approx(w_hydrogen(p)).epsilon(1e-8).scale(1e-12));
    }
    CHECK_THROWS_AS(sine_transform(u_hydrogen, 0.5, 0.0), skhp::DomainError);
}

TEST_CASE("sine transform table") {
    double const p_max = 400.0;
    SineTransformTable const table(u_hydrogen, 0.5, p_max);
    CHECK(table.p_max() == p_max);
    CHECK(table.size() > 0);
    for (double p : {0.0, 0.013, 0.37, 1.0, 2.5, 17.0, 123.4, 400.0}) {
        CHECK(table(p) == doctest::Approx(w_hydrogen(p)).epsilon(1e-8).scale(1e-12));
    }
    // Parseval: int w^2 dp = int u^2 dr = 1
    double const norm = integrate_finite([&](double p) { return table(p) * table(p); }, 0.0, p_max, 64, {});
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-7));
}
