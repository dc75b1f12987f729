#include "skhp/errors.hpp"
#include "skhp/thermo.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace skhp::thermo;

namespace {

UnitSystem const kTable = UnitSystem::table12();
PotentialParams const kParams{3, 5, 10, 0.05};

ThermoInputs inputs(int lambda, double beta, PotentialParams const& p = kParams) { return {p, kTable, 0, lambda, beta}; }

// erfi by its Maclaurin series, long double
long double erfi_series(long double x) {
    long double term = x, sum = x;
    for (int k = 1; k < 400; ++k) {
        term *= x * x / k;
        sum += term / (2 * k + 1);
    }
    return 2 * sum / std::sqrt(std::numbers::pi_v<long double>);
}

// P1 = 0 when V0 = -V1 and l = 0, leaving the Gaussian-growth integral
PotentialParams const kReduced{-2, 2, 10, 0.05};

double reduced_z(double beta, int lambda) {
    auto const h = classical_coefficients(kReduced, kTable, 0);
    long double const c = std::sqrt(h.H1 * beta);
    long double const diff = erfi_series(c * (lambda + h.sigma)) - erfi_series(c * h.sigma);
    return static_cast<double>(std::exp(-h.H3 * beta) * std::sqrt(std::numbers::pi) / (2 * c) * diff);
}

double reduced_u(double beta, int lambda) {
    auto const h = classical_coefficients(kReduced, kTable, 0);
    double const c = std::sqrt(h.H1 * beta);
    double const top = lambda + h.sigma, bottom = h.sigma;
    double const e = static_cast<double>(erfi_series(c * top) - erfi_series(c * bottom));
    double const de = 2 / std::sqrt(std::numbers::pi) *
                      (top * std::exp(c * c * top * top) - bottom * std::exp(c * c * bottom * bottom)) * c / (2 * beta);
    return h.H3 + 1 / (2 * beta) - de / e;
}

} // namespace

TEST_CASE("input validation") {
    CHECK_THROWS_AS(inputs(-1, 1.0).validate(), skhp::DomainError);
    CHECK_THROWS_AS(inputs(5, 0.0).validate(), skhp::DomainError);
    CHECK_THROWS_AS(parse_backend("exact"), skhp::DomainError);
    CHECK(parse_backend("integral") == Backend::integral);
    CHECK(to_string(Backend::sum) == "sum");
}

TEST_CASE("classical coefficients reproduce the spectrum") {
    auto const h = classical_coefficients(kParams, kTable, 0);
    for (int n = 0; n < 6; ++n) {
        double const rho = n + h.sigma;
        double const e = skhp::model::energy(kParams, {n, 0, 0}, kTable);
        CHECK(h.H3 - h.H1 * rho * rho - h.H2 / (rho * rho) == doctest::Approx(e).epsilon(1e-12));
    }
    CHECK(classical_coefficients(kReduced, kTable, 0).H2 == 0.0);
}

TEST_CASE("direct sum") {
    double const e0 = skhp::model::energy(kParams, {0, 0, 0}, kTable);
    CHECK(partition_sum(inputs(0, 1.3)) == doctest::Approx(std::exp(-1.3 * e0)).epsilon(1e-14));
    double expected = 0.0;
    for (int n = 0; n <= 2; ++n) expected += std::exp(-skhp::model::energy(kParams, {n, 0, 0}, kTable));
    CHECK(partition_sum(inputs(2, 1.0)) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(partition_sum(inputs(7, 1e-12)) == doctest::Approx(8.0).epsilon(1e-9));

    auto const lp = log_partition(inputs(2, 1.0), Backend::sum);
    CHECK(lp.levels == 3);
    CHECK(!lp.truncated);
    CHECK(lp.reference_energy == doctest::Approx(e0).epsilon(1e-15));
}

TEST_CASE("sum truncates at unbound levels") {
    // levels with n >= 3 are unbound here
    PotentialParams const p{-3, 5, 10, 0.01};
    ThermoInputs in{p, kTable, 0, 10, 1.0};
    auto const lp = log_partition(in, Backend::sum);
    CHECK(lp.truncated);
    CHECK(lp.levels < 11);
    CHECK(thermo_point(in, Backend::sum).flags.find("truncated") != std::string::npos);
}

TEST_CASE("antiderivative") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(0.01, 2.0), ub(0.0, 3.0), ur(0.3, 4.0);
    for (int i = 0; i < 20; ++i) {
        double const a = ua(rng), b = ub(rng), rho = ur(rng);
        double const h = 1e-4 * rho;
        auto const F = [&](double x) { return closed_form_antiderivative(a, b, x).value(); };
        double const fd = (F(rho - 2 * h) - 8 * F(rho - h) + 8 * F(rho + h) - F(rho + 2 * h)) / (12 * h);
        CHECK(fd == doctest::Approx(std::exp(a * rho * rho + b / (rho * rho))).epsilon(1e-8));
    }
    // b = 0: sqrt(pi)/(2 sqrt a) erfi(sqrt(a) rho)
    double const a = 0.7, rho = 1.9;
    double const single = std::sqrt(std::numbers::pi) / (2 * std::sqrt(a)) * static_cast<double>(erfi_series(std::sqrt(a) * rho));
    CHECK(closed_form_antiderivative(a, 0.0, rho).value() == doctest::Approx(single).epsilon(1e-13));
    CHECK(closed_form_antiderivative(0.5, 1.0, 200.0).log_magnitude > 700.0);
    CHECK_THROWS_AS(closed_form_antiderivative(0.0, 1.0, 1.0), skhp::DomainError);
}

TEST_CASE("classical integral: closed form against quadrature") {
    PotentialParams const sets[] = {kParams, {3, -5, 10, 0.01}, {-1, -2, 0.5, 0.1}};
    for (auto const& p : sets) {
        for (double beta : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            ThermoInputs const in{p, kTable, 0, 10, beta};
            CAPTURE(beta);
            CHECK(partition_closed_form(in) == doctest::Approx(partition_integral(in)).epsilon(1e-8));
        }
    }
    CHECK(partition_integral(inputs(0, 1.0)) == 0.0);
    CHECK(partition_closed_form(inputs(0, 1.0)) == 0.0);
}

TEST_CASE("reduced case P1 = 0") {
    for (double beta : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        ThermoInputs const in{kReduced, kTable, 0, 10, beta};
        CAPTURE(beta);
        double const z = reduced_z(beta, 10);
        CHECK(std::abs(partition_closed_form(in) - z) <= 1e-12 * z);
        CHECK(partition_integral(in) == doctest::Approx(z).epsilon(1e-10));
        CHECK(internal_energy(in) == doctest::Approx(reduced_u(beta, 10)).epsilon(1e-6));
    }
}

TEST_CASE("thermodynamic identities") {
    for (auto backend : {Backend::sum, Backend::integral, Backend::closed}) {
        for (double beta : {0.1, 0.7, 2.0, 5.0}) {
            auto const t = thermo_point(inputs(10, beta), backend);
            CAPTURE(beta);
            CHECK(t.F == doctest::Approx(t.U - t.S / beta).epsilon(1e-8));
            CHECK(t.F == doctest::Approx(-t.ln_z / beta).epsilon(1e-12));
            CHECK(t.Z == doctest::Approx(std::exp(t.ln_z)).epsilon(1e-12));
        }
    }
    double const e0 = skhp::model::energy(kParams, {0, 0, 0}, kTable);
    for (double beta : {0.3, 1.0, 4.0}) {
        auto const single = thermo_point(inputs(0, beta), Backend::sum);
        CHECK(single.U == e0);
        CHECK(single.C == 0.0);
        CHECK(single.F == doctest::Approx(e0).epsilon(1e-15));
    }
}

TEST_CASE("derivatives against the direct sum") {
    // U = sum E e^{-beta E} / Z and C = beta^2 (<E^2> - <E>^2)
    double const beta = 0.8;
    double z = 0, e1 = 0, e2 = 0;
    for (int n = 0; n <= 5; ++n) {
        double const e = skhp::model::energy(kParams, {n, 0, 0}, kTable);
        double const w = std::exp(-beta * e);
        z += w;
        e1 += e * w;
        e2 += e * e * w;
    }
    auto const t = thermo_point(inputs(5, beta), Backend::sum);
    CHECK(t.U == doctest::Approx(e1 / z).epsilon(1e-9));
    CHECK(t.C == doctest::Approx(beta * beta * (e2 / z - e1 * e1 / (z * z))).epsilon(1e-6));
    CHECK(t.S >= 0.0);
}

TEST_CASE("trends over beta and lambda") {
    std::vector<double> betas;
    for (int i = 0; i < 50; ++i) betas.push_back(0.1 + i * 0.1);
    ThermoSeries previous;
    for (int lambda : {5, 10, 15}) {
        auto const s = thermo_series(kParams, kTable, 0, lambda, betas, Backend::closed);
        // bound levels are negative, so Z grows with beta
        for (std::size_t i = 1; i < betas.size(); ++i) CHECK(s.Z[i] > s.Z[i - 1]);
        if (!previous.Z.empty()) {
            for (std::size_t i = 0; i < betas.size(); ++i) CHECK(s.Z[i] > previous.Z[i]);
        }
        previous = s;
    }
    auto const sum = thermo_series(kParams, kTable, 0, 15, betas, Backend::sum);
    for (double s : sum.S) CHECK(s >= 0.0);
}

TEST_CASE("sum and classical integral converge for many levels") {
    // the gap is mostly the trapezoid endpoint term (f(sigma) + f(lambda + sigma)) / 2
    auto const h = classical_coefficients(kParams, kTable, 0);
    for (int lambda : {20, 30, 50, 100}) {
        for (double beta : {0.1, 0.2, 0.5, 1.0, 2.0}) {
            double const zs = partition_sum(inputs(lambda, beta));
            double const zi = partition_integral(inputs(lambda, beta));
            auto const f = [&](double r) { return std::exp(beta * (h.H1 * r * r + h.H2 / (r * r) - h.H3)); };
            double const endpoints = 0.5 * (f(h.sigma) + f(lambda + h.sigma));
            CAPTURE(lambda);
            CAPTURE(beta);
            CHECK(std::abs(zs - zi - endpoints) / zs < 0.025);
            if (lambda >= 30 && beta <= 0.5) CHECK(std::abs(zs - zi) / zs < 0.05);
        }
    }
}

TEST_CASE("backends agree on the thermodynamic functions") {
    for (double beta : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        auto const c = thermo_point(inputs(10, beta), Backend::closed);
        auto const q = thermo_point(inputs(10, beta), Backend::integral);
        CAPTURE(beta);
        CHECK(c.Z == doctest::Approx(q.Z).epsilon(1e-8));
        CHECK(c.U == doctest::Approx(q.U).epsilon(1e-8));
        CHECK(c.F == doctest::Approx(q.F).epsilon(1e-8));
        CHECK(c.S == doctest::Approx(q.S).epsilon(1e-8));
        // second differences amplify quadrature noise
        CHECK(c.C == doctest::Approx(q.C).epsilon(1e-4));
    }
}

TEST_CASE("series records failures per point") {
    auto const s = thermo_series(kParams, kTable, 0, 0, {0.5, 1.0}, Backend::closed);
    REQUIRE(s.flags.size() == 2);
    CHECK(s.flags[0].rfind("error:", 0) == 0);
    CHECK(std::isnan(s.U[0]));
    CHECK_THROWS_AS(thermo_series(kParams, kTable, 0, 5, {1.0, 0.5}, Backend::closed), skhp::DomainError);
    CHECK_THROWS_AS(thermo_point(inputs(0, 1.0), Backend::integral), skhp::DomainError);
}

TEST_CASE("heat capacity freezes out") {
    double previous = INFINITY;
    for (double beta : {5.0, 20.0, 50.0, 100.0}) {
        double const c = thermo_point(inputs(10, beta), Backend::sum).C;
        CHECK(c < previous);
        previous = c;
    }
    CHECK(previous < 1e-12);
}
