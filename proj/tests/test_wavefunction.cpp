#include "skhp/errors.hpp"
#include "skhp/wavefunction.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace skhp::wavefunction;
using skhp::model::kUnscreenedAlpha;

namespace {

// V = -1/r with hbar^2 / 2mu = 1: Bohr radius a = 2
BoundState hydrogen(int n = 0) {
    return build_bound_state({-1, 0, 0, kUnscreenedAlpha}, {n, 0, 0}, UnitSystem::table12());
}

BoundState paper_state(int n, double alpha = 0.1) {
    return build_bound_state({3, 5, 10, alpha}, {n, 0, 0}, UnitSystem::atomic());
}

int sign_changes(BoundState const& s) {
    auto const r = position_grid(s, 20001);
    int changes = 0;
    double prev = 0.0;
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        double const u = u_of_r(s, r[i]);
        if (std::abs(u) < 1e-14) continue;
        if (prev != 0.0 && (u > 0) != (prev > 0)) ++changes;
        prev = u;
    }
    return changes;
}

} // namespace

TEST_CASE("state construction") {
    auto const s = paper_state(0);
    CHECK(s.eta > 0);
    CHECK(s.bigG > 0.5);
    CHECK(s.energy < 0);
    CHECK(norm_position(s) == doctest::Approx(1.0).epsilon(1e-8));
    // eta^2 = eps^2 - C, so alpha eta = sqrt(-kappa E - alpha^2 C)
    auto const c = skhp::model::coefficients(s.params, s.qn, s.units, s.energy);
    double const alpha = s.params.alpha;
    CHECK(s.decay_rate == doctest::Approx(alpha * s.eta).epsilon(1e-15));
    CHECK(s.decay_rate == doctest::Approx(std::sqrt(-s.units.kappa() * s.energy - alpha * alpha * c.C)).epsilon(1e-10));
    // with C = 0 (V1 = 0, l = 0) the two routes coincide
    auto const plain = build_bound_state({-1, 0, 0.5, 0.1}, {0, 0, 0}, UnitSystem::table12());
    CHECK(plain.decay_rate == doctest::Approx(std::sqrt(-plain.units.kappa() * plain.energy)).epsilon(1e-10));
    CHECK(std::exp(s.log_norm) == doctest::Approx(s.norm_numeric).epsilon(1e-14));
    CHECK_THROWS_AS(build_bound_state({-3, 5, 10, 0.01}, {3, 0, 0}, UnitSystem::table12()), skhp::NoBoundState);
}

TEST_CASE("node counts") {
    CHECK(sign_changes(paper_state(0)) == 0);
    CHECK(sign_changes(paper_state(1)) == 1);
    CHECK(sign_changes(hydrogen(2)) == 2);
}

TEST_CASE("closed-form normalization on the ground state") {
    // n = 0: int z^{2eta} (1-z)^{2G} dr = B(2eta, 2G+1) / alpha
    auto const s = paper_state(0, 0.3);
    double const a = s.params.alpha;
    double const log_beta = std::lgamma(2 * s.eta) + std::lgamma(2 * s.bigG + 1) - std::lgamma(2 * s.eta + 2 * s.bigG + 1);
    CHECK(s.log_norm == doctest::Approx(-0.5 * (log_beta - std::log(a))).epsilon(1e-9));
    CHECK(std::isfinite(log_norm_closed_form(0, a, s.eta, s.bigG)));
}

TEST_CASE("hydrogenic limit") {
    auto const s = hydrogen();
    CHECK(s.energy == doctest::Approx(-0.25).epsilon(1e-6));
    for (double r : {0.5, 1.0, 2.0, 4.0, 10.0}) {
        double const expected = r * std::exp(-r / 2) / std::sqrt(2.0);
        CHECK(u_of_r(s, r) == doctest::Approx(expected).epsilon(1e-6));
    }
    CHECK(expectation_r_power(s, 1) == doctest::Approx(3.0).epsilon(1e-4));
    CHECK(expectation_r_power(s, 2) == doctest::Approx(12.0).epsilon(1e-3));
    CHECK(expectation_r_power(s, -1) == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(expectation_p2(s) == doctest::Approx(0.25).epsilon(1e-4));
    CHECK(density_position(s, 1e-6) == doctest::Approx(1.0 / (8 * std::numbers::pi)).epsilon(1e-4));
    // virial theorem: <p^2> hbar^2 / 2mu = -E
    CHECK(expectation_p2(s) == doctest::Approx(-s.energy).epsilon(1e-3));

    MomentumProfile const profile(s);
    double const a = 2.0;
    double const scale = profile.w(1.0) / (1.0 / std::pow(1 + a * a, 2));
    for (double p : {0.05, 0.3, 0.5, 2.0, 5.0}) {
        CHECK(profile.w(p) == doctest::Approx(scale * p / std::pow(1 + a * a * p * p, 2)).epsilon(1e-6));
    }
    // normalized oracle: w = p / (sqrt(pi) (1/4 + p^2)^2)
    CHECK(profile.w(0.7) == doctest::Approx(0.7 / (std::sqrt(std::numbers::pi) * std::pow(0.25 + 0.49, 2))).epsilon(1e-6));
}

TEST_CASE("position-space shape") {
    auto const s = paper_state(0);
    CHECK(u_of_r(s, 0.0) == 0.0);
    double const r1 = 200.0, r2 = 201.0;
    double const slope = std::log(std::abs(u_of_r(s, r2) / u_of_r(s, r1)));
    CHECK(slope == doctest::Approx(-s.decay_rate).epsilon(1e-6));
    CHECK(u_prime_of_r(s, 1e-3) > 0);

    // density peak: derivative of u^2 changes sign at the grid maximum
    auto const r = position_grid(s, 4001);
    std::size_t peak = 1;
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        if (reduced_density(s, r[i]) > reduced_density(s, r[peak])) peak = i;
    }
    CHECK(u_prime_of_r(s, r[peak - 1]) * u_of_r(s, r[peak - 1]) > 0);
    CHECK(u_prime_of_r(s, r[peak + 1]) * u_of_r(s, r[peak + 1]) < 0);

    for (double x : r) CHECK(reduced_density(s, x) >= 0.0);
}

TEST_CASE("derivative against finite differences") {
    for (int n : {0, 1}) {
        auto const s = paper_state(n, 0.25);
        std::mt19937_64 rng(41 + n);
        std::uniform_real_distribution<double> dist(0.05, 15.0);
        for (int i = 0; i < 50; ++i) {
            double const r = dist(rng);
            double const h = 1e-6 * std::max(r, 1.0);
            double const fd = (u_of_r(s, r + h) - u_of_r(s, r - h)) / (2 * h);
            CHECK(u_prime_of_r(s, r) == doctest::Approx(fd).epsilon(1e-6).scale(1e-6));
        }
    }
}

TEST_CASE("momentum space") {
    for (int n : {0, 1}) {
        CAPTURE(n);
        auto const s = paper_state(n, 0.4);
        MomentumProfile const profile(s);
        CHECK(profile.moment(0) == doctest::Approx(1.0).epsilon(1e-6));
        double const p2_position = expectation_p2(s);
        CHECK(expectation_p2_momentum(s, profile) == doctest::Approx(p2_position).epsilon(1e-6));
        CHECK(profile.w(0.0) == 0.0);
        CHECK(std::abs(profile.w(profile.p_max()) * std::pow(profile.p_max(), 2)) < 1.0);
        for (double p : {0.1, 1.0, 4.0}) {
            CHECK(profile.w(p) == doctest::Approx(momentum_w(s, p)).epsilon(1e-8).scale(1e-10));
        }
        CHECK(expectation_p_neg2(s, profile) > 0.0);
    }
}

TEST_CASE("expectation values") {
    auto const s = paper_state(1, 0.2);
    CHECK(expectation_r_power(s, 0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(expectation_r_power(s, -1) * expectation_r_power(s, 1) >= 1.0);
    CHECK(expectation_r_power(s, 2) >= std::pow(expectation_r_power(s, 1), 2));
    CHECK_THROWS(expectation_r_power(s, 3));
}

TEST_CASE("sampling grids") {
    auto const s = paper_state(0);
    auto const r = position_grid(s, 11);
    CHECK(r.size() == 11);
    CHECK(r.front() == 0.0);
    CHECK(reduced_density(s, r.back()) < 1e-12);
    MomentumProfile const profile(s);
    auto const p = momentum_grid(profile, 5);
    CHECK(p.back() == doctest::Approx(profile.p_max()));
    CHECK_THROWS(position_grid(s, 1));
}

TEST_CASE("uncertainty product") {
    for (int n = 0; n <= 2; ++n) {
        for (int l = 0; l <= 2; ++l) {
            for (double alpha : {0.1, 0.5, 0.9}) {
                auto const s = build_bound_state({3, 5, 10, alpha}, {n, l, 0}, UnitSystem::atomic());
                CAPTURE(n);
                CAPTURE(l);
                CAPTURE(alpha);
                CHECK(expectation_r_power(s, 2) * expectation_p2(s) >= 2.25);
            }
        }
    }
}
