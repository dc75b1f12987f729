#include "skhp/errors.hpp"
#include "skhp/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace skhp::specfun;

namespace {

double generalized_binomial(double top, int k) {
    return std::tgamma(top + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(top - k + 1.0));
}

// P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}
double jacobi_explicit(int n, double a, double b, double x) {
    double sum = 0.0;
    for (int s = 0; s <= n; ++s) {
        sum += generalized_binomial(n + a, n - s) * generalized_binomial(n + b, s) * std::pow((x - 1) / 2, s) *
               std::pow((x + 1) / 2, n - s);
    }
    return sum;
}

// Maclaurin series sum_k (-1)^k 2^k x^{2k+1} / (2k+1)!!
long double dawson_series(long double x) {
    long double term = x, sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= -2.0L * x * x / (2 * k + 1);
        sum += term;
    }
    return sum;
}

} // namespace

TEST_CASE("LogScaled arithmetic") {
    auto const a = LogScaled::from_value(-3.5);
    CHECK(a.sign == -1);
    CHECK(a.value() == doctest::Approx(-3.5).epsilon(1e-15));
    CHECK(LogScaled::from_value(0.0).is_zero());
    CHECK(LogScaled::zero().value() == 0.0);
    CHECK((a * LogScaled::from_value(2.0)).value() == doctest::Approx(-7.0).epsilon(1e-15));
    CHECK(add(a, LogScaled::from_value(5.0)).value() == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(add(a, -a).is_zero());
    CHECK(add(LogScaled::zero(), a).value() == doctest::Approx(-3.5));
    CHECK(a.scaled_by_exp(std::log(2.0)).value() == doctest::Approx(-7.0).epsilon(1e-14));
    LogScaled const huge{1, 1000.0};
    CHECK(std::isinf(huge.value()));
    CHECK(add(huge, huge).log_magnitude == doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("ln_gamma") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
    CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.05, 80.0);
    for (int i = 0; i < 200; ++i) {
        double const x = dist(rng);
        CHECK(ln_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13).scale(1.0));
    }
    CHECK_THROWS_AS(ln_gamma(0.0), skhp::DomainError);
    CHECK_THROWS_AS(ln_gamma(-1.5), skhp::DomainError);
}

TEST_CASE("jacobi polynomials") {
    CHECK(jacobi(0, 1.3, 0.4, 0.2) == 1.0);
    double const a = 1.3, b = 0.4, x = -0.35;
    CHECK(jacobi(1, a, b, x) == doctest::Approx((a - b) / 2 + (a + b + 2) * x / 2).epsilon(1e-15));
    // endpoint identity: Gamma(4.5) / (2! Gamma(2.5)) = 3.5 * 2.5 / 2
    CHECK(jacobi(2, 1.5, 0.7, 1.0) == doctest::Approx(4.375).epsilon(1e-14));
    for (int n = 0; n < 8; ++n) {
        double const endpoint = std::exp(std::lgamma(n + 2.3) - std::lgamma(n + 1.0) - std::lgamma(2.3));
        CHECK(jacobi(n, 1.3, 0.4, 1.0) == doctest::Approx(endpoint).epsilon(1e-13));
    }

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> param(0.0, 6.0), point(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        int const n = i % 7;
        double const aa = param(rng), bb = param(rng), xx = point(rng);
        double const expected = jacobi_explicit(n, aa, bb, xx);
        CHECK(jacobi(n, aa, bb, xx) == doctest::Approx(expected).epsilon(1e-11).scale(1.0));
    }
}

TEST_CASE("jacobi derivative") {
    CHECK(jacobi_derivative(0, 1.0, 2.0, 0.3) == 0.0);
    CHECK(jacobi_derivative(1, 1.0, 2.0, 0.3) == doctest::Approx(2.5).epsilon(1e-15));
    double const h = 1e-5;
    double const fd = (jacobi(2, 0.5, 0.5, 0.3 + h) - jacobi(2, 0.5, 0.5, 0.3 - h)) / (2 * h);
    CHECK(jacobi_derivative(2, 0.5, 0.5, 0.3) == doctest::Approx(fd).epsilon(1e-8));
    for (double x : {-0.9, -0.2, 0.45, 0.8}) {
        double const fd4 = (jacobi(4, 2.2, 0.9, x + h) - jacobi(4, 2.2, 0.9, x - h)) / (2 * h);
        CHECK(jacobi_derivative(4, 2.2, 0.9, x) == doctest::Approx(fd4).epsilon(1e-7));
    }
}

TEST_CASE("dawson integral") {
    CHECK(dawson(0.0) == 0.0);
    CHECK(dawson(1.0) == doctest::Approx(static_cast<double>(dawson_series(1.0L))).epsilon(1e-14));
    CHECK(dawson(1.0) == doctest::Approx(0.5380795069127684).epsilon(1e-14));
    for (double x : {0.01, 0.3, 0.9, 1.7, 2.5, 3.2}) {
        CHECK(dawson(x) == doctest::Approx(static_cast<double>(dawson_series(x))).epsilon(1e-12));
    }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(0.0, 40.0);
    for (int i = 0; i < 50; ++i) {
        double const x = dist(rng);
        CHECK(dawson(-x) == -dawson(x));
    }
    // asymptotic D(x) ~ 1/(2x) (1 + 1/(2x^2) + 3/(4x^4) + 15/(8x^6))
    double const x = 60.0;
    double const asym = (1 + 1 / (2 * x * x) + 3 / (4 * std::pow(x, 4)) + 15 / (8 * std::pow(x, 6))) / (2 * x);
    CHECK(dawson(x) == doctest::Approx(asym).epsilon(1e-12));
}

TEST_CASE("erfi") {
    CHECK(erfi_log(0.0).is_zero());
    double const x = 1e-4;
    CHECK(erfi(x) == doctest::Approx(2 / std::sqrt(std::numbers::pi) * (x + x * x * x / 3)).epsilon(1e-12));
    CHECK(erfi(-0.7) == doctest::Approx(-erfi(0.7)).epsilon(1e-15));
    // erfi(1) = 1.6504257587975428...
    CHECK(erfi(1.0) == doctest::Approx(1.6504257587975428).epsilon(1e-14));

    auto const big = erfi_log(30.0);
    CHECK(big.sign == 1);
    CHECK(std::isfinite(big.log_magnitude));
    CHECK(big.log_magnitude ==
          doctest::Approx(900.0 + std::log(2 * dawson(30.0) / std::sqrt(std::numbers::pi))).epsilon(1e-14));
    CHECK(big.log_magnitude == doctest::Approx(900.0 - std::log(30.0 * std::sqrt(std::numbers::pi))).epsilon(1e-6));
    CHECK(erfi_log(-30.0).sign == -1);
    CHECK_THROWS_AS(erfi(30.0), skhp::DomainError);
}
