#include "skhp/specfun.hpp"

#include "skhp/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace skhp::specfun {

LogScaled LogScaled::from_value(double value) {
    if (value == 0.0) return {};
    return {value > 0 ? 1 : -1, std::log(std::abs(value))};
}

double LogScaled::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_magnitude);
}

LogScaled LogScaled::operator*(LogScaled const& other) const {
    if (sign == 0 || other.sign == 0) return {};
    return {sign * other.sign, log_magnitude + other.log_magnitude};
}

LogScaled LogScaled::scaled_by_exp(double shift) const {
    if (sign == 0) return {};
    return {sign, log_magnitude + shift};
}

LogScaled add(LogScaled const& a, LogScaled const& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    auto const& big = a.log_magnitude >= b.log_magnitude ? a : b;
    auto const& small = a.log_magnitude >= b.log_magnitude ? b : a;
    double const ratio = std::exp(small.log_magnitude - big.log_magnitude); // in (0, 1]
    if (big.sign == small.sign) {
        return {big.sign, big.log_magnitude + std::log1p(ratio)};
    }
    if (ratio == 1.0) return {};
    return {big.sign, big.log_magnitude + std::log1p(-ratio)};
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Stirling series; used for large arguments where it is more accurate than Lanczos.
double ln_gamma_stirling(double x) {
    double const inv = 1.0 / x;
    double const inv2 = inv * inv;
    double const series =
        inv * (1.0 / 12.0 -
               inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive, got " + std::to_string(x));
    if (x >= 20.0) return ln_gamma_stirling(x);
    if (x < 0.5) {
        // reflection keeps the Lanczos sum in its accurate range
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - ln_gamma(1.0 - x);
    }
    double const xm1 = x - 1.0;
    double sum = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (xm1 + static_cast<double>(i));
    double const t = xm1 + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t + std::log(sum);
}

double jacobi(int n, double a, double b, double x) {
    if (n < 0) throw DomainError("jacobi: degree must be non-negative");
    if (n == 0) return 1.0;
    double p_prev = 1.0;
    double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int k = 2; k <= n; ++k) {
        double const kk = k;
        double const s = 2.0 * kk + a + b; // 2k + a + b
        double const c1 = 2.0 * kk * (kk + a + b) * (s - 2.0);
        double const c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        double const c3 = 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * s;
        double const next = (c2 * p - c3 * p_prev) / c1;
        p_prev = p;
        p = next;
    }
    return p;
}

double jacobi_derivative(int n, double a, double b, double x) {
    if (n < 0) throw DomainError("jacobi_derivative: degree must be non-negative");
    if (n == 0) return 0.0;
    return 0.5 * (n + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, x);
}

namespace {

// exp(-x^2) * sum x^{2k+1} / (k! (2k+1)); every term is positive so nothing cancels.
double dawson_series(double x) {
    double const x2 = x * x;
    double term = x; // x^{2k+1} / k!
    double sum = 0.0;
    for (int k = 0; k < 400; ++k) {
        double const contrib = term / (2.0 * k + 1.0);
        sum += contrib;
        if (contrib < 1e-17 * sum) break;
        term *= x2 / (k + 1.0);
    }
    return std::exp(-x2) * sum;
}

// D(x) = x / (1 + 2x^2 - 4x^2 / (3 + 2x^2 - 8x^2 / (5 + 2x^2 - ...))), evaluated bottom-up.
double dawson_continued_fraction(double x) {
    double const x2 = x * x;
    int const depth = std::abs(x) < 8.0 ? 160 : 60;
    double tail = 0.0;
    for (int k = depth; k >= 1; --k) {
        tail = (4.0 * k * x2) / ((2.0 * k + 1.0) + 2.0 * x2 - tail);
    }
    return x / (1.0 + 2.0 * x2 - tail);
}

} // namespace

double dawson(double x) {
    if (x == 0.0) return 0.0;
    double const ax = std::abs(x);
    double const d = ax < 4.0 ? dawson_series(ax) : dawson_continued_fraction(ax);
    return x < 0 ? -d : d;
}

LogScaled erfi_log(double x) {
    if (x == 0.0) return {};
    double const ax = std::abs(x);
    double const lm = ax * ax + std::log(2.0 * dawson(ax) / std::sqrt(std::numbers::pi));
    return {x > 0 ? 1 : -1, lm};
}

double erfi(double x) {
    if (std::abs(x) > 25.0) throw DomainError("erfi: |x| > 25 overflows; use erfi_log");
    return 2.0 / std::sqrt(std::numbers::pi) * std::exp(x * x) * dawson(x);
}

} // namespace skhp::specfun
