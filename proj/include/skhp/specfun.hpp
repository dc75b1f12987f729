#pragma once

// Scalar special functions used by the closed-form expressions of the model.
// All functions are pure and thread-safe.

namespace skhp::specfun {

/// A real number stored as sign * exp(log_magnitude).
///
/// Used wherever a quantity can exceed the double range, most notably
/// erfi(x) ~ exp(x^2) / (x sqrt(pi)). A zero value has sign == 0 and the
/// log magnitude is ignored.
struct LogScaled {
    int sign = 0;
    double log_magnitude = 0.0;

    static LogScaled from_value(double value);
    static LogScaled zero() { return {}; }

    /// sign * exp(log_magnitude); overflows to +-inf when out of range.
    double value() const;
    bool is_zero() const { return sign == 0; }

    LogScaled operator-() const { return {-sign, log_magnitude}; }
    LogScaled operator*(LogScaled const& other) const;
    /// Multiply by exp(shift).
    LogScaled scaled_by_exp(double shift) const;
};

/// Sum of two log-scaled numbers, computed without leaving the log domain.
LogScaled add(LogScaled const& a, LogScaled const& b);

/// ln Gamma(x) for x > 0 (Lanczos g = 7, nine coefficients). Throws DomainError for x <= 0.
double ln_gamma(double x);

/// Jacobi polynomial P_n^{(a,b)}(x) via the three-term recurrence in n.
double jacobi(int n, double a, double b, double x);

/// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(x).
double jacobi_derivative(int n, double a, double b, double x);

/// Dawson's integral D(x) = exp(-x^2) * int_0^x exp(t^2) dt.
double dawson(double x);

/// erfi(x) = 2/sqrt(pi) * exp(x^2) * D(x) in log-scaled form; never overflows.
LogScaled erfi_log(double x);

/// Plain erfi(x); only valid for |x| <= 25 (throws DomainError beyond).
double erfi(double x);

} // namespace skhp::specfun
