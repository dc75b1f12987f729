#pragma once

// Rotation-vibrational partition function Z(beta, lambda) of the screened
// Kratzer-Hellmann spectrum and the thermodynamic functions derived from it.
//
// With rho = n + sigma the energies take the form E = H3 - H1 rho^2 - H2 / rho^2,
// so the classical-limit integral is
//
//   Z = int_sigma^{lambda+sigma} exp(beta (H1 rho^2 + H2 / rho^2 - H3)) d rho.
//
// Everything is carried as ln Z with an explicit reference energy so that large
// beta does not overflow.

#include "skhp/model.hpp"
#include "skhp/quadrature.hpp"
#include "skhp/specfun.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace skhp::thermo {

using model::PotentialParams;
using model::UnitSystem;
using quadrature::QuadraturePolicy;

struct ThermoInputs {
    PotentialParams params;
    UnitSystem units;
    int l = 0;
    int lambda_max = 0; ///< upper bound quantum number
    double beta = 1.0;  ///< 1 / (kB T)
    bool shift_energies = true; ///< sum backend: Boltzmann factors on E_n - E_min

    void validate() const;
};

enum class Backend { sum, integral, closed };

Backend parse_backend(std::string_view name);
std::string_view to_string(Backend b);

/// H1 = hbar^2 alpha^2 / 8mu, H2 = H1 P1^2, H3 = hbar^2 alpha^2 P1 / 4mu + P2, and sigma.
struct ClassicalCoefficients {
    double H1 = 0.0;
    double H2 = 0.0;
    double H3 = 0.0;
    double sigma = 0.0;
};

ClassicalCoefficients classical_coefficients(PotentialParams const& params, UnitSystem const& units, int l);

/// ln Z = -beta * reference_energy + log_rest. For the sum backend the reference
/// is the lowest included level (0 when shift_energies is off); for the integral
/// and closed forms it is H3.
struct LogPartition {
    double reference_energy = 0.0;
    double log_rest = 0.0;
    bool truncated = false; ///< sum stopped at the last bound level below lambda
    int levels = 0;         ///< terms in the sum (sum backend only)

    double ln_z(double beta) const { return -beta * reference_energy + log_rest; }
};

LogPartition log_partition(ThermoInputs const& inputs, Backend backend, QuadraturePolicy const& policy = {});

/// sum_{n=0}^{lambda} exp(-beta E_n); truncates at the first unbound level.
double partition_sum(ThermoInputs const& inputs);
/// Quadrature of the classical-limit integral.
double partition_integral(ThermoInputs const& inputs, QuadraturePolicy const& policy = {});
/// Closed-form antiderivative of the classical-limit integral, see closed_form_antiderivative.
double partition_closed_form(ThermoInputs const& inputs);

/// F(rho) = sqrt(pi)/(4 sqrt a) [e^{2 sqrt(ab)} erfi(sqrt(a) rho - sqrt(b)/rho)
///                               + e^{-2 sqrt(ab)} erfi(sqrt(a) rho + sqrt(b)/rho)]
/// satisfies F'(rho) = exp(a rho^2 + b / rho^2). Requires a > 0, b >= 0, rho > 0.
specfun::LogScaled closed_form_antiderivative(double a, double b, double rho);

struct ThermoPoint {
    double beta = 0.0;
    double ln_z = 0.0;
    double Z = 0.0;
    double U = 0.0;
    double F = 0.0;
    double S = 0.0;
    double C = 0.0;
    std::string flags; ///< empty, or ';'-joined notes such as "truncated"
};

/// All thermodynamic functions at inputs.beta. U and C come from five-point
/// central differences of log_rest (relative step 1e-3, one Richardson level).
ThermoPoint thermo_point(ThermoInputs const& inputs, Backend backend, QuadraturePolicy const& policy = {});

double internal_energy(ThermoInputs const& inputs, Backend backend = Backend::closed);
double free_energy(ThermoInputs const& inputs, Backend backend = Backend::closed);
double entropy_thermo(ThermoInputs const& inputs, Backend backend = Backend::closed);
double heat_capacity(ThermoInputs const& inputs, Backend backend = Backend::closed);

struct ThermoSeries {
    std::vector<double> beta_grid;
    std::vector<double> Z, U, F, S, C;
    std::vector<std::string> flags;
};

/// One ThermoPoint per beta; failures are recorded in flags and the series is still returned.
ThermoSeries thermo_series(PotentialParams const& params, UnitSystem const& units, int l, int lambda_max,
                           std::vector<double> const& beta_grid, Backend backend,
                           QuadraturePolicy const& policy = {});

} // namespace skhp::thermo
