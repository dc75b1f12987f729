#pragma once

// Normalized bound-state wavefunctions of the screened Kratzer-Hellmann model.
//
// The reduced radial function is
//
//   u(r) = N z^eta (1 - z)^G P_n^{(2 eta, 2G - 1)}(1 - 2z),   z = e^{-alpha r},
//
// normalized numerically so that int_0^inf u^2 dr = 1. Momentum-space functions
// are the l = 0 sine transform w(p) = sqrt(2/pi) int_0^inf u(r) sin(p r) dr, with
// p the wavenumber (momentum in units of hbar).

#include "skhp/model.hpp"
#include "skhp/quadrature.hpp"

#include <functional>
#include <vector>

namespace skhp::wavefunction {

using model::PotentialParams;
using model::QuantumNumbers;
using model::UnitSystem;
using quadrature::QuadraturePolicy;

/// A solved level. Immutable once built; safe to share across threads.
struct BoundState {
    PotentialParams params;
    QuantumNumbers qn;
    UnitSystem units;
    QuadraturePolicy policy;

    double energy = 0.0;
    double eta = 0.0;
    double bigG = 0.0;
    double log_norm = 0.0;         ///< ln N, authoritative
    double norm_numeric = 0.0;     ///< N = exp(log_norm); may overflow for extreme parameters
    double norm_closed_form = 0.0; ///< Gamma-function expression, diagnostic only
    double decay_rate = 0.0;       ///< alpha * eta
};

/// Throws NoBoundState (with the diagnostic reason) or NonConvergence.
BoundState build_bound_state(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units,
                             QuadraturePolicy const& policy = {});

/// ln of the closed-form normalization constant
///   N^2 = 2 alpha n! Gamma(1+n+2G+2eta) Gamma(1+2n+2G+2eta)
///         / (2^{1+2G+2eta} Gamma(1+n+2eta) Gamma(1+n+2G)).
double log_norm_closed_form(int n, double alpha, double eta, double G);

double u_of_r(BoundState const& state, double r);
double u_prime_of_r(BoundState const& state, double r);

/// u(r)^2.
double reduced_density(BoundState const& state, double r);
/// u(r)^2 / (4 pi r^2), the full density of the m = 0 state (r > 0).
double density_position(BoundState const& state, double r);

/// Single-point sine transform through quadrature::sine_transform (l = 0 only).
double momentum_w(BoundState const& state, double p);

/// w(p) sampled on an adaptive composite Gauss-Legendre rule over [0, p_max].
///
/// p_max is doubled until the power-law estimate of the omitted tail of w^2 falls
/// below 1e-10; all momentum integrals of one state share these samples.
class MomentumProfile {
  public:
    explicit MomentumProfile(BoundState const& state);

    /// sum_i weight_i g(p_i, w(p_i)); no tail correction.
    double integrate(std::function<double(double p, double w)> const& g) const;

    /// int_0^inf p^k w^2 dp with a power-law tail correction beyond p_max.
    double moment(int k) const;

    double w(double p) const { return table_(p); }
    double p_max() const { return p_max_; }
    std::vector<double> const& nodes() const { return nodes_; }
    std::vector<double> const& values() const { return values_; }

  private:
    double p_max_;
    double w_half_;  // w(p_max / 2)
    double w_end_;   // w(p_max)
    quadrature::SineTransformTable table_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> values_;
};

/// p_max used by MomentumProfile: first doubling of p at which the tail of w^2 is < tail_tol.
double momentum_cutoff(BoundState const& state, double tail_tol = 1e-10);

/// int_0^inf r^k u^2 dr, k in {-2, -1, 0, 1, 2}.
double expectation_r_power(BoundState const& state, int k);

/// <p^2> = hbar^2 int (u'^2 + l(l+1) u^2 / r^2) dr.
double expectation_p2(BoundState const& state);
/// hbar^2 int p^2 w^2 dp (l = 0).
double expectation_p2_momentum(BoundState const& state, MomentumProfile const& profile);
/// int w^2 / p^2 dp, in units of hbar^-2 (l = 0).
double expectation_p_neg2(BoundState const& state, MomentumProfile const& profile);

/// int u^2 dr.
double norm_position(BoundState const& state);

/// Uniform grid of `points` radii on [0, R], R the truncation radius of u^2.
/// The reduced density vanishes smoothly at both ends, so the trapezoid rule on
/// this grid is accurate far beyond its nominal order.
std::vector<double> position_grid(BoundState const& state, std::size_t points);

/// Uniform grid of `points` wavenumbers on [0, p_max].
std::vector<double> momentum_grid(MomentumProfile const& profile, std::size_t points);

} // namespace skhp::wavefunction
