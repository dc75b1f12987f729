#pragma once

// The screened Kratzer-Hellmann potential
//
//   V(r) = (V0/r + (V1/r) e^{alpha r} + V2/r^2) e^{-alpha r},
//
// the coefficients of its reduced radial equation under the Greene-Aldrich
// approximation, and the closed-form energy spectrum with its special cases.

#include <string>
#include <string_view>

namespace skhp::model {

/// Reduced mass, reduced Planck constant and Boltzmann constant.
struct UnitSystem {
    double mu = 0.5;
    double hbar = 1.0;
    double kB = 1.0;

    /// 2 mu / hbar^2.
    double kappa() const { return 2.0 * mu / (hbar * hbar); }
    void validate() const;

    /// hbar^2 / 2mu = 1; the convention under which the energy tables hold.
    static UnitSystem table12() { return {0.5, 1.0, 1.0}; }
    /// mu = hbar = 1.
    static UnitSystem atomic() { return {1.0, 1.0, 1.0}; }
    /// "table12" or "atomic"; throws DomainError otherwise.
    static UnitSystem preset(std::string_view name);
};

struct PotentialParams {
    double V0 = 0.0;
    double V1 = 0.0;
    double V2 = 0.0;
    double alpha = 1.0;

    void validate() const;
};

/// Screening used to approach the unscreened (Kratzer/Coulomb) limit; the
/// coefficient map divides by alpha so alpha = 0 itself is not admitted.
inline constexpr double kUnscreenedAlpha = 1e-8;

struct QuantumNumbers {
    int n = 0;
    int l = 0;
    int m = 0;

    void validate() const;
    /// Spectroscopic label, e.g. "3d" for n = 0, l = 2.
    std::string label() const;
};

/// "1s", "3d", ... -> n = N - l - 1, m = 0. Throws DomainError naming the token.
QuantumNumbers spectroscopic_to_qn(std::string_view label);

struct CoefficientSet {
    double eps2 = 0.0;
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double G = 0.0;
    double sigma = 0.0;
    double P1 = 0.0;
    double P2 = 0.0;
    bool eps2_negative = false; ///< E >= 0: not a bound-state energy
};

double potential_value(PotentialParams const& params, double r);

/// Coefficients of the reduced equation at energy E. Never throws for valid
/// inputs; a non-negative E is flagged through eps2_negative.
CoefficientSet coefficients(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units,
                            double E);

/// Closed-form energy. Positive values are returned (see bound_state_check);
/// throws NoBoundState when no real sigma exists or eta vanishes.
double energy(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units);

/// V1 = 0 specialization, written out independently. Throws DomainError if V1 != 0.
double energy_screened_kratzer(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units);

/// V2 = 0 specialization, written out independently. Throws DomainError if V2 != 0.
double energy_hellmann(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units);

struct BoundStateDiagnostic {
    double energy = 0.0;
    double eps2 = 0.0;
    double eta = 0.0;      ///< sqrt(eps2 - C), the decay exponent of z = e^{-alpha r}
    double nu_root = 0.0;  ///< (P1 - (n+sigma)^2) / (2(n+sigma)); |nu_root| == eta
    double G = 0.0;
    bool bound = false;    ///< energy < 0 && eta > 0 && G > 1/2
    std::string reason;    ///< empty when bound
};

BoundStateDiagnostic bound_state_check(PotentialParams const& params, QuantumNumbers const& qn,
                                       UnitSystem const& units);

} // namespace skhp::model
