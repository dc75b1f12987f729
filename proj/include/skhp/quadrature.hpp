#pragma once

// Numerical integration: Gauss-Legendre rules, adaptive composite panels on
// finite intervals, truncated semi-infinite integrals and sine transforms.

#include <functional>
#include <span>
#include <vector>

namespace skhp::quadrature {

using Integrand = std::function<double(double)>;

/// Reproducibility contract shared by every integral in the library.
struct QuadraturePolicy {
    int panel_order = 64;  ///< Gauss-Legendre points per panel
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_panels = 4096;
    double tail_cut = 1e-16; ///< relative integrand magnitude at which semi-infinite domains end

    /// Throws DomainError if any field is out of range.
    void validate() const;
};

struct GaussLegendreRule {
    std::vector<double> nodes;   ///< ascending, on [-1, 1]
    std::vector<double> weights;
};

/// Nodes and weights of the order-point rule on [-1, 1], 2 <= order <= 256.
/// Rules are computed once per order and cached; the reference stays valid.
GaussLegendreRule const& gauss_legendre_rule(int order);

/// Adaptive bisection on [a, b]. Each panel carries an order-p estimate and the
/// sum of order-p estimates on its two halves; their difference gauges the error.
/// Throws NonConvergence when the panel budget runs out.
double integrate_finite(Integrand const& f, double a, double b, QuadraturePolicy const& policy = {});

/// As integrate_finite, but starting from `initial_panels` equal panels. The panel
/// budget is max(policy.max_panels, 4 * initial_panels).
double integrate_finite(Integrand const& f, double a, double b, int initial_panels,
                        QuadraturePolicy const& policy);

/// Final panels of an adaptive run, flattened into one composite rule: the
/// order-p Gauss-Legendre nodes of both halves of every converged panel.
struct CompositeRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Refine on f exactly as integrate_finite does and return the resulting rule, so
/// several integrands sharing f's structure can reuse one set of samples.
CompositeRule adaptive_rule(Integrand const& f, double a, double b, int initial_panels,
                            QuadraturePolicy const& policy);

/// Radius beyond which |f| stays below tail_cut times its sampled peak, never less
/// than 50 / decay_rate. decay_rate is the exponential decay of f itself.
double truncation_radius(Integrand const& f, double decay_rate, QuadraturePolicy const& policy = {});

/// int_0^inf f(r) dr for |f| <~ K exp(-decay_rate r), truncated at truncation_radius.
double integrate_semi_infinite(Integrand const& f, double decay_rate, QuadraturePolicy const& policy = {});

/// sqrt(2/pi) int_0^inf u(r) sin(p r) dr with panels no wider than a quarter period.
/// The absolute tolerance is raised to 1e-12 int |u| so that tiny transforms converge.
double sine_transform(Integrand const& u, double decay_rate, double p, QuadraturePolicy const& policy = {});

/// Sine transform for many p values against a fixed composite rule.
///
/// u is sampled once on panels of width <= pi / p_max (and <= R*/64) with a
/// fixed order per panel, so evaluating w(p) is a dot product. Used for momentum
/// profiles where thousands of p values share one u.
class SineTransformTable {
  public:
    SineTransformTable(Integrand const& u, double decay_rate, double p_max,
                       QuadraturePolicy const& policy = {}, int order_per_panel = 16);

    /// w(p) for 0 <= p <= p_max.
    double operator()(double p) const;

    double p_max() const { return p_max_; }
    double radius() const { return radius_; }
    std::size_t size() const { return weighted_u_.size(); }

  private:
    double p_max_;
    double radius_;
    std::size_t panels_ = 0;
    double width_ = 0.0;
    std::vector<double> offsets_;    // node offsets from the panel centre
    std::vector<double> weighted_u_; // panel-major

};

} // namespace skhp::quadrature
