#include "skhp/wavefunction.hpp"

#include "skhp/errors.hpp"
#include "skhp/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace skhp::wavefunction {

namespace {

// ln[z^eta (1-z)^G] + shift
double log_envelope(BoundState const& s, double r, double exponent_of_one_minus_z) {
    double const a = s.params.alpha;
    return s.log_norm - s.eta * a * r + exponent_of_one_minus_z * std::log(-std::expm1(-a * r));
}

double jacobi_factor(BoundState const& s, double z) {
    return specfun::jacobi(s.qn.n, 2.0 * s.eta, 2.0 * s.bigG - 1.0, 1.0 - 2.0 * z);
}

void require_s_wave(BoundState const& s, char const* what) {
    if (s.qn.l != 0) {
        throw UnsupportedL(std::string(what) + ": momentum-space functions are implemented for l = 0 only");
    }
}

} // namespace

double log_norm_closed_form(int n, double alpha, double eta, double G) {
    using specfun::ln_gamma;
    double const two_eta = 2.0 * eta;
    return 0.5 * (std::log(2.0 * alpha) + ln_gamma(n + 1.0) + ln_gamma(1.0 + n + 2.0 * G + two_eta) +
                  ln_gamma(1.0 + 2.0 * n + 2.0 * G + two_eta) - (1.0 + 2.0 * G + two_eta) * std::numbers::ln2 -
                  ln_gamma(1.0 + n + two_eta) - ln_gamma(1.0 + n + 2.0 * G));
}

BoundState build_bound_state(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units,
                             QuadraturePolicy const& policy) {
    policy.validate();
    auto const diag = model::bound_state_check(params, qn, units);
    if (!diag.bound) {
        throw NoBoundState("state " + qn.label() + " at alpha = " + std::to_string(params.alpha) +
                           " is not bound: " + diag.reason);
    }
    BoundState s;
    s.params = params;
    s.qn = qn;
    s.units = units;
    s.policy = policy;
    s.energy = diag.energy;
    s.bigG = diag.G;
    s.eta = std::abs(diag.nu_root);
    s.decay_rate = params.alpha * s.eta;

    // scale the envelope to O(1) at its maximum, z = eta / (eta + G), before integrating
    double const r_peak = std::log1p(s.bigG / s.eta) / params.alpha;
    s.log_norm = 0.0;
    double const shift = -log_envelope(s, r_peak, s.bigG);
    s.log_norm = shift;
    double const integral = quadrature::integrate_semi_infinite(
        [&s](double r) {
            double const u = u_of_r(s, r);
            return u * u;
        },
        2.0 * s.decay_rate, policy);
    s.log_norm = shift - 0.5 * std::log(integral);
    s.norm_numeric = std::exp(s.log_norm);
    s.norm_closed_form = std::exp(log_norm_closed_form(qn.n, params.alpha, s.eta, s.bigG));
    return s;
}

double u_of_r(BoundState const& s, double r) {
    if (!(r > 0.0)) return 0.0;
    double const z = std::exp(-s.params.alpha * r);
    return std::exp(log_envelope(s, r, s.bigG)) * jacobi_factor(s, z);
}

double u_prime_of_r(BoundState const& s, double r) {
    if (!(r > 0.0)) throw DomainError("u_prime_of_r: r must be > 0");
    double const a = s.params.alpha;
    double const z = std::exp(-a * r);
    double const one_minus_z = -std::expm1(-a * r);
    double const x = 1.0 - 2.0 * z;
    int const n = s.qn.n;
    double const p = specfun::jacobi(n, 2.0 * s.eta, 2.0 * s.bigG - 1.0, x);
    double const dp = specfun::jacobi_derivative(n, 2.0 * s.eta, 2.0 * s.bigG - 1.0, x);
    // du/dr = -alpha z d/dz [z^eta (1-z)^G P(1-2z)], with one power of (1-z) factored out
    double const bracket = one_minus_z * (-a * s.eta * p + 2.0 * a * z * dp) + s.bigG * a * z * p;
    return std::exp(log_envelope(s, r, s.bigG - 1.0)) * bracket;
}

double reduced_density(BoundState const& s, double r) {
    double const u = u_of_r(s, r);
    return u * u;
}

double density_position(BoundState const& s, double r) {
    if (!(r > 0.0)) throw DomainError("density_position: r must be > 0");
    return reduced_density(s, r) / (4.0 * std::numbers::pi * r * r);
}

double momentum_w(BoundState const& s, double p) {
    require_s_wave(s, "momentum_w");
    return quadrature::sine_transform([&s](double r) { return u_of_r(s, r); }, s.decay_rate, p, s.policy);
}

double momentum_cutoff(BoundState const& s, double tail_tol) {
    require_s_wave(s, "momentum_cutoff");
    // w decays algebraically; estimate the tail of w^2 from the local power law
    double p = std::max(1.0, 4.0 * s.decay_rate);
    double const limit = 1e4 * std::max(1.0, s.decay_rate);
    double w_prev = momentum_w(s, 0.5 * p);
    int consecutive = 0;
    while (p < limit) {
        double const w_cur = momentum_w(s, p);
        double const g_prev = w_prev * w_prev;
        double const g_cur = w_cur * w_cur;
        bool ok = false;
        if (g_cur == 0.0) {
            ok = g_prev == 0.0;
        } else if (g_prev > 0.0) {
            double const slope = std::log2(g_prev / g_cur);
            ok = slope > 1.5 && p * g_cur / (slope - 1.0) < tail_tol;
        }
        consecutive = ok ? consecutive + 1 : 0;
        if (consecutive == 2) return p;
        w_prev = w_cur;
        p *= 2.0;
    }
    throw NonConvergence("momentum_cutoff: w(p)^2 tail did not fall below tolerance", p, tail_tol);
}

MomentumProfile::MomentumProfile(BoundState const& s)
    : p_max_(momentum_cutoff(s)),
      w_half_(momentum_w(s, 0.5 * p_max_)),
      w_end_(momentum_w(s, p_max_)),
      table_([&s](double r) { return u_of_r(s, r); }, s.decay_rate, p_max_, s.policy) {
    QuadraturePolicy outer = s.policy;
    outer.panel_order = std::min(outer.panel_order, 32);
    auto const rule = quadrature::adaptive_rule(
        // refine on a majorant of every integrand evaluated on this rule:
        // w^2, p^2 w^2 and the entropy densities w^2 ln(w^2) and w^2 ln(w^2 / 4 pi p^2)
        [this](double p) {
            double const w = table_(p);
            double const g = w * w;
            if (g < 1e-300) return 0.0;
            return g * (1.0 + p * p + std::abs(std::log(g)) + std::abs(std::log(4.0 * std::numbers::pi * p * p)));
        },
        0.0, p_max_, 4, outer);
    nodes_ = rule.nodes;
    weights_ = rule.weights;
    values_.reserve(nodes_.size());
    for (double p : nodes_) values_.push_back(table_(p));
}

double MomentumProfile::integrate(std::function<double(double, double)> const& g) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * g(nodes_[i], values_[i]);
    return sum;
}

double MomentumProfile::moment(int k) const {
    double const body = integrate([k](double p, double w) { return std::pow(p, k) * w * w; });
    double const g_end = std::pow(p_max_, k) * w_end_ * w_end_;
    double const g_half = std::pow(0.5 * p_max_, k) * w_half_ * w_half_;
    if (g_end <= 0.0 || g_half <= 0.0) return body;
    double const slope = std::log2(g_half / g_end);
    if (!(slope > 1.0)) return body;
    return body + p_max_ * g_end / (slope - 1.0);
}

double expectation_r_power(BoundState const& s, int k) {
    if (k < -2 || k > 2) throw DomainError("expectation_r_power: k must be in {-2, -1, 0, 1, 2}");
    return quadrature::integrate_semi_infinite(
        [&s, k](double r) { return std::pow(r, k) * reduced_density(s, r); }, 2.0 * s.decay_rate, s.policy);
}

double norm_position(BoundState const& s) { return expectation_r_power(s, 0); }

double expectation_p2(BoundState const& s) {
    double const ll = s.qn.l * (s.qn.l + 1.0);
    double const integral = quadrature::integrate_semi_infinite(
        [&s, ll](double r) {
            double const du = u_prime_of_r(s, r);
            double centrifugal = 0.0;
            if (ll != 0.0) centrifugal = ll * reduced_density(s, r) / (r * r);
            return du * du + centrifugal;
        },
        2.0 * s.decay_rate, s.policy);
    return s.units.hbar * s.units.hbar * integral;
}

double expectation_p2_momentum(BoundState const& s, MomentumProfile const& profile) {
    require_s_wave(s, "expectation_p2_momentum");
    return s.units.hbar * s.units.hbar * profile.moment(2);
}

double expectation_p_neg2(BoundState const& s, MomentumProfile const& profile) {
    require_s_wave(s, "expectation_p_neg2");
    return profile.moment(-2) / (s.units.hbar * s.units.hbar);
}

namespace {

std::vector<double> uniform(double hi, std::size_t points) {
    if (points < 2) throw DomainError("grid needs at least 2 points");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) grid[i] = hi * static_cast<double>(i) / static_cast<double>(points - 1);
    return grid;
}

} // namespace

std::vector<double> position_grid(BoundState const& s, std::size_t points) {
    double const extent =
        quadrature::truncation_radius([&s](double r) { return reduced_density(s, r); }, 2.0 * s.decay_rate, s.policy);
    return uniform(extent, points);
}

std::vector<double> momentum_grid(MomentumProfile const& profile, std::size_t points) {
    return uniform(profile.p_max(), points);
}

} // namespace skhp::wavefunction
