#include "skhp/thermo.hpp"

#include "skhp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace skhp::thermo {

void ThermoInputs::validate() const {
    params.validate();
    units.validate();
    if (l < 0) throw DomainError("ThermoInputs: l must be >= 0");
    if (lambda_max < 0) throw DomainError("ThermoInputs: lambda_max must be >= 0");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("ThermoInputs: beta must be > 0");
}

Backend parse_backend(std::string_view name) {
    if (name == "sum") return Backend::sum;
    if (name == "integral") return Backend::integral;
    if (name == "closed") return Backend::closed;
    throw DomainError("unknown backend '" + std::string(name) + "' (expected sum, integral or closed)");
}

std::string_view to_string(Backend b) {
    switch (b) {
    case Backend::sum: return "sum";
    case Backend::integral: return "integral";
    case Backend::closed: return "closed";
    }
    return "?";
}

ClassicalCoefficients classical_coefficients(PotentialParams const& params, UnitSystem const& units, int l) {
    auto const c = model::coefficients(params, {0, l, 0}, units, -1.0);
    double const a = params.alpha;
    double const hb2 = units.hbar * units.hbar;
    ClassicalCoefficients h;
    h.H1 = hb2 * a * a / (8.0 * units.mu);
    h.H2 = h.H1 * c.P1 * c.P1;
    h.H3 = hb2 * a * a * c.P1 / (4.0 * units.mu) + c.P2;
    h.sigma = c.sigma;
    return h;
}

specfun::LogScaled closed_form_antiderivative(double a, double b, double rho) {
    if (!(a > 0.0) || !(b >= 0.0) || !(rho > 0.0)) {
        throw DomainError("closed_form_antiderivative: requires a > 0, b >= 0, rho > 0");
    }
    double const sa = std::sqrt(a);
    double const sb = std::sqrt(b);
    double const cross = 2.0 * sa * sb;
    auto const minus = specfun::erfi_log(sa * rho - sb / rho).scaled_by_exp(cross);
    auto const plus = specfun::erfi_log(sa * rho + sb / rho).scaled_by_exp(-cross);
    return specfun::add(minus, plus).scaled_by_exp(std::log(std::sqrt(std::numbers::pi) / (4.0 * sa)));
}

namespace {

LogPartition log_sum(ThermoInputs const& in) {
    std::vector<double> energies;
    LogPartition out;
    for (int n = 0; n <= in.lambda_max; ++n) {
        auto const d = model::bound_state_check(in.params, {n, in.l, 0}, in.units);
        if (!d.bound) {
            out.truncated = true;
            break;
        }
        energies.push_back(d.energy);
    }
    if (energies.empty()) throw NoBoundState("partition_sum: the n = 0 level is not bound");
    double const e_min = in.shift_energies ? *std::min_element(energies.begin(), energies.end()) : 0.0;
    double sum = 0.0;
    for (double e : energies) sum += std::exp(-in.beta * (e - e_min));
    out.reference_energy = e_min;
    out.log_rest = std::log(sum);
    out.levels = static_cast<int>(energies.size());
    return out;
}

LogPartition log_integral(ThermoInputs const& in, QuadraturePolicy const& policy) {
    auto const h = classical_coefficients(in.params, in.units, in.l);
    LogPartition out;
    out.reference_energy = h.H3;
    if (in.lambda_max == 0) {
        out.log_rest = -std::numeric_limits<double>::infinity();
        return out;
    }
    double const a = h.H1 * in.beta;
    double const b = h.H2 * in.beta;
    double const lo = h.sigma;
    double const hi = h.sigma + in.lambda_max;
    auto exponent = [a, b](double rho) { return a * rho * rho + b / (rho * rho); };
    // a rho^2 + b / rho^2 is convex, so its maximum on the interval sits at an end
    double const peak = std::max(exponent(lo), exponent(hi));
    double const integral =
        quadrature::integrate_finite([&](double rho) { return std::exp(exponent(rho) - peak); }, lo, hi, 8, policy);
    out.log_rest = peak + std::log(integral);
    return out;
}

LogPartition log_closed(ThermoInputs const& in) {
    auto const h = classical_coefficients(in.params, in.units, in.l);
    LogPartition out;
    out.reference_energy = h.H3;
    if (in.lambda_max == 0) {
        out.log_rest = -std::numeric_limits<double>::infinity();
        return out;
    }
    double const a = h.H1 * in.beta;
    double const b = h.H2 * in.beta;
    auto const upper = closed_form_antiderivative(a, b, h.sigma + in.lambda_max);
    auto const lower = closed_form_antiderivative(a, b, h.sigma);
    auto const diff = specfun::add(upper, -lower);
    if (diff.sign <= 0) {
        throw DomainError("partition_closed_form: antiderivative difference lost all significance");
    }
    out.log_rest = diff.log_magnitude;
    return out;
}

} // namespace

LogPartition log_partition(ThermoInputs const& inputs, Backend backend, QuadraturePolicy const& policy) {
    inputs.validate();
    switch (backend) {
    case Backend::sum: return log_sum(inputs);
    case Backend::integral: return log_integral(inputs, policy);
    case Backend::closed: return log_closed(inputs);
    }
    throw DomainError("log_partition: unknown backend");
}

double partition_sum(ThermoInputs const& inputs) {
    auto const lp = log_partition(inputs, Backend::sum);
    return std::exp(lp.ln_z(inputs.beta));
}

double partition_integral(ThermoInputs const& inputs, QuadraturePolicy const& policy) {
    auto const lp = log_partition(inputs, Backend::integral, policy);
    return std::exp(lp.ln_z(inputs.beta));
}

double partition_closed_form(ThermoInputs const& inputs) {
    auto const lp = log_partition(inputs, Backend::closed);
    return std::exp(lp.ln_z(inputs.beta));
}

namespace {

struct Derivatives {
    double first;
    double second;
};

// five-point central differences of f at x with one Richardson step (h and h/2)
template <class F>
Derivatives richardson_derivatives(F const& f, double x, double h) {
    if (!(x - 2.0 * h > 0.0)) throw StencilFailure("thermo: finite-difference stencil reaches beta <= 0");
    double const f0 = f(x);
    auto stencil = [&](double step) {
        double const m2 = f(x - 2.0 * step), m1 = f(x - step), p1 = f(x + step), p2 = f(x + 2.0 * step);
        double const d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * step);
        double const d2 = (-m2 + 16.0 * m1 - 30.0 * f0 + 16.0 * p1 - p2) / (12.0 * step * step);
        return Derivatives{d1, d2};
    };
    auto const coarse = stencil(h);
    auto const fine = stencil(0.5 * h);
    return {(16.0 * fine.first - coarse.first) / 15.0, (16.0 * fine.second - coarse.second) / 15.0};
}

} // namespace

ThermoPoint thermo_point(ThermoInputs const& inputs, Backend backend, QuadraturePolicy const& policy) {
    inputs.validate();
    auto const base = log_partition(inputs, backend, policy);
    if (!std::isfinite(base.log_rest)) {
        throw DomainError("thermo_point: Z = 0 (empty integration interval, lambda = 0)");
    }
    double const e_ref = base.reference_energy;
    // log_rest(beta) measured against the fixed reference energy of the centre point
    auto rest = [&](double beta) {
        ThermoInputs shifted = inputs;
        shifted.beta = beta;
        auto const lp = log_partition(shifted, backend, policy);
        return lp.ln_z(beta) + beta * e_ref;
    };
    auto const d = richardson_derivatives(rest, inputs.beta, 1e-3 * inputs.beta);
    double const kB = inputs.units.kB;

    ThermoPoint pt;
    pt.beta = inputs.beta;
    pt.ln_z = base.ln_z(inputs.beta);
    pt.Z = std::exp(pt.ln_z);
    pt.U = e_ref - d.first;
    pt.F = -pt.ln_z / inputs.beta;
    pt.S = kB * (pt.ln_z + inputs.beta * pt.U);
    pt.C = kB * inputs.beta * inputs.beta * d.second;
    if (base.truncated) pt.flags = "truncated";
    return pt;
}

double internal_energy(ThermoInputs const& inputs, Backend backend) { return thermo_point(inputs, backend).U; }
double free_energy(ThermoInputs const& inputs, Backend backend) { return thermo_point(inputs, backend).F; }
double entropy_thermo(ThermoInputs const& inputs, Backend backend) { return thermo_point(inputs, backend).S; }
double heat_capacity(ThermoInputs const& inputs, Backend backend) { return thermo_point(inputs, backend).C; }

ThermoSeries thermo_series(PotentialParams const& params, UnitSystem const& units, int l, int lambda_max,
                           std::vector<double> const& beta_grid, Backend backend, QuadraturePolicy const& policy) {
    for (std::size_t i = 0; i < beta_grid.size(); ++i) {
        if (!(beta_grid[i] > 0.0)) throw DomainError("thermo_series: beta grid must be strictly positive");
        if (i > 0 && !(beta_grid[i] > beta_grid[i - 1])) throw DomainError("thermo_series: beta grid must ascend");
    }
    ThermoSeries out;
    double const nan = std::numeric_limits<double>::quiet_NaN();
    for (double beta : beta_grid) {
        out.beta_grid.push_back(beta);
        try {
            auto const pt = thermo_point({params, units, l, lambda_max, beta, true}, backend, policy);
            out.Z.push_back(pt.Z);
            out.U.push_back(pt.U);
            out.F.push_back(pt.F);
            out.S.push_back(pt.S);
            out.C.push_back(pt.C);
            out.flags.push_back(pt.flags);
        } catch (std::exception const& e) {
            for (auto* v : {&out.Z, &out.U, &out.F, &out.S, &out.C}) v->push_back(nan);
            out.flags.push_back(std::string("error: ") + e.what());
        }
    }
    return out;
}

} // namespace skhp::thermo
