#include "skhp/model.hpp"

#include "skhp/errors.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace skhp::model {

void UnitSystem::validate() const {
    if (!(mu > 0.0) || !(hbar > 0.0) || !(kB > 0.0)) {
        throw DomainError("UnitSystem: mu, hbar and kB must be strictly positive");
    }
}

UnitSystem UnitSystem::preset(std::string_view name) {
    if (name == "table12") return table12();
    if (name == "atomic") return atomic();
    throw DomainError("unknown unit preset '" + std::string(name) + "' (expected table12 or atomic)");
}

void PotentialParams::validate() const {
    if (!std::isfinite(V0) || !std::isfinite(V1) || !std::isfinite(V2)) {
        throw DomainError("PotentialParams: V0, V1, V2 must be finite");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("PotentialParams: alpha must be > 0");
}

void QuantumNumbers::validate() const {
    if (n < 0) throw DomainError("QuantumNumbers: n must be >= 0");
    if (l < 0) throw DomainError("QuantumNumbers: l must be >= 0");
    if (std::abs(m) > l) throw DomainError("QuantumNumbers: |m| must not exceed l");
}

namespace {
constexpr std::string_view kLetters = "spdf";
}

std::string QuantumNumbers::label() const {
    std::string out = std::to_string(n + l + 1);
    if (l < static_cast<int>(kLetters.size())) {
        out += kLetters[static_cast<std::size_t>(l)];
    } else {
        out += "(l=" + std::to_string(l) + ")";
    }
    return out;
}

QuantumNumbers spectroscopic_to_qn(std::string_view label) {
    auto fail = [&label](std::string const& why) {
        return DomainError("invalid state label '" + std::string(label) + "': " + why);
    };
    if (label.size() < 2) throw fail("expected <N><letter>, e.g. 2p");
    std::size_t digits = 0;
    while (digits < label.size() && std::isdigit(static_cast<unsigned char>(label[digits]))) ++digits;
    if (digits == 0) throw fail("missing principal number");
    if (digits + 1 != label.size()) throw fail("expected a single letter from s, p, d, f after the number");
    int const N = std::stoi(std::string(label.substr(0, digits)));
    auto const pos = kLetters.find(static_cast<char>(std::tolower(static_cast<unsigned char>(label[digits]))));
    if (pos == std::string_view::npos) throw fail("orbital letter must be one of s, p, d, f");
    int const l = static_cast<int>(pos);
    if (N < 1) throw fail("principal number must be >= 1");
    if (l >= N) throw fail("orbital l must be smaller than N");
    return {N - l - 1, l, 0};
}

double potential_value(PotentialParams const& params, double r) {
    if (!(r > 0.0)) throw DomainError("potential_value: r must be > 0");
    double const screen = std::exp(-params.alpha * r);
    // the V1 exponentials cancel, leaving an unscreened V1/r
    return (params.V0 / r + params.V2 / (r * r)) * screen + params.V1 / r;
}

CoefficientSet coefficients(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units,
                            double E) {
    double const k = units.kappa();
    double const a = params.alpha;
    double const ll = qn.l * (qn.l + 1.0);
    CoefficientSet c;
    c.eps2 = -k * E / (a * a);
    c.A = -k * params.V0 / a;
    c.B = k * params.V1 / a - k * params.V2 - k * params.V0 / a;
    c.C = -(k * params.V1 / a + ll);
    c.G = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * (c.A - c.B - c.C)));
    c.P1 = -(k / a * (params.V0 + params.V1) + ll);
    c.P2 = a * params.V1 + a * a * ll / k;
    c.sigma = 0.5 * (1.0 + std::sqrt((1.0 + 2.0 * qn.l) * (1.0 + 2.0 * qn.l) + 4.0 * k * params.V2));
    c.eps2_negative = !(c.eps2 > 0.0);
    return c;
}

namespace {

// n + 1/2 + sqrt(2 mu V2 / hbar^2 + l(l+1) + 1/4); throws when the root is not real
double shifted_index(int n, double kappa_v2, double ll) {
    double const radicand = kappa_v2 + ll + 0.25;
    if (radicand < 0.0) throw NoBoundState("no real sigma: 2 mu V2 / hbar^2 + (l + 1/2)^2 < 0");
    return n + 0.5 + std::sqrt(radicand);
}

void require_nonzero_eta(double numerator) {
    if (numerator == 0.0) throw NoBoundState("eta = 0: the state does not decay");
}

} // namespace

double energy(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units) {
    params.validate();
    qn.validate();
    units.validate();
    double const hb2 = units.hbar * units.hbar;
    double const mu2 = 2.0 * units.mu;
    double const a = params.alpha;
    double const ll = qn.l * (qn.l + 1.0);
    double const rho = shifted_index(qn.n, mu2 * params.V2 / hb2, ll);
    double const numerator = -(mu2 * params.V0 / (hb2 * a) + mu2 * params.V1 / (hb2 * a) + ll) - rho * rho;
    require_nonzero_eta(numerator);
    double const bracket = numerator / (2.0 * rho);
    return a * params.V1 + hb2 * a * a * ll / mu2 - hb2 * a * a / mu2 * bracket * bracket;
}

double energy_screened_kratzer(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units) {
    if (params.V1 != 0.0) throw DomainError("energy_screened_kratzer: requires V1 = 0");
    params.validate();
    qn.validate();
    units.validate();
    double const hb2 = units.hbar * units.hbar;
    double const mu2 = 2.0 * units.mu;
    double const a = params.alpha;
    double const ll = qn.l * (qn.l + 1.0);
    double const rho = shifted_index(qn.n, mu2 * params.V2 / hb2, ll);
    double const numerator = -(mu2 * params.V0 / (hb2 * a) + ll) - rho * rho;
    require_nonzero_eta(numerator);
    double const bracket = numerator / (2.0 * rho);
    return hb2 * a * a * ll / mu2 - hb2 * a * a / mu2 * bracket * bracket;
}

double energy_hellmann(PotentialParams const& params, QuantumNumbers const& qn, UnitSystem const& units) {
    if (params.V2 != 0.0) throw DomainError("energy_hellmann: requires V2 = 0");
    params.validate();
    qn.validate();
    units.validate();
    double const hb2 = units.hbar * units.hbar;
    double const mu2 = 2.0 * units.mu;
    double const a = params.alpha;
    double const ll = qn.l * (qn.l + 1.0);
    double const rho = qn.n + 0.5 + std::sqrt(ll + 0.25);
    double const numerator = -(mu2 * params.V0 / (hb2 * a) + mu2 * params.V1 / (hb2 * a) + ll) - rho * rho;
    require_nonzero_eta(numerator);
    double const bracket = numerator / (2.0 * rho);
    return a * params.V1 + hb2 * a * a * ll / mu2 - hb2 * a * a / mu2 * bracket * bracket;
}

BoundStateDiagnostic bound_state_check(PotentialParams const& params, QuantumNumbers const& qn,
                                       UnitSystem const& units) {
    params.validate();
    qn.validate();
    units.validate();
    BoundStateDiagnostic d;
    auto const probe = coefficients(params, qn, units, -1.0);
    d.G = probe.G;
    if (!std::isfinite(probe.sigma)) {
        d.reason = "no real sigma";
        d.energy = std::nan("");
        return d;
    }
    double const rho = qn.n + probe.sigma;
    d.nu_root = (probe.P1 - rho * rho) / (2.0 * rho);
    try {
        d.energy = energy(params, qn, units);
    } catch (NoBoundState const& e) {
        d.energy = probe.P2; // the bracket vanishes, leaving the threshold
        d.reason = e.what();
        return d;
    }
    auto const c = coefficients(params, qn, units, d.energy);
    d.eps2 = c.eps2;
    double const diff = c.eps2 - c.C;
    d.eta = diff > 0.0 ? std::sqrt(diff) : 0.0;
    if (!(d.energy < 0.0)) {
        d.reason = "E >= 0";
    } else if (!(d.eta > 0.0)) {
        d.reason = "eta <= 0";
    } else if (!(d.G > 0.5)) {
        d.reason = "G <= 1/2";
    } else {
        d.bound = true;
    }
    return d;
}

} // namespace skhp::model
