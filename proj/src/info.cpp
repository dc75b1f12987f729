#include "skhp/info.hpp"

#include "skhp/errors.hpp"

#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <utility>

namespace skhp::info {

void InfoOptions::validate() const {
    if (dimension != 1 && dimension != 3) throw DomainError("InfoOptions: dimension must be 1 or 3");
    if (!(density_floor > 0.0) || !(density_floor < 1e-20)) {
        throw DomainError("InfoOptions: density_floor must be in (0, 1e-20)");
    }
}

double bbm_bound(int dimension) { return dimension * (1.0 + std::log(std::numbers::pi)); }

namespace {

void require_info_state(BoundState const& s) {
    if (s.qn.l != 0 || s.qn.m != 0) throw UnsupportedL("information measures are implemented for l = m = 0");
    if (s.qn.n < 0 || s.qn.n > 1) throw DomainError("information measures support n in {0,1}");
}

// ln of the angular factor 4 pi x^2 that turns a reduced density into a 3D one
double log_shell(double x) { return std::log(4.0 * std::numbers::pi) + 2.0 * std::log(x); }

} // namespace

double shannon_position(BoundState const& state, InfoOptions const& options) {
    options.validate();
    require_info_state(state);
    bool const three_d = options.dimension == 3;
    double const floor = options.density_floor;
    return -quadrature::integrate_semi_infinite(
        [&](double r) {
            double const rho = wavefunction::reduced_density(state, r);
            if (rho < floor) return 0.0;
            double log_density = std::log(rho);
            if (three_d) log_density -= log_shell(r);
            return rho * log_density;
        },
        2.0 * state.decay_rate, state.policy);
}

double shannon_momentum(BoundState const& state, MomentumProfile const& profile, InfoOptions const& options) {
    options.validate();
    require_info_state(state);
    bool const three_d = options.dimension == 3;
    double const floor = options.density_floor;
    double const body = profile.integrate([&](double p, double w) {
        double const g = w * w;
        if (g < floor) return 0.0;
        double log_density = std::log(g);
        if (three_d) log_density -= log_shell(p);
        return g * log_density;
    });

    // power-law tail w^2 ~ g_end (p / P)^-s beyond P = p_max
    double const P = profile.p_max();
    double const g_end = std::pow(profile.w(P), 2);
    double const g_half = std::pow(profile.w(0.5 * P), 2);
    double tail = 0.0;
    if (g_end > floor && g_half > floor) {
        double const s = std::log2(g_half / g_end);
        if (s > 1.0) {
            double const L = std::log(g_end) - (three_d ? log_shell(P) : 0.0);
            double const c = three_d ? s + 2.0 : s;
            tail = P * g_end * (L / (s - 1.0) - c / ((s - 1.0) * (s - 1.0)));
        }
    }
    return -(body + tail);
}

double shannon_momentum(BoundState const& state, InfoOptions const& options) {
    require_info_state(state);
    return shannon_momentum(state, MomentumProfile(state), options);
}

double fisher_position(BoundState const& state) {
    double const base = 4.0 * wavefunction::expectation_p2(state);
    int const m = std::abs(state.qn.m);
    if (m == 0) return base;
    return base - 2.0 * (2.0 * state.qn.l + 1.0) * m * wavefunction::expectation_r_power(state, -2);
}

double fisher_momentum(BoundState const& state) {
    double const base = 4.0 * wavefunction::expectation_r_power(state, 2);
    int const m = std::abs(state.qn.m);
    if (m == 0) return base;
    MomentumProfile const profile(state); // throws UnsupportedL for l != 0
    return base - 2.0 * (2.0 * state.qn.l + 1.0) * m * wavefunction::expectation_p_neg2(state, profile);
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::invalid_input: return "invalid_input";
    }
    return "?";
}

namespace {

bool normalized(InfoRecord const& r) {
    return std::abs(r.norm_r - 1.0) <= 1e-6 && std::abs(r.norm_p - 1.0) <= 1e-6;
}

} // namespace

Verdict bbm_verdict(InfoRecord const& r) {
    if (!r.bound || !std::isfinite(r.S_r) || !std::isfinite(r.S_p) || !normalized(r)) return Verdict::invalid_input;
    return r.S_t >= bbm_bound(r.dimension) - 1e-9 ? Verdict::satisfied : Verdict::violated;
}

Verdict fisher_verdict(InfoRecord const& r) {
    if (!r.bound || !std::isfinite(r.I_r) || !std::isfinite(r.I_p) || !normalized(r)) return Verdict::invalid_input;
    return r.product > 36.0 ? Verdict::satisfied : Verdict::violated;
}

bool bbm_check(InfoRecord const& record) { return bbm_verdict(record) == Verdict::satisfied; }
bool fisher_product_check(InfoRecord const& record) { return fisher_verdict(record) == Verdict::satisfied; }

InfoRecord info_record(BoundState const& state, InfoOptions const& options) {
    require_info_state(state);
    return info_record(state, MomentumProfile(state), options);
}

InfoRecord info_record(BoundState const& state, MomentumProfile const& profile, InfoOptions const& options) {
    options.validate();
    require_info_state(state);
    InfoRecord r;
    r.alpha = state.params.alpha;
    r.n = state.qn.n;
    r.dimension = options.dimension;
    r.energy = state.energy;
    r.bound = true;
    r.S_r = shannon_position(state, options);
    r.S_p = shannon_momentum(state, profile, options);
    r.S_t = r.S_r + r.S_p;
    r.I_r = fisher_position(state);
    r.I_p = fisher_momentum(state);
    r.product = r.I_r * r.I_p;
    r.norm_r = wavefunction::norm_position(state);
    r.norm_p = profile.moment(0);
    r.bbm_ok = bbm_check(r);
    r.fisher_ok = fisher_product_check(r);
    return r;
}

namespace {

InfoRecord missing_record(double alpha, int n, int dimension, std::string flag) {
    double const nan = std::numeric_limits<double>::quiet_NaN();
    InfoRecord r;
    r.alpha = alpha;
    r.n = n;
    r.dimension = dimension;
    r.energy = r.S_r = r.S_p = r.S_t = r.I_r = r.I_p = r.product = r.norm_r = r.norm_p = nan;
    r.flag = std::move(flag);
    return r;
}

void check_n_list(std::vector<int> const& n_list) {
    for (int n : n_list) {
        if (n < 0 || n > 1) throw DomainError("information measures support n in {0,1}");
    }
}

// Runs fn(n, alpha) for every grid point, n-major, in parallel.
template <class Fn>
auto over_grid(std::vector<int> const& n_list, std::vector<double> const& alpha_grid, Fn fn) {
    using Result = decltype(fn(0, 0.0));
    std::vector<std::future<Result>> jobs;
    for (int n : n_list) {
        for (double alpha : alpha_grid) jobs.push_back(std::async(std::launch::async, fn, n, alpha));
    }
    std::vector<Result> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

} // namespace

std::vector<InfoRecord> info_sweep(PotentialParams const& params, UnitSystem const& units,
                                   std::vector<int> const& n_list, std::vector<double> const& alpha_grid,
                                   InfoOptions const& options, quadrature::QuadraturePolicy const& policy) {
    options.validate();
    check_n_list(n_list);
    return over_grid(n_list, alpha_grid, [&](int n, double alpha) {
        PotentialParams p = params;
        p.alpha = alpha;
        try {
            auto const state = wavefunction::build_bound_state(p, {n, 0, 0}, units, policy);
            return info_record(state, options);
        } catch (NoBoundState const& e) {
            return missing_record(alpha, n, options.dimension, std::string("unbound: ") + e.what());
        } catch (std::exception const& e) {
            return missing_record(alpha, n, options.dimension, std::string("error: ") + e.what());
        }
    });
}

InfoRecord rescale_density(InfoRecord const& record, double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("rescale_density: s must be positive and finite");
    InfoRecord r = record;
    double const shift = s * std::log(s);
    r.S_r = s * record.S_r - shift;
    r.S_p = s * record.S_p - shift;
    r.S_t = r.S_r + r.S_p;
    r.I_r = s * record.I_r;
    r.I_p = s * record.I_p;
    r.product = r.I_r * r.I_p;
    r.norm_r = s * record.norm_r;
    r.norm_p = s * record.norm_p;
    r.bbm_ok = bbm_check(r);
    r.fisher_ok = fisher_product_check(r);
    return r;
}

std::string Convention::label() const {
    return "D" + std::to_string(dimension) + "/" + (closed_form_norm ? "closed" : "numeric") + "/" + preset + "/" +
           (attractive ? "attractive" : "as-given");
}

std::vector<Convention> candidate_conventions() {
    std::vector<Convention> out;
    for (int d : {3, 1}) {
        for (bool closed : {false, true}) {
            for (char const* preset : {"atomic", "table12"}) {
                for (bool attractive : {false, true}) out.push_back({d, closed, preset, attractive});
            }
        }
    }
    return out;
}

std::vector<ConventionSweep> candidate_sweeps(PotentialParams const& params, std::vector<int> const& n_list,
                                              std::vector<double> const& alpha_grid,
                                              quadrature::QuadraturePolicy const& policy) {
    check_n_list(n_list);
    auto const conventions = candidate_conventions();
    std::vector<ConventionSweep> out;
    for (auto const& c : conventions) out.push_back({c, {}});

    for (char const* preset : {"atomic", "table12"}) {
        for (bool attractive : {false, true}) {
            PotentialParams p = params;
            if (attractive) {
                p.V0 = -p.V0;
                p.V1 = -p.V1;
            }
            UnitSystem const units = UnitSystem::preset(preset);
            // per grid point: the four records (D3, D1) x (numeric, closed)
            auto const points = over_grid(n_list, alpha_grid, [&](int n, double alpha) {
                std::array<InfoRecord, 4> recs;
                PotentialParams q = p;
                q.alpha = alpha;
                try {
                    auto const state = wavefunction::build_bound_state(q, {n, 0, 0}, units, policy);
                    MomentumProfile const profile(state);
                    double const log_closed =
                        wavefunction::log_norm_closed_form(n, alpha, state.eta, state.bigG);
                    double const s = std::exp(2.0 * (log_closed - state.log_norm));
                    for (int k = 0; k < 2; ++k) {
                        InfoOptions options;
                        options.dimension = k == 0 ? 3 : 1;
                        recs[2 * k] = info_record(state, profile, options);
                        if (std::isfinite(s) && s > 0.0) {
                            recs[2 * k + 1] = rescale_density(recs[2 * k], s);
                        } else {
                            recs[2 * k + 1] = missing_record(alpha, n, options.dimension,
                                                             "error: closed-form normalization overflows");
                        }
                    }
                } catch (std::exception const& e) {
                    bool const unbound = dynamic_cast<NoBoundState const*>(&e) != nullptr;
                    std::string const flag = std::string(unbound ? "unbound: " : "error: ") + e.what();
                    for (int k = 0; k < 4; ++k) recs[k] = missing_record(alpha, n, k < 2 ? 3 : 1, flag);
                }
                return recs;
            });
            for (std::size_t i = 0; i < conventions.size(); ++i) {
                auto const& c = conventions[i];
                if (c.preset != preset || c.attractive != attractive) continue;
                int const slot = (c.dimension == 3 ? 0 : 2) + (c.closed_form_norm ? 1 : 0);
                for (auto const& recs : points) out[i].records.push_back(recs[slot]);
            }
        }
    }
    return out;
}

} // namespace skhp::info
