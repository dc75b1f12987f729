#include "skhp/cli/commands.hpp"

#include "skhp/cli/paper_tables.hpp"
#include "skhp/cli/svg.hpp"
#include "skhp/cli/table.hpp"
#include "skhp/errors.hpp"
#include "skhp/info.hpp"
#include "skhp/model.hpp"
#include "skhp/thermo.hpp"
#include "skhp/wavefunction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

namespace skhp::cli {

namespace {

using model::PotentialParams;
using model::QuantumNumbers;
using model::UnitSystem;
using quadrature::QuadraturePolicy;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string preset;
    std::string format = "csv";
    std::string out;
    std::string config;
    double quad_tol = 0.0; // 0: library default
    bool seedless = false;
};

struct Potential {
    double V0 = 3.0;
    double V1 = 5.0;
    double V2 = 10.0;

    void add_to(CLI::App* app) {
        app->add_option("--V0", V0, "Coulomb-like strength V0")->capture_default_str();
        app->add_option("--V1", V1, "Hellmann (unscreened) strength V1")->capture_default_str();
        app->add_option("--V2", V2, "inverse-square strength V2")->capture_default_str();
    }
    PotentialParams at(double alpha) const { return {V0, V1, V2, alpha}; }
};

// Runs a validation step, turning domain errors into configuration errors.
template <class F>
auto checked(F&& f) {
    try {
        return f();
    } catch (DomainError const& e) {
        throw ConfigError(e.what());
    } catch (std::invalid_argument const& e) {
        throw ConfigError(e.what());
    }
}

UnitSystem units_for(Common const& c, char const* fallback) {
    return checked([&] { return UnitSystem::preset(c.preset.empty() ? fallback : c.preset); });
}

QuadraturePolicy policy_for(Common const& c) {
    QuadraturePolicy p;
    if (c.quad_tol != 0.0) p.rel_tol = c.quad_tol;
    checked([&] {
        p.validate();
        return 0;
    });
    return p;
}

void emit(Common const& c, Table const& table, std::ostream& out) {
    auto write = [&](std::ostream& os) {
        if (c.format == "json") {
            write_json(os, table);
        } else {
            write_csv(os, table);
        }
    };
    if (c.out.empty()) {
        write(out);
        return;
    }
    std::ofstream file(c.out);
    if (!file) throw ConfigError("cannot open output file " + c.out);
    write(file);
}

void write_file(std::filesystem::path const& path, std::string const& content) {
    std::ofstream file(path);
    if (!file) throw ConfigError("cannot write " + path.string());
    file << content;
}

std::vector<double> default_alpha_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 9; ++i) g.push_back(i / 10.0);
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2) {
        throw ConfigError("beta range needs 0 < beta-min < beta-max and at least 2 points");
    }
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
    return g;
}

// ---------------------------------------------------------------- config file

std::string json_scalar(nlohmann::json const& v, std::string const& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return format_double(v.get<double>());
    throw ConfigError("config key '" + key + "' must hold a string, number, boolean or array of those");
}

// Values from the config file fill every option not given on the command line.
void apply_config(std::string const& path, CLI::App& app, CLI::App& sub) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (nlohmann::json::exception const& e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config file must contain a JSON object");
    for (auto const& [key, value] : doc.items()) {
        if (key == "config") throw ConfigError("config key 'config' is not allowed inside a config file");
        CLI::Option* opt = sub.get_option_no_throw("--" + key);
        if (!opt) opt = app.get_option_no_throw("--" + key);
        if (!opt) throw ConfigError("unknown config key '" + key + "' for command " + sub.get_name());
        if (opt->count() > 0) continue; // the command line wins
        std::vector<std::string> results;
        if (value.is_array()) {
            for (auto const& v : value) results.push_back(json_scalar(v, key));
        } else {
            results.push_back(json_scalar(value, key));
        }
        if (opt->get_expected_max() == 0) { // flag
            if (results.size() != 1 || (results[0] != "true" && results[0] != "false")) {
                throw ConfigError("config key '" + key + "' must be a boolean");
            }
            if (results[0] == "false") continue;
        }
        for (auto const& r : results) opt->add_result(r);
        try {
            opt->run_callback();
        } catch (CLI::Error const& e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    Potential V;
    std::vector<double> alphas{0.001};
    std::vector<std::string> states{"1s"};
    bool allow_unbound = false;
};

int cmd_spectrum(Common const& c, SpectrumArgs const& a, std::ostream& out, std::ostream& err) {
    UnitSystem const units = units_for(c, "table12");
    std::vector<QuantumNumbers> qns;
    for (auto const& s : a.states) qns.push_back(checked([&] { return model::spectroscopic_to_qn(s); }));
    for (double alpha : a.alphas) checked([&] {
            a.V.at(alpha).validate();
            return 0;
        });

    Table t;
    t.header = {"state", "n", "l", "alpha", "V0", "V1", "V2", "energy", "bound", "reason"};
    for (std::size_t i = 0; i < qns.size(); ++i) {
        for (double alpha : a.alphas) {
            auto const p = a.V.at(alpha);
            auto const d = model::bound_state_check(p, qns[i], units);
            if (!d.bound && !a.allow_unbound) {
                err << "error: state " << a.states[i] << " at alpha = " << format_double(alpha)
                    << " is not bound (" << d.reason << "); pass --allow-unbound to list it anyway\n";
                return exit_unbound;
            }
            t.add({a.states[i], static_cast<long long>(qns[i].n), static_cast<long long>(qns[i].l), alpha, p.V0,
                   p.V1, p.V2, d.energy, d.bound, d.reason});
        }
    }
    emit(c, t, out);
    return exit_ok;
}

// ---------------------------------------------------------------- wavefunction

struct WavefunctionArgs {
    Potential V;
    double alpha = 0.1;
    int n = 0;
    int l = 0;
    std::string state;
    int points = 2001;
};

void add_position_rows(Table& t, wavefunction::BoundState const& s, std::size_t points) {
    for (double r : wavefunction::position_grid(s, points)) {
        double const u = wavefunction::u_of_r(s, r);
        double const density = r > 0.0 ? u * u / (4.0 * std::numbers::pi * r * r) : std::nan("");
        t.add({std::string("r"), r, u, u * u, density});
    }
}

void add_momentum_rows(Table& t, wavefunction::MomentumProfile const& profile, std::size_t points) {
    for (double p : wavefunction::momentum_grid(profile, points)) {
        double const w = profile.w(p);
        double const density = p > 0.0 ? w * w / (4.0 * std::numbers::pi * p * p) : std::nan("");
        t.add({std::string("p"), p, w, w * w, density});
    }
}

int cmd_wavefunction(Common const& c, WavefunctionArgs const& a, std::ostream& out, std::ostream& err) {
    UnitSystem const units = units_for(c, "atomic");
    QuadraturePolicy const policy = policy_for(c);
    QuantumNumbers qn{a.n, a.l, 0};
    if (!a.state.empty()) qn = checked([&] { return model::spectroscopic_to_qn(a.state); });
    checked([&] {
        qn.validate();
        a.V.at(a.alpha).validate();
        return 0;
    });
    if (a.points < 2) throw ConfigError("--points must be at least 2");

    auto const state = wavefunction::build_bound_state(a.V.at(a.alpha), qn, units, policy);
    Table t;
    t.header = {"space", "x", "amplitude", "radial_density", "density"};
    add_position_rows(t, state, static_cast<std::size_t>(a.points));
    if (qn.l == 0) {
        add_momentum_rows(t, wavefunction::MomentumProfile(state), static_cast<std::size_t>(a.points));
    } else {
        err << "note: momentum-space rows are only produced for l = 0\n";
    }
    emit(c, t, out);
    return exit_ok;
}

// ---------------------------------------------------------------- thermo

struct ThermoArgs {
    Potential V;
    double alpha = 0.05;
    int l = 0;
    std::vector<int> lambdas{5, 10, 15};
    std::vector<double> betas;
    double beta_min = 0.1;
    double beta_max = 5.0;
    int beta_points = 50;
    std::string backend = "closed";
    std::string svg_dir;
};

struct ThermoRun {
    std::vector<int> lambdas;
    std::vector<thermo::ThermoSeries> series;
};

ThermoRun compute_thermo(Common const& c, ThermoArgs const& a) {
    UnitSystem const units = units_for(c, "table12");
    QuadraturePolicy const policy = policy_for(c);
    auto const backend = checked([&] { return thermo::parse_backend(a.backend); });
    auto const betas = a.betas.empty() ? linear_grid(a.beta_min, a.beta_max, a.beta_points) : a.betas;
    for (int lam : a.lambdas) {
        checked([&] {
            thermo::ThermoInputs{a.V.at(a.alpha), units, a.l, lam, betas.front()}.validate();
            return 0;
        });
    }
    ThermoRun run;
    run.lambdas = a.lambdas;
    for (int lam : a.lambdas) {
        run.series.push_back(
            checked([&] { return thermo::thermo_series(a.V.at(a.alpha), units, a.l, lam, betas, backend, policy); }));
    }
    return run;
}

struct Quantity {
    char const* column;
    char const* title;
    std::vector<double> thermo::ThermoSeries::*field;
};

constexpr std::array<Quantity, 5> kThermoQuantities = {{
    {"Z", "Partition function", &thermo::ThermoSeries::Z},
    {"F", "Free energy", &thermo::ThermoSeries::F},
    {"U", "Mean energy", &thermo::ThermoSeries::U},
    {"S", "Entropy", &thermo::ThermoSeries::S},
    {"C", "Specific heat capacity", &thermo::ThermoSeries::C},
}};

Chart thermo_chart(ThermoRun const& run, Quantity const& q) {
    Chart chart{std::string(q.title) + " versus beta", "beta", q.column, {}};
    for (std::size_t k = 0; k < run.lambdas.size(); ++k) {
        auto const& s = run.series[k];
        chart.series.push_back({"lambda = " + std::to_string(run.lambdas[k]), s.beta_grid, s.*q.field});
    }
    return chart;
}

int cmd_thermo(Common const& c, ThermoArgs const& a, std::ostream& out, std::ostream& err) {
    auto const run = compute_thermo(c, a);
    Table t;
    t.header = {"lambda", "beta", "Z", "U", "F", "S", "C", "flags"};
    int flagged = 0;
    for (std::size_t k = 0; k < run.lambdas.size(); ++k) {
        auto const& s = run.series[k];
        for (std::size_t i = 0; i < s.beta_grid.size(); ++i) {
            if (!s.flags[i].empty()) ++flagged;
            t.add({static_cast<long long>(run.lambdas[k]), s.beta_grid[i], s.Z[i], s.U[i], s.F[i], s.S[i], s.C[i],
                   s.flags[i]});
        }
    }
    emit(c, t, out);
    if (flagged) err << "note: " << flagged << " points carry flags (see the flags column)\n";
    if (!a.svg_dir.empty()) {
        std::filesystem::create_directories(a.svg_dir);
        for (auto const& q : kThermoQuantities) {
            write_file(std::filesystem::path(a.svg_dir) / (std::string("thermo_") + q.column + ".svg"),
                       render_svg(thermo_chart(run, q)));
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------- info

struct InfoArgs {
    Potential V;
    std::vector<double> alphas = default_alpha_grid();
    std::vector<int> ns{0, 1};
    int dimension = 3;
};

void check_info_ns(std::vector<int> const& ns) {
    for (int n : ns) {
        if (n < 0 || n > 1) throw ConfigError("information measures support n in {0,1} (got n = " + std::to_string(n) + ")");
    }
}

Table info_table(std::vector<info::InfoRecord> const& records) {
    Table t;
    t.header = {"alpha", "n", "energy", "S_r", "S_p", "S_t", "I_r", "I_p", "product",
                "norm_r", "norm_p", "bound", "bbm_ok", "fisher_ok", "flag"};
    for (auto const& r : records) {
        t.add({r.alpha, static_cast<long long>(r.n), r.energy, r.S_r, r.S_p, r.S_t, r.I_r, r.I_p, r.product,
               r.norm_r, r.norm_p, r.bound, r.bbm_ok, r.fisher_ok, r.flag});
    }
    return t;
}

int cmd_info(Common const& c, InfoArgs const& a, std::ostream& out, std::ostream& err) {
    UnitSystem const units = units_for(c, "atomic");
    QuadraturePolicy const policy = policy_for(c);
    check_info_ns(a.ns);
    info::InfoOptions options;
    options.dimension = a.dimension;
    checked([&] {
        options.validate();
        for (double alpha : a.alphas) a.V.at(alpha).validate();
        return 0;
    });
    auto const records = info::info_sweep(a.V.at(1.0), units, a.ns, a.alphas, options, policy);
    emit(c, info_table(records), out);
    int unbound = 0;
    for (auto const& r : records) unbound += r.bound ? 0 : 1;
    if (unbound) err << "note: " << unbound << " grid points have no bound state (flag column)\n";
    return exit_ok;
}

// ---------------------------------------------------------------- reproduce

struct ReproduceArgs {
    std::string which;
    Potential V;
};

int reproduce_energies(Common const& c, std::string const& which, std::ostream& out, std::ostream& err) {
    UnitSystem const units = units_for(c, "table12");
    auto const rows = which == "table1" ? load_table1() : load_table2();
    constexpr double kTolerance = 1e-6;
    Table t;
    t.header = {"state", "alpha", "V0", "V1", "V2", "paper", "computed", "abs_dev", "bound"};
    double worst = 0.0;
    int unbound = 0;
    for (auto const& r : rows) {
        auto const d = model::bound_state_check(r.params, r.qn, units);
        double const dev = std::abs(d.energy - r.energy);
        worst = std::isfinite(dev) ? std::max(worst, dev) : INFINITY;
        if (!d.bound) ++unbound;
        t.add({r.state, r.params.alpha, r.params.V0, r.params.V1, r.params.V2, r.energy, d.energy, dev, d.bound});
    }
    emit(c, t, out);
    err << which << ": " << rows.size() << " entries, max |dE| = " << format_double(worst) << " (tolerance " << kTolerance << "), "
        << unbound << " flagged unbound\n";
    if (!(worst <= kTolerance)) {
        err << which << ": FAILED tolerance\n";
        return exit_regression;
    }
    return exit_ok;
}

int reproduce_info(Common const& c, std::string const& which, ReproduceArgs const& a, std::ostream& out,
                   std::ostream& err) {
    QuadraturePolicy const policy = policy_for(c);
    auto const table3 = load_table3();
    auto const table4 = load_table4();
    auto const& published = which == "table3" ? table3 : table4;
    int const id = which == "table3" ? 3 : 4;
    std::array<char const*, 3> const names =
        id == 3 ? std::array<char const*, 3>{"S_r", "S_p", "S_t"} : std::array<char const*, 3>{"I_r", "I_p", "I_rI_p"};

    std::vector<double> alphas;
    for (auto const& r : published) alphas.push_back(r.alpha);
    auto const sweeps = info::candidate_sweeps(a.V.at(1.0), {0, 1}, alphas, policy);

    Table t;
    t.header = {"convention", "alpha", "n", "quantity", "paper", "computed", "abs_dev", "rel_dev", "flag"};
    std::vector<ConventionScore> scores;
    for (auto const& sweep : sweeps) {
        scores.push_back(score_convention(sweep, table3, table4));
        for (auto const& rec : sweep.records) {
            auto const row = std::find_if(published.begin(), published.end(),
                                          [&](InfoRow const& p) { return std::abs(p.alpha - rec.alpha) < 1e-9; });
            auto const& paper = rec.n == 0 ? row->n0 : row->n1;
            auto const computed = info_quantities(rec, id);
            for (int k = 0; k < 3; ++k) {
                double const d = computed[k] - paper[k];
                t.add({sweep.convention.label(), rec.alpha, static_cast<long long>(rec.n), std::string(names[k]),
                       paper[k], computed[k], std::abs(d), std::abs(d / paper[k]), rec.flag});
            }
        }
    }
    emit(c, t, out);

    err << which << ": deviation from the published values per convention\n";
    for (auto const& s : scores) {
        double const rms = id == 3 ? s.rms_table3 : s.rms_table4;
        double const rel = id == 3 ? s.rel_rms_table3 : s.rel_rms_table4;
        err << "  " << s.convention.label() << ": rms " << format_double(rms) << ", relative rms "
            << format_double(rel) << ", " << s.compared << " bound, " << s.missing << " missing\n";
    }
    std::size_t const best = select_best(scores);
    err << "  selected convention (lowest combined relative rms): " << scores[best].convention.label() << '\n';

    auto inequality_summary = [&](info::ConventionSweep const& sweep) {
        int bound = 0, ok = 0;
        for (auto const& r : sweep.records) {
            if (!r.bound) continue;
            ++bound;
            ok += (id == 3 ? r.bbm_ok : r.fisher_ok) ? 1 : 0;
        }
        err << "  " << sweep.convention.label() << ": " << (id == 3 ? "entropic (BBM) bound" : "I_r I_p > 36")
            << " holds at " << ok << " of " << bound << " bound points\n";
    };
    inequality_summary(sweeps.front()); // the stated setup: D = 3, numeric norm, mu = hbar = 1
    if (best != 0) inequality_summary(sweeps[best]);
    for (auto const& tr : trend_checks(sweeps[best].records)) {
        err << "  trend " << (tr.required ? "" : "(supplementary) ") << (tr.passed ? "PASS" : "FAIL") << ": "
            << tr.name << " [" << tr.detail << "]\n";
    }
    return exit_ok;
}

int cmd_reproduce(Common const& c, ReproduceArgs const& a, std::ostream& out, std::ostream& err) {
    if (a.which == "table1" || a.which == "table2") return reproduce_energies(c, a.which, out, err);
    return reproduce_info(c, a.which, a, out, err);
}

// ---------------------------------------------------------------- figure

struct FigureArgs {
    ThermoArgs thermo;
    Potential V;
    std::vector<double> alphas = default_alpha_grid();
    std::vector<double> density_alphas{0.1, 0.5, 0.9};
    int points = 2001;
    std::string dir = "figures";
};

struct LongTable {
    Table table;
    Chart chart;

    LongTable(std::string title, std::string x_label, std::string y_label)
        : chart{std::move(title), std::move(x_label), std::move(y_label), {}} {
        table.header = {"curve", "x", "y"};
    }
    void add_curve(std::string const& label, std::vector<double> const& x, std::vector<double> const& y) {
        for (std::size_t i = 0; i < x.size(); ++i) table.add({label, x[i], y[i]});
        chart.series.push_back({label, x, y});
    }
    void save(std::filesystem::path const& dir, std::string const& stem, std::ostream& out) const {
        std::ostringstream csv;
        write_csv(csv, table);
        write_file(dir / (stem + ".csv"), csv.str());
        write_file(dir / (stem + ".svg"), render_svg(chart));
        out << (dir / (stem + ".csv")).string() << '\n' << (dir / (stem + ".svg")).string() << '\n';
    }
};

std::string curve_label(int n, double alpha) {
    std::ostringstream s;
    s << "n=" << n << ", alpha=" << alpha;
    return s.str();
}

int cmd_figure(Common const& c, FigureArgs const& a, std::ostream& out, std::ostream&) {
    std::filesystem::path const dir = c.out.empty() ? a.dir : c.out;
    std::filesystem::create_directories(dir);
    if (a.points < 2) throw ConfigError("--points must be at least 2");

    // Figs. 1-5: thermodynamic functions (table12 units unless --preset is given)
    auto const run = compute_thermo(c, a.thermo);
    char const* stems[] = {"fig01_partition_function", "fig02_free_energy", "fig03_mean_energy", "fig04_entropy",
                           "fig05_heat_capacity"};
    for (std::size_t q = 0; q < kThermoQuantities.size(); ++q) {
        auto const chart = thermo_chart(run, kThermoQuantities[q]);
        LongTable fig(chart.title, "beta", kThermoQuantities[q].column);
        for (auto const& s : chart.series) fig.add_curve(s.label, s.x, s.y);
        fig.save(dir, stems[q], out);
    }

    // Figs. 6-11: mu = hbar = 1 unless --preset is given
    UnitSystem const units = units_for(c, "atomic");
    QuadraturePolicy const policy = policy_for(c);
    auto const pts = static_cast<std::size_t>(a.points);
    LongTable position("Probability density in position space", "r", "u(r)^2 = 4 pi r^2 rho(r)");
    LongTable momentum("Probability density in momentum space", "p", "w(p)^2 = 4 pi p^2 gamma(p)");
    for (int n : {0, 1}) {
        for (double alpha : a.density_alphas) {
            auto const state = checked([&] {
                return wavefunction::build_bound_state(a.V.at(alpha), {n, 0, 0}, units, policy);
            });
            auto const r = wavefunction::position_grid(state, pts);
            std::vector<double> rho;
            for (double x : r) rho.push_back(wavefunction::reduced_density(state, x));
            position.add_curve(curve_label(n, alpha), r, rho);
            wavefunction::MomentumProfile const profile(state);
            auto const p = wavefunction::momentum_grid(profile, pts);
            std::vector<double> gamma;
            for (double x : p) gamma.push_back(std::pow(profile.w(x), 2));
            momentum.add_curve(curve_label(n, alpha), p, gamma);
        }
    }
    position.save(dir, "fig06_position_density", out);
    momentum.save(dir, "fig07_momentum_density", out);

    auto const records = info::info_sweep(a.V.at(1.0), units, {0, 1}, a.alphas, {}, policy);
    struct InfoFigure {
        char const* stem;
        char const* title;
        char const* y;
        double info::InfoRecord::*field;
    };
    InfoFigure const figures[] = {
        {"fig08_shannon_position", "Shannon entropy in position space", "S_r", &info::InfoRecord::S_r},
        {"fig09_shannon_momentum", "Shannon entropy in momentum space", "S_p", &info::InfoRecord::S_p},
        {"fig10_fisher_position", "Fisher information in position space", "I_r", &info::InfoRecord::I_r},
        {"fig11_fisher_momentum", "Fisher information in momentum space", "I_p", &info::InfoRecord::I_p},
    };
    for (auto const& f : figures) {
        LongTable fig(f.title, "alpha", f.y);
        for (int n : {0, 1}) {
            std::vector<double> x, y;
            for (auto const& r : records) {
                if (r.n != n) continue;
                x.push_back(r.alpha);
                y.push_back(r.*f.field);
            }
            fig.add_curve("n=" + std::to_string(n), x, y);
        }
        fig.save(dir, f.stem, out);
    }
    return exit_ok;
}

// ---------------------------------------------------------------- wiring

void add_thermo_options(CLI::App* sub, ThermoArgs& t) {
    sub->add_option("--alpha", t.alpha, "screening parameter")->capture_default_str();
    sub->add_option("--l", t.l, "orbital quantum number")->capture_default_str();
    sub->add_option("--lambda", t.lambdas, "upper bound quantum numbers (one series each)")->capture_default_str();
    sub->add_option("--beta", t.betas, "explicit beta grid (overrides the range)");
    sub->add_option("--beta-min", t.beta_min, "beta range start")->capture_default_str();
    sub->add_option("--beta-max", t.beta_max, "beta range end")->capture_default_str();
    sub->add_option("--beta-points", t.beta_points, "beta range points")->capture_default_str();
    sub->add_option("--backend", t.backend, "sum, integral or closed")
        ->check(CLI::IsMember({"sum", "integral", "closed"}))
        ->capture_default_str();
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Screened Kratzer-Hellmann potential: spectra, wavefunctions, thermodynamics and information "
                 "measures"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--preset", common.preset, "unit preset: table12 (hbar^2/2mu = 1) or atomic (mu = hbar = 1)")
        ->check(CLI::IsMember({"table12", "atomic"}));
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", common.out, "output file (figure: output directory)");
    app.add_option("--quad-tol", common.quad_tol, "relative quadrature tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--config", common.config, "JSON file with option values; command-line flags win");
    app.add_flag("--seedless", common.seedless, "accepted for scripts; every run is deterministic");

    SpectrumArgs spectrum;
    auto* s_spec = app.add_subcommand("spectrum", "energy eigenvalues");
    spectrum.V.add_to(s_spec);
    s_spec->add_option("--alpha", spectrum.alphas, "screening parameters")->capture_default_str();
    s_spec->add_option("--state", spectrum.states, "spectroscopic labels such as 1s, 2p")->capture_default_str();
    s_spec->add_flag("--allow-unbound", spectrum.allow_unbound, "list unbound states instead of failing");

    WavefunctionArgs wave;
    auto* s_wave = app.add_subcommand("wavefunction", "sampled u(r), densities and w(p)");
    wave.V.add_to(s_wave);
    s_wave->add_option("--alpha", wave.alpha, "screening parameter")->capture_default_str();
    s_wave->add_option("--n", wave.n, "radial quantum number")->capture_default_str();
    s_wave->add_option("--l", wave.l, "orbital quantum number")->capture_default_str();
    s_wave->add_option("--state", wave.state, "spectroscopic label (overrides --n/--l)");
    s_wave->add_option("--points", wave.points, "samples per space")->capture_default_str();

    ThermoArgs thermo_args;
    auto* s_thermo = app.add_subcommand("thermo", "partition function and thermodynamic functions");
    thermo_args.V.add_to(s_thermo);
    add_thermo_options(s_thermo, thermo_args);
    s_thermo->add_option("--svg-dir", thermo_args.svg_dir, "also write one SVG chart per quantity here");

    InfoArgs info_args;
    auto* s_info = app.add_subcommand("info", "Shannon entropies and Fisher information over alpha");
    info_args.V.add_to(s_info);
    s_info->add_option("--alpha", info_args.alphas, "screening parameters")->capture_default_str();
    s_info->add_option("--n", info_args.ns, "radial quantum numbers (0 and/or 1)")->capture_default_str();
    s_info->add_option("--dimension", info_args.dimension, "3 (full densities) or 1 (half-line densities)")
        ->check(CLI::IsMember({1, 3}))
        ->capture_default_str();

    ReproduceArgs repro;
    auto* s_repro = app.add_subcommand("reproduce", "compare with the published tables");
    s_repro->add_option("which", repro.which, "table1, table2, table3 or table4")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3", "table4"}));
    repro.V.add_to(s_repro);

    FigureArgs fig;
    auto* s_fig = app.add_subcommand("figure", "CSV and SVG data for all eleven figures");
    fig.V.add_to(s_fig);
    s_fig->add_option("--dir", fig.dir, "output directory (same as --out)")->capture_default_str();
    s_fig->add_option("--points", fig.points, "samples per density curve")->capture_default_str();
    s_fig->add_option("--density-alpha", fig.density_alphas, "alpha values for the density figures")
        ->capture_default_str();
    s_fig->add_option("--info-alpha", fig.alphas, "alpha grid for the information figures")->capture_default_str();
    s_fig->add_option("--thermo-alpha", fig.thermo.alpha, "screening parameter for the thermodynamic figures")
        ->capture_default_str();
    s_fig->add_option("--lambda", fig.thermo.lambdas, "upper bound quantum numbers")->capture_default_str();
    s_fig->add_option("--backend", fig.thermo.backend, "partition function backend")
        ->check(CLI::IsMember({"sum", "integral", "closed"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        CLI::App* sub = app.get_subcommands().front();
        if (!common.config.empty()) apply_config(common.config, app, *sub);
        fig.thermo.V = fig.V;

        if (sub == s_spec) return cmd_spectrum(common, spectrum, out, err);
        if (sub == s_wave) return cmd_wavefunction(common, wave, out, err);
        if (sub == s_thermo) return cmd_thermo(common, thermo_args, out, err);
        if (sub == s_info) return cmd_info(common, info_args, out, err);
        if (sub == s_repro) return cmd_reproduce(common, repro, out, err);
        if (sub == s_fig) return cmd_figure(common, fig, out, err);
        return exit_internal;
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    } catch (ConfigError const& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    } catch (NoBoundState const& e) {
        err << "error: " << e.what() << '\n';
        return exit_unbound;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace skhp::cli
