#include "skhp/cli/paper_tables.hpp"

#include "skhp/cli/table.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <stdexcept>

#ifndef SKHP_DATA_DIR
#define SKHP_DATA_DIR "data"
#endif

namespace skhp::cli {

std::string data_dir() { return SKHP_DATA_DIR; }

namespace {

Table load(std::string const& name) {
    std::string const path = data_dir() + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference table " + path);
    return read_csv(in);
}

std::string text(Cell const& c) { return std::get<std::string>(c); }
double number(Cell const& c) { return parse_double(text(c)); }

std::vector<InfoRow> load_info(std::string const& name) {
    auto const t = load(name);
    std::vector<InfoRow> rows;
    for (auto const& r : t.rows) {
        InfoRow row;
        row.alpha = number(r[0]);
        for (int k = 0; k < 3; ++k) {
            row.n0[k] = number(r[1 + k]);
            row.n1[k] = number(r[4 + k]);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace

std::vector<EnergyRow> load_table1() {
    auto const t = load("table1.csv");
    std::vector<EnergyRow> rows;
    for (auto const& r : t.rows) {
        EnergyRow row;
        row.state = text(r[t.column("state")]);
        row.qn = model::spectroscopic_to_qn(row.state);
        row.params = {number(r[t.column("V0")]), number(r[t.column("V1")]), number(r[t.column("V2")]),
                      number(r[t.column("alpha")])};
        row.energy = number(r[t.column("energy")]);
        rows.push_back(row);
    }
    return rows;
}

std::vector<EnergyRow> load_table2() {
    auto const t = load("table2.csv");
    std::vector<EnergyRow> rows;
    for (auto const& r : t.rows) {
        EnergyRow row;
        row.state = text(r[t.column("state")]);
        row.qn = model::spectroscopic_to_qn(row.state);
        row.params = {-1.0, -2.0, 0.0, number(r[t.column("alpha")])};
        row.energy = number(r[t.column("present")]);
        rows.push_back(row);
    }
    return rows;
}

std::vector<InfoRow> load_table3() { return load_info("table3.csv"); }
std::vector<InfoRow> load_table4() { return load_info("table4.csv"); }

std::array<double, 3> info_quantities(info::InfoRecord const& r, int which) {
    if (which == 3) return {r.S_r, r.S_p, r.S_t};
    if (which == 4) return {r.I_r, r.I_p, r.product};
    throw std::invalid_argument("info_quantities: which must be 3 or 4");
}

ConventionScore score_convention(info::ConventionSweep const& sweep, std::vector<InfoRow> const& table3,
                                 std::vector<InfoRow> const& table4) {
    ConventionScore score;
    score.convention = sweep.convention;
    double sq[2] = {0, 0}, rel_sq[2] = {0, 0};
    int count[2] = {0, 0};
    for (auto const& rec : sweep.records) {
        if (!rec.bound) {
            ++score.missing;
            continue;
        }
        ++score.compared;
        for (int t = 0; t < 2; ++t) {
            auto const& table = t == 0 ? table3 : table4;
            for (auto const& row : table) {
                if (std::abs(row.alpha - rec.alpha) > 1e-9) continue;
                auto const& published = rec.n == 0 ? row.n0 : row.n1;
                auto const computed = info_quantities(rec, t == 0 ? 3 : 4);
                for (int k = 0; k < 3; ++k) {
                    double const d = computed[k] - published[k];
                    sq[t] += d * d;
                    rel_sq[t] += (d / published[k]) * (d / published[k]);
                    ++count[t];
                }
            }
        }
    }
    double const nan = std::nan("");
    score.rms_table3 = count[0] ? std::sqrt(sq[0] / count[0]) : nan;
    score.rms_table4 = count[1] ? std::sqrt(sq[1] / count[1]) : nan;
    score.rel_rms_table3 = count[0] ? std::sqrt(rel_sq[0] / count[0]) : nan;
    score.rel_rms_table4 = count[1] ? std::sqrt(rel_sq[1] / count[1]) : nan;
    return score;
}

std::size_t select_best(std::vector<ConventionScore> const& scores) {
    bool const any_complete =
        std::any_of(scores.begin(), scores.end(), [](ConventionScore const& c) { return c.missing == 0; });
    std::size_t best = scores.size();
    for (std::size_t i = 0; i < scores.size(); ++i) {
        auto const& c = scores[i];
        if (any_complete && c.missing != 0) continue;
        if (!std::isfinite(c.selection_score())) continue;
        if (best == scores.size() || c.selection_score() < scores[best].selection_score()) best = i;
    }
    if (best == scores.size()) throw std::runtime_error("select_best: no convention produced a finite score");
    return best;
}

namespace {

std::string short_alpha(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", a);
    return buf;
}

// values of one quantity for one n, ordered by alpha; NaN where missing
std::vector<std::pair<double, double>> curve(std::vector<info::InfoRecord> const& records, int n,
                                             double info::InfoRecord::*field) {
    std::vector<std::pair<double, double>> out;
    for (auto const& r : records) {
        if (r.n == n) out.emplace_back(r.alpha, r.bound ? r.*field : std::nan(""));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string describe(std::vector<std::pair<double, double>> const& c) {
    std::string s;
    for (auto const& [a, v] : c) {
        if (!s.empty()) s += ' ';
        s += short_alpha(a) + ":" + std::to_string(v);
    }
    return s;
}

bool in_range(double a, double lo, double hi) { return a >= lo - 1e-9 && a <= hi + 1e-9; }

// strictly monotone over the points with alpha in [lo, hi]; sign +1 rising, -1 falling
bool monotone(std::vector<std::pair<double, double>> const& c, double lo, double hi, int sign) {
    double prev = std::nan("");
    int seen = 0;
    for (auto const& [a, v] : c) {
        if (!in_range(a, lo, hi)) continue;
        if (!std::isfinite(v)) return false;
        if (seen && !(sign * (v - prev) > 0)) return false;
        prev = v;
        ++seen;
    }
    return seen >= 2;
}

// alpha of the extreme value (sign -1 minimum, +1 maximum); NaN if any point is missing
double arg_extreme(std::vector<std::pair<double, double>> const& c, int sign) {
    double best_a = std::nan(""), best_v = 0.0;
    for (auto const& [a, v] : c) {
        if (!std::isfinite(v)) return std::nan("");
        if (std::isnan(best_a) || sign * (v - best_v) > 0) {
            best_a = a;
            best_v = v;
        }
    }
    return best_a;
}

TrendCheck turnaround(std::string name, std::vector<std::pair<double, double>> const& c, int sign, bool required) {
    // sign -1: falling to a minimum then rising; +1: rising to a maximum then falling
    double const at = arg_extreme(c, sign);
    bool ok = std::isfinite(at) && in_range(at, 0.4, 0.5);
    if (ok) ok = monotone(c, 0.0, at, sign) && monotone(c, at, 1.0, -sign);
    return {std::move(name), ok, required,
            "extreme at alpha=" + (std::isfinite(at) ? short_alpha(at) : std::string("n/a")) + "; " +
                describe(c)};
}

} // namespace

std::vector<TrendCheck> trend_checks(std::vector<info::InfoRecord> const& records) {
    using R = info::InfoRecord;
    std::vector<TrendCheck> out;
    auto const sr0 = curve(records, 0, &R::S_r);
    bool const rise = monotone(sr0, 0.1, 0.6, +1);
    bool const fall = monotone(sr0, 0.7, 0.9, -1);
    out.push_back({"S_r(n=0) increasing on [0.1,0.6], decreasing on [0.7,0.9]", rise && fall, true,
                   std::string("rise ") + (rise ? "yes" : "no") + ", fall " + (fall ? "yes" : "no") + "; " +
                       describe(sr0)});

    auto const ir0 = curve(records, 0, &R::I_r);
    double const at = arg_extreme(ir0, -1);
    out.push_back({"I_r(n=0) minimal near alpha 0.5-0.6", std::isfinite(at) && in_range(at, 0.5, 0.6), true,
                   "minimum at alpha=" + (std::isfinite(at) ? short_alpha(at) : std::string("n/a")) +
                       "; " + describe(ir0)});

    out.push_back(turnaround("I_p(n=1) decreasing then increasing, turnaround 0.4-0.5", curve(records, 1, &R::I_p),
                             -1, true));
    out.push_back(turnaround("I_r(n=1) decreasing then increasing, turnaround 0.4-0.5", curve(records, 1, &R::I_r),
                             -1, false));
    out.push_back(turnaround("I_p(n=1) increasing then decreasing, turnaround 0.4-0.5", curve(records, 1, &R::I_p),
                             +1, false));
    return out;
}

} // namespace skhp::cli
