#pragma once

// Published reference tables bundled under data/, and comparisons against them.

#include "skhp/info.hpp"
#include "skhp/model.hpp"

#include <array>
#include <string>
#include <vector>

namespace skhp::cli {

/// Directory holding table1.csv ... table4.csv (fixed at build time).
std::string data_dir();

struct EnergyRow {
    std::string state;
    model::QuantumNumbers qn;
    model::PotentialParams params;
    double energy = 0.0; ///< published value
};

/// Screened Kratzer-Hellmann energies, three potentials per (state, alpha).
std::vector<EnergyRow> load_table1();
/// Hellmann potential V = (-1, -2, 0), the "present" column.
std::vector<EnergyRow> load_table2();

/// One published row of the entropy or Fisher table: three quantities for n = 0, then n = 1.
struct InfoRow {
    double alpha = 0.0;
    std::array<double, 3> n0{};
    std::array<double, 3> n1{};
};

/// Shannon entropies: S_r, S_p, S_t.
std::vector<InfoRow> load_table3();
/// Fisher information: I_r, I_p, I_r I_p.
std::vector<InfoRow> load_table4();

/// Deviation of a candidate convention's sweep from the published info tables.
struct ConventionScore {
    info::Convention convention;
    double rms_table3 = 0.0;     ///< absolute RMS over S_r, S_p, S_t
    double rms_table4 = 0.0;     ///< absolute RMS over I_r, I_p, I_r I_p
    double rel_rms_table3 = 0.0; ///< RMS of relative deviations
    double rel_rms_table4 = 0.0;
    int compared = 0;            ///< grid points with a bound state
    int missing = 0;             ///< grid points without one
    double selection_score() const { return rel_rms_table3 + rel_rms_table4; }
};

/// records must come from the table grid (alpha 0.1 ... 0.9, n in {0, 1}).
ConventionScore score_convention(info::ConventionSweep const& sweep, std::vector<InfoRow> const& table3,
                                 std::vector<InfoRow> const& table4);

/// Lowest selection_score among conventions with no missing points (or, if
/// every convention misses some, among all with a finite score).
std::size_t select_best(std::vector<ConventionScore> const& scores);

/// Qualitative alpha trends of a sweep over the published grid.
struct TrendCheck {
    std::string name;
    bool passed = false;
    bool required = true; ///< false for supplementary checks reported alongside
    std::string detail;
};

/// S_r(n=0) rising on [0.1, 0.6] and falling on [0.7, 0.9]; I_r(n=0) minimal at
/// 0.5 or 0.6; I_p(n=1) falling then rising with its minimum at 0.4 or 0.5.
/// Supplementary: the same turnaround for I_r(n=1), and I_p(n=1) rising then
/// falling with its maximum at 0.4 or 0.5.
std::vector<TrendCheck> trend_checks(std::vector<info::InfoRecord> const& records);

/// The three entropy (which = 3) or Fisher (which = 4) quantities of a record.
std::array<double, 3> info_quantities(info::InfoRecord const& record, int which);

} // namespace skhp::cli
