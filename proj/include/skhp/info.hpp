#pragma once

// Shannon entropies and Fisher information of the l = m = 0 states in position
// and momentum space, the entropic (BBM) and Fisher-product uncertainty checks,
// and alpha sweeps over n in {0, 1}.

#include "skhp/model.hpp"
#include "skhp/wavefunction.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace skhp::info {

using model::PotentialParams;
using model::UnitSystem;
using wavefunction::BoundState;
using wavefunction::MomentumProfile;

struct InfoOptions {
    /// 3: densities u^2 / (4 pi r^2) and w^2 / (4 pi p^2). 1: u^2 and w^2 on the half line.
    int dimension = 3;
    /// Densities below this are treated as exact zeros in the entropy integrands.
    double density_floor = 1e-280;

    void validate() const;
};

/// D (1 + ln pi).
double bbm_bound(int dimension);

double shannon_position(BoundState const& state, InfoOptions const& options = {});
double shannon_momentum(BoundState const& state, MomentumProfile const& profile, InfoOptions const& options = {});
double shannon_momentum(BoundState const& state, InfoOptions const& options = {});

/// 4<p^2> - 2(2l+1)|m| <r^-2>.
double fisher_position(BoundState const& state);
/// 4<r^2> - 2(2l+1)|m| <p^-2>; the momentum term needs l = 0, so only m = 0 is reachable.
double fisher_momentum(BoundState const& state);

struct InfoRecord {
    double alpha = 0.0;
    int n = 0;
    int dimension = 3;
    double energy = 0.0;
    double S_r = 0.0;
    double S_p = 0.0;
    double S_t = 0.0;
    double I_r = 0.0;
    double I_p = 0.0;
    double product = 0.0;
    double norm_r = 0.0; ///< int u^2 dr
    double norm_p = 0.0; ///< int w^2 dp
    bool bound = false;
    bool bbm_ok = false;
    bool fisher_ok = false;
    std::string flag; ///< empty, or why the measures are missing
};

enum class Verdict { satisfied, violated, invalid_input };
std::string_view to_string(Verdict v);

/// Refuses to judge records whose densities are not normalized to 1e-6 or whose values are not finite.
Verdict bbm_verdict(InfoRecord const& record);
Verdict fisher_verdict(InfoRecord const& record);
bool bbm_check(InfoRecord const& record);
bool fisher_product_check(InfoRecord const& record);

/// Record for one bound state (l = 0, n in {0, 1}).
InfoRecord info_record(BoundState const& state, InfoOptions const& options = {});
InfoRecord info_record(BoundState const& state, MomentumProfile const& profile, InfoOptions const& options = {});

/// One record per (n, alpha); params.alpha is replaced by each grid value.
/// Unbound points keep NaN measures and a flag. Points run in parallel.
std::vector<InfoRecord> info_sweep(PotentialParams const& params, UnitSystem const& units,
                                   std::vector<int> const& n_list, std::vector<double> const& alpha_grid,
                                   InfoOptions const& options = {},
                                   quadrature::QuadraturePolicy const& policy = {});

/// Rescale a record as if both densities were multiplied by s (a different
/// normalization constant): S -> s S - s ln s, I -> s I.
InfoRecord rescale_density(InfoRecord const& record, double s);

/// The choices left open when comparing with the published entropy and Fisher tables.
struct Convention {
    int dimension = 3;
    bool closed_form_norm = false;      ///< Gamma-function constant instead of the numeric one
    std::string preset = "atomic";      ///< unit preset
    bool attractive = false;            ///< V0, V1 negated (V2 unchanged)

    std::string label() const;
};

std::vector<Convention> candidate_conventions();

struct ConventionSweep {
    Convention convention;
    std::vector<InfoRecord> records;
};

/// Every candidate convention over the same grid, starting from the as-given
/// potential. States and momentum profiles are shared between conventions.
std::vector<ConventionSweep> candidate_sweeps(PotentialParams const& params, std::vector<int> const& n_list,
                                              std::vector<double> const& alpha_grid,
                                              quadrature::QuadraturePolicy const& policy = {});

} // namespace skhp::info
