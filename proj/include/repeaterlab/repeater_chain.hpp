#ifndef REPEATERLAB_REPEATER_CHAIN_HPP
#define REPEATERLAB_REPEATER_CHAIN_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "repeaterlab/link_budget.hpp"

namespace repeaterlab {

/// Nested repeater chain over total distance L with 2^n elementary links.
/// link.l0_km is derived as L/2^n, never set by the caller.
struct ChainConfig {
    double l_km;              ///< total distance
    int nesting = 0;          ///< doubling stages n; links = 2^n
    LinkParams link;          ///< per-link budget (l0_km filled from l_km, nesting)
    double eta_m = 1.0;       ///< memory retrieval efficiency
    double swap_intrinsic = 0.5;
    double post_intrinsic = 0.5;
    bool include_comm_delay = false;
    double tau_mem_s = std::numeric_limits<double>::infinity();

    void validate() const;

    int num_links() const { return 1 << nesting; }
    double l0_km() const { return l_km / static_cast<double>(num_links()); }
    /// link with l0_km resolved from the chain geometry
    LinkParams elementary_link() const;

    /// swap success per level: swap_intrinsic * eta_m * eta_d
    double p_swap() const { return swap_intrinsic * eta_m * link.eta_d; }
    /// final post-selection success: post_intrinsic * (eta_m * eta_d)^2
    double p_post() const {
        const double me = eta_m * link.eta_d;
        return post_intrinsic * me * me;
    }
};

struct ChainResult {
    double t_analytic;           ///< closed-form expected time, s
    double t_mc_mean;            ///< Monte Carlo mean, s
    double t_mc_stderr;          ///< standard error of the mean, s
    std::uint64_t trials;
    double final_success_fraction; ///< trials finishing under the slot cap
    std::vector<double> per_level_mean_s; ///< mean ready time per level, index 0 = link
};

/// Expected distribution time
///   T = (L0/(c P0)) * ((3/2)/P_swap)^n / P_post.
/// The per-level 3/2 is the standard waiting-time factor; the memory
/// efficiency enters exactly as eta_m^-(n+2).
double analytic_total_time(const ChainConfig& config);

/// Speedup T_DLCZ / T_ours. The DLCZ chain uses the same geometry and
/// swap structure with p = p_dlcz, the halved attenuation exponent, and
/// eta_m_dlcz in its swap and post-selection factors.
double dlcz_comparison(const ChainConfig& config_ours, double p_dlcz, double eta_m_dlcz);

/// Seeded discrete-event simulation of the nested generate-and-swap
/// protocol. Per-trial streams derive from the master seed, so the
/// result is independent of trial execution order.
ChainResult monte_carlo_total_time(const ChainConfig& config, std::uint64_t trials,
                                   std::uint64_t rng_seed,
                                   std::uint64_t cap_slots = 1'000'000'000ULL);

} // namespace repeaterlab

#endif
