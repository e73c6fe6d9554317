#ifndef REPEATERLAB_PHASE_FIDELITY_HPP
#define REPEATERLAB_PHASE_FIDELITY_HPP

#include <cstdint>

#include "repeaterlab/link_budget.hpp"

namespace repeaterlab {

/// Gaussian model for the relative phase of the four-ensemble state.
/// For timing jitter the phase deviation is omega * sigma.
struct PhaseModel {
    enum class Jitter { gaussian_phase, gaussian_timing };

    double omega = 2.0 * 3.14159265358979323846 * 2.998e8 / 0.8e-6; ///< rad/s, lambda = 0.8 um
    Jitter jitter_kind = Jitter::gaussian_phase;
    double sigma = 0.0;   ///< rad (phase) or s (timing)
    double window = 0.0;  ///< exposure time over which fluctuations accumulate, s

    void validate() const;

    /// Phase standard deviation in rad, whichever jitter kind.
    double sigma_phi() const;
};

/// Wrap to (-pi, pi].
double wrap_phase(double phi);

/// Pathway phase of one link: (up-arm omega1 + Stokes) minus (down-arm),
/// wrapped. Common-mode shifts cancel.
double link_phase(double phi_up_w1, double phi_up_st, double phi_down_w1, double phi_down_st);

/// delta_phi = phi12 - phi34, wrapped.
double relative_phase(double phi12, double phi34);

/// Overlap fidelity with the zero-phase target state, (1 + cos d)/2.
double swap_fidelity(double delta_phi);

struct MeanFidelity {
    double analytic; ///< (1 + exp(-sigma_phi^2/2))/2
    double sampled;  ///< Monte Carlo estimate
    double sampled_stderr;
};

MeanFidelity mean_fidelity(const PhaseModel& model, std::uint64_t samples,
                           std::uint64_t rng_seed);

/// Mean interval over which path lengths must stay stable: the expected
/// link generation time. Feed into PhaseModel.window.
double phase_exposure_window(const LinkParams& link);

} // namespace repeaterlab

#endif
