#include "repeaterlab/phase_fidelity.hpp"

#include <cmath>

#include "repeaterlab/rng.hpp"

namespace repeaterlab {

void PhaseModel::validate() const {
    if (!(omega > 0.0))
        throw InvalidParameterError("omega must be strictly positive");
    if (sigma < 0.0)
        throw InvalidParameterError("sigma must be nonnegative");
    if (window < 0.0)
        throw InvalidParameterError("window must be nonnegative");
}

double PhaseModel::sigma_phi() const {
    return jitter_kind == Jitter::gaussian_timing ? omega * sigma : sigma;
}

double wrap_phase(double phi) {
    if (!std::isfinite(phi))
        throw InvalidParameterError("phase must be finite");
    double w = std::remainder(phi, 2.0 * M_PI); // (-pi, pi], up to the -pi edge
    if (w <= -M_PI) w = M_PI;
    return w;
}

double link_phase(double phi_up_w1, double phi_up_st, double phi_down_w1, double phi_down_st) {
    return wrap_phase((phi_up_w1 + phi_up_st) - (phi_down_w1 + phi_down_st));
}

double relative_phase(double phi12, double phi34) {
    return wrap_phase(phi12 - phi34);
}

double swap_fidelity(double delta_phi) {
    if (!std::isfinite(delta_phi))
        throw InvalidParameterError("phase must be finite");
    return 0.5 * (1.0 + std::cos(delta_phi));
}

MeanFidelity mean_fidelity(const PhaseModel& model, std::uint64_t samples,
                           std::uint64_t rng_seed) {
    model.validate();
    if (samples < 1)
        throw InvalidParameterError("samples must be >= 1");
    const double s = model.sigma_phi();

    MeanFidelity out;
    out.analytic = 0.5 * (1.0 + std::exp(-0.5 * s * s));

    Rng rng(Rng::splitmix64(rng_seed));
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double f = swap_fidelity(s * rng.normal());
        sum += f;
        sum_sq += f * f;
    }
    const double n = static_cast<double>(samples);
    out.sampled = sum / n;
    const double var = samples > 1 ? (sum_sq - sum * sum / n) / (n - 1.0) : 0.0;
    out.sampled_stderr = std::sqrt(std::max(var, 0.0) / n);
    return out;
}

double phase_exposure_window(const LinkParams& link) {
    return expected_link_time(link);
}

} // namespace repeaterlab
