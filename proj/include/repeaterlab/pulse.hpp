#ifndef REPEATERLAB_PULSE_HPP
#define REPEATERLAB_PULSE_HPP

#include <complex>
#include <vector>

#include "repeaterlab/errors.hpp"

namespace repeaterlab {

/// Normalized single-photon temporal mode f(t), with integral |f|^2 dt = 1.
///
/// The gaussian kind uses f(t) = (2 pi s^2)^(-1/4) exp(-(t-t0)^2/(4 s^2)),
/// so sigma_t is the standard deviation of the intensity |f|^2.
class PulseEnvelope {
public:
    enum class Kind { gaussian, square, sampled };

    static PulseEnvelope gaussian(double center, double sigma_t);
    static PulseEnvelope square(double center, double duration);
    /// Uniform grid of complex amplitudes, renormalized on construction.
    static PulseEnvelope sampled(double t_start, double dt,
                                 std::vector<std::complex<double>> samples);

    std::complex<double> operator()(double t) const;

    Kind kind() const { return kind_; }
    double center() const { return center_; }
    double sigma() const { return sigma_; }
    double duration() const { return duration_; }

    /// [t_lo, t_hi] containing essentially all pulse energy
    /// (amplitude below ~1e-8 of peak outside).
    void support(double& t_lo, double& t_hi) const;

private:
    PulseEnvelope() = default;

    Kind kind_ = Kind::gaussian;
    double center_ = 0.0;
    double sigma_ = 1.0;
    double duration_ = 0.0;
    // sampled kind
    double t_start_ = 0.0;
    double dt_ = 0.0;
    std::vector<std::complex<double>> samples_;
};

} // namespace repeaterlab

#endif
