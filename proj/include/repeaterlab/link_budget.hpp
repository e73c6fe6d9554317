#ifndef REPEATERLAB_LINK_BUDGET_HPP
#define REPEATERLAB_LINK_BUDGET_HPP

#include <cstdint>

#include "repeaterlab/errors.hpp"

namespace repeaterlab {

/// Loss budget of one elementary link. In the proposed scheme the photon
/// crosses the full link length (source to ensemble plus Stokes photon
/// back to the central station); the DLCZ flag halves the exponent.
struct LinkParams {
    double l0_km;             ///< link length
    double l_att_km = 22.0;   ///< fiber attenuation length (0.2 dB/km)
    double eta_d = 1.0;       ///< detector efficiency
    double p = 1.0;           ///< Stokes emission probability
    double c_fiber = 2.998e8; ///< signal speed in the channel, m/s
    bool dlcz = false;        ///< DLCZ-style link: photon travels half the path

    void validate() const;
};

double transmission_efficiency(double l0_km, double l_att_km);

/// P0 = p * eta_d * eta_t, with eta_t = exp(-L0/L_att) for the proposed
/// scheme and exp(-L0/(2 L_att)) for DLCZ.
double link_success_probability(const LinkParams& link);

/// Attempt period in seconds, L0/c_fiber.
double attempt_period(const LinkParams& link);

/// Expected generation time (L0/c)/P0.
double expected_link_time(const LinkParams& link);

/// One stochastic generation time: geometric attempt count times the
/// attempt period. Deterministic per seed.
double sample_link_time(const LinkParams& link, std::uint64_t rng_seed);

} // namespace repeaterlab

#endif
