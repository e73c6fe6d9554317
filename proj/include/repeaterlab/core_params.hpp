#ifndef REPEATERLAB_CORE_PARAMS_HPP
#define REPEATERLAB_CORE_PARAMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "repeaterlab/errors.hpp"

namespace repeaterlab {

inline constexpr double kSpeedOfLight = 2.998e8; // m/s

/// Physical parameters of one atom-cavity building block.
/// All rates are angular (rad/s). gamma3 for the Rb preset is
/// 2*pi * 6e6 rad/s, i.e. "2*pi x 6 MHz" written out.
struct AtomCavityParams {
    double n_atoms;  ///< ensemble atom number N (>= 1)
    double g1;       ///< coupling on the |1>-|3> transition, rad/s
    double g2;       ///< coupling on the |2>-|3> transition, rad/s
    double delta;    ///< one-photon detuning, rad/s
    double gamma3;   ///< upper-level spontaneous decay rate, rad/s
    double kappa;    ///< cavity decay rate, rad/s
    double length;   ///< sample length, m
    double c = kSpeedOfLight; ///< light speed used for chi = c/L

    void validate() const;

    /// True when delta >= 10 * max(kappa, g1, g2). Informational only.
    bool far_detuned() const;
};

/// Composite rates derived from AtomCavityParams.
struct DerivedRates {
    double raman_coupling;    ///< G = g1*g2/delta, rad/s
    double chi;               ///< omega_1 field damping, c/L, 1/s
    double fluorescence_rate; ///< Gamma = (g1/delta)^2 * gamma3, 1/s
    double cooperativity;     ///< eta = 4*N*G^2/(chi*kappa)
};

DerivedRates derive_rates(const AtomCavityParams& params);

/// Atom number N* = chi*kappa/(4 G^2) at which eta = 1.
double required_atom_number(const AtomCavityParams& params);

/// Gamma*N/chi. Values approaching 1 break the low-fluorescence assumption;
/// callers typically warn above 0.1.
double fluorescence_ratio(const AtomCavityParams& params);

/// Named parameter set ("rb87-paper", ...). Empty optional if unknown.
std::optional<AtomCavityParams> find_preset(const std::string& name);

std::vector<std::string> preset_names();

} // namespace repeaterlab

#endif
