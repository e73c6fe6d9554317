#ifndef REPEATERLAB_RAMAN_HPP
#define REPEATERLAB_RAMAN_HPP

#include <Eigen/Dense>
#include <complex>

#include "repeaterlab/core_params.hpp"
#include "repeaterlab/pulse.hpp"

namespace repeaterlab {

/// Fraction of the input photon converted into the cavity Stokes mode,
/// 4*eta/(1+eta)^2. Unity at the impedance-matched point eta = 1.
double stokes_probability(double eta);

/// Fraction leaking back out in the input mode, (1-eta)^2/(1+eta)^2.
/// Complements stokes_probability to 1 identically.
double leak_fraction(double eta);

/// Rates entering the single-excitation amplitude equations. For
/// dimensionless studies set chi = kappa = 1 and scale the pulse width.
struct ConversionRates {
    double chi;            ///< input-field damping rate
    double kappa;          ///< cavity decay rate
    double coupling;       ///< collective coupling G*sqrt(N)
    double fluorescence;   ///< Gamma*N, loss rate of the input field

    static ConversionRates from(const AtomCavityParams& params);
    static ConversionRates from(const DerivedRates& rates, double n_atoms, double kappa);

    double cooperativity() const {
        return 4.0 * coupling * coupling / (chi * kappa);
    }
};

struct SolverSettings {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    bool adaptive = true;          ///< false: fixed-step RK at the grid spacing
    int grid_points = 6000;        ///< output/quadrature grid resolution
    double tail_decay_times = 25;  ///< window padding after the pulse, in 2/min(chi,kappa)
    double conservation_tol = 1e-6;
};

struct ConversionResult {
    Eigen::ArrayXd time;           ///< uniform output grid
    Eigen::ArrayXcd phi1;          ///< output mode at the input frequency
    Eigen::ArrayXcd phi2;          ///< output Stokes mode
    double n1_out;                 ///< photons left in the input mode
    double n2_out;                 ///< Stokes photons emitted
    double n_fluor;                ///< photons lost to fluorescence
    double p;                      ///< Stokes conversion probability n2_out / n1_in
    double spin_excitations;       ///< equals n2_out in this model
};

/// Integrates the single-excitation amplitudes
///   da1/dt = -i g a2 - (chi + Gamma N)/2 a1 - sqrt(chi) f(t)
///   da2/dt = -i g a1 - kappa/2 a2
/// from vacuum, forms Phi1 = f + sqrt(chi) a1 and Phi2 = sqrt(kappa) a2,
/// and integrates the output photon numbers.
ConversionResult simulate_conversion(const ConversionRates& rates, const PulseEnvelope& pulse,
                                     const SolverSettings& solver = {});

/// Overlap of |Phi2| with |f|, normalized so that exact shape
/// reproduction gives 1.
double waveform_fidelity(const ConversionResult& result, const PulseEnvelope& pulse);

/// Branch amplitudes (sqrt(n1_out), sqrt(n2_out)) of the two-mode
/// output state; squares sum to 1 - n_fluor.
std::pair<double, double> output_state(const ConversionResult& result);

} // namespace repeaterlab

#endif
