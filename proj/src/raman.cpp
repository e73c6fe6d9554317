#include "repeaterlab/raman.hpp"

#include <cmath>

#include "repeaterlab/ode.hpp"

namespace repeaterlab {

double stokes_probability(double eta) {
    if (!(eta >= 0.0))
        throw InvalidParameterError("cooperativity must be nonnegative");
    const double s = 1.0 + eta;
    return 4.0 * eta / (s * s);
}

double leak_fraction(double eta) {
    if (!(eta >= 0.0))
        throw InvalidParameterError("cooperativity must be nonnegative");
    const double d = 1.0 - eta;
    const double s = 1.0 + eta;
    return d * d / (s * s);
}

ConversionRates ConversionRates::from(const AtomCavityParams& params) {
    const DerivedRates d = derive_rates(params);
    return from(d, params.n_atoms, params.kappa);
}

ConversionRates ConversionRates::from(const DerivedRates& rates, double n_atoms, double kappa) {
    ConversionRates r;
    r.chi = rates.chi;
    r.kappa = kappa;
    r.coupling = rates.raman_coupling * std::sqrt(n_atoms);
    r.fluorescence = rates.fluorescence_rate * n_atoms;
    return r;
}

namespace {

// Composite Simpson on a uniform grid; requires an even interval count.
double simpson(const Eigen::ArrayXd& values, double dt) {
    const Eigen::Index n = values.size() - 1;
    double acc = values[0] + values[n];
    for (Eigen::Index i = 1; i < n; ++i)
        acc += values[i] * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * dt / 3.0;
}

} // namespace

ConversionResult simulate_conversion(const ConversionRates& rates, const PulseEnvelope& pulse,
                                     const SolverSettings& solver) {
    if (!(rates.chi > 0.0) || !(rates.kappa > 0.0))
        throw InvalidParameterError("chi and kappa must be strictly positive");
    if (rates.coupling < 0.0 || rates.fluorescence < 0.0)
        throw InvalidParameterError("coupling and fluorescence rates must be nonnegative");
    if (solver.grid_points < 16)
        throw InvalidParameterError("grid_points too small");

    double lo, hi;
    pulse.support(lo, hi);
    const double slow = std::min(rates.chi, rates.kappa);
    const double t_start = lo - 0.1 * (hi - lo);
    const double t_end = hi + solver.tail_decay_times * 2.0 / slow;

    if (std::abs(pulse(t_start)) > 1e-6 || std::abs(pulse(t_end)) > 1e-6)
        throw NumericalError("pulse not contained in the integration window");

    const int n = solver.grid_points + (solver.grid_points % 2); // Simpson wants even
    const double dt = (t_end - t_start) / n;

    using State = Eigen::Vector2cd;
    const std::complex<double> im(0.0, 1.0);
    const double sqrt_chi = std::sqrt(rates.chi);
    const double sqrt_kappa = std::sqrt(rates.kappa);
    auto rhs = [&](double t, const State& y) -> State {
        State dy;
        dy[0] = -im * rates.coupling * y[1] -
                0.5 * (rates.chi + rates.fluorescence) * y[0] - sqrt_chi * pulse(t);
        dy[1] = -im * rates.coupling * y[0] - 0.5 * rates.kappa * y[1];
        return dy;
    };

    const double fastest =
        std::max({rates.chi, rates.kappa, rates.coupling, rates.fluorescence});
    const double h0 = std::min(dt, 0.1 / fastest);

    DormandPrince<State, decltype(rhs)> stepper(
        rhs, solver.adaptive ? solver.rel_tol : -1.0, solver.abs_tol);

    ConversionResult out;
    out.time = Eigen::ArrayXd::LinSpaced(n + 1, t_start, t_end);
    out.phi1.resize(n + 1);
    out.phi2.resize(n + 1);
    Eigen::ArrayXd intra1_sq(n + 1);

    State y = State::Zero();
    for (int i = 0; i <= n; ++i) {
        const double t = out.time[i];
        if (i > 0) stepper.integrate_to(y, out.time[i - 1], t, h0);
        out.phi1[i] = pulse(t) + sqrt_chi * y[0];
        out.phi2[i] = sqrt_kappa * y[1];
        intra1_sq[i] = std::norm(y[0]);
    }

    out.n1_out = simpson(out.phi1.abs2(), dt);
    out.n2_out = simpson(out.phi2.abs2(), dt);
    out.n_fluor = rates.fluorescence * simpson(intra1_sq, dt);
    out.p = out.n2_out; // n1_in = 1
    out.spin_excitations = out.n2_out;

    const double balance = out.n1_out + out.n2_out + out.n_fluor;
    if (std::abs(balance - 1.0) > solver.conservation_tol)
        throw NonConvergenceError("photon number balance off by " +
                                  std::to_string(balance - 1.0));
    return out;
}

double waveform_fidelity(const ConversionResult& result, const PulseEnvelope& pulse) {
    if (result.n2_out < 1e-9)
        throw NumericalError("no Stokes output; waveform fidelity undefined");
    const Eigen::Index n = result.time.size() - 1;
    const double dt = result.time[1] - result.time[0];
    Eigen::ArrayXd integrand(n + 1);
    for (Eigen::Index i = 0; i <= n; ++i)
        integrand[i] = std::abs(result.phi2[i]) * std::abs(pulse(result.time[i]));
    return simpson(integrand, dt) / std::sqrt(result.n2_out);
}

std::pair<double, double> output_state(const ConversionResult& result) {
    return {std::sqrt(std::max(result.n1_out, 0.0)), std::sqrt(std::max(result.n2_out, 0.0))};
}

} // namespace repeaterlab
