#include "repeaterlab/core_params.hpp"

#include <algorithm>
#include <cmath>

namespace repeaterlab {

void AtomCavityParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw InvalidParameterError(std::string(name) + " must be strictly positive");
    };
    if (!(n_atoms >= 1.0))
        throw InvalidParameterError("n_atoms must be >= 1");
    positive(g1, "g1");
    positive(g2, "g2");
    positive(delta, "delta");
    positive(gamma3, "gamma3");
    positive(kappa, "kappa");
    positive(length, "length");
    positive(c, "c");
}

bool AtomCavityParams::far_detuned() const {
    return delta >= 10.0 * std::max({kappa, g1, g2});
}

DerivedRates derive_rates(const AtomCavityParams& params) {
    params.validate();
    DerivedRates r;
    r.raman_coupling = params.g1 * params.g2 / params.delta;
    r.chi = params.c / params.length;
    r.fluorescence_rate = (params.g1 / params.delta) * (params.g1 / params.delta) * params.gamma3;
    r.cooperativity = 4.0 * params.n_atoms * r.raman_coupling * r.raman_coupling /
                      (r.chi * params.kappa);
    return r;
}

double required_atom_number(const AtomCavityParams& params) {
    params.validate();
    const double g = params.g1 * params.g2 / params.delta;
    const double chi = params.c / params.length;
    return chi * params.kappa / (4.0 * g * g);
}

double fluorescence_ratio(const AtomCavityParams& params) {
    // N = 0 is allowed here as a formal limit.
    if (params.n_atoms < 0.0)
        throw InvalidParameterError("n_atoms must be nonnegative");
    AtomCavityParams p = params;
    p.n_atoms = std::max(params.n_atoms, 1.0);
    p.validate();
    const double gamma = (params.g1 / params.delta) * (params.g1 / params.delta) * params.gamma3;
    const double chi = params.c / params.length;
    return gamma * params.n_atoms / chi;
}

std::optional<AtomCavityParams> find_preset(const std::string& name) {
    if (name == "rb87-paper") {
        // 87Rb D2 numbers: gamma3 = 2*pi x 6 MHz, g1 = g2 = 10*gamma3,
        // Delta = 50*gamma3, kappa = 3*gamma3, L = 100 um.
        const double gamma3 = 2.0 * M_PI * 6.0e6;
        AtomCavityParams p;
        p.n_atoms = 1.0e6;
        p.g1 = 10.0 * gamma3;
        p.g2 = 10.0 * gamma3;
        p.delta = 50.0 * gamma3;
        p.gamma3 = gamma3;
        p.kappa = 3.0 * gamma3;
        p.length = 1.0e-4;
        return p;
    }
    if (name == "rb87-matched") {
        // Same rates with N chosen so that eta = 1.
        auto p = *find_preset("rb87-paper");
        p.n_atoms = required_atom_number(p);
        return p;
    }
    return std::nullopt;
}

std::vector<std::string> preset_names() {
    return {"rb87-paper", "rb87-matched"};
}

} // namespace repeaterlab
