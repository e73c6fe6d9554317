#ifndef REPEATERLAB_SCENARIO_HPP
#define REPEATERLAB_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "repeaterlab/core_params.hpp"
#include "repeaterlab/phase_fidelity.hpp"
#include "repeaterlab/pulse.hpp"
#include "repeaterlab/raman.hpp"
#include "repeaterlab/repeater_chain.hpp"

namespace repeaterlab {

/// One sweep axis: "section.key" swept over a linear or log grid.
struct SweepAxis {
    std::string param;
    double start;
    double stop;
    int steps;
    bool log = false;
};

struct PulseSpec {
    std::string kind = "gaussian"; // gaussian | square
    double t0 = 0.0;
    double sigma_t = 0.0;
    double duration = 0.0;

    PulseEnvelope build() const;
};

/// Parsed scenario file. Sections are optional; each subcommand
/// requires the ones it consumes.
struct Scenario {
    std::string name;
    std::optional<AtomCavityParams> block;
    std::optional<ConversionRates> rates;
    std::optional<PulseSpec> pulse;
    std::optional<LinkParams> link;
    std::optional<ChainConfig> chain; ///< link fields folded in from [link]
    double p_dlcz = 0.01;
    double eta_m_dlcz = 1.0;
    std::optional<PhaseModel> phase;
    std::vector<SweepAxis> sweep;
};

/// Line-oriented format: [section] headers, key = value pairs, '#'
/// comments. Unknown sections or keys are hard errors; ranges are
/// checked here so later stages see only valid values.
Scenario parse_scenario(const std::string& text);

/// Canonical text form; parse(serialize(s)) reproduces s.
std::string serialize_scenario(const Scenario& s);

} // namespace repeaterlab

#endif
