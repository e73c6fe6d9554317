#ifndef REPEATERLAB_REPORT_HPP
#define REPEATERLAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "repeaterlab/scenario.hpp"

namespace repeaterlab {

/// Deterministic run output: a human-readable text block plus plot-ready
/// CSV. Identical (scenario, command, seed, trials) give identical bytes.
struct Report {
    std::string text;
    std::string csv_header;
    std::vector<std::string> csv_rows;

    std::string csv() const;
};

struct RunOptions {
    std::uint64_t seed = 0;
    std::uint64_t trials = 10000;
    std::uint64_t cap_slots = 1'000'000'000ULL;
};

/// Doubles in reports and CSV carry 9 significant digits.
std::string format_number(double v);

/// command: convert | link | chain | compare-dlcz | phase | sweep
Report run_scenario(const Scenario& s, const std::string& command, const RunOptions& opts);

void emit_csv(const Report& report, const std::string& path);

} // namespace repeaterlab

#endif
