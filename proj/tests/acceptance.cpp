// Acceptance suite: one pass/fail line per criterion.
// Usage: acceptance [path-to-cli-binary]

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "repeaterlab/phase_fidelity.hpp"
#include "repeaterlab/raman.hpp"
#include "repeaterlab/report.hpp"
#include "repeaterlab/repeater_chain.hpp"

using namespace repeaterlab;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] criterion " << number << ": " << name << "\n";
    } catch (const std::exception& e) {
        std::cout << "[FAIL] criterion " << number << ": " << name << " -- " << e.what()
                  << "\n";
        ++g_failures;
    }
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

ConversionRates dimensionless(double eta) {
    return ConversionRates{1.0, 1.0, 0.5 * std::sqrt(eta), 0.0};
}

ChainConfig long_haul(int n, double eta_m = 1.0) {
    ChainConfig c;
    c.l_km = 1000.0;
    c.nesting = n;
    c.link.l_att_km = 22.0;
    c.link.p = 1.0;
    c.link.eta_d = 1.0;
    c.eta_m = eta_m;
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "impedance match: p(1) = 1 and leak(1) = 0 exactly", [] {
        expect(stokes_probability(1.0) == 1.0, "stokes_probability(1) != 1");
        expect(leak_fraction(1.0) == 0.0, "leak_fraction(1) != 0");
    });

    criterion(2, "ODE matches the analytic splitter for eta in {0.5, 1, 2}", [] {
        const PulseEnvelope pulse = PulseEnvelope::gaussian(0.0, 200.0);
        for (double eta : {0.5, 1.0, 2.0}) {
            const ConversionResult res = simulate_conversion(dimensionless(eta), pulse);
            const double target = stokes_probability(eta);
            expect(std::abs(res.p - target) <= 1e-3,
                   "p deviates from closed form at eta = " + std::to_string(eta));
            expect(std::abs(res.n1_out + res.n2_out - 1.0) <= 1e-6,
                   "photon balance broken at eta = " + std::to_string(eta));
        }
    });

    criterion(3, "Stokes waveform reproduces the input shape (overlap >= 0.995)", [] {
        const PulseEnvelope pulse = PulseEnvelope::gaussian(0.0, 200.0);
        const ConversionResult res = simulate_conversion(dimensionless(1.0), pulse);
        const double overlap = waveform_fidelity(res, pulse);
        expect(overlap >= 0.995, "overlap = " + std::to_string(overlap));
    });

    criterion(4, "link timing: 60 km gives tau = 3.1e-3 s, within 50% of 0.004 s", [] {
        LinkParams l;
        l.l0_km = 60.0;
        l.l_att_km = 22.0;
        const double tau = expected_link_time(l);
        expect(std::abs(tau - 3.1e-3) / 3.1e-3 < 0.02, "tau = " + std::to_string(tau));
        expect(std::abs(tau - 0.004) / 0.004 < 0.5, "tau outside 50% of 0.004 s");
    });

    criterion(5, "1000 km, n = 4 analytic time lands in [0.3, 30] s", [] {
        const double t = analytic_total_time(long_haul(4));
        expect(t >= 0.3 && t <= 30.0, "T_tot = " + std::to_string(t));
    });

    criterion(6, "memory scaling eta_m^-(n+2) exact to 1e-10", [] {
        for (int n : {1, 2, 4}) {
            const double t1 = analytic_total_time(long_haul(n));
            for (double eta_m : {0.5, 0.8, 0.9}) {
                const double ratio = analytic_total_time(long_haul(n, eta_m)) / t1;
                const double expected = std::pow(eta_m, -(n + 2));
                expect(std::abs(ratio - expected) / expected <= 1e-10,
                       "scaling off at n = " + std::to_string(n));
            }
        }
    });

    criterion(7, "DLCZ speedup: exact ratio form, 100 at L0 -> 0, >= 90 with memory penalty",
              [] {
                  ChainConfig c = long_haul(2);
                  ChainConfig dlcz = c;
                  dlcz.link.p = 0.01;
                  dlcz.link.dlcz = true;
                  const double p_ratio = link_success_probability(c.elementary_link()) /
                                         link_success_probability(dlcz.elementary_link());
                  const double speedup = dlcz_comparison(c, 0.01, c.eta_m);
                  expect(std::abs(speedup - p_ratio) / p_ratio <= 1e-12,
                         "ratio form violated");

                  ChainConfig tiny = long_haul(0);
                  tiny.l_km = 1e-280;
                  expect(std::abs(dlcz_comparison(tiny, 0.01, 1.0) - 100.0) <= 1e-10,
                         "L0 -> 0 limit is not 100");

                  ChainConfig wide = long_haul(4);
                  const double with_penalty = dlcz_comparison(wide, 0.01, 0.8);
                  expect(with_penalty >= 90.0,
                         "speedup with memory penalty = " + std::to_string(with_penalty));
              });

    criterion(8, "Monte Carlo within [0.5, 1.5]x analytic (n <= 3); n = 0 within 2%", [] {
        for (int n : {1, 2, 3}) {
            ChainConfig c = long_haul(n);
            c.l_km = 250.0;
            const ChainResult r = monte_carlo_total_time(c, 10000, 2024);
            expect(r.t_mc_mean >= 0.5 * r.t_analytic && r.t_mc_mean <= 1.5 * r.t_analytic,
                   "MC outside the band at n = " + std::to_string(n));
        }
        ChainConfig c0 = long_haul(0);
        c0.l_km = 1.0;
        c0.link.l_att_km = 1e12;
        c0.link.p = 0.5;
        c0.post_intrinsic = 1.0;
        const ChainResult r0 = monte_carlo_total_time(c0, 100000, 99);
        const double geometric = 2.0 * attempt_period(c0.elementary_link());
        expect(std::abs(r0.t_mc_mean - geometric) / geometric <= 0.02,
               "n = 0 mean off the geometric expectation");
    });

    criterion(9, "phase fidelity: closed form vs sampling; 1 fs timing gives ~2.4 rad", [] {
        PhaseModel m;
        for (double sigma : {0.5, 1.0, 2.0}) {
            m.sigma = sigma;
            const MeanFidelity f = mean_fidelity(m, 100000, 5150 + int(sigma * 10));
            expect(std::abs(f.sampled - f.analytic) <= 3.0 * f.sampled_stderr,
                   "sampled mean off at sigma = " + std::to_string(sigma));
        }
        PhaseModel t;
        t.jitter_kind = PhaseModel::Jitter::gaussian_timing;
        t.omega = 2.0 * M_PI * kSpeedOfLight / 0.8e-6;
        t.sigma = 1e-15;
        expect(std::abs(t.sigma_phi() - 2.4) < 0.05,
               "sigma_phi = " + std::to_string(t.sigma_phi()));
    });

    criterion(10, "repeated CLI invocations produce byte-identical CSV", [&] {
        if (cli.empty()) {
            // fall back to the library path the CLI wraps
            const Scenario s =
                parse_scenario("[chain]\nl_km = 250\nn = 2\n");
            RunOptions opts;
            opts.seed = 31337;
            opts.trials = 1000;
            expect(run_scenario(s, "chain", opts).csv() ==
                       run_scenario(s, "chain", opts).csv(),
                   "library-level CSV differs between runs");
            return;
        }
        const std::string cmd = cli +
            " chain --L 250 --n 2 --seed 31337 --trials 1000 --out ";
        expect(std::system((cmd + "acc_a.csv > /dev/null").c_str()) == 0, "CLI run failed");
        expect(std::system((cmd + "acc_b.csv > /dev/null").c_str()) == 0, "CLI run failed");
        const std::string a = slurp("acc_a.csv");
        expect(!a.empty() && a == slurp("acc_b.csv"), "CSV bytes differ between runs");
        std::remove("acc_a.csv");
        std::remove("acc_b.csv");

        const std::string pcmd = cli + " phase --sigma 1 --seed 4 --trials 5000 --out ";
        expect(std::system((pcmd + "acc_p1.csv > /dev/null").c_str()) == 0, "CLI run failed");
        expect(std::system((pcmd + "acc_p2.csv > /dev/null").c_str()) == 0, "CLI run failed");
        const std::string p1 = slurp("acc_p1.csv");
        expect(!p1.empty() && p1 == slurp("acc_p2.csv"), "phase CSV bytes differ");
        std::remove("acc_p1.csv");
        std::remove("acc_p2.csv");
    });

    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criteria failed\n";
    return 1;
}
