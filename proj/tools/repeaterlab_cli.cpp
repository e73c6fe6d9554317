#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "repeaterlab/report.hpp"

namespace {

using namespace repeaterlab;

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::ios_base::failure("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct Cli {
    std::string scenario_path;
    std::string out_path;
    RunOptions opts;

    // flag overrides
    double l_km = -1, nesting = -1, l0_km = -1, l_att_km = -1;
    double eta_d = -1, eta_m = -1, p = -1, c_fiber = -1;
    double swap_intrinsic = -1, post_intrinsic = -1, tau_mem_s = -1;
    double p_dlcz = -1, eta_m_dlcz = -1;
    bool comm_delay = false, dlcz_link = false;
    double sigma = -1, omega = -1, lambda_um = -1, window = -1;
    std::string jitter;

    Scenario load() const {
        Scenario s;
        if (!scenario_path.empty())
            s = parse_scenario(read_file(scenario_path));
        return s;
    }

    void apply_link(LinkParams& l) const {
        if (l0_km >= 0) l.l0_km = l0_km;
        if (l_att_km >= 0) l.l_att_km = l_att_km;
        if (eta_d >= 0) l.eta_d = eta_d;
        if (p >= 0) l.p = p;
        if (c_fiber >= 0) l.c_fiber = c_fiber;
        if (dlcz_link) l.dlcz = true;
    }

    void apply_chain(Scenario& s) const {
        if (!s.chain) {
            if (l_km < 0)
                throw InvalidParameterError("chain needs a [chain] section or --L");
            s.chain = ChainConfig{};
            s.chain->l_km = l_km;
            if (s.link) s.chain->link = *s.link;
        }
        ChainConfig& c = *s.chain;
        if (l_km >= 0) c.l_km = l_km;
        if (nesting >= 0) c.nesting = static_cast<int>(nesting);
        if (eta_m >= 0) c.eta_m = eta_m;
        if (swap_intrinsic >= 0) c.swap_intrinsic = swap_intrinsic;
        if (post_intrinsic >= 0) c.post_intrinsic = post_intrinsic;
        if (comm_delay) c.include_comm_delay = true;
        if (tau_mem_s >= 0) c.tau_mem_s = tau_mem_s;
        if (p_dlcz >= 0) s.p_dlcz = p_dlcz;
        if (eta_m_dlcz >= 0) s.eta_m_dlcz = eta_m_dlcz;
        apply_link(c.link);
    }

    void apply_phase(Scenario& s) const {
        if (!s.phase) s.phase = PhaseModel{};
        PhaseModel& m = *s.phase;
        if (!jitter.empty()) {
            if (jitter == "phase")
                m.jitter_kind = PhaseModel::Jitter::gaussian_phase;
            else if (jitter == "timing")
                m.jitter_kind = PhaseModel::Jitter::gaussian_timing;
            else
                throw InvalidParameterError("--jitter must be phase or timing");
        }
        if (lambda_um >= 0) {
            if (!(lambda_um > 0))
                throw InvalidParameterError("--lambda-um must be positive");
            m.omega = 2.0 * M_PI * kSpeedOfLight / (lambda_um * 1e-6);
        }
        if (omega >= 0) m.omega = omega;
        if (sigma >= 0) m.sigma = sigma;
        if (window >= 0) m.window = window;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"repeaterlab: atom-cavity Raman conversion and repeater chain toolkit"};
    app.require_subcommand(1);

    Cli cli;
    app.add_option("--seed", cli.opts.seed, "master RNG seed");
    app.add_option("--trials", cli.opts.trials, "Monte Carlo trials / samples");
    app.add_option("--cap-slots", cli.opts.cap_slots, "per-trial slot budget");
    app.add_option("--out", cli.out_path, "write CSV to this file");

    auto add_scenario = [&](CLI::App* sub, bool required) {
        sub->fallthrough(); // global --seed/--trials/--out may follow the subcommand
        auto* opt = sub->add_option("scenario", cli.scenario_path, "scenario file");
        if (required) opt->required();
    };

    auto* convert = app.add_subcommand("convert", "single-photon Raman conversion");
    add_scenario(convert, true);

    auto* link = app.add_subcommand("link", "elementary link budget");
    add_scenario(link, false);
    link->add_option("--l0", cli.l0_km, "link length, km");
    link->add_option("--l-att", cli.l_att_km, "attenuation length, km");
    link->add_option("--eta-d", cli.eta_d, "detector efficiency");
    link->add_option("--p", cli.p, "Stokes emission probability");
    link->add_option("--c-fiber", cli.c_fiber, "signal speed, m/s");
    link->add_flag("--dlcz", cli.dlcz_link, "DLCZ-style half-path transmission");

    auto add_chain_flags = [&](CLI::App* sub) {
        add_scenario(sub, false);
        sub->add_option("--L", cli.l_km, "total distance, km");
        sub->add_option("--n", cli.nesting, "nesting level");
        sub->add_option("--l-att", cli.l_att_km, "attenuation length, km");
        sub->add_option("--eta-d", cli.eta_d, "detector efficiency");
        sub->add_option("--eta-m", cli.eta_m, "memory efficiency");
        sub->add_option("--p", cli.p, "Stokes emission probability");
        sub->add_option("--c-fiber", cli.c_fiber, "signal speed, m/s");
        sub->add_option("--swap-intrinsic", cli.swap_intrinsic, "intrinsic swap success");
        sub->add_option("--post-intrinsic", cli.post_intrinsic, "intrinsic post-selection success");
        sub->add_flag("--comm-delay", cli.comm_delay, "include classical signalling delays");
        sub->add_option("--tau-mem", cli.tau_mem_s, "memory lifetime, s");
        sub->add_option("--p-dlcz", cli.p_dlcz, "DLCZ emission probability");
        sub->add_option("--eta-m-dlcz", cli.eta_m_dlcz, "DLCZ memory efficiency");
    };
    auto* chain = app.add_subcommand("chain", "nested repeater chain timing");
    add_chain_flags(chain);
    auto* compare = app.add_subcommand("compare-dlcz", "speedup over the DLCZ baseline");
    add_chain_flags(compare);

    auto* phase = app.add_subcommand("phase", "pathway phase and swap fidelity");
    add_scenario(phase, false);
    phase->add_option("--sigma", cli.sigma, "jitter std dev (rad or s)");
    phase->add_option("--jitter", cli.jitter, "phase | timing");
    phase->add_option("--omega", cli.omega, "optical angular frequency, rad/s");
    phase->add_option("--lambda-um", cli.lambda_um, "wavelength, um");
    phase->add_option("--window", cli.window, "exposure window, s");

    auto* sweep = app.add_subcommand("sweep", "parameter sweep from a scenario file");
    add_scenario(sweep, true);

    CLI11_PARSE(app, argc, argv);

    try {
        Scenario s = cli.load();
        const std::string command = app.get_subcommands().front()->get_name();
        if (command == "link" && !s.link) {
            s.link = LinkParams{};
            s.link->l0_km = 0.0;
        }
        if (command == "link") cli.apply_link(*s.link);
        if (command == "chain" || command == "compare-dlcz") cli.apply_chain(s);
        if (command == "phase") cli.apply_phase(s);

        const Report rep = run_scenario(s, command, cli.opts);
        std::cout << rep.text;
        if (!cli.out_path.empty())
            emit_csv(rep, cli.out_path);
        else
            std::cout << rep.csv();
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidParameterError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    }
}
