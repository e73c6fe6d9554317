#include "repeaterlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "repeaterlab/rng.hpp"

namespace repeaterlab {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string Report::csv() const {
    std::string out = csv_header + "\n";
    for (const auto& row : csv_rows) {
        out += row;
        out += "\n";
    }
    return out;
}

void emit_csv(const Report& report, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::ios_base::failure("cannot open " + path + " for writing");
    f << report.csv();
    if (!f)
        throw std::ios_base::failure("write failed: " + path);
}

namespace {

std::string fnum(double v) { return format_number(v); }

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameterError(what);
}

struct Line {
    std::ostringstream& os;
    void operator()(const std::string& key, double v) const {
        os << key << " = " << fnum(v) << "\n";
    }
    void operator()(const std::string& key, const std::string& v) const {
        os << key << " = " << v << "\n";
    }
};

void echo_link(Line& put, const LinkParams& l) {
    put("link.l0_km", l.l0_km);
    put("link.l_att_km", l.l_att_km);
    put("link.eta_d", l.eta_d);
    put("link.p", l.p);
    put("link.c_fiber", l.c_fiber);
    put("link.dlcz", l.dlcz ? "true" : "false");
}

Report run_convert(const Scenario& s, const RunOptions&) {
    require(s.rates.has_value() || s.block.has_value(),
            "convert needs a [rates] or [block] section");
    Report rep;
    std::ostringstream os;
    Line put{os};
    os << "# convert\n";

    ConversionRates rates{};
    if (s.rates) {
        rates = *s.rates;
    } else {
        const auto& b = *s.block;
        rates = ConversionRates::from(b);
        const DerivedRates d = derive_rates(b);
        put("block.n_atoms", b.n_atoms);
        put("block.g1", b.g1);
        put("block.g2", b.g2);
        put("block.delta", b.delta);
        put("block.gamma3", b.gamma3);
        put("block.kappa", b.kappa);
        put("block.length", b.length);
        put("block.c", b.c);
        put("block.far_detuned", b.far_detuned() ? "true" : "false");
        put("derived.raman_coupling", d.raman_coupling);
        put("derived.chi", d.chi);
        put("derived.fluorescence_rate", d.fluorescence_rate);
        put("derived.required_atom_number", required_atom_number(b));
        put("derived.fluorescence_ratio", fluorescence_ratio(b));
    }
    put("rates.chi", rates.chi);
    put("rates.kappa", rates.kappa);
    put("rates.coupling", rates.coupling);
    put("rates.fluorescence", rates.fluorescence);

    const double eta = rates.cooperativity();
    put("eta", eta);
    put("analytic.p_stokes", stokes_probability(eta));
    put("analytic.leak_fraction", leak_fraction(eta));

    if (s.pulse) {
        const PulseEnvelope pulse = s.pulse->build();
        const ConversionResult res = simulate_conversion(rates, pulse);
        put("pulse.kind", s.pulse->kind);
        put("pulse.t0", s.pulse->t0);
        if (s.pulse->kind == "gaussian") put("pulse.sigma_t", s.pulse->sigma_t);
        if (s.pulse->kind == "square") put("pulse.duration", s.pulse->duration);
        put("ode.p", res.p);
        put("ode.n1_out", res.n1_out);
        put("ode.n2_out", res.n2_out);
        put("ode.n_fluor", res.n_fluor);
        put("ode.spin_excitations", res.spin_excitations);
        const auto [a0, a1] = output_state(res);
        put("ode.amplitude0", a0);
        put("ode.amplitude1", a1);
        if (res.n2_out >= 1e-9)
            put("ode.waveform_fidelity", waveform_fidelity(res, pulse));

        rep.csv_header = "t,re_f,im_f,phi1_sq,phi2_sq,cum_n1,cum_n2";
        const double dt = res.time[1] - res.time[0];
        double c1 = 0.0, c2 = 0.0;
        double prev1 = 0.0, prev2 = 0.0;
        for (Eigen::Index i = 0; i < res.time.size(); ++i) {
            const std::complex<double> f = pulse(res.time[i]);
            const double a1sq = std::norm(res.phi1[i]);
            const double a2sq = std::norm(res.phi2[i]);
            if (i > 0) {
                c1 += 0.5 * dt * (prev1 + a1sq);
                c2 += 0.5 * dt * (prev2 + a2sq);
            }
            prev1 = a1sq;
            prev2 = a2sq;
            rep.csv_rows.push_back(fnum(res.time[i]) + "," + fnum(f.real()) + "," +
                                   fnum(f.imag()) + "," + fnum(a1sq) + "," + fnum(a2sq) + "," +
                                   fnum(c1) + "," + fnum(c2));
        }
    } else {
        rep.csv_header = "eta,p_stokes,leak_fraction";
        rep.csv_rows.push_back(fnum(eta) + "," + fnum(stokes_probability(eta)) + "," +
                               fnum(leak_fraction(eta)));
    }
    rep.text = os.str();
    return rep;
}

std::string link_csv_row(const LinkParams& l) {
    const double eta_t =
        transmission_efficiency(l.l0_km, l.dlcz ? 2.0 * l.l_att_km : l.l_att_km);
    const double p0 = link_success_probability(l);
    return fnum(l.l0_km) + "," + fnum(eta_t) + "," + fnum(p0) + "," +
           fnum(expected_link_time(l));
}

Report run_link(const Scenario& s, const RunOptions&) {
    require(s.link.has_value(), "link needs a [link] section");
    const LinkParams& l = *s.link;
    Report rep;
    std::ostringstream os;
    Line put{os};
    os << "# link\n";
    echo_link(put, l);
    const double eta_t =
        transmission_efficiency(l.l0_km, l.dlcz ? 2.0 * l.l_att_km : l.l_att_km);
    put("eta_t", eta_t);
    put("P0", link_success_probability(l));
    put("tau_s", expected_link_time(l));
    put("phase_exposure_window_s", phase_exposure_window(l));
    rep.text = os.str();
    rep.csv_header = "l0_km,eta_t,P0,tau_s";
    rep.csv_rows.push_back(link_csv_row(l));
    return rep;
}

void echo_chain(Line& put, const ChainConfig& c, double p_dlcz, double eta_m_dlcz) {
    put("chain.l_km", c.l_km);
    put("chain.n", static_cast<double>(c.nesting));
    put("chain.l0_km", c.l0_km());
    put("chain.eta_m", c.eta_m);
    put("chain.swap_intrinsic", c.swap_intrinsic);
    put("chain.post_intrinsic", c.post_intrinsic);
    put("chain.include_comm_delay", c.include_comm_delay ? "true" : "false");
    put("chain.tau_mem_s", c.tau_mem_s);
    put("chain.p_dlcz", p_dlcz);
    put("chain.eta_m_dlcz", eta_m_dlcz);
    echo_link(put, c.elementary_link());
}

std::string chain_csv_row(const ChainConfig& c, const ChainResult& r, double speedup) {
    return fnum(c.l_km) + "," + std::to_string(c.nesting) + "," + fnum(c.l0_km()) + "," +
           fnum(link_success_probability(c.elementary_link())) + "," + fnum(r.t_analytic) +
           "," + fnum(r.t_mc_mean) + "," + fnum(r.t_mc_stderr) + "," + fnum(speedup);
}

Report run_chain(const Scenario& s, const RunOptions& opts) {
    require(s.chain.has_value(), "chain needs a [chain] section");
    const ChainConfig& c = *s.chain;
    const ChainResult r = monte_carlo_total_time(c, opts.trials, opts.seed, opts.cap_slots);
    const double speedup = dlcz_comparison(c, s.p_dlcz, s.eta_m_dlcz);

    Report rep;
    std::ostringstream os;
    Line put{os};
    os << "# chain\n";
    echo_chain(put, c, s.p_dlcz, s.eta_m_dlcz);
    put("seed", static_cast<double>(opts.seed));
    put("trials", static_cast<double>(opts.trials));
    put("P0", link_success_probability(c.elementary_link()));
    put("P_swap", c.p_swap());
    put("P_post", c.p_post());
    put("T_analytic_s", r.t_analytic);
    put("T_mc_mean_s", r.t_mc_mean);
    put("T_mc_stderr_s", r.t_mc_stderr);
    put("final_success_fraction", r.final_success_fraction);
    for (std::size_t lvl = 0; lvl < r.per_level_mean_s.size(); ++lvl)
        put("per_level_mean_s." + std::to_string(lvl), r.per_level_mean_s[lvl]);
    put("speedup_vs_dlcz", speedup);
    rep.text = os.str();
    rep.csv_header = "L_km,n,L0_km,P0,T_analytic_s,T_mc_mean_s,T_mc_stderr_s,speedup_vs_dlcz";
    rep.csv_rows.push_back(chain_csv_row(c, r, speedup));
    return rep;
}

Report run_compare_dlcz(const Scenario& s, const RunOptions&) {
    require(s.chain.has_value(), "compare-dlcz needs a [chain] section");
    const ChainConfig& c = *s.chain;
    ChainConfig dlcz = c;
    dlcz.link.p = s.p_dlcz;
    dlcz.link.dlcz = true;
    dlcz.eta_m = s.eta_m_dlcz;

    Report rep;
    std::ostringstream os;
    Line put{os};
    os << "# compare-dlcz\n";
    echo_chain(put, c, s.p_dlcz, s.eta_m_dlcz);
    const double p0 = link_success_probability(c.elementary_link());
    const double p0_dlcz = link_success_probability(dlcz.elementary_link());
    const double t_ours = analytic_total_time(c);
    const double t_dlcz = analytic_total_time(dlcz);
    put("P0", p0);
    put("P0_dlcz", p0_dlcz);
    put("T_analytic_s", t_ours);
    put("T_analytic_dlcz_s", t_dlcz);
    put("speedup_vs_dlcz", t_dlcz / t_ours);
    rep.text = os.str();
    rep.csv_header = "L_km,n,P0,P0_dlcz,T_analytic_s,T_analytic_dlcz_s,speedup_vs_dlcz";
    rep.csv_rows.push_back(fnum(c.l_km) + "," + std::to_string(c.nesting) + "," + fnum(p0) +
                           "," + fnum(p0_dlcz) + "," + fnum(t_ours) + "," + fnum(t_dlcz) + "," +
                           fnum(t_dlcz / t_ours));
    return rep;
}

std::string phase_csv_row(const PhaseModel& m, const MeanFidelity& f) {
    return fnum(m.sigma_phi()) + "," + fnum(f.analytic) + "," + fnum(f.sampled) + "," +
           fnum(f.sampled_stderr);
}

Report run_phase(const Scenario& s, const RunOptions& opts) {
    require(s.phase.has_value(), "phase needs a [phase] section");
    const PhaseModel& m = *s.phase;
    const std::uint64_t samples = opts.trials;
    const MeanFidelity f = mean_fidelity(m, samples, opts.seed);

    Report rep;
    std::ostringstream os;
    Line put{os};
    os << "# phase\n";
    put("phase.jitter",
        m.jitter_kind == PhaseModel::Jitter::gaussian_timing ? "timing" : "phase");
    put("phase.omega", m.omega);
    put("phase.sigma", m.sigma);
    put("phase.window", m.window);
    put("seed", static_cast<double>(opts.seed));
    put("samples", static_cast<double>(samples));
    put("sigma_phi_rad", m.sigma_phi());
    put("f_analytic", f.analytic);
    put("f_sampled", f.sampled);
    put("f_sampled_stderr", f.sampled_stderr);
    if (s.link) put("phase_exposure_window_s", phase_exposure_window(*s.link));
    rep.text = os.str();
    rep.csv_header = "sigma_phi_rad,f_analytic,f_sampled,stderr";
    rep.csv_rows.push_back(phase_csv_row(m, f));
    return rep;
}

std::vector<double> axis_values(const SweepAxis& a) {
    std::vector<double> v;
    if (a.steps == 1) {
        v.push_back(a.start);
        return v;
    }
    for (int i = 0; i < a.steps; ++i) {
        const double u = static_cast<double>(i) / (a.steps - 1);
        if (a.log)
            v.push_back(a.start * std::pow(a.stop / a.start, u));
        else
            v.push_back(a.start + u * (a.stop - a.start));
    }
    return v;
}

void apply_axis(Scenario& s, const std::string& param, double value) {
    auto need_chain = [&]() -> ChainConfig& {
        require(s.chain.has_value(), "sweep over " + param + " needs a [chain] section");
        return *s.chain;
    };
    auto need_link = [&]() -> LinkParams& {
        if (s.chain) return s.chain->link;
        require(s.link.has_value(), "sweep over " + param + " needs a [link] section");
        return *s.link;
    };
    if (param == "chain.l_km") need_chain().l_km = value;
    else if (param == "chain.n") need_chain().nesting = static_cast<int>(std::lround(value));
    else if (param == "chain.eta_m") need_chain().eta_m = value;
    else if (param == "chain.tau_mem_s") need_chain().tau_mem_s = value;
    else if (param == "chain.p_dlcz") { need_chain(); s.p_dlcz = value; }
    else if (param == "chain.eta_m_dlcz") { need_chain(); s.eta_m_dlcz = value; }
    else if (param == "link.l0_km") need_link().l0_km = value;
    else if (param == "link.l_att_km") need_link().l_att_km = value;
    else if (param == "link.p") need_link().p = value;
    else if (param == "link.eta_d") need_link().eta_d = value;
    else if (param == "phase.sigma") {
        require(s.phase.has_value(), "sweep over phase.sigma needs a [phase] section");
        s.phase->sigma = value;
    } else if (param == "phase.window") {
        require(s.phase.has_value(), "sweep over phase.window needs a [phase] section");
        s.phase->window = value;
    } else {
        throw InvalidParameterError("unknown sweep parameter: " + param);
    }
}

Report run_sweep(const Scenario& s, const RunOptions& opts) {
    require(!s.sweep.empty(), "sweep needs a [sweep] section");
    bool all_phase = true;
    for (const auto& a : s.sweep)
        if (a.param.rfind("phase.", 0) != 0) all_phase = false;
    std::string target;
    if (all_phase)
        target = "phase";
    else if (s.chain)
        target = "chain";
    else if (s.link)
        target = "link";
    else
        throw InvalidParameterError("sweep needs a [chain], [link] or [phase] section");

    std::vector<double> ax0 = axis_values(s.sweep[0]);
    std::vector<double> ax1 =
        s.sweep.size() > 1 ? axis_values(s.sweep[1]) : std::vector<double>{0.0};

    Report rep;
    std::ostringstream os;
    os << "# sweep (" << target << ")\n";
    os << "points = " << ax0.size() * ax1.size() << "\n";

    std::uint64_t point = 0;
    for (double v0 : ax0) {
        for (double v1 : ax1) {
            Scenario pt = s;
            apply_axis(pt, s.sweep[0].param, v0);
            if (s.sweep.size() > 1) apply_axis(pt, s.sweep[1].param, v1);
            // each sweep point gets its own derived stream
            RunOptions po = opts;
            po.seed = Rng::splitmix64(opts.seed + 0x9e3779b97f4a7c15ULL * (point + 1));
            if (target == "phase") {
                const MeanFidelity f = mean_fidelity(*pt.phase, po.trials, po.seed);
                if (rep.csv_header.empty())
                    rep.csv_header = "sigma_phi_rad,f_analytic,f_sampled,stderr";
                rep.csv_rows.push_back(phase_csv_row(*pt.phase, f));
            } else if (target == "chain") {
                const ChainResult r =
                    monte_carlo_total_time(*pt.chain, po.trials, po.seed, po.cap_slots);
                const double speedup = dlcz_comparison(*pt.chain, pt.p_dlcz, pt.eta_m_dlcz);
                if (rep.csv_header.empty())
                    rep.csv_header =
                        "L_km,n,L0_km,P0,T_analytic_s,T_mc_mean_s,T_mc_stderr_s,speedup_vs_dlcz";
                rep.csv_rows.push_back(chain_csv_row(*pt.chain, r, speedup));
            } else {
                if (rep.csv_header.empty()) rep.csv_header = "l0_km,eta_t,P0,tau_s";
                rep.csv_rows.push_back(link_csv_row(*pt.link));
            }
            ++point;
        }
    }
    os << "rows = " << rep.csv_rows.size() << "\n";
    rep.text = os.str();
    return rep;
}

} // namespace

Report run_scenario(const Scenario& s, const std::string& command, const RunOptions& opts) {
    if (command == "convert") return run_convert(s, opts);
    if (command == "link") return run_link(s, opts);
    if (command == "chain") return run_chain(s, opts);
    if (command == "compare-dlcz") return run_compare_dlcz(s, opts);
    if (command == "phase") return run_phase(s, opts);
    if (command == "sweep") return run_sweep(s, opts);
    throw InvalidParameterError("unknown command: " + command);
}

} // namespace repeaterlab
