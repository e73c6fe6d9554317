#include "repeaterlab/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace repeaterlab {

PulseEnvelope PulseSpec::build() const {
    if (kind == "gaussian")
        return PulseEnvelope::gaussian(t0, sigma_t);
    if (kind == "square")
        return PulseEnvelope::square(t0, duration);
    throw InvalidParameterError("unknown pulse kind: " + kind);
}

namespace {

struct RawEntry {
    std::string value;
    int line;
};
using Section = std::map<std::string, RawEntry>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const RawEntry& e, const std::string& key) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(e.value, &pos);
    } catch (const std::exception&) {
        throw ParseError("value of '" + key + "' is not a number: " + e.value, e.line);
    }
    if (pos != e.value.size())
        throw ParseError("trailing characters in value of '" + key + "': " + e.value, e.line);
    if (!std::isfinite(v))
        throw ParseError("value of '" + key + "' must be finite", e.line);
    return v;
}

int to_int(const RawEntry& e, const std::string& key) {
    const double v = to_double(e, key);
    if (v != std::floor(v))
        throw ParseError("value of '" + key + "' must be an integer", e.line);
    return static_cast<int>(v);
}

bool to_bool(const RawEntry& e, const std::string& key) {
    if (e.value == "true" || e.value == "1") return true;
    if (e.value == "false" || e.value == "0") return false;
    throw ParseError("value of '" + key + "' must be true or false", e.line);
}

class SectionReader {
public:
    SectionReader(const Section& sec, std::string name, int line)
        : sec_(sec), name_(std::move(name)), line_(line) {}

    bool has(const std::string& key) {
        seen_.insert(key);
        return sec_.count(key) > 0;
    }
    double number(const std::string& key, double fallback) {
        seen_.insert(key);
        auto it = sec_.find(key);
        return it == sec_.end() ? fallback : to_double(it->second, key);
    }
    double required_number(const std::string& key) {
        seen_.insert(key);
        auto it = sec_.find(key);
        if (it == sec_.end())
            throw ParseError("section [" + name_ + "] is missing required key '" + key + "'",
                             line_);
        return to_double(it->second, key);
    }
    int integer(const std::string& key, int fallback) {
        seen_.insert(key);
        auto it = sec_.find(key);
        return it == sec_.end() ? fallback : to_int(it->second, key);
    }
    bool boolean(const std::string& key, bool fallback) {
        seen_.insert(key);
        auto it = sec_.find(key);
        return it == sec_.end() ? fallback : to_bool(it->second, key);
    }
    std::string text(const std::string& key, const std::string& fallback) {
        seen_.insert(key);
        auto it = sec_.find(key);
        return it == sec_.end() ? fallback : it->second.value;
    }
    double unit_interval(const std::string& key, double fallback) {
        const double v = number(key, fallback);
        if (v < 0.0 || v > 1.0) {
            auto it = sec_.find(key);
            throw ParseError("'" + key + "' must lie in [0, 1]", it->second.line);
        }
        return v;
    }
    int line_of(const std::string& key) const {
        auto it = sec_.find(key);
        return it == sec_.end() ? line_ : it->second.line;
    }
    void finish() const {
        for (const auto& [key, entry] : sec_)
            if (!seen_.count(key))
                throw ParseError("unknown key '" + key + "' in section [" + name_ + "]",
                                 entry.line);
    }

private:
    const Section& sec_;
    std::string name_;
    int line_;
    std::set<std::string> seen_;
};

SweepAxis parse_axis(const RawEntry& e, const std::string& key) {
    std::istringstream iss(e.value);
    SweepAxis a;
    std::string scale;
    if (!(iss >> a.param >> a.start >> a.stop >> a.steps >> scale))
        throw ParseError("'" + key + "' expects: <section.key> <start> <stop> <steps> lin|log",
                         e.line);
    std::string rest;
    if (iss >> rest)
        throw ParseError("trailing characters in '" + key + "'", e.line);
    if (a.steps < 1)
        throw ParseError("sweep steps must be >= 1", e.line);
    if (scale == "log")
        a.log = true;
    else if (scale != "lin")
        throw ParseError("sweep scale must be lin or log", e.line);
    if (a.log && (a.start <= 0.0 || a.stop <= 0.0))
        throw ParseError("log sweep requires positive endpoints", e.line);
    static const std::set<std::string> known = {
        "chain.l_km",  "chain.n",          "chain.eta_m",    "chain.tau_mem_s",
        "chain.p_dlcz", "chain.eta_m_dlcz", "link.l0_km",     "link.l_att_km",
        "link.p",      "link.eta_d",       "phase.sigma",    "phase.window"};
    if (!known.count(a.param))
        throw ParseError("unknown sweep parameter '" + a.param + "'", e.line);
    return a;
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    std::map<std::string, Section> sections;
    std::map<std::string, int> section_line;
    static const std::set<std::string> known_sections = {
        "scenario", "block", "rates", "pulse", "link", "chain", "phase", "sweep"};

    std::istringstream iss(text);
    std::string line;
    std::string current;
    int lineno = 0;
    while (std::getline(iss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("malformed section header: " + line, lineno);
            current = trim(line.substr(1, line.size() - 2));
            if (!known_sections.count(current))
                throw ParseError("unknown section [" + current + "]", lineno);
            if (!sections.count(current)) section_line[current] = lineno;
            sections[current]; // may be re-opened
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value': " + line, lineno);
        if (current.empty())
            throw ParseError("key outside any section: " + line, lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("expected 'key = value': " + line, lineno);
        auto& sec = sections[current];
        if (sec.count(key))
            throw ParseError("duplicate key '" + key + "'", lineno);
        sec[key] = RawEntry{value, lineno};
    }

    bool any_payload = false;
    for (const auto& [name, sec] : sections)
        if (name != "scenario" && !sec.empty()) any_payload = true;
    if (!any_payload)
        throw ParseError("missing required section: at least one of [block], [rates], [pulse], "
                         "[link], [chain], [phase] must be present",
                         lineno == 0 ? 1 : lineno);

    Scenario s;
    if (sections.count("scenario")) {
        SectionReader r(sections["scenario"], "scenario", section_line["scenario"]);
        s.name = r.text("name", "");
        r.finish();
    }
    if (sections.count("block")) {
        SectionReader r(sections["block"], "block", section_line["block"]);
        AtomCavityParams p{};
        if (r.has("preset")) {
            const std::string preset = r.text("preset", "");
            auto found = find_preset(preset);
            if (!found)
                throw ParseError("unknown preset '" + preset + "'", r.line_of("preset"));
            p = *found;
        } else {
            p.g1 = r.required_number("g1");
            p.g2 = r.required_number("g2");
            p.delta = r.required_number("delta");
            p.gamma3 = r.required_number("gamma3");
            p.kappa = r.required_number("kappa");
            p.length = r.required_number("length");
            p.n_atoms = 1.0;
            p.c = kSpeedOfLight;
        }
        p.n_atoms = r.number("n_atoms", p.n_atoms);
        p.g1 = r.number("g1", p.g1);
        p.g2 = r.number("g2", p.g2);
        p.delta = r.number("delta", p.delta);
        p.gamma3 = r.number("gamma3", p.gamma3);
        p.kappa = r.number("kappa", p.kappa);
        p.length = r.number("length", p.length);
        p.c = r.number("c", p.c);
        r.finish();
        try {
            p.validate();
        } catch (const InvalidParameterError& e) {
            throw ParseError(std::string("[block]: ") + e.what(), section_line["block"]);
        }
        s.block = p;
    }
    if (sections.count("rates")) {
        SectionReader r(sections["rates"], "rates", section_line["rates"]);
        ConversionRates cr{};
        cr.chi = r.number("chi", 1.0);
        cr.kappa = r.number("kappa", 1.0);
        cr.coupling = r.required_number("coupling");
        cr.fluorescence = r.number("fluorescence", 0.0);
        r.finish();
        if (!(cr.chi > 0.0) || !(cr.kappa > 0.0))
            throw ParseError("[rates]: chi and kappa must be strictly positive",
                             section_line["rates"]);
        if (cr.coupling < 0.0 || cr.fluorescence < 0.0)
            throw ParseError("[rates]: coupling and fluorescence must be nonnegative",
                             section_line["rates"]);
        s.rates = cr;
    }
    if (sections.count("pulse")) {
        SectionReader r(sections["pulse"], "pulse", section_line["pulse"]);
        PulseSpec ps;
        ps.kind = r.text("kind", "gaussian");
        if (ps.kind != "gaussian" && ps.kind != "square")
            throw ParseError("pulse kind must be gaussian or square", r.line_of("kind"));
        ps.t0 = r.number("t0", 0.0);
        ps.sigma_t = r.number("sigma_t", 0.0);
        ps.duration = r.number("duration", 0.0);
        r.finish();
        if (ps.kind == "gaussian" && !(ps.sigma_t > 0.0))
            throw ParseError("gaussian pulse requires sigma_t > 0", section_line["pulse"]);
        if (ps.kind == "square" && !(ps.duration > 0.0))
            throw ParseError("square pulse requires duration > 0", section_line["pulse"]);
        s.pulse = ps;
    }
    if (sections.count("link")) {
        SectionReader r(sections["link"], "link", section_line["link"]);
        LinkParams l;
        l.l0_km = r.number("l0_km", 0.0);
        l.l_att_km = r.number("l_att_km", 22.0);
        l.eta_d = r.unit_interval("eta_d", 1.0);
        l.p = r.unit_interval("p", 1.0);
        l.c_fiber = r.number("c_fiber", 2.998e8);
        l.dlcz = r.boolean("dlcz", false);
        r.finish();
        try {
            l.validate();
        } catch (const InvalidParameterError& e) {
            throw ParseError(std::string("[link]: ") + e.what(), section_line["link"]);
        }
        s.link = l;
    }
    if (sections.count("chain")) {
        SectionReader r(sections["chain"], "chain", section_line["chain"]);
        ChainConfig c;
        c.l_km = r.required_number("l_km");
        c.nesting = r.integer("n", 0);
        c.eta_m = r.unit_interval("eta_m", 1.0);
        c.swap_intrinsic = r.unit_interval("swap_intrinsic", 0.5);
        c.post_intrinsic = r.unit_interval("post_intrinsic", 0.5);
        c.include_comm_delay = r.boolean("include_comm_delay", false);
        c.tau_mem_s = r.number("tau_mem_s", std::numeric_limits<double>::infinity());
        s.p_dlcz = r.unit_interval("p_dlcz", 0.01);
        s.eta_m_dlcz = r.unit_interval("eta_m_dlcz", 1.0);
        r.finish();
        if (s.link) c.link = *s.link;
        try {
            c.validate();
        } catch (const InvalidParameterError& e) {
            throw ParseError(std::string("[chain]: ") + e.what(), section_line["chain"]);
        }
        s.chain = c;
    }
    if (sections.count("phase")) {
        SectionReader r(sections["phase"], "phase", section_line["phase"]);
        PhaseModel m;
        const std::string jitter = r.text("jitter", "phase");
        if (jitter == "phase")
            m.jitter_kind = PhaseModel::Jitter::gaussian_phase;
        else if (jitter == "timing")
            m.jitter_kind = PhaseModel::Jitter::gaussian_timing;
        else
            throw ParseError("jitter must be phase or timing", r.line_of("jitter"));
        if (r.has("lambda_um")) {
            const double lambda = r.number("lambda_um", 0.8);
            if (!(lambda > 0.0))
                throw ParseError("lambda_um must be strictly positive", r.line_of("lambda_um"));
            m.omega = 2.0 * M_PI * kSpeedOfLight / (lambda * 1e-6);
        }
        m.omega = r.number("omega", m.omega);
        m.sigma = r.number("sigma", 0.0);
        m.window = r.number("window", 0.0);
        r.finish();
        try {
            m.validate();
        } catch (const InvalidParameterError& e) {
            throw ParseError(std::string("[phase]: ") + e.what(), section_line["phase"]);
        }
        s.phase = m;
    }
    if (sections.count("sweep")) {
        SectionReader r(sections["sweep"], "sweep", section_line["sweep"]);
        const auto& sec = sections["sweep"];
        for (const char* key : {"axis1", "axis2"}) {
            if (r.has(key))
                s.sweep.push_back(parse_axis(sec.at(key), key));
        }
        r.finish(); // any other key (axis3, ...) is unknown
    }
    return s;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream os;
    os << "[scenario]\n";
    if (!s.name.empty()) os << "name = " << s.name << "\n";
    if (s.block) {
        const auto& b = *s.block;
        os << "\n[block]\n"
           << "n_atoms = " << fmt(b.n_atoms) << "\n"
           << "g1 = " << fmt(b.g1) << "\n"
           << "g2 = " << fmt(b.g2) << "\n"
           << "delta = " << fmt(b.delta) << "\n"
           << "gamma3 = " << fmt(b.gamma3) << "\n"
           << "kappa = " << fmt(b.kappa) << "\n"
           << "length = " << fmt(b.length) << "\n"
           << "c = " << fmt(b.c) << "\n";
    }
    if (s.rates) {
        const auto& r = *s.rates;
        os << "\n[rates]\n"
           << "chi = " << fmt(r.chi) << "\n"
           << "kappa = " << fmt(r.kappa) << "\n"
           << "coupling = " << fmt(r.coupling) << "\n"
           << "fluorescence = " << fmt(r.fluorescence) << "\n";
    }
    if (s.pulse) {
        const auto& p = *s.pulse;
        os << "\n[pulse]\n"
           << "kind = " << p.kind << "\n"
           << "t0 = " << fmt(p.t0) << "\n";
        if (p.kind == "gaussian") os << "sigma_t = " << fmt(p.sigma_t) << "\n";
        if (p.kind == "square") os << "duration = " << fmt(p.duration) << "\n";
    }
    if (s.link) {
        const auto& l = *s.link;
        os << "\n[link]\n"
           << "l0_km = " << fmt(l.l0_km) << "\n"
           << "l_att_km = " << fmt(l.l_att_km) << "\n"
           << "eta_d = " << fmt(l.eta_d) << "\n"
           << "p = " << fmt(l.p) << "\n"
           << "c_fiber = " << fmt(l.c_fiber) << "\n"
           << "dlcz = " << (l.dlcz ? "true" : "false") << "\n";
    }
    if (s.chain) {
        const auto& c = *s.chain;
        os << "\n[chain]\n"
           << "l_km = " << fmt(c.l_km) << "\n"
           << "n = " << c.nesting << "\n"
           << "eta_m = " << fmt(c.eta_m) << "\n"
           << "swap_intrinsic = " << fmt(c.swap_intrinsic) << "\n"
           << "post_intrinsic = " << fmt(c.post_intrinsic) << "\n"
           << "include_comm_delay = " << (c.include_comm_delay ? "true" : "false") << "\n";
        if (std::isfinite(c.tau_mem_s)) os << "tau_mem_s = " << fmt(c.tau_mem_s) << "\n";
        os << "p_dlcz = " << fmt(s.p_dlcz) << "\n"
           << "eta_m_dlcz = " << fmt(s.eta_m_dlcz) << "\n";
    }
    if (s.phase) {
        const auto& m = *s.phase;
        os << "\n[phase]\n"
           << "jitter = "
           << (m.jitter_kind == PhaseModel::Jitter::gaussian_timing ? "timing" : "phase") << "\n"
           << "omega = " << fmt(m.omega) << "\n"
           << "sigma = " << fmt(m.sigma) << "\n"
           << "window = " << fmt(m.window) << "\n";
    }
    if (!s.sweep.empty()) {
        os << "\n[sweep]\n";
        for (std::size_t i = 0; i < s.sweep.size(); ++i) {
            const auto& a = s.sweep[i];
            os << "axis" << (i + 1) << " = " << a.param << " " << fmt(a.start) << " "
               << fmt(a.stop) << " " << a.steps << " " << (a.log ? "log" : "lin") << "\n";
        }
    }
    return os.str();
}

} // namespace repeaterlab
