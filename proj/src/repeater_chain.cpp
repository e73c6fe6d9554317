#include "repeaterlab/repeater_chain.hpp"

#include <cmath>

#include "repeaterlab/rng.hpp"

namespace repeaterlab {

void ChainConfig::validate() const {
    if (!(l_km > 0.0))
        throw InvalidParameterError("l_km must be strictly positive");
    if (nesting < 0 || nesting > 30)
        throw InvalidParameterError("nesting must lie in [0, 30]");
    if (eta_m < 0.0 || eta_m > 1.0)
        throw InvalidParameterError("eta_m must lie in [0, 1]");
    if (swap_intrinsic < 0.0 || swap_intrinsic > 1.0)
        throw InvalidParameterError("swap_intrinsic must lie in [0, 1]");
    if (post_intrinsic < 0.0 || post_intrinsic > 1.0)
        throw InvalidParameterError("post_intrinsic must lie in [0, 1]");
    if (!(tau_mem_s > 0.0))
        throw InvalidParameterError("tau_mem_s must be strictly positive");
    LinkParams l = elementary_link();
    l.validate();
}

LinkParams ChainConfig::elementary_link() const {
    LinkParams l = link;
    l.l0_km = l_km / static_cast<double>(1 << nesting);
    return l;
}

double analytic_total_time(const ChainConfig& config) {
    config.validate();
    const LinkParams link = config.elementary_link();
    const double p0 = link_success_probability(link);
    const double p_swap = config.p_swap();
    const double p_post = config.p_post();
    if (!(p0 > 0.0) || !(p_swap > 0.0) || !(p_post > 0.0))
        throw ZeroProbabilityError("all success probabilities must be strictly positive");
    double t = attempt_period(link) / p0;
    for (int i = 0; i < config.nesting; ++i)
        t *= 1.5 / p_swap;
    return t / p_post;
}

double dlcz_comparison(const ChainConfig& config_ours, double p_dlcz, double eta_m_dlcz) {
    if (!(p_dlcz > 0.0) || p_dlcz > 1.0)
        throw InvalidParameterError("p_dlcz must lie in (0, 1]");
    if (!(eta_m_dlcz > 0.0) || eta_m_dlcz > 1.0)
        throw InvalidParameterError("eta_m_dlcz must lie in (0, 1]");
    ChainConfig dlcz = config_ours;
    dlcz.link.p = p_dlcz;
    dlcz.link.dlcz = true;
    dlcz.eta_m = eta_m_dlcz;
    return analytic_total_time(dlcz) / analytic_total_time(config_ours);
}

namespace {

// One trial of the nested protocol; all times in attempt slots.
class TrialSim {
public:
    TrialSim(double p0, double p_swap, double p_post, double cutoff_slots, bool comm_delay,
             double cap_slots, Rng& rng, std::vector<double>& level_sum,
             std::vector<std::uint64_t>& level_count)
        : p0_(p0), p_swap_(p_swap), p_post_(p_post), cutoff_(cutoff_slots),
          comm_delay_(comm_delay), cap_(cap_slots), rng_(rng), level_sum_(level_sum),
          level_count_(level_count) {}

    /// Slots until final post-selected pair; NaN if the cap was hit.
    double run(int top_level) {
        double total = 0.0;
        while (true) {
            const double t = segment(top_level);
            total += t;
            if (!(total <= cap_))
                return std::numeric_limits<double>::quiet_NaN();
            if (rng_.bernoulli(p_post_))
                return total;
        }
    }

private:
    double segment(int level) {
        if (level == 0) {
            const double t = rng_.geometric(p0_);
            record(0, t);
            return t;
        }
        double t = 0.0;
        while (true) {
            double a = segment(level - 1);
            double b = segment(level - 1);
            // a ready segment idling past the memory cutoff resets
            while (std::abs(a - b) > cutoff_) {
                if (t + std::min(a, b) > cap_)
                    return std::numeric_limits<double>::infinity();
                if (a < b)
                    a += cutoff_ + segment(level - 1);
                else
                    b += cutoff_ + segment(level - 1);
            }
            t += std::max(a, b);
            if (comm_delay_)
                t += static_cast<double>(1ULL << (level - 1));
            if (!(t <= cap_))
                return std::numeric_limits<double>::infinity();
            if (rng_.bernoulli(p_swap_)) {
                record(level, t);
                return t;
            }
            // swap failed: both child segments reset and regenerate
        }
    }

    void record(int level, double slots) {
        level_sum_[static_cast<std::size_t>(level)] += slots;
        ++level_count_[static_cast<std::size_t>(level)];
    }

    double p0_, p_swap_, p_post_, cutoff_;
    bool comm_delay_;
    double cap_;
    Rng& rng_;
    std::vector<double>& level_sum_;
    std::vector<std::uint64_t>& level_count_;
};

} // namespace

ChainResult monte_carlo_total_time(const ChainConfig& config, std::uint64_t trials,
                                   std::uint64_t rng_seed, std::uint64_t cap_slots) {
    config.validate();
    if (trials < 1)
        throw InvalidParameterError("trials must be >= 1");
    const LinkParams link = config.elementary_link();
    const double p0 = link_success_probability(link);
    const double p_swap = config.p_swap();
    const double p_post = config.p_post();
    if (!(p0 > 0.0) || !(p_swap > 0.0) || !(p_post > 0.0))
        throw ZeroProbabilityError("all success probabilities must be strictly positive");

    const double slot_s = attempt_period(link);
    const double cutoff_slots = std::isfinite(config.tau_mem_s)
                                    ? config.tau_mem_s / slot_s
                                    : std::numeric_limits<double>::infinity();
    if (std::isfinite(cutoff_slots) && cutoff_slots < 1.0)
        throw InvalidParameterError("tau_mem_s shorter than one attempt slot");

    std::vector<double> level_sum(static_cast<std::size_t>(config.nesting) + 1, 0.0);
    std::vector<std::uint64_t> level_count(static_cast<std::size_t>(config.nesting) + 1, 0);

    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t completed = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng = Rng::stream(rng_seed, i);
        TrialSim sim(p0, p_swap, p_post, cutoff_slots, config.include_comm_delay,
                     static_cast<double>(cap_slots), rng, level_sum, level_count);
        const double slots = sim.run(config.nesting);
        if (std::isnan(slots))
            continue;
        const double t = slots * slot_s;
        sum += t;
        sum_sq += t * t;
        ++completed;
    }
    if (completed == 0)
        throw TrialBudgetError("every trial exceeded the slot cap");

    ChainResult r;
    r.t_analytic = analytic_total_time(config);
    r.trials = trials;
    const double nc = static_cast<double>(completed);
    r.t_mc_mean = sum / nc;
    const double var = completed > 1 ? (sum_sq - sum * sum / nc) / (nc - 1.0) : 0.0;
    r.t_mc_stderr = std::sqrt(std::max(var, 0.0) / nc);
    r.final_success_fraction = nc / static_cast<double>(trials);
    r.per_level_mean_s.resize(level_sum.size(), 0.0);
    for (std::size_t l = 0; l < level_sum.size(); ++l)
        if (level_count[l] > 0)
            r.per_level_mean_s[l] = level_sum[l] / static_cast<double>(level_count[l]) * slot_s;
    return r;
}

} // namespace repeaterlab
