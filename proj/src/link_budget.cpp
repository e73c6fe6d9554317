#include "repeaterlab/link_budget.hpp"

#include <cmath>

#include "repeaterlab/rng.hpp"

namespace repeaterlab {

void LinkParams::validate() const {
    if (l0_km < 0.0)
        throw InvalidParameterError("l0_km must be nonnegative");
    if (!(l_att_km > 0.0))
        throw InvalidParameterError("l_att_km must be strictly positive");
    if (eta_d < 0.0 || eta_d > 1.0)
        throw InvalidParameterError("eta_d must lie in [0, 1]");
    if (p < 0.0 || p > 1.0)
        throw InvalidParameterError("p must lie in [0, 1]");
    if (!(c_fiber > 0.0))
        throw InvalidParameterError("c_fiber must be strictly positive");
}

double transmission_efficiency(double l0_km, double l_att_km) {
    if (l0_km < 0.0)
        throw InvalidParameterError("l0_km must be nonnegative");
    if (!(l_att_km > 0.0))
        throw InvalidParameterError("l_att_km must be strictly positive");
    return std::exp(-l0_km / l_att_km);
}

double link_success_probability(const LinkParams& link) {
    link.validate();
    const double l_att = link.dlcz ? 2.0 * link.l_att_km : link.l_att_km;
    return link.p * link.eta_d * transmission_efficiency(link.l0_km, l_att);
}

double attempt_period(const LinkParams& link) {
    link.validate();
    return link.l0_km * 1e3 / link.c_fiber;
}

double expected_link_time(const LinkParams& link) {
    const double p0 = link_success_probability(link);
    if (!(p0 > 0.0))
        throw ZeroProbabilityError("link success probability is zero");
    return attempt_period(link) / p0;
}

double sample_link_time(const LinkParams& link, std::uint64_t rng_seed) {
    const double p0 = link_success_probability(link);
    if (!(p0 > 0.0))
        throw ZeroProbabilityError("link success probability is zero");
    Rng rng(Rng::splitmix64(rng_seed));
    return rng.geometric(p0) * attempt_period(link);
}

} // namespace repeaterlab
