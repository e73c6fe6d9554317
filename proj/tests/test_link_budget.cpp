#include <doctest.h>

#include <cmath>

#include "repeaterlab/link_budget.hpp"
#include "repeaterlab/rng.hpp"

using namespace repeaterlab;

namespace {

LinkParams make_link(double l0, double p = 1.0, double eta_d = 1.0, bool dlcz = false) {
    LinkParams l;
    l.l0_km = l0;
    l.l_att_km = 22.0;
    l.p = p;
    l.eta_d = eta_d;
    l.dlcz = dlcz;
    return l;
}

} // namespace

TEST_CASE("transmission efficiency") {
    CHECK(transmission_efficiency(0.0, 22.0) == 1.0);
    CHECK(transmission_efficiency(22.0, 22.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(transmission_efficiency(62.5, 22.0) == doctest::Approx(0.0584).epsilon(1e-3));
    CHECK_THROWS_AS(transmission_efficiency(-1.0, 22.0), InvalidParameterError);
    CHECK_THROWS_AS(transmission_efficiency(1.0, 0.0), InvalidParameterError);
}

TEST_CASE("link success probability") {
    CHECK(link_success_probability(make_link(62.5)) == doctest::Approx(0.0584).epsilon(1e-3));
    CHECK(link_success_probability(make_link(62.5, 0.0)) == 0.0);
    // DLCZ variant: halved exponent
    CHECK(link_success_probability(make_link(62.5, 0.01, 1.0, true)) ==
          doctest::Approx(2.42e-3).epsilon(1e-2));
    LinkParams bad = make_link(10.0);
    bad.eta_d = 1.5;
    CHECK_THROWS_AS(link_success_probability(bad), InvalidParameterError);
}

TEST_CASE("scheme relation: eta_t = eta_t_dlcz^2") {
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        const double l0 = 200.0 * rng.uniform();
        const double proposed = transmission_efficiency(l0, 22.0);
        const double dlcz = transmission_efficiency(l0, 44.0);
        CHECK(proposed == doctest::Approx(dlcz * dlcz).epsilon(1e-12));
    }
}

TEST_CASE("monotonicity of P0") {
    const double base = link_success_probability(make_link(60.0, 0.8, 0.9));
    CHECK(link_success_probability(make_link(70.0, 0.8, 0.9)) < base);
    CHECK(link_success_probability(make_link(60.0, 0.9, 0.9)) > base);
    CHECK(link_success_probability(make_link(60.0, 0.8, 0.95)) > base);
}

TEST_CASE("expected link time") {
    // 60 km link, unit p and eta_d: about 3.06 ms, within 50% of 0.004 s
    const double tau = expected_link_time(make_link(60.0));
    CHECK(tau == doctest::Approx(3.06e-3).epsilon(1e-2));
    CHECK(std::abs(tau - 0.004) / 0.004 < 0.5);

    // single attempt when P0 = 1
    LinkParams ideal = make_link(60.0);
    ideal.l_att_km = 1e12;
    CHECK(expected_link_time(ideal) == doctest::Approx(2.0e-4).epsilon(1e-2));

    // DLCZ with p = 0.01
    CHECK(expected_link_time(make_link(60.0, 0.01, 1.0, true)) ==
          doctest::Approx(7.8e-2).epsilon(1e-2));

    CHECK_THROWS_AS(expected_link_time(make_link(60.0, 0.0)), ZeroProbabilityError);
}

TEST_CASE("sampled link time") {
    LinkParams ideal = make_link(60.0);
    ideal.l_att_km = 1e12; // P0 ~ 1
    const double slot = attempt_period(ideal);
    for (std::uint64_t s = 0; s < 5; ++s)
        CHECK(sample_link_time(ideal, s) == doctest::Approx(slot).epsilon(1e-12));

    const LinkParams l = make_link(62.5);
    CHECK(sample_link_time(l, 99) == sample_link_time(l, 99)); // determinism

    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
        sum += sample_link_time(l, static_cast<std::uint64_t>(i));
    const double mean = sum / n;
    CHECK(std::abs(mean - expected_link_time(l)) / expected_link_time(l) < 0.02);

    CHECK_THROWS_AS(sample_link_time(make_link(60.0, 0.0), 1), ZeroProbabilityError);
}
