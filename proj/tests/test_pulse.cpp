#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "repeaterlab/pulse.hpp"

using namespace repeaterlab;

namespace {

// quadrature oracle for the normalization invariant
double energy(const PulseEnvelope& p) {
    double lo, hi;
    p.support(lo, hi);
    const int n = 20000;
    const double dt = (hi - lo) / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        acc += w * std::norm(p(lo + i * dt));
    }
    return acc * dt;
}

} // namespace

TEST_CASE("gaussian pulse is normalized with intensity std sigma_t") {
    const auto p = PulseEnvelope::gaussian(5.0, 0.7);
    CHECK(energy(p) == doctest::Approx(1.0).epsilon(1e-6));
    // peak amplitude (2 pi sigma^2)^(-1/4)
    CHECK(std::abs(p(5.0)) == doctest::Approx(std::pow(2.0 * M_PI * 0.49, -0.25)));
    // intensity second moment
    double lo, hi;
    p.support(lo, hi);
    const int n = 20000;
    const double dt = (hi - lo) / n;
    double m2 = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = lo + i * dt;
        m2 += std::norm(p(t)) * (t - 5.0) * (t - 5.0) * dt;
    }
    CHECK(m2 == doctest::Approx(0.49).epsilon(1e-4));
}

TEST_CASE("square pulse normalized") {
    const auto p = PulseEnvelope::square(0.0, 4.0);
    CHECK(energy(p) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(std::abs(p(0.0)) == doctest::Approx(0.5));
    CHECK(std::abs(p(3.0)) == 0.0);
}

TEST_CASE("sampled pulse renormalized on construction") {
    std::vector<std::complex<double>> samples;
    for (int i = 0; i < 200; ++i)
        samples.push_back(3.7 * std::exp(-0.01 * (i - 100.0) * (i - 100.0)));
    const auto p = PulseEnvelope::sampled(-1.0, 0.05, samples);
    CHECK(energy(p) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("pulse construction errors") {
    CHECK_THROWS_AS(PulseEnvelope::gaussian(0.0, 0.0), InvalidParameterError);
    CHECK_THROWS_AS(PulseEnvelope::square(0.0, -1.0), InvalidParameterError);
    CHECK_THROWS_AS(PulseEnvelope::sampled(0.0, 0.1, {}), InvalidParameterError);
    CHECK_THROWS_AS(PulseEnvelope::sampled(0.0, 0.1, {{0.0, 0.0}, {0.0, 0.0}}),
                    InvalidParameterError);
}
