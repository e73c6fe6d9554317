#include <doctest.h>

#include <cmath>

#include "repeaterlab/phase_fidelity.hpp"
#include "repeaterlab/rng.hpp"

using namespace repeaterlab;

TEST_CASE("link phase") {
    CHECK(link_phase(0.3, 0.3, 0.3, 0.3) == 0.0);
    CHECK(link_phase(M_PI / 2, 0.0, 0.0, 0.0) == doctest::Approx(M_PI / 2));
    // common-mode rejection
    const double base = link_phase(0.1, 0.4, -0.2, 0.9);
    CHECK(link_phase(0.1 + 5.0, 0.4 + 5.0, -0.2 + 5.0, 0.9 + 5.0) ==
          doctest::Approx(base).epsilon(1e-12));
    CHECK_THROWS_AS(link_phase(NAN, 0, 0, 0), InvalidParameterError);
}

TEST_CASE("relative phase wrapping") {
    CHECK(relative_phase(0.7, 0.7) == 0.0);
    CHECK(relative_phase(M_PI, -M_PI) == doctest::Approx(0.0));
    CHECK(relative_phase(0.3, 0.1) == doctest::Approx(0.2));
    CHECK(wrap_phase(M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_phase(-M_PI) == doctest::Approx(M_PI)); // (-pi, pi]
    CHECK(wrap_phase(3.0 * M_PI) == doctest::Approx(M_PI));
}

TEST_CASE("swap fidelity values and symmetry") {
    CHECK(swap_fidelity(0.0) == 1.0);
    CHECK(swap_fidelity(M_PI) == doctest::Approx(0.0));
    CHECK(swap_fidelity(M_PI / 2) == doctest::Approx(0.5));
    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        const double phi = 20.0 * (rng.uniform() - 0.5);
        CHECK(swap_fidelity(phi) == doctest::Approx(swap_fidelity(-phi)).epsilon(1e-12));
        CHECK(swap_fidelity(phi) ==
              doctest::Approx(swap_fidelity(phi + 2.0 * M_PI)).epsilon(1e-9));
    }
}

TEST_CASE("mean fidelity closed form vs sampling") {
    PhaseModel m;
    m.jitter_kind = PhaseModel::Jitter::gaussian_phase;

    m.sigma = 0.0;
    auto f = mean_fidelity(m, 1000, 1);
    CHECK(f.analytic == 1.0);
    CHECK(f.sampled == 1.0);

    m.sigma = 1.0;
    f = mean_fidelity(m, 100000, 2);
    CHECK(f.analytic == doctest::Approx(0.8033).epsilon(1e-4));
    CHECK(std::abs(f.sampled - f.analytic) < 0.01);

    for (double sigma : {0.5, 1.0, 2.0}) {
        m.sigma = sigma;
        for (std::uint64_t samples : {std::uint64_t(10000), std::uint64_t(100000)}) {
            const auto r = mean_fidelity(m, samples, 7 + samples);
            CHECK(std::abs(r.sampled - r.analytic) < 3.0 * r.sampled_stderr + 1e-12);
        }
    }
}

TEST_CASE("analytic mean fidelity is monotone with limits 1 and 1/2") {
    PhaseModel m;
    double prev = 1.0 + 1e-12;
    for (double sigma : {0.0, 0.2, 0.5, 1.0, 2.0, 5.0, 20.0}) {
        m.sigma = sigma;
        const double f = mean_fidelity(m, 1, 0).analytic;
        CHECK(f <= prev);
        prev = f;
    }
    m.sigma = 1e3;
    CHECK(mean_fidelity(m, 1, 0).analytic == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("timing jitter converts through omega") {
    PhaseModel m;
    m.jitter_kind = PhaseModel::Jitter::gaussian_timing;
    m.omega = 2.0 * M_PI * 2.998e8 / 0.8e-6; // lambda = 0.8 um
    m.sigma = 1e-15;
    CHECK(m.omega == doctest::Approx(2.356e15).epsilon(1e-3));
    CHECK(m.sigma_phi() == doctest::Approx(2.36).epsilon(2e-3));
}

TEST_CASE("phase exposure window") {
    LinkParams l;
    l.l0_km = 60.0;
    l.l_att_km = 22.0;
    CHECK(phase_exposure_window(l) == doctest::Approx(3.1e-3).epsilon(2e-2));

    LinkParams dlcz = l;
    dlcz.p = 0.001;
    dlcz.dlcz = true;
    CHECK(phase_exposure_window(dlcz) == doctest::Approx(0.78).epsilon(1e-2));

    LinkParams ideal = l;
    ideal.l_att_km = 1e15;
    CHECK(phase_exposure_window(ideal) == doctest::Approx(60.0e3 / 2.998e8).epsilon(1e-6));
}

TEST_CASE("determinism of sampling") {
    PhaseModel m;
    m.sigma = 0.7;
    const auto a = mean_fidelity(m, 5000, 11);
    const auto b = mean_fidelity(m, 5000, 11);
    CHECK(a.sampled == b.sampled);
}
