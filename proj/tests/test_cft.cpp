#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "xyfse/cft.hpp"
#include "xyfse/entropy_eval.hpp"
#include "xyfse/errors.hpp"

using namespace xyfse;

TEST_CASE("log coefficient candidates") {
    // standard: (c + cbar)(1 + 1/alpha)/12 bits per log2 L.
    CHECK(log_coefficient(2.0, 1.0, LogCoefficientMode::standard) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(log_coefficient(2.0, 2.0, LogCoefficientMode::standard) ==
          doctest::Approx(0.25).epsilon(1e-15));
    CHECK(log_coefficient(1.0, 2.0, LogCoefficientMode::standard) ==
          doctest::Approx(0.125).epsilon(1e-15));
    // printed variant: (c + cbar)/(12 (1 + alpha)).
    CHECK(log_coefficient(2.0, 1.0, LogCoefficientMode::legacy) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(log_coefficient(2.0, 3.0, LogCoefficientMode::legacy) ==
          doctest::Approx(2.0 / 48.0).epsilon(1e-15));
}

TEST_CASE("single- and multi-interval reference entropies") {
    CftParams p;
    p.c_plus_cbar = 2.0;
    p.s0 = 1.25;
    CHECK(p.calibrated());
    CHECK(cft_single_interval(p, 8, 2.0) == doctest::Approx(0.25 * 3 + 1.25).epsilon(1e-14));

    // n = 1 passthrough.
    CHECK(cft_multi_interval(p, Pattern({8}), 2.0) ==
          doctest::Approx(cft_single_interval(p, 8, 2.0)).epsilon(1e-14));

    // Dilation identity: the signed constituent sum gains exactly
    // a(alpha) * n * log2(lambda) under uniform dilation (sign sum = n).
    for (double al : {0.5, 2.0, 3.0}) {
        double a_coeff = log_coefficient(2.0, al, LogCoefficientMode::standard);
        Pattern base({1, 3, 2});
        double d = cft_multi_interval(p, dilate(base, 4), al) -
                   cft_multi_interval(p, base, al);
        CHECK(d == doctest::Approx(a_coeff * 2 * 2.0).epsilon(1e-12));
        Pattern base3({1, 2, 1, 2, 4});
        double d3 = cft_multi_interval(p, dilate(base3, 8), al) -
                    cft_multi_interval(p, base3, al);
        CHECK(d3 == doctest::Approx(a_coeff * 3 * 3.0).epsilon(1e-12));
    }

    CftParams raw;  // uncalibrated: NaN s0 must not silently propagate
    CHECK_FALSE(raw.calibrated());
}

TEST_CASE("free least-squares calibration on synthetic data") {
    std::vector<long long> Ls{16, 32, 64, 128, 256, 512};
    std::vector<double> Ss;
    for (long long L : Ls) Ss.push_back(0.5 * std::log2(double(L)) + 1.25);
    auto r = calibrate_from_values(Ls, Ss);
    CHECK(r.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.s0 == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(r.max_residual < 1e-12);

    CHECK_THROWS_AS(calibrate_from_values({64, 64, 64}, {1.0, 1.0, 1.0}),
                    FitIllConditioned);
}

TEST_CASE("measured slope discriminates the log-coefficient candidates") {
    Correlator c({0.0, 0.5});
    EntropyEvaluator ev(c);
    CHECK_THROWS_AS(calibrate_s0(ev, 2.0, {2, 3}), FitIllConditioned);
    CHECK_THROWS_AS(calibrate_s0(ev, 2.0, {16, 32, 64, 128}), FitIllConditioned);

    auto r = calibrate_s0(ev, 2.0, default_calibration_window(c.point().fermi_momentum()));
    double std_a = log_coefficient(2.0, 2.0, LogCoefficientMode::standard);    // 0.25
    double ppr_a = log_coefficient(2.0, 2.0, LogCoefficientMode::legacy);  // ~0.056
    CHECK(std::abs(r.slope - std_a) / std_a < 0.03);
    CHECK(std::abs(r.slope - ppr_a) / ppr_a > 1.0);
}

TEST_CASE("finite-size correction: frozen values, units of bits") {
    double kf = std::acos(0.6);
    CHECK(single_interval_correction(2.0, 100, kf) == doctest::Approx(0.0020553301336184177).epsilon(1e-12));
    CHECK(single_interval_correction(2.0, 101, kf) == doctest::Approx(-0.0007668894069478916).epsilon(1e-12));
    CHECK(single_interval_correction(3.0, 100, kf) == doctest::Approx(0.012445670691993954).epsilon(1e-12));
    CHECK(single_interval_correction(0.5, 100, kf) == doctest::Approx(-0.00010393153874151135).epsilon(1e-12));
    CHECK(single_interval_correction(1.0, 100, kf) == doctest::Approx(-6.8338186147371928e-06).epsilon(1e-12));
}

TEST_CASE("finite-size correction is continuous through alpha = 1") {
    double kf = std::acos(0.6);
    double at1 = single_interval_correction(1.0, 100, kf);
    // Within the alpha = 1 snap window the oscillating term is dropped.
    CHECK(std::abs(single_interval_correction(1.0 + 1e-10, 100, kf) - at1) < 1e-12);
    // Just outside it, the prefactor vanishes quadratically: still continuous.
    CHECK(std::abs(single_interval_correction(1.0 + 1e-4, 100, kf) - at1) < 1e-7);
    CHECK(std::abs(single_interval_correction(1.0 - 1e-4, 100, kf) - at1) < 1e-7);
}

TEST_CASE("finite-size correction rejects invalid arguments") {
    double kf = std::acos(0.6);
    CHECK_THROWS_AS(single_interval_correction(0.0, 100, kf), InvalidAlpha);
    CHECK_THROWS_AS(single_interval_correction(-2.0, 100, kf), InvalidAlpha);
    CHECK_THROWS_AS(single_interval_correction(std::numeric_limits<double>::infinity(), 100, kf),
                    InvalidAlpha);
    CHECK_THROWS_AS(single_interval_correction(2.0, 100, 0.0), InvalidKf);
    CHECK_THROWS_AS(single_interval_correction(2.0, 100, M_PI), InvalidKf);
    CHECK_THROWS_AS(single_interval_correction(2.0, 100, -0.5), InvalidKf);
}

TEST_CASE("calibration window drops phase-locked lengths") {
    std::vector<long long> base{256, 362, 512, 724, 1024};
    CHECK(default_calibration_window(std::acos(0.6)) == base);  // irrational k_F/pi
    CHECK(default_calibration_window(M_PI / 2) == base);        // q = 2: unchanged
    CHECK(default_calibration_window(M_PI) == base);            // boson end
    CHECK(default_calibration_window(M_PI / 3) == base);        // base has no mult of 3
    CHECK(default_calibration_window(M_PI / 4) == std::vector<long long>{362});
    CHECK(default_calibration_window(3 * M_PI / 4) == std::vector<long long>{362});
    CHECK(default_calibration_window(5 * M_PI / 16) ==
          std::vector<long long>{362, 724});
}

TEST_CASE("anchored intercept: residual after the analytic correction is flat") {
    // S(L) - a log2 L - jk(L) should be one constant (the true intercept);
    // the anchored mean recovers it up to the small window-mean of jk.
    Correlator c({0.0, 0.6});
    EntropyEvaluator ev(c);
    double s0 = calibrate_s0_anchored(ev, 2.0, 2.0, LogCoefficientMode::standard);
    double a = log_coefficient(2.0, 2.0, LogCoefficientMode::standard);
    double kf = std::acos(0.6);
    std::vector<double> resid;
    for (long long L : {300, 500, 1000}) {
        resid.push_back(ev.entropy_length(L, 2.0) - a * std::log2(double(L)) -
                        single_interval_correction(2.0, L, kf));
    }
    for (double r : resid) CHECK(std::abs(r - s0) < 3e-4);
    // The corrected residuals agree with each other far more tightly than
    // with the anchored mean: the correction really is the L-dependence.
    CHECK(std::abs(resid[0] - resid[2]) < 2e-5);
    CHECK(std::abs(resid[1] - resid[2]) < 2e-5);
}

TEST_CASE("anchored intercept on the boson line") {
    Correlator c({1.36, 1.0});
    EntropyEvaluator ev(c);
    double s0 = calibrate_s0_anchored(ev, 2.0, 1.0, LogCoefficientMode::standard);
    double a = log_coefficient(1.0, 2.0, LogCoefficientMode::standard);  // 0.125
    // Entropy growth across a doubling matches the anchored slope closely.
    double grow = ev.entropy_length(512, 2.0) - ev.entropy_length(256, 2.0);
    CHECK(std::abs(grow - a) < 2e-3);
    CHECK(std::abs(ev.entropy_length(512, 2.0) - a * 9.0 - s0) < 2e-3);
}
