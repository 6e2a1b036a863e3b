#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "xyfse/errors.hpp"
#include "xyfse/fse.hpp"

using namespace xyfse;

namespace {

std::vector<FseRecord> synthetic(const std::vector<long long>& lambdas,
                                 double (*f)(double), double alpha = 2.0) {
    std::vector<FseRecord> out;
    for (long long l : lambdas) {
        FseRecord r;
        r.pattern = Pattern({1, 1, 1});
        r.lambda = l;
        r.alpha = alpha;
        r.kind = FseKind::extrinsic;
        r.delta_bits = f(double(l));
        r.sign = r.delta_bits > 0 ? 1 : (r.delta_bits < 0 ? -1 : 0);
        out.push_back(r);
    }
    return out;
}

std::vector<long long> seq(long long a, long long b) {
    std::vector<long long> v;
    for (long long i = a; i <= b; ++i) v.push_back(i);
    return v;
}

}  // namespace

TEST_CASE("kind names round-trip") {
    for (FseKind k : {FseKind::single, FseKind::extrinsic, FseKind::intrinsic}) {
        CHECK(fse_kind_from_string(to_string(k)) == k);
    }
    CHECK_THROWS_AS(fse_kind_from_string("bogus"), Error);
}

TEST_CASE("pure power law is fit exactly") {
    auto recs = synthetic(seq(1, 20), [](double l) { return 3.0 / (l * l); });
    auto fit = fit_eta(recs, std::nullopt);
    CHECK(std::abs(fit.eta - 2.0) < 1e-6);
    CHECK(fit.amplitude == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(fit.r_squared > 1.0 - 1e-9);
    CHECK(fit.used_lambdas.size() == 20);
    CHECK_FALSE(fit.oscillation_period.has_value());
}

TEST_CASE("oscillatory decay: envelope filtering recovers the exponent") {
    auto recs = synthetic(seq(1, 20),
                          [](double l) { return std::cos(2.0 * l) / l; });
    auto fit = fit_eta(recs, 1.0);  // k_F = 1 -> period pi
    CHECK(std::abs(fit.eta - 1.0) < 0.05);
    CHECK(fit.used_lambdas.size() == 8);
    CHECK(fit.r_squared > 0.9);
    REQUIRE(fit.oscillation_period.has_value());
    CHECK(*fit.oscillation_period == doctest::Approx(M_PI).epsilon(1e-12));
    // Same data over a shifted grid still lands near the true exponent.
    auto recs2 = synthetic(seq(2, 20),
                           [](double l) { return std::cos(2.0 * l) / l; });
    auto fit2 = fit_eta(recs2, 1.0);
    CHECK(std::abs(fit2.eta - 1.0) < 0.2);
}

TEST_CASE("sign changes without k_F fit the raw magnitudes") {
    // Without an oscillation hint the fit uses all retained points; the
    // alternating factor drags r^2 down but the call must not throw.
    auto recs = synthetic(seq(1, 20),
                          [](double l) { return std::cos(2.0 * l) / l; });
    auto fit = fit_eta(recs, std::nullopt);
    CHECK(fit.used_lambdas.size() == 20);
    CHECK_FALSE(fit.oscillation_period.has_value());
}

TEST_CASE("near-zero points are dropped, empty set raises") {
    auto recs = synthetic(seq(1, 10), [](double l) { return 1.0 / (l * l); });
    recs[4].delta_bits = 1e-16;  // isolated zero crossing artifact
    auto fit = fit_eta(recs, std::nullopt);
    CHECK(fit.used_lambdas.size() == 9);
    CHECK(std::abs(fit.eta - 2.0) < 0.02);

    auto zeros = synthetic(seq(1, 8), [](double) { return 0.0; });
    CHECK_THROWS_AS(fit_eta(zeros, std::nullopt), AllPointsNearZeroCrossing);
}

TEST_CASE("too little structure raises TooFewPoints") {
    // Strictly decreasing magnitudes with alternating signs: no interior
    // envelope peak exists.
    auto alt = synthetic(seq(1, 8), [](double l) {
        return (std::fmod(l, 2.0) == 0.0 ? 1.0 : -1.0) / (l * l);
    });
    CHECK_THROWS_AS(fit_eta(alt, 1.0), TooFewPoints);
    // Three clean points are not enough for a two-parameter log-log fit.
    auto three = synthetic(seq(1, 3), [](double l) { return 1.0 / l; });
    CHECK_THROWS_AS(fit_eta(three, std::nullopt), TooFewPoints);
}

TEST_CASE("delta kinds and the expansion identity") {
    // The three delta kinds satisfy, exactly and for any intercept,
    //   intrinsic(A) = sum_constituents sign * single(len) + extrinsic(A).
    Correlator c({0.0, 0.5});
    EntropyEvaluator ev(c);
    CftParams p;
    p.c_plus_cbar = 2.0;
    p.s0 = 0.7;  // arbitrary: the identity must not depend on calibration
    for (const Pattern& a : {Pattern({2, 3, 3}), Pattern({1, 2, 1, 2, 4})}) {
        for (double al : {0.5, 2.0}) {
            double lhs = delta_intrinsic(ev, a, al, p).delta_bits;
            double rhs = delta_extrinsic(ev, a, al).delta_bits;
            for (const Constituent& kterm : constituents(a)) {
                rhs += kterm.sign *
                       delta_single(ev, kterm.length, al, p).delta_bits;
            }
            CHECK(std::abs(lhs - rhs) < 1e-8);
        }
    }
}

TEST_CASE("contact-correlator patterns have exactly zero extrinsic deviation") {
    // Every single interval holds one dangling Majorana pair (1 bit), blocks
    // never couple, and the constituent signs sum to n: the expansion is
    // exact, not merely asymptotic.
    Correlator c({1.0, 0.0});
    EntropyEvaluator ev(c);
    CHECK(std::abs(delta_extrinsic(ev, Pattern({3, 2, 4}), 2.0).delta_bits) < 1e-10);
    CHECK(std::abs(delta_extrinsic(ev, Pattern({1, 1, 1, 1, 1}), 2.0).delta_bits) <
          1e-10);
    CHECK(std::abs(delta_extrinsic(ev, Pattern({2, 5, 3, 2, 2}), 0.5).delta_bits) <
          1e-10);
}

TEST_CASE("single-interval deltas require calibration") {
    Correlator c({0.0, 0.5});
    EntropyEvaluator ev(c);
    CftParams raw;  // NaN s0
    CHECK_THROWS_AS(delta_single(ev, 16, 2.0, raw), UncalibratedS0);
    CHECK_THROWS_AS(delta_intrinsic(ev, Pattern({1, 3, 2}), 2.0, raw),
                    UncalibratedS0);
}

TEST_CASE("dilation sweep: preconditions and record layout") {
    Correlator c({0.0, 0.5});
    EntropyEvaluator ev(c);
    CftParams p;
    p.s0 = 0.5;

    CHECK_THROWS_AS(dilation_sweep(ev, Pattern({1, 3, 2}), 2.0, FseKind::extrinsic,
                                   {1, 2, 3}, nullptr),
                    Error);  // fewer than 6 factors
    CHECK_THROWS_AS(dilation_sweep(ev, Pattern({1, 3, 2}), 2.0, FseKind::extrinsic,
                                   {1, 2, 3, 5, 4, 6}, nullptr),
                    Error);  // not ascending
    CHECK_THROWS_AS(dilation_sweep(ev, Pattern({1, 3, 2}), 2.0, FseKind::single,
                                   {1, 2, 3, 4, 5, 6}, &p),
                    Error);  // single kind needs a one-interval base

    auto recs = dilation_sweep(ev, Pattern({1, 3, 2}), 2.0, FseKind::extrinsic,
                               {1, 2, 3, 4, 5, 6}, nullptr);
    REQUIRE(recs.size() == 6);
    for (size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].lambda == (long long)i + 1);
        CHECK(recs[i].pattern == Pattern({1, 3, 2}));
        CHECK(recs[i].kind == FseKind::extrinsic);
        CHECK(recs[i].sign == (recs[i].delta_bits > 0 ? 1 : recs[i].delta_bits < 0 ? -1 : 0));
    }
}

TEST_CASE("scaling bound check") {
    auto base = synthetic({1}, [](double) { return 1.0; }).front();

    SUBCASE("decaying family passes with headroom") {
        auto fam = synthetic(seq(2, 10),
                             [](double l) { return 0.9 / (l * l); });
        auto rep = scaling_bound_check(base, fam, 2.0);
        CHECK(rep.passed);
        CHECK_FALSE(rep.skipped);
        CHECK(rep.max_violation_ratio < 1.0);
        REQUIRE(rep.b_values.size() == 9);
        for (double b : rep.b_values) CHECK(b == doctest::Approx(0.9).epsilon(1e-12));
    }

    SUBCASE("too-slow decay is flagged with the worst ratio") {
        auto fam = synthetic(seq(2, 10), [](double l) { return 1.0 / l; });
        auto rep = scaling_bound_check(base, fam, 2.0);
        CHECK_FALSE(rep.passed);
        CHECK(rep.max_violation_ratio == doctest::Approx(10.0 / 1.15).epsilon(1e-9));
    }

    SUBCASE("the alpha window near 1 is skipped") {
        auto fam = synthetic(seq(2, 10), [](double l) { return 1.0 / l; }, 1.0);
        auto base1 = synthetic({1}, [](double) { return 1.0; }, 1.0).front();
        auto rep = scaling_bound_check(base1, fam, 2.0);
        CHECK(rep.skipped);
        CHECK(rep.passed);
    }

    SUBCASE("zero base only passes against zero dilations") {
        auto zbase = synthetic({1}, [](double) { return 0.0; }).front();
        auto tiny = synthetic(seq(2, 8), [](double) { return 1e-13; });
        auto rep = scaling_bound_check(zbase, tiny, 2.0);
        CHECK(rep.passed);
        auto big = synthetic(seq(2, 8), [](double l) { return 1.0 / l; });
        auto rep2 = scaling_bound_check(zbase, big, 2.0);
        CHECK_FALSE(rep2.passed);
        CHECK(std::isinf(rep2.max_violation_ratio));
    }

    SUBCASE("mismatched base is rejected") {
        auto fam = synthetic(seq(2, 6), [](double l) { return 1.0 / l; });
        auto base2 = synthetic({2}, [](double) { return 1.0; }).front();
        CHECK_THROWS_AS(scaling_bound_check(base2, fam, 2.0), Error);
        auto alpha_mismatch = synthetic({1}, [](double) { return 1.0; }, 3.0).front();
        CHECK_THROWS_AS(scaling_bound_check(alpha_mismatch, fam, 2.0), Error);
    }
}
