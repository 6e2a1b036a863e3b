#pragma once

#include <limits>
#include <vector>

#include "xyfse/correlator.hpp"
#include "xyfse/intervals.hpp"

namespace xyfse {

class EntropyEvaluator;  // entropy_eval.hpp

// Two candidate log-coefficients for the critical single-interval entropy:
// `standard` is the usual Renyi coefficient (c + cbar)(1 + 1/alpha)/12;
// `legacy` is a superseded variant kept so comparison fits can reproduce it.
// calibrate_s0's fitted slope discriminates them; `standard` wins empirically
// and is the default.
enum class LogCoefficientMode { legacy, standard };

struct CftParams {
    double c_plus_cbar = 2.0;
    double s0 = std::numeric_limits<double>::quiet_NaN();  // NaN = uncalibrated
    LogCoefficientMode mode = LogCoefficientMode::standard;

    bool calibrated() const { return s0 == s0; }
};

// Slope a(alpha) in bits per log2 L.
double log_coefficient(double c_plus_cbar, double alpha, LogCoefficientMode mode);

// a(alpha) * log2 L + s0.
double cft_single_interval(const CftParams& p, long long L, double alpha);

// Signed constituent sum of cft_single_interval over the inclusion-exclusion
// expansion; n=1 patterns pass through to the single-interval form.
double cft_multi_interval(const CftParams& p, const Pattern& a, double alpha);

struct CalibrationResult {
    double s0 = 0.0;
    double slope = 0.0;
    double max_residual = 0.0;
};

// Free two-parameter least squares of S against log2 L.  The fitted slope is
// what discriminates the log-coefficient mode.
CalibrationResult calibrate_from_values(const std::vector<long long>& Ls,
                                        const std::vector<double>& Ss);

// Computes S numerically over L_list (sharing spectra through `ev`) and fits.
// Requires >= 4 distinct L with max >= 256, else FitIllConditioned.
CalibrationResult calibrate_s0(EntropyEvaluator& ev, double alpha,
                               const std::vector<long long>& L_list);

// Production intercept with the slope anchored to the analytic coefficient.
// A free-slope intercept leaks (a_true - a_fit) * <log2 L> (lever arm ~9 at
// the default window) into every Delta record, which at alpha < 1 is enough
// to flip tail signs.  Fermion line: mean of S - a log2 L over a dense window
// L = 256..1024 step 4, averaging the oscillating correction over its phases.
// Boson line: the correction never oscillates (cos 2 pi L = 1), so it is
// modeled instead: least squares of s0 + b L^(-2/alpha) over the geometric
// window (plain mean for alpha < 1 where that regressor is degenerate).
double calibrate_s0_anchored(EntropyEvaluator& ev, double alpha,
                             double c_plus_cbar, LogCoefficientMode mode);

// Analytic finite-size correction for a single critical interval, in bits:
//   [A1 / (2 L sin kF)^2 + A2 / (2 L sin kF)^(2/alpha)] / ln 2
// with A1 = (12(3a^2-7) + (49-a^2) sin^2 kF)(1+a)/(285 a^3) and
// A2 = 2 Q cos(2 kF L)/(1-a), Q = (Gamma(1/2 + 1/2a)/Gamma(1/2 - 1/2a))^2.
// At alpha = 1 (within 1e-9) only the A1 limit survives (Q -> 0 quadratically).
double single_interval_correction(double alpha, long long L, double k_F);

// Default s0 calibration window {256, 362, 512, 724, 1024} (geometric, to
// average the oscillating correction over phases).  When k_F/pi is rational
// with denominator q <= 16 (q >= 3), phase-locked L = 0 (mod q) are dropped.
std::vector<long long> default_calibration_window(double k_F);

}  // namespace xyfse
