#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xyfse/cft.hpp"
#include "xyfse/entropy_eval.hpp"
#include "xyfse/intervals.hpp"

namespace xyfse {

enum class FseKind { single, extrinsic, intrinsic };

std::string to_string(FseKind k);
FseKind fse_kind_from_string(const std::string& s);

// One finite-size-effect sample: the deviation of a computed entropy from its
// scaling reference, for `pattern` dilated by `lambda`.
struct FseRecord {
    Pattern pattern;            // base (undilated) pattern
    long long lambda = 1;
    double alpha = 1.0;
    FseKind kind = FseKind::single;
    double delta_bits = 0.0;
    int sign = 0;               // sign of the raw delta, recorded before |.| fits
};

// Delta kinds.  single: S_num(L) - cft_single(L); needs calibrated s0.
// extrinsic: S_num(pattern) - signed sum of numerical constituent entropies
// (all-numerical, no s0).  intrinsic: S_num(pattern) - cft_multi(pattern).
// The three are linked by the exact identity
//   intrinsic = sum of signed constituent singles + extrinsic.
FseRecord delta_single(EntropyEvaluator& ev, long long L, double alpha,
                       const CftParams& p);
FseRecord delta_extrinsic(EntropyEvaluator& ev, const Pattern& a, double alpha);
FseRecord delta_intrinsic(EntropyEvaluator& ev, const Pattern& a, double alpha,
                          const CftParams& p);

// Evaluates the chosen delta kind over an ascending list of >= 6 dilation
// factors.  Records come back sorted by lambda; evaluation order is
// unspecified (safe to parallelize over an evenly shared evaluator).
std::vector<FseRecord> dilation_sweep(EntropyEvaluator& ev, const Pattern& base,
                                      double alpha, FseKind kind,
                                      const std::vector<long long>& lambdas,
                                      const CftParams* p);

struct ScalingFit {
    double eta = 0.0;
    double amplitude = 0.0;  // exp(intercept) of the log-log fit
    double r_squared = 0.0;
    std::vector<long long> used_lambdas;
    std::optional<double> oscillation_period;  // pi/k_F when envelope filtering ran
};

// Log-log fit of |delta| against lambda; eta = -slope.
//   - points with |delta| <= 1e-12 * max(1, max|delta|) are dropped; if that
//     removes everything -> AllPointsNearZeroCrossing
//   - when k_F is given and the retained signs change, envelope filtering
//     runs: peaks are interior points whose |delta| beats both lambda
//     neighbours; fitting keeps points inside the peak span whose |delta| is
//     >= 0.8 x the log-interpolated envelope; < 2 peaks -> TooFewPoints
//   - < 4 surviving points -> TooFewPoints
ScalingFit fit_eta(const std::vector<FseRecord>& records,
                   std::optional<double> k_F);

struct BoundReport {
    std::vector<long long> lambdas;
    std::vector<double> b_values;      // B(A,lambda) = delta_lambda / (delta_1 lambda^-eta)
    double max_violation_ratio = 0.0;  // max |delta_lambda| / (|delta_1| lambda^-eta (1+slack))
    bool passed = true;
    bool skipped = false;              // alpha inside the exclusion window
};

// Verifies |delta_lambda| <= |delta_1| lambda^-eta (1+slack) against the
// lambda=1 base record.  Near alpha = 1 the two correction terms cancel
// strongly and the bound is not meaningful; that window is skipped and
// flagged.
BoundReport scaling_bound_check(const FseRecord& base,
                                const std::vector<FseRecord>& dilated,
                                double eta, double slack = 0.15,
                                double alpha_skip_lo = 0.8,
                                double alpha_skip_hi = 1.25);

}  // namespace xyfse
