#include "xyfse/fse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xyfse/errors.hpp"

namespace xyfse {

namespace {

constexpr double pi = 3.14159265358979323846;

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

FseRecord make_record(Pattern pattern, double alpha, FseKind kind, double delta) {
    FseRecord r;
    r.pattern = std::move(pattern);
    r.alpha = alpha;
    r.kind = kind;
    r.delta_bits = delta;
    r.sign = sign_of(delta);
    return r;
}

void require_calibrated(const CftParams& p) {
    if (!p.calibrated())
        throw UncalibratedS0("CFT reference needs a calibrated s0");
}

// Log-linear interpolation through (xs, ys), xs ascending; x within range.
double interp(double x, const std::vector<double>& xs, const std::vector<double>& ys) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) return ys.front();
    if (it == xs.end()) return ys.back();
    const std::size_t hi = std::size_t(it - xs.begin()), lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

}  // namespace

std::string to_string(FseKind k) {
    switch (k) {
        case FseKind::single: return "single";
        case FseKind::extrinsic: return "extrinsic";
        case FseKind::intrinsic: return "intrinsic";
    }
    throw Error("unknown FSE kind");
}

FseKind fse_kind_from_string(const std::string& s) {
    if (s == "single") return FseKind::single;
    if (s == "extrinsic") return FseKind::extrinsic;
    if (s == "intrinsic") return FseKind::intrinsic;
    throw Error("unknown FSE kind: " + s);
}

FseRecord delta_single(EntropyEvaluator& ev, long long L, double alpha,
                       const CftParams& p) {
    require_calibrated(p);
    const double delta = ev.entropy_length(L, alpha) - cft_single_interval(p, L, alpha);
    return make_record(Pattern({L}), alpha, FseKind::single, delta);
}

FseRecord delta_extrinsic(EntropyEvaluator& ev, const Pattern& a, double alpha) {
    double ref = 0.0;
    for (const Constituent& c : constituents(a))  // throws PatternTooSmall for n < 2
        ref += c.sign * ev.entropy_length(c.length, alpha);
    const double delta = ev.entropy(IntervalSet::from_pattern(a), alpha) - ref;
    return make_record(a, alpha, FseKind::extrinsic, delta);
}

FseRecord delta_intrinsic(EntropyEvaluator& ev, const Pattern& a, double alpha,
                          const CftParams& p) {
    require_calibrated(p);
    const double delta =
        ev.entropy(IntervalSet::from_pattern(a), alpha) - cft_multi_interval(p, a, alpha);
    return make_record(a, alpha, FseKind::intrinsic, delta);
}

std::vector<FseRecord> dilation_sweep(EntropyEvaluator& ev, const Pattern& base,
                                      double alpha, FseKind kind,
                                      const std::vector<long long>& lambdas,
                                      const CftParams* p) {
    if (lambdas.size() < 6)
        throw Error("dilation sweep needs at least 6 dilation factors");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] < 1 || (i > 0 && lambdas[i] <= lambdas[i - 1]))
            throw Error("dilation factors must be ascending and >= 1");
    }
    if (kind != FseKind::extrinsic && p == nullptr)
        throw UncalibratedS0("this delta kind needs CFT parameters");
    if (kind == FseKind::single && base.n_blocks() != 1)
        throw Error("single-interval sweep needs a one-block pattern");

    std::vector<FseRecord> out;
    out.reserve(lambdas.size());
    for (long long lam : lambdas) {
        FseRecord r;
        switch (kind) {
            case FseKind::single:
                r = delta_single(ev, base.lengths[0] * lam, alpha, *p);
                break;
            case FseKind::extrinsic:
                r = delta_extrinsic(ev, dilate(base, lam), alpha);
                break;
            case FseKind::intrinsic:
                r = delta_intrinsic(ev, dilate(base, lam), alpha, *p);
                break;
        }
        r.pattern = base;  // records carry the undilated pattern plus lambda
        r.lambda = lam;
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const FseRecord& a, const FseRecord& b) { return a.lambda < b.lambda; });
    return out;
}

ScalingFit fit_eta(const std::vector<FseRecord>& records,
                   std::optional<double> k_F) {
    std::vector<FseRecord> recs = records;
    std::sort(recs.begin(), recs.end(),
              [](const FseRecord& a, const FseRecord& b) { return a.lambda < b.lambda; });

    double max_abs = 0.0;
    for (const FseRecord& r : recs) max_abs = std::max(max_abs, std::fabs(r.delta_bits));
    const double tiny = 1e-12 * std::max(1.0, max_abs);

    std::vector<double> lam, del;
    for (const FseRecord& r : recs) {
        if (std::fabs(r.delta_bits) > tiny) {
            lam.push_back(double(r.lambda));
            del.push_back(r.delta_bits);
        }
    }
    if (lam.empty())
        throw AllPointsNearZeroCrossing("every record sits at a zero crossing");

    bool oscillatory = false;
    if (k_F) {
        for (std::size_t i = 0; i + 1 < del.size(); ++i)
            if (sign_of(del[i]) != sign_of(del[i + 1])) oscillatory = true;
    }

    std::vector<std::size_t> keep;
    if (oscillatory) {
        std::vector<double> ab(del.size());
        for (std::size_t i = 0; i < del.size(); ++i) ab[i] = std::fabs(del[i]);
        std::vector<std::size_t> peaks;
        for (std::size_t i = 1; i + 1 < ab.size(); ++i)
            if (ab[i] >= ab[i - 1] && ab[i] >= ab[i + 1]) peaks.push_back(i);
        if (peaks.size() < 2)
            throw TooFewPoints("fewer than 2 envelope peaks in oscillatory data");
        std::vector<double> lp, lv;
        for (std::size_t i : peaks) {
            lp.push_back(std::log(lam[i]));
            lv.push_back(std::log(ab[i]));
        }
        const double band = std::log(0.8);
        for (std::size_t i = 0; i < del.size(); ++i) {
            const double x = std::log(lam[i]);
            if (x < lp.front() || x > lp.back()) continue;
            if (std::log(ab[i]) >= interp(x, lp, lv) + band) keep.push_back(i);
        }
    } else {
        keep.resize(del.size());
        for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    }
    if (keep.size() < 4)
        throw TooFewPoints("log-log fit needs at least 4 points");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(keep.size());
    std::vector<double> xs, ys;
    for (std::size_t i : keep) {
        xs.push_back(std::log(lam[i]));
        ys.push_back(std::log(std::fabs(del[i])));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
    }
    const double det = n * sxx - sx * sx;
    if (std::fabs(det) < 1e-12 * n * std::max(1.0, sxx))
        throw FitIllConditioned("degenerate lambda grid in log-log fit");
    const double slope = (n * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / n;

    double sst = 0, ssr = 0;
    const double ymean = sy / n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double yh = slope * xs[i] + intercept;
        sst += (ys[i] - ymean) * (ys[i] - ymean);
        ssr += (ys[i] - yh) * (ys[i] - yh);
    }

    ScalingFit fit;
    fit.eta = -slope;
    fit.amplitude = std::exp(intercept);
    fit.r_squared = sst > 0.0 ? 1.0 - ssr / sst : 1.0;
    for (std::size_t i : keep) fit.used_lambdas.push_back((long long)std::llround(lam[i]));
    if (oscillatory) fit.oscillation_period = pi / *k_F;
    return fit;
}

BoundReport scaling_bound_check(const FseRecord& base,
                                const std::vector<FseRecord>& dilated,
                                double eta, double slack,
                                double alpha_skip_lo, double alpha_skip_hi) {
    if (base.lambda != 1) throw Error("bound check base must be the lambda=1 record");
    BoundReport rep;
    if (base.alpha > alpha_skip_lo && base.alpha < alpha_skip_hi) {
        rep.skipped = true;
        return rep;
    }
    const double d1 = base.delta_bits;
    for (const FseRecord& r : dilated) {
        if (!(r.pattern == base.pattern) || r.alpha != base.alpha || r.kind != base.kind)
            throw Error("bound check records must share pattern, alpha and kind");
        const double envelope = std::pow(double(r.lambda), -eta);
        rep.lambdas.push_back(r.lambda);
        if (std::fabs(d1) < 1e-15) {
            // Exactly-zero base (e.g. additive points): bound degenerates; any
            // nonzero dilated delta is an unbounded violation.
            rep.b_values.push_back(0.0);
            rep.max_violation_ratio = std::max(
                rep.max_violation_ratio,
                std::fabs(r.delta_bits) < 1e-12
                    ? 0.0
                    : std::numeric_limits<double>::infinity());
        } else {
            rep.b_values.push_back(r.delta_bits / (d1 * envelope));
            rep.max_violation_ratio =
                std::max(rep.max_violation_ratio,
                         std::fabs(r.delta_bits) / (std::fabs(d1) * envelope * (1.0 + slack)));
        }
    }
    rep.passed = rep.max_violation_ratio <= 1.0;
    return rep;
}

}  // namespace xyfse
