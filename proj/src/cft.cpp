#include "xyfse/cft.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "xyfse/entropy_eval.hpp"
#include "xyfse/errors.hpp"
#include "xyfse/phase.hpp"
#include "xyfse/util.hpp"

namespace xyfse {

namespace {

constexpr double pi = 3.14159265358979323846;

// Plain least squares of y against a single regressor x plus intercept.
// Returns {intercept, slope}; throws FitIllConditioned when x is degenerate.
std::pair<double, double> lsq_line(const std::vector<double>& x,
                                   const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = double(n) * sxx - sx * sx;
    const double scale = std::max(1.0, sxx);
    if (n < 2 || std::fabs(det) < 1e-12 * double(n) * scale)
        throw FitIllConditioned("degenerate design matrix in intercept fit");
    const double slope = (double(n) * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / double(n);
    return {intercept, slope};
}

}  // namespace

double log_coefficient(double c_plus_cbar, double alpha, LogCoefficientMode mode) {
    if (!(alpha > 0.0)) throw InvalidAlpha("alpha must be positive");
    switch (mode) {
        case LogCoefficientMode::standard:
            return c_plus_cbar * (1.0 + 1.0 / alpha) / 12.0;
        case LogCoefficientMode::legacy:
            return c_plus_cbar / (12.0 * (1.0 + alpha));
    }
    throw Error("unknown log-coefficient mode");
}

double cft_single_interval(const CftParams& p, long long L, double alpha) {
    if (L < 1) throw Error("interval length must be positive");
    return log_coefficient(p.c_plus_cbar, alpha, p.mode) * std::log2(double(L)) + p.s0;
}

double cft_multi_interval(const CftParams& p, const Pattern& a, double alpha) {
    if (a.n_blocks() == 1) return cft_single_interval(p, a.lengths[0], alpha);
    double total = 0.0;
    for (const Constituent& c : constituents(a))
        total += c.sign * cft_single_interval(p, c.length, alpha);
    return total;
}

CalibrationResult calibrate_from_values(const std::vector<long long>& Ls,
                                        const std::vector<double>& Ss) {
    if (Ls.size() != Ss.size() || Ls.empty())
        throw Error("length/entropy lists must match and be non-empty");
    std::vector<double> x(Ls.size());
    std::transform(Ls.begin(), Ls.end(), x.begin(),
                   [](long long L) { return std::log2(double(L)); });
    auto [intercept, slope] = lsq_line(x, Ss);
    CalibrationResult r;
    r.s0 = intercept;
    r.slope = slope;
    for (std::size_t i = 0; i < x.size(); ++i)
        r.max_residual = std::max(r.max_residual,
                                  std::fabs(Ss[i] - (intercept + slope * x[i])));
    return r;
}

CalibrationResult calibrate_s0(EntropyEvaluator& ev, double alpha,
                               const std::vector<long long>& L_list) {
    std::set<long long> distinct(L_list.begin(), L_list.end());
    if (distinct.size() < 4 || *distinct.rbegin() < 256)
        throw FitIllConditioned(
            "calibration window needs >= 4 distinct lengths with max >= 256");
    std::vector<long long> Ls(distinct.begin(), distinct.end());
    std::vector<double> Ss(Ls.size());
    for (std::size_t i = 0; i < Ls.size(); ++i) Ss[i] = ev.entropy_length(Ls[i], alpha);
    return calibrate_from_values(Ls, Ss);
}

double calibrate_s0_anchored(EntropyEvaluator& ev, double alpha,
                             double c_plus_cbar, LogCoefficientMode mode) {
    const double a = log_coefficient(c_plus_cbar, alpha, mode);
    const Phase ph = ev.correlator().point().phase();

    if (ph == Phase::gapless_fermion) {
        // Dense window: the subleading correction oscillates with k_F L, and a
        // uniform stride through many periods averages it out of the mean.
        double acc = 0.0;
        long long count = 0;
        for (long long L = 256; L <= 1024; L += 4) {
            acc += ev.entropy_length(L, alpha) - a * std::log2(double(L));
            ++count;
        }
        return acc / double(count);
    }

    if (ph == Phase::gapless_boson) {
        const std::vector<long long> window = {256, 362, 512, 724, 1024};
        std::vector<double> y(window.size());
        for (std::size_t i = 0; i < window.size(); ++i)
            y[i] = ev.entropy_length(window[i], alpha) - a * std::log2(double(window[i]));
        if (alpha < 1.0) {
            // The L^(-2/alpha) regressor underflows the fit; the correction is
            // below double precision anyway, so the plain mean is exact.
            return std::accumulate(y.begin(), y.end(), 0.0) / double(y.size());
        }
        // Non-oscillating correction: model s0 + b L^(-2/alpha) and keep s0.
        std::vector<double> x(window.size());
        for (std::size_t i = 0; i < window.size(); ++i)
            x[i] = std::pow(double(window[i]), -2.0 / alpha);
        return lsq_line(x, y).first;
    }

    throw Error("anchored calibration requires a conformal critical line");
}

double single_interval_correction(double alpha, long long L, double k_F) {
    if (!(alpha > 0.0) || std::isinf(alpha))
        throw InvalidAlpha("alpha must be positive and finite");
    if (!(k_F > 0.0 && k_F < pi))
        throw InvalidKf("Fermi momentum must lie strictly inside (0, pi)");
    if (L < 1) throw Error("interval length must be positive");

    const double s = std::sin(k_F);
    const double a1 = (12.0 * (3.0 * alpha * alpha - 7.0) +
                       (49.0 - alpha * alpha) * s * s) *
                      (1.0 + alpha) / (285.0 * alpha * alpha * alpha);
    double delta_nats = a1 / std::pow(2.0 * double(L) * s, 2.0);
    if (std::fabs(alpha - 1.0) >= 1e-9) {
        const double g1 = std::tgamma(0.5 + 0.5 / alpha);
        const double g2 = std::tgamma(0.5 - 0.5 / alpha);
        const double q = (g1 / g2) * (g1 / g2);
        const double a2 = 2.0 * q * std::cos(2.0 * k_F * double(L)) / (1.0 - alpha);
        delta_nats += a2 / std::pow(2.0 * double(L) * s, 2.0 / alpha);
    }
    // A2 vanishes quadratically as alpha -> 1 (Gamma(1/2 - 1/2a) pole), so the
    // branch above is the correct limit, not a truncation.
    return delta_nats / std::log(2.0);
}

std::vector<long long> default_calibration_window(double k_F) {
    std::vector<long long> base = {256, 362, 512, 724, 1024};
    const double ratio = k_F / pi;
    // Rational lock-in k_F/pi = p/q makes cos(2 k_F L) constant on L = 0 mod q,
    // so those lengths cannot phase-average; drop them when q supports it.
    // The smallest denominator is the true period; q <= 2 would drop the
    // whole window, so those stay as-is.
    for (long long q = 1; q <= 16; ++q) {
        const double p = std::round(ratio * double(q));
        if (p >= 1.0 && std::fabs(ratio - p / double(q)) < 1e-9) {
            if (q <= 2) return base;
            std::vector<long long> kept;
            for (long long L : base)
                if (L % q != 0) kept.push_back(L);
            return kept;
        }
    }
    return base;
}

}  // namespace xyfse
