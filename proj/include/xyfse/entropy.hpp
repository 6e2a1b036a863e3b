#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "xyfse/corr_matrix.hpp"
#include "xyfse/correlator.hpp"
#include "xyfse/intervals.hpp"

namespace xyfse {

// Spectrum of i*Gamma: 2L real values in [-1,1], descending, in +/- pairs.
struct NuSpectrum {
    std::vector<double> nus;
    std::optional<Eigen::MatrixXcd> vectors;  // columns ordered like nus
    IntervalSet interval_set;

    long long n_sites() const { return (long long)nus.size() / 2; }
};

// Full spectrum of i*Gamma with deterministic descending ordering.  Without
// vectors the solve runs on the real symmetric -Gamma^2 (cheaper); vectors
// force the complex Hermitian solve.  Any |nu| beyond 1 + 1e-6 is a hard
// error; smaller overshoots are clamped to [-1, 1].
NuSpectrum nu_spectrum(const Eigen::MatrixXd& gamma, const IntervalSet& a,
                       bool with_vectors = false);

// Convenience route from a correlator.  On the free-fermion line (gamma = 0)
// a value-only request uses the L x L symmetric site correlator, which yields
// the signed nu directly at an eighth of the cost; results agree with the
// generic 2L route to eigensolver precision.
NuSpectrum nu_spectrum_for(const Correlator& c, const IntervalSet& a,
                           bool with_vectors = false);

// Sentinel for the saturated (min-)entropy.
inline constexpr double alpha_infinity = std::numeric_limits<double>::infinity();

// Single-mode contribution for occupation bias nu, in bits.  alpha within
// 1e-9 of 1 evaluates the Shannon limit; alpha_infinity the saturation value.
// Throws InvalidAlpha for alpha <= 0.
double renyi_term(double nu, double alpha);

// alpha-Renyi entropy in bits, summed per +/- pair (L_A single-mode terms).
double renyi_entropy(const NuSpectrum& s, double alpha);

struct LocalizationReport {
    int entangling_count = 0;
    double entangling_mean_edge_weight = 0.0;
    int bulk_count = 0;
    double bulk_mean_edge_weight = 0.0;
    double uniform_baseline = 0.0;  // expected edge weight for a flat mode
    bool degenerate = false;        // spectrum degenerate: basis is gauge-arbitrary,
                                    // report is inconclusive rather than failing
};

// Fraction of each eigenmode's squared amplitude within `width` sites of any
// interval endpoint (both Majorana components per site).  Requires vectors;
// width must be positive and below the shortest block.
std::vector<double> mode_edge_weights(const NuSpectrum& s, long long width);

// The same weights averaged separately over entangling (|nu| < 1 - thr) and
// bulk modes.
LocalizationReport edge_localization(const NuSpectrum& s, long long width,
                                     double bulk_threshold);

}  // namespace xyfse
