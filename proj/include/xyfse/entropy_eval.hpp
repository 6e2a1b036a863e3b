#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "xyfse/correlator.hpp"
#include "xyfse/entropy.hpp"
#include "xyfse/intervals.hpp"

namespace xyfse {

// Memoizing front-end over the correlation-matrix -> nu-spectrum -> entropy
// pipeline.  The eigensolve dominates the cost and is independent of alpha,
// so spectra are cached per interval geometry and shared across every alpha
// and every Delta kind that touches the same sites.  Thread-safe; spectra are
// computed outside the lock so concurrent sweep tasks do not serialize.
class EntropyEvaluator {
public:
    explicit EntropyEvaluator(const Correlator& c) : c_(c) {}

    const Correlator& correlator() const { return c_; }

    // nu spectrum for the given interval set, cached by block signature.
    const std::vector<double>& spectrum(const IntervalSet& a);

    double entropy(const IntervalSet& a, double alpha);
    double entropy_length(long long L, double alpha);  // single interval [0, L)

    std::size_t cache_size() const;

private:
    const Correlator& c_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::vector<double>> spectra_;
};

}  // namespace xyfse
