#include "xyfse/entropy_eval.hpp"

#include <mutex>
#include <sstream>

#include "xyfse/corr_matrix.hpp"

namespace xyfse {

namespace {

std::string signature(const IntervalSet& a) {
    std::ostringstream os;
    for (const auto& [off, len] : a.blocks) os << off << ':' << len << ';';
    return os.str();
}

}  // namespace

const std::vector<double>& EntropyEvaluator::spectrum(const IntervalSet& a) {
    const std::string key = signature(a);
    {
        std::shared_lock lock(mutex_);
        auto it = spectra_.find(key);
        if (it != spectra_.end()) return it->second;
    }
    NuSpectrum spec = nu_spectrum_for(c_, a, /*with_vectors=*/false);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = spectra_.emplace(key, std::move(spec.nus));
    (void)inserted;  // a concurrent duplicate computation is benign
    return it->second;
}

double EntropyEvaluator::entropy(const IntervalSet& a, double alpha) {
    const std::vector<double>& nus = spectrum(a);
    const long long n = a.total_sites();
    double s = 0.0;
    for (long long l = 0; l < n; ++l) s += renyi_term(nus[static_cast<std::size_t>(l)], alpha);
    return s;
}

double EntropyEvaluator::entropy_length(long long L, double alpha) {
    return entropy(IntervalSet::from_blocks({{0, L}}), alpha);
}

std::size_t EntropyEvaluator::cache_size() const {
    std::shared_lock lock(mutex_);
    return spectra_.size();
}

}  // namespace xyfse
