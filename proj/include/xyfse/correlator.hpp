#pragma once

#include <filesystem>
#include <map>
#include <shared_mutex>
#include <string>

#include "xyfse/phase.hpp"
#include "xyfse/quadrature.hpp"

namespace xyfse {

// Ground-state Majorana correlator
//   G(x) = (1/2pi) Int_{-pi}^{pi} [gamma sin k sin kx - (h - cos k) cos kx] / eps_k dk
// with closed-form dispatch on the exact special lines and deterministic
// panel quadrature elsewhere.  Values are cached per integer separation;
// identical queries return bit-identical results, and the cache supports
// concurrent readers with serialized insertion.
class Correlator {
  public:
    explicit Correlator(PhasePoint p, QuadratureConfig qc = {});

    const PhasePoint& point() const { return p_; }
    const QuadratureConfig& quadrature_config() const { return qc_; }

    // Cached correlator with closed-form dispatch.
    double g(long long x) const;

    // The defining integral evaluated by panel quadrature regardless of
    // closed forms; used to cross-validate the dispatch (uncached).
    double g_quadrature(long long x) const;

    // Finite-ring variant: momentum integral replaced by the antiperiodic
    // sum over k = 2pi(n + 1/2)/N.  Converges to g(x) as N -> infinity.
    double g_ring(long long x, long long N) const;

    // Fill the cache for all |x| <= xmax.
    void warm(long long xmax);

    // Cache persistence.  Header line "gamma=<g> h=<h> tol=<t>"; a load is
    // accepted only if the header matches this correlator exactly.
    std::string cache_header() const;
    void save_cache(const std::filesystem::path& file) const;
    size_t load_cache(const std::filesystem::path& file);

    size_t cache_size() const;

  private:
    PhasePoint p_;
    QuadratureConfig qc_;
    mutable std::map<long long, double> cache_;
    mutable std::shared_mutex mu_;

    double compute(long long x) const;
};

}  // namespace xyfse
