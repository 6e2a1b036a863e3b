#include "xyfse/correlator.hpp"

#include <cmath>
#include <fstream>
#include <mutex>

#include "xyfse/errors.hpp"
#include "xyfse/util.hpp"

namespace xyfse {

Correlator::Correlator(PhasePoint p, QuadratureConfig qc) : p_(p), qc_(qc) {}

double Correlator::g(long long x) const {
    {
        std::shared_lock lock(mu_);
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
    }
    const double v = compute(x);
    if (std::fabs(v) > 1.0 + qc_.abs_tol)
        throw Error("correlator invariant violated: |G(" + std::to_string(x) +
                    ")| = " + fmt_g17(std::fabs(v)) + " > 1");
    std::unique_lock lock(mu_);
    // First insertion wins; compute() is deterministic so concurrent racers
    // would have produced the same bits anyway.
    return cache_.emplace(x, v).first->second;
}

double Correlator::compute(long long x) const {
    const double gamma = p_.gamma, h = p_.h;
    const double ah = std::fabs(h);

    if (gamma == 0.0 && ah < 1.0) {
        // Free-fermion (XX) line: integrand reduces to sign(cos k - h) cos kx.
        // Note arccos(h), not arccos|h|: the filling depends on the sign of h.
        const double kf = std::acos(h);
        if (x == 0) return 2.0 * kf / M_PI - 1.0;
        return 2.0 * std::sin(kf * double(x)) / (M_PI * double(x));
    }
    if (gamma == 0.0 && ah >= 1.0) {
        // Fully polarized: vacuum (h >= 1) or fully occupied (h <= -1);
        // only the contact value survives.
        return x == 0 ? (h > 0 ? -1.0 : 1.0) : 0.0;
    }
    if (h == 0.0 && std::fabs(gamma) == 1.0) {
        // Kitaev point: the integrand collapses to cos(k(x - sign gamma))/2pi,
        // a pure contact term one site to the right (gamma=+1) or left (-1).
        return x == (gamma > 0 ? 1 : -1) ? 1.0 : 0.0;
    }
    return g_quadrature(x);
}

double Correlator::g_quadrature(long long x) const {
    const double gamma = p_.gamma, h = p_.h;
    // The integrand is even in k (odd*odd and even*even parts), so integrate
    // [0, pi] and double.  Panels are delimited by dispersion zeros and, for
    // |x| > 4, by the half-period nodes of the trigonometric factor.
    std::vector<double> edges = {0.0, M_PI};
    if (gamma == 0.0 && std::fabs(h) < 1.0) edges.push_back(std::acos(h));
    const long long ax = std::llabs(x);
    if (ax > 4)
        for (long long j = 1; j < ax; ++j) edges.push_back(M_PI * double(j) / double(ax));

    const double xd = double(x);
    auto f = [gamma, h, xd](double k) {
        const double c = std::cos(k), s = std::sin(k);
        const double a = c - h, b = gamma * s;
        const double eps = std::sqrt(a * a + b * b);
        if (eps < 1e-300) return 0.0;
        return (gamma * s * std::sin(k * xd) - (h - c) * std::cos(k * xd)) / eps;
    };
    return integrate_panels(f, std::move(edges), qc_) / M_PI;
}

double Correlator::g_ring(long long x, long long N) const {
    const double gamma = p_.gamma, h = p_.h;
    double acc = 0.0;
    for (long long n = 0; n < N; ++n) {
        const double k = 2.0 * M_PI * (double(n) + 0.5) / double(N);
        const double c = std::cos(k), s = std::sin(k);
        const double a = c - h, b = gamma * s;
        const double eps = std::sqrt(a * a + b * b);
        // A gapless mode hit exactly by the grid is half-occupied; the
        // symmetric convention contributes zero, matching the principal-value
        // reading of the integral.
        if (eps < 1e-14) continue;
        acc += (gamma * s * std::sin(k * double(x)) - (h - c) * std::cos(k * double(x))) / eps;
    }
    return acc / double(N);
}

void Correlator::warm(long long xmax) {
    for (long long x = -xmax; x <= xmax; ++x) g(x);
}

std::string Correlator::cache_header() const {
    return "gamma=" + fmt_g17(p_.gamma) + " h=" + fmt_g17(p_.h) +
           " tol=" + fmt_g17(qc_.abs_tol);
}

void Correlator::save_cache(const std::filesystem::path& file) const {
    std::map<long long, double> snapshot;
    {
        std::shared_lock lock(mu_);
        snapshot = cache_;
    }
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write correlator cache: " + file.string());
        out << cache_header() << "\n";
        for (const auto& [x, v] : snapshot) out << x << " " << fmt_g17(v) << "\n";
    }
    std::filesystem::rename(tmp, file);
}

size_t Correlator::load_cache(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return 0;
    std::string header;
    std::getline(in, header);
    if (trim(header) != cache_header()) return 0;  // stale or foreign cache: ignore
    size_t count = 0;
    long long x;
    double v;
    std::unique_lock lock(mu_);
    while (in >> x >> v) {
        cache_.emplace(x, v);
        ++count;
    }
    return count;
}

size_t Correlator::cache_size() const {
    std::shared_lock lock(mu_);
    return cache_.size();
}

}  // namespace xyfse
