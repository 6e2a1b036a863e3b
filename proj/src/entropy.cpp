#include "xyfse/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "xyfse/errors.hpp"
#include "xyfse/util.hpp"

namespace xyfse {

namespace {

constexpr double nu_clamp_tol = 1e-6;

double clamp_nu(double v) {
    if (std::fabs(v) > 1.0 + nu_clamp_tol)
        throw Error("nu-spectrum value " + fmt_g17(v) + " exceeds 1 + 1e-6");
    return std::clamp(v, -1.0, 1.0);
}

// Descending full spectrum from the non-negative pair members.
std::vector<double> mirror_pairs(std::vector<double> pos) {
    std::sort(pos.begin(), pos.end(), std::greater<>());
    std::vector<double> nus;
    nus.reserve(2 * pos.size());
    for (double v : pos) nus.push_back(v);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) nus.push_back(-*it);
    return nus;
}

}  // namespace

NuSpectrum nu_spectrum(const Eigen::MatrixXd& gamma, const IntervalSet& a,
                       bool with_vectors) {
    NuSpectrum out;
    out.interval_set = a;
    const long long dim = gamma.rows();

    if (with_vectors) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(as_hermitian(gamma));
        if (es.info() != Eigen::Success)
            throw EigensolveFailed("Hermitian eigensolve on i*Gamma failed");
        // Eigen returns ascending; flip to descending.
        std::vector<double> nus(static_cast<std::size_t>(dim));
        Eigen::MatrixXcd vecs(dim, dim);
        for (long long m = 0; m < dim; ++m) {
            nus[size_t(m)] = clamp_nu(es.eigenvalues()(dim - 1 - m));
            vecs.col(m) = es.eigenvectors().col(dim - 1 - m);
        }
        out.nus = std::move(nus);
        out.vectors = std::move(vecs);
        return out;
    }

    // -Gamma^2 = Gamma^T Gamma is symmetric PSD with eigenvalues nu^2, each
    // doubled by the +/- pairing.
    Eigen::MatrixXd m2(dim, dim);
    m2.noalias() = gamma.transpose() * gamma;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m2, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw EigensolveFailed("symmetric eigensolve on -Gamma^2 failed");
    std::vector<double> pos;
    pos.reserve(size_t(dim / 2));
    // Ascending eigenvalues: take every other one as the pair representative.
    for (long long i = dim - 1; i >= 0; i -= 2) {
        const double mu = std::max(0.0, es.eigenvalues()(i));
        pos.push_back(clamp_nu(std::sqrt(mu)));
    }
    out.nus = mirror_pairs(std::move(pos));
    return out;
}

NuSpectrum nu_spectrum_for(const Correlator& c, const IntervalSet& a,
                           bool with_vectors) {
    if (c.point().gamma == 0.0 && !with_vectors) {
        const std::vector<long long> sites = a.site_list();
        const long long L = (long long)sites.size();
        Eigen::MatrixXd m(L, L);
        for (long long i = 0; i < L; ++i)
            for (long long j = i; j < L; ++j)
                m(i, j) = m(j, i) = c.g(sites[j] - sites[i]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw EigensolveFailed("symmetric eigensolve on site correlator failed");
        std::vector<double> pos(static_cast<std::size_t>(L));
        for (long long i = 0; i < L; ++i) pos[size_t(i)] = clamp_nu(es.eigenvalues()(i));
        // Signed values already; mirroring still applies since the i*Gamma
        // spectrum is {+nu_l, -nu_l}.
        for (double& v : pos) v = std::fabs(v);
        NuSpectrum out;
        out.interval_set = a;
        out.nus = mirror_pairs(std::move(pos));
        return out;
    }
    return nu_spectrum(build_gamma(c, a), a, with_vectors);
}

double renyi_term(double nu, double alpha) {
    if (!(alpha > 0.0)) throw InvalidAlpha("alpha must be positive");
    const double p = 0.5 * (1.0 + std::fabs(nu)), q = 1.0 - p;
    if (alpha == alpha_infinity) return -std::log2(p);
    if (std::fabs(alpha - 1.0) < 1e-9) {
        double term = 0.0;
        if (p > 0.0) term -= p * std::log2(p);
        if (q > 0.0) term -= q * std::log2(q);
        return term;
    }
    return std::log2(std::pow(p, alpha) + std::pow(q, alpha)) / (1.0 - alpha);
}

double renyi_entropy(const NuSpectrum& s, double alpha) {
    if (!(alpha > 0.0)) throw InvalidAlpha("alpha must be positive");
    const long long pairs = s.n_sites();
    double total = 0.0;
    for (long long l = 0; l < pairs; ++l)
        total += renyi_term(s.nus[size_t(l)], alpha);
    return total;
}

std::vector<double> mode_edge_weights(const NuSpectrum& s, long long width) {
    if (!s.vectors) throw VectorsMissing("edge weights need eigenvectors");
    const IntervalSet& a = s.interval_set;
    if (width <= 0 || width >= a.min_block_length())
        throw Error("width must be positive and below the shortest block");

    const long long L = a.total_sites();
    // Mark sites within `width` of either end of their block.
    std::vector<bool> near_edge(size_t(L), false);
    long long base = 0;
    for (const auto& [off, len] : a.blocks) {
        (void)off;
        for (long long j = 0; j < len; ++j)
            if (j < width || j >= len - width) near_edge[size_t(base + j)] = true;
        base += len;
    }

    std::vector<double> weights(size_t(2 * L), 0.0);
    for (long long m = 0; m < 2 * L; ++m) {
        double edge = 0.0;
        for (long long j = 0; j < L; ++j) {
            if (!near_edge[size_t(j)]) continue;
            edge += std::norm((*s.vectors)(2 * j, m)) + std::norm((*s.vectors)(2 * j + 1, m));
        }
        weights[size_t(m)] = edge;
    }
    return weights;
}

LocalizationReport edge_localization(const NuSpectrum& s, long long width,
                                     double bulk_threshold) {
    const std::vector<double> weights = mode_edge_weights(s, width);
    const IntervalSet& a = s.interval_set;
    const long long L = a.total_sites();

    long long edge_sites = 0;
    {
        long long base = 0;
        for (const auto& [off, len] : a.blocks) {
            (void)off;
            for (long long j = 0; j < len; ++j)
                if (j < width || j >= len - width) ++edge_sites;
            base += len;
        }
    }

    LocalizationReport rep;
    rep.uniform_baseline = double(edge_sites) / double(L);

    // Degenerate spectra make the eigenbasis gauge-arbitrary.
    for (size_t i = 0; i + 1 < s.nus.size(); ++i)
        if (std::fabs(s.nus[i] - s.nus[i + 1]) < 1e-10) rep.degenerate = true;

    double ent_acc = 0.0, bulk_acc = 0.0;
    for (long long m = 0; m < 2 * L; ++m) {
        if (std::fabs(s.nus[size_t(m)]) < 1.0 - bulk_threshold) {
            rep.entangling_count++;
            ent_acc += weights[size_t(m)];
        } else {
            rep.bulk_count++;
            bulk_acc += weights[size_t(m)];
        }
    }
    if (rep.entangling_count) rep.entangling_mean_edge_weight = ent_acc / rep.entangling_count;
    if (rep.bulk_count) rep.bulk_mean_edge_weight = bulk_acc / rep.bulk_count;
    return rep;
}

}  // namespace xyfse
