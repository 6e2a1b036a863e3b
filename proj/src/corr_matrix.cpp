#include "xyfse/corr_matrix.hpp"

#include "xyfse/errors.hpp"

namespace xyfse {

Eigen::MatrixXd build_gamma(const Correlator& c, const IntervalSet& a) {
    const std::vector<long long> sites = a.site_list();
    const long long L = (long long)sites.size();
    if (L == 0) throw Error("build_gamma: empty interval set");

    Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(2 * L, 2 * L);
    for (long long i = 0; i < L; ++i) {
        for (long long j = i; j < L; ++j) {
            const long long x = sites[j] - sites[i];
            const double gp = c.g(x);
            const double gm = c.g(-x);
            gamma(2 * i, 2 * j + 1) = gp;
            gamma(2 * i + 1, 2 * j) = -gm;
            if (i != j) {  // skew mirror of the whole 2x2 block
                gamma(2 * j + 1, 2 * i) = -gp;
                gamma(2 * j, 2 * i + 1) = gm;
            }
        }
    }
    return gamma;
}

Eigen::MatrixXd build_gamma_ring(const Correlator& c, const IntervalSet& a,
                                 long long ring_n) {
    const std::vector<long long> sites = a.site_list();
    const long long L = (long long)sites.size();
    if (L == 0) throw Error("build_gamma_ring: empty interval set");
    if (sites.front() < 0 || sites.back() >= ring_n)
        throw Error("build_gamma_ring: sites must lie within the ring");

    Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(2 * L, 2 * L);
    for (long long i = 0; i < L; ++i) {
        for (long long j = i; j < L; ++j) {
            const long long x = sites[j] - sites[i];
            const double gp = c.g_ring(x, ring_n);
            const double gm = c.g_ring(-x, ring_n);
            gamma(2 * i, 2 * j + 1) = gp;
            gamma(2 * i + 1, 2 * j) = -gm;
            if (i != j) {
                gamma(2 * j + 1, 2 * i) = -gp;
                gamma(2 * j, 2 * i + 1) = gm;
            }
        }
    }
    return gamma;
}

Eigen::MatrixXcd as_hermitian(const Eigen::MatrixXd& gamma) {
    return std::complex<double>(0.0, 1.0) * gamma.cast<std::complex<double>>();
}

}  // namespace xyfse
