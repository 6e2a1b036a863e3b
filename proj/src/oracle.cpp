#include "xyfse/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "xyfse/entropy.hpp"  // alpha_infinity
#include "xyfse/errors.hpp"

namespace xyfse {

namespace {

constexpr double pi = 3.14159265358979323846;

struct Bond {
    int a, b;
    double bsign;  // -1 on the ring's boundary bond (antiperiodic)
};

std::vector<Bond> make_bonds(int n, Boundary bc) {
    std::vector<Bond> bonds;
    for (int j = 0; j + 1 < n; ++j) bonds.push_back({j, j + 1, 1.0});
    if (bc == Boundary::ring && n > 1) bonds.push_back({n - 1, 0, -1.0});
    return bonds;
}

inline double string_sign(long long s, int i, int j) {
    // Parity of occupied modes strictly between sites i < j.
    const long long mask = ((1LL << j) - 1) & ~((1LL << (i + 1)) - 1);
    return (std::popcount(static_cast<unsigned long long>(s & mask)) & 1) ? -1.0 : 1.0;
}

// Visit every matrix element H[t, s] of column s as (t, amplitude) pairs.
template <typename Sink>
void column_elements(int n, double g, double h, const std::vector<Bond>& bonds,
                     long long s, Sink&& sink) {
    const int occ = std::popcount(static_cast<unsigned long long>(s));
    sink(s, h * double(2 * occ - n));
    for (const Bond& bond : bonds) {
        const int i = std::min(bond.a, bond.b), j = std::max(bond.a, bond.b);
        const double orient = bond.a < bond.b ? 1.0 : -1.0;
        const int oi = int((s >> i) & 1), oj = int((s >> j) & 1);
        const double sg = string_sign(s, i, j);
        if (oi != oj) {
            sink(s ^ (1LL << i) ^ (1LL << j), -bond.bsign * sg);
        } else if (oi == 0) {
            sink(s | (1LL << i) | (1LL << j), g * bond.bsign * sg * orient);
        } else {
            sink((s & ~(1LL << i)) & ~(1LL << j), g * bond.bsign * sg * orient);
        }
    }
}

Eigen::MatrixXd build_dense(int n, double g, double h, Boundary bc) {
    const long long dim = 1LL << n;
    const auto bonds = make_bonds(n, bc);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    for (long long s = 0; s < dim; ++s)
        column_elements(n, g, h, bonds, s,
                        [&](long long t, double amp) { H(t, s) += amp; });
    return H;
}

int parity_of(const Eigen::VectorXd& psi, int n) {
    const long long dim = 1LL << n;
    double expect = 0.0;
    for (long long s = 0; s < dim; ++s) {
        const double w = psi(s) * psi(s);
        expect += (std::popcount(static_cast<unsigned long long>(s)) & 1) ? -w : w;
    }
    if (expect > 0.99) return +1;
    if (expect < -0.99) return -1;
    return 0;
}

// Lowest eigenpair by Lanczos with full reorthogonalization.  `deflate`
// (optional) is projected out of every Krylov vector, so the result is the
// lowest pair in its orthogonal complement.
std::pair<double, Eigen::VectorXd> lanczos_lowest(int n, double g, double h,
                                                  Boundary bc,
                                                  const Eigen::VectorXd* deflate) {
    const long long dim = 1LL << n;
    const int max_iter = int(std::min<long long>(dim, 220));

    // Deterministic start vector: fixed-seed Gaussian entries.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd v(dim);
    for (long long s = 0; s < dim; ++s) v(s) = normal(rng);
    if (deflate) v -= (deflate->dot(v)) * (*deflate);
    v.normalize();

    Eigen::MatrixXd basis(dim, max_iter);
    Eigen::VectorXd alphas(max_iter), betas(max_iter);
    Eigen::VectorXd w(dim);

    double theta_prev = 0.0;
    int stable = 0;
    int k = 0;
    Eigen::VectorXd ritz_small;
    for (; k < max_iter; ++k) {
        basis.col(k) = v;
        apply_hamiltonian(n, g, h, bc, v, w);
        if (deflate) w -= (deflate->dot(w)) * (*deflate);
        alphas(k) = v.dot(w);
        // Full reorthogonalization, twice for stability.
        for (int rep = 0; rep < 2; ++rep) {
            Eigen::VectorXd coeffs = basis.leftCols(k + 1).transpose() * w;
            w.noalias() -= basis.leftCols(k + 1) * coeffs;
        }
        betas(k) = w.norm();

        if (k >= 1) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
            es.computeFromTridiagonal(alphas.head(k + 1), betas.head(k),
                                      Eigen::ComputeEigenvectors);
            if (es.info() != Eigen::Success)
                throw EigensolveFailed("tridiagonal eigensolve failed in Lanczos");
            const double theta = es.eigenvalues()(0);
            ritz_small = es.eigenvectors().col(0);
            const double resid = betas(k) * std::fabs(ritz_small(k));
            if (std::fabs(theta - theta_prev) < 1e-13 * std::max(1.0, std::fabs(theta)) &&
                resid < 1e-10)
                ++stable;
            else
                stable = 0;
            theta_prev = theta;
            if (stable >= 2) {
                ++k;
                break;
            }
        } else {
            theta_prev = alphas(0);
        }

        if (betas(k) < 1e-13) {
            // Krylov space exhausted; current Ritz data is exact.
            ++k;
            break;
        }
        v = w / betas(k);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(alphas.head(k), betas.head(std::max(0, k - 1)),
                              Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw EigensolveFailed("tridiagonal eigensolve failed in Lanczos");
    Eigen::VectorXd ground = basis.leftCols(k) * es.eigenvectors().col(0);
    if (deflate) ground -= (deflate->dot(ground)) * (*deflate);
    ground.normalize();
    return {es.eigenvalues()(0), ground};
}

}  // namespace

void apply_hamiltonian(int n, double gamma, double h, Boundary bc,
                       const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    const long long dim = 1LL << n;
    if (x.size() != dim) throw Error("apply_hamiltonian: wrong vector size");
    y.setZero(dim);
    const auto bonds = make_bonds(n, bc);
    for (long long s = 0; s < dim; ++s) {
        const double xs = x(s);
        if (xs == 0.0) continue;
        column_elements(n, gamma, h, bonds, s,
                        [&](long long t, double amp) { y(t) += amp * xs; });
    }
}

double ring_ground_energy(int n, double gamma, double h) {
    double e = 0.0;
    for (int m = 0; m < n; ++m) {
        const double k = 2.0 * pi * (double(m) + 0.5) / double(n);
        const double a = std::cos(k) - h, b = gamma * std::sin(k);
        e -= std::sqrt(a * a + b * b);
    }
    return e;
}

EdGroundState ed_ground_state(int n, double gamma, double h, Boundary bc) {
    if (n < 1 || n > 14) throw Error("ed_ground_state supports 1 <= n <= 14");
    EdGroundState out;
    out.n = n;
    out.gamma = gamma;
    out.h = h;
    out.bc = bc;

    if (n <= 8) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_dense(n, gamma, h, bc));
        if (es.info() != Eigen::Success)
            throw EigensolveFailed("dense eigensolve failed in ed_ground_state");
        out.energy = es.eigenvalues()(0);
        out.psi = es.eigenvectors().col(0);
        if (es.eigenvalues().size() > 1) {
            out.gap = es.eigenvalues()(1) - es.eigenvalues()(0);
            out.psi_second = es.eigenvectors().col(1);
        }
    } else {
        auto [e0, v0] = lanczos_lowest(n, gamma, h, bc, nullptr);
        auto [e1, v1] = lanczos_lowest(n, gamma, h, bc, &v0);
        out.energy = e0;
        out.psi = v0;
        out.gap = e1 - e0;
        out.psi_second = v1;
    }
    out.degenerate = out.gap < 1e-10;
    out.parity = parity_of(out.psi, n);
    return out;
}

double renyi_from_probs(std::vector<double> p, double alpha) {
    if (!(alpha > 0.0)) throw InvalidAlpha("alpha must be positive");
    double shannon = 0.0, pow_sum = 0.0, pmax = 0.0;
    for (double v : p) {
        if (v <= 1e-14) continue;
        shannon -= v * std::log2(v);
        pow_sum += std::pow(v, alpha);
        pmax = std::max(pmax, v);
    }
    if (alpha == alpha_infinity) return -std::log2(pmax);
    if (std::fabs(alpha - 1.0) < 1e-9) return shannon;
    return std::log2(pow_sum) / (1.0 - alpha);
}

double ed_rdm_entropy(const Eigen::VectorXd& psi, int n,
                      std::vector<long long> sites, double alpha) {
    const long long dim = 1LL << n;
    if (psi.size() != dim) throw Error("ed_rdm_entropy: state size mismatch");
    std::sort(sites.begin(), sites.end());
    if (sites.empty() || sites.front() < 0 || sites.back() >= n ||
        std::adjacent_find(sites.begin(), sites.end()) != sites.end())
        throw Error("ed_rdm_entropy: sites must be distinct and within [0, n)");

    // New mode order: subsystem modes first, environment after, both ascending.
    std::vector<int> pos(size_t(n), -1);
    int a = 0;
    for (long long sjt : sites) pos[size_t(sjt)] = a++;
    int b_index = a;
    for (int j = 0; j < n; ++j)
        if (pos[size_t(j)] < 0) pos[size_t(j)] = b_index++;
    const int b = n - a;

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(1LL << a, 1LL << b);
    std::vector<int> seq;
    for (long long s = 0; s < dim; ++s) {
        const double amp = psi(s);
        if (amp == 0.0) continue;
        seq.clear();
        long long ia = 0, ib = 0;
        for (int j = 0; j < n; ++j) {
            if (!((s >> j) & 1)) continue;
            const int pj = pos[size_t(j)];
            seq.push_back(pj);
            if (pj < a)
                ia |= 1LL << pj;
            else
                ib |= 1LL << (pj - a);
        }
        // Exchange sign from reordering the creation-operator string.
        int inversions = 0;
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t k = i + 1; k < seq.size(); ++k)
                if (seq[i] > seq[k]) ++inversions;
        M(ia, ib) += (inversions & 1) ? -amp : amp;
    }

    // RDM spectrum = squared singular values of M; take the smaller Gram side.
    Eigen::MatrixXd gram;
    if (M.rows() <= M.cols())
        gram.noalias() = M * M.transpose();
    else
        gram.noalias() = M.transpose() * M;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw EigensolveFailed("RDM eigensolve failed");
    std::vector<double> probs(size_t(gram.rows()));
    for (long long i = 0; i < gram.rows(); ++i)
        probs[size_t(i)] = std::max(0.0, es.eigenvalues()(i));
    return renyi_from_probs(std::move(probs), alpha);
}

double xx_mode_entropy(double h, long long ring_n,
                       const std::vector<long long>& sites, double alpha) {
    const long long L = (long long)sites.size();
    if (L == 0) throw Error("xx_mode_entropy: empty site set");
    std::vector<double> filled;
    for (long long m = 0; m < ring_n; ++m) {
        const double k = 2.0 * pi * (double(m) + 0.5) / double(ring_n);
        if (std::cos(k) > h) filled.push_back(k);
    }
    Eigen::MatrixXd C(L, L);
    for (long long i = 0; i < L; ++i) {
        for (long long j = 0; j < L; ++j) {
            double acc = 0.0;
            for (double k : filled) acc += std::cos(k * double(sites[i] - sites[j]));
            C(i, j) = acc / double(ring_n);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw EigensolveFailed("projector eigensolve failed");
    double total = 0.0;
    for (long long i = 0; i < L; ++i) {
        const double zeta = std::clamp(es.eigenvalues()(i), 0.0, 1.0);
        total += renyi_from_probs({zeta, 1.0 - zeta}, alpha);
    }
    return total;
}

}  // namespace xyfse
