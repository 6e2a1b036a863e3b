#pragma once

#include <Eigen/Dense>
#include <vector>

namespace xyfse {

// Independent cross-check route: Jordan-Wigner exact diagonalization of the
// spin-chain Hamiltonian in the full 2^n Fock basis, plus a fermionic
// partial-trace entropy.  Deliberately shares no code with the
// correlation-matrix pipeline.

enum class Boundary { open, ring };  // ring couples the boundary bond with an
                                     // antiperiodic sign (even-parity sector)

struct EdGroundState {
    int n = 0;
    double gamma = 0.0;
    double h = 0.0;
    Boundary bc = Boundary::ring;
    double energy = 0.0;
    double gap = 0.0;          // E1 - E0 including any degenerate partner
    bool degenerate = false;   // gap < 1e-10
    int parity = 0;            // fermion parity of psi: +1/-1, 0 if mixed
    Eigen::VectorXd psi;       // lowest eigenvector, Fock occupation basis
    Eigen::VectorXd psi_second;
};

// Ground state of H = sum_j [-(c+_j c_j+1 + h.c.) + gamma (pairing)] +
// h sum_j (2 n_j - 1).  Dense eigensolve for n <= 8; matrix-free Lanczos with
// full reorthogonalization (deterministic start vector) above that.  n <= 14.
EdGroundState ed_ground_state(int n, double gamma, double h, Boundary bc);

// Matrix-free y = H x in the Fock basis (exposed for tests).
void apply_hamiltonian(int n, double gamma, double h, Boundary bc,
                       const Eigen::VectorXd& x, Eigen::VectorXd& y);

// Antiperiodic-ring ground energy from the dispersion: -sum_k eps_k.
double ring_ground_energy(int n, double gamma, double h);

// alpha-Renyi entropy (bits) of a probability spectrum (entries <= 1e-14
// are treated as exact zeros).
double renyi_from_probs(std::vector<double> p, double alpha);

// alpha-Renyi entropy (bits) of the fermionic reduced density matrix on mode
// set `sites` (distinct, within [0, n)).  Modes are reordered A-first with
// the exchange sign carried into the amplitude before the partial trace.
double ed_rdm_entropy(const Eigen::VectorXd& psi, int n,
                      std::vector<long long> sites, double alpha);

// Third route for the XX ring (gamma = 0): restrict the filled-mode projector
// C_ij = (1/N) sum_{cos k > h} cos(k (s_i - s_j)) to `sites`; each eigenvalue
// zeta contributes a (zeta, 1-zeta) two-level term.
double xx_mode_entropy(double h, long long ring_n,
                       const std::vector<long long>& sites, double alpha);

}  // namespace xyfse
