#pragma once

#include <Eigen/Dense>

#include "xyfse/correlator.hpp"
#include "xyfse/intervals.hpp"

namespace xyfse {

// Restricted Majorana correlation matrix over the sites of an interval set:
// real skew-symmetric, 2L x 2L, built from 2x2 blocks per site pair (i, j)
//   [[0, G(x)], [-G(-x), 0]],  x = s_j - s_i.
// Only the upper site triangle is assembled; the lower half is the skew
// mirror, so Gamma^T = -Gamma holds exactly by construction.
Eigen::MatrixXd build_gamma(const Correlator& c, const IntervalSet& a);

// Same construction from the finite-ring correlator (antiperiodic momentum
// sum with ring_n modes); sites must lie in [0, ring_n).
Eigen::MatrixXd build_gamma_ring(const Correlator& c, const IntervalSet& a,
                                 long long ring_n);

// The Hermitian operator i*Gamma whose spectrum is the nu-spectrum.
Eigen::MatrixXcd as_hermitian(const Eigen::MatrixXd& gamma);

}  // namespace xyfse
