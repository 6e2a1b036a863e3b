#pragma once

#include <functional>
#include <vector>

namespace xyfse {

struct QuadratureConfig {
    int nodes_per_panel = 16;
    double abs_tol = 1e-12;
    int max_halvings = 12;

    bool operator==(const QuadratureConfig&) const = default;
};

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by Newton
// iteration on the Legendre recurrence (machine-precision, deterministic).
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendreRule(int n);
};

// Composite Gauss-Legendre over fixed panel edges, refined by halving every
// panel until two successive grids agree within abs_tol.  Deterministic: no
// data-dependent subdivision, so identical inputs give bit-identical sums.
// Throws QuadratureNotConverged past max_halvings.
double integrate_panels(const std::function<double(double)>& f,
                        std::vector<double> edges, const QuadratureConfig& cfg);

}  // namespace xyfse
