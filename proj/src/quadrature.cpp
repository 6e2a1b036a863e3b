#include "xyfse/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "xyfse/errors.hpp"

namespace xyfse {

GaussLegendreRule::GaussLegendreRule(int n) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n(x) = 0.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

namespace {

const GaussLegendreRule& rule_for(int n) {
    static std::map<int, GaussLegendreRule> rules;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = rules.find(n);
    if (it == rules.end()) it = rules.emplace(n, GaussLegendreRule(n)).first;
    return it->second;
}

double sum_panels(const std::function<double(double)>& f,
                  const std::vector<double>& edges, const GaussLegendreRule& gl) {
    double total = 0.0;
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
        const double a = edges[p], b = edges[p + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double acc = 0.0;
        for (size_t i = 0; i < gl.nodes.size(); ++i)
            acc += gl.weights[i] * f(mid + half * gl.nodes[i]);
        total += half * acc;
    }
    return total;
}

std::vector<double> halve(const std::vector<double>& edges) {
    std::vector<double> out;
    out.reserve(2 * edges.size());
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
        out.push_back(edges[p]);
        out.push_back(0.5 * (edges[p] + edges[p + 1]));
    }
    out.push_back(edges.back());
    return out;
}

}  // namespace

double integrate_panels(const std::function<double(double)>& f,
                        std::vector<double> edges, const QuadratureConfig& cfg) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() < 2) throw Error("integrate_panels: need at least one panel");

    const GaussLegendreRule& gl = rule_for(cfg.nodes_per_panel);
    double prev = sum_panels(f, edges, gl);
    for (int round = 0; round < cfg.max_halvings; ++round) {
        edges = halve(edges);
        const double cur = sum_panels(f, edges, gl);
        if (std::fabs(cur - prev) < cfg.abs_tol) return cur;
        prev = cur;
    }
    throw QuadratureNotConverged("panel refinement did not reach tolerance");
}

}  // namespace xyfse
