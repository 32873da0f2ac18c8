#include "rqi/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace rqi::quad {

namespace {

Rule compute_rule(int order) {
    Rule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const Rule& gauss_legendre(int order) {
    if (order < 1 || order > 256) {
        throw std::invalid_argument("gauss_legendre: order out of range [1, 256]");
    }
    static std::map<int, Rule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, compute_rule(order)).first;
    }
    return it->second;
}

std::vector<double> graded_edges(double a, double b, double scale, double max_panel) {
    if (!(b > a) || !(scale > 0.0) || !(max_panel > 0.0)) {
        throw std::invalid_argument("graded_edges: need b > a, scale > 0, max_panel > 0");
    }
    std::vector<double> edges{a};
    double step = scale;
    double x = a;
    while (x < b) {
        x = std::min(x + std::min(step, max_panel), b);
        edges.push_back(x);
        step *= 2.0;
    }
    return edges;
}

}  // namespace rqi::quad
