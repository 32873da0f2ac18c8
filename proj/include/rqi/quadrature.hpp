// Gauss-Legendre rules and composite panel integration helpers.
#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rqi::quad {

struct Rule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;  // sum to 2
};

// Nodes/weights by Newton iteration on the Legendre polynomial; cached per order.
const Rule& gauss_legendre(int order);

// Composite Gauss-Legendre over [a, b] split into `panels` equal panels.
template <typename F>
auto integrate(F&& f, double a, double b, int panels, int order)
    -> decltype(f(0.0)) {
    if (panels < 1 || order < 1) {
        throw std::invalid_argument("integrate: panels and order must be >= 1");
    }
    const Rule& rule = gauss_legendre(order);
    using R = decltype(f(0.0));
    R total{};
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double half = 0.5 * width;
        const double mid = lo + half;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            total += R(rule.weights[i] * half * f(mid + half * rule.nodes[i]));
        }
    }
    return total;
}

// Composite rule over explicit panel edges (ascending).
template <typename F>
auto integrate_panels(F&& f, const std::vector<double>& edges, int order)
    -> decltype(f(0.0)) {
    if (edges.size() < 2) throw std::invalid_argument("integrate_panels: need >= 2 edges");
    const Rule& rule = gauss_legendre(order);
    using R = decltype(f(0.0));
    R total{};
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        const double mid = 0.5 * (edges[p + 1] + edges[p]);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            total += R(rule.weights[i] * half * f(mid + half * rule.nodes[i]));
        }
    }
    return total;
}

// Panel edges graded geometrically away from `a` (finest scale first panel),
// capped so no panel exceeds `max_panel`. Used for integrands with a sharp
// feature of scale `scale` at the left endpoint plus oscillation elsewhere.
std::vector<double> graded_edges(double a, double b, double scale, double max_panel);

}  // namespace rqi::quad
