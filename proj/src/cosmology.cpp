#include "rqi/cosmology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rqi/rindler.hpp"
#include "rqi/special.hpp"

namespace rqi::cosmology {

namespace {

void check_params(const ExpansionParams& p, const char* who) {
    if (!(p.epsilon > 0.0)) throw std::invalid_argument(std::string(who) + ": epsilon must be > 0");
    if (!(p.sigma > 0.0)) throw std::invalid_argument(std::string(who) + ": sigma must be > 0");
    if (!(p.m >= 0.0)) throw std::invalid_argument(std::string(who) + ": m must be >= 0");
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    return special::complex_gamma(z);
}

ModeFrequencies mode_frequencies(double k, const ExpansionParams& params) {
    check_params(params, "mode_frequencies");
    if (!std::isfinite(k)) throw std::invalid_argument("mode_frequencies: k must be finite");
    ModeFrequencies f;
    f.k = k;
    f.omega_in = std::hypot(k, params.m);
    f.omega_out = std::sqrt(k * k + params.m * params.m * (1.0 + 2.0 * params.epsilon));
    f.omega_plus = 0.5 * (f.omega_out + f.omega_in);
    f.omega_minus = 0.5 * (f.omega_out - f.omega_in);
    return f;
}

BogoliubovCoefficients bogoliubov_rw(double k, const ExpansionParams& params) {
    const ModeFrequencies f = mode_frequencies(k, params);
    if (f.omega_minus == 0.0) {
        // Conformal short-circuit: no particle creation.
        return BogoliubovCoefficients{1.0, 0.0};
    }
    const std::complex<double> i(0.0, 1.0);
    const double s = params.sigma;
    const double ratio = std::sqrt(f.omega_out / f.omega_in);
    const std::complex<double> g_in = special::complex_gamma(1.0 - i * f.omega_in / s);
    BogoliubovCoefficients out;
    out.alpha = ratio * g_in * special::complex_gamma(-i * f.omega_out / s) /
                (special::complex_gamma(-i * f.omega_plus / s) *
                 special::complex_gamma(1.0 - i * f.omega_plus / s));
    out.beta = ratio * g_in * special::complex_gamma(i * f.omega_out / s) /
               (special::complex_gamma(i * f.omega_minus / s) *
                special::complex_gamma(1.0 + i * f.omega_minus / s));
    return out;
}

double gamma_parameter(double k, const ExpansionParams& params) {
    const ModeFrequencies f = mode_frequencies(k, params);
    if (f.omega_minus == 0.0) return 0.0;
    const double xm = M_PI * f.omega_minus / params.sigma;
    const double xp = M_PI * f.omega_plus / params.sigma;
    if (xp > 30.0) {
        return std::exp(2.0 * (special::log_sinh(xm) - special::log_sinh(xp)));
    }
    const double r = std::sinh(xm) / std::sinh(xp);
    return r * r;
}

fock::StateVector out_state(double gamma, int cutoff) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("out_state: gamma must lie in [0, 1)");
    }
    // Squeezed-vacuum weights (1-gamma) gamma^n; identical state to
    // two_mode_squeezed_vacuum with tanh r = sqrt(gamma).
    return rindler::two_mode_squeezed_vacuum(std::atanh(std::sqrt(gamma)), cutoff);
}

double entanglement_entropy(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("entanglement_entropy: gamma must lie in [0, 1)");
    }
    if (gamma == 0.0) return 0.0;
    return gamma / (gamma - 1.0) * std::log2(gamma) - std::log2(1.0 - gamma);
}

namespace {

// Inverse of entanglement_entropy by bisection (monotone increasing on [0,1)).
double gamma_from_entropy(double S) {
    if (!(S > 0.0) || !std::isfinite(S)) {
        throw std::invalid_argument("invert_expansion_params: entropies must be > 0 and finite");
    }
    double lo = 0.0, hi = 1.0 - 1e-16;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (entanglement_entropy(mid) < S ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

InversionResult invert_expansion_params(double S1, double k1, double S2, double k2, double m) {
    if (!(m > 0.0)) {
        throw std::invalid_argument(
            "invert_expansion_params: m = 0 is conformal, entropy carries no information");
    }
    if (k1 == k2) throw std::invalid_argument("invert_expansion_params: need k1 != k2");
    const double g1 = gamma_from_entropy(S1);
    const double g2 = gamma_from_entropy(S2);

    auto gamma_at = [&](double log_eps, double log_sigma, double k) {
        return gamma_parameter(k, ExpansionParams{std::exp(log_eps), std::exp(log_sigma), m});
    };
    auto residual_vec = [&](double le, double ls, double* r1, double* r2) {
        *r1 = gamma_at(le, ls, k1) - g1;
        *r2 = gamma_at(le, ls, k2) - g2;
    };
    auto objective = [&](double le, double ls) {
        double r1, r2;
        residual_vec(le, ls, &r1, &r2);
        return std::max(std::abs(r1), std::abs(r2));
    };

    // Coarse grid search over log parameters.
    const int n_grid = 40;
    const double lo = std::log(1e-3), hi = std::log(1e3);
    struct Seed {
        double le, ls, obj;
    };
    std::vector<Seed> seeds;
    for (int i = 0; i < n_grid; ++i) {
        for (int j = 0; j < n_grid; ++j) {
            const double le = lo + (hi - lo) * i / (n_grid - 1);
            const double ls = lo + (hi - lo) * j / (n_grid - 1);
            seeds.push_back({le, ls, objective(le, ls)});
        }
    }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.obj < b.obj; });

    auto newton_refine = [&](double le, double ls, bool* ok) {
        for (int it = 0; it < 80; ++it) {
            double r1, r2;
            residual_vec(le, ls, &r1, &r2);
            if (std::max(std::abs(r1), std::abs(r2)) < 1e-14) break;
            const double h = 1e-6;
            double r1e, r2e, r1s, r2s;
            residual_vec(le + h, ls, &r1e, &r2e);
            residual_vec(le, ls + h, &r1s, &r2s);
            const double j11 = (r1e - r1) / h, j12 = (r1s - r1) / h;
            const double j21 = (r2e - r2) / h, j22 = (r2s - r2) / h;
            const double det = j11 * j22 - j12 * j21;
            if (std::abs(det) < 1e-300) break;
            double de = (-r1 * j22 + r2 * j12) / det;
            double ds = (-r2 * j11 + r1 * j21) / det;
            // Damp long steps; gamma varies over many orders in log space.
            const double len = std::hypot(de, ds);
            if (len > 2.0) {
                de *= 2.0 / len;
                ds *= 2.0 / len;
            }
            le += de;
            ls += ds;
        }
        *ok = objective(le, ls) < 1e-12;
        return std::pair<double, double>(le, ls);
    };

    std::vector<std::pair<double, double>> solutions;
    const std::size_t tries = std::min<std::size_t>(seeds.size(), 12);
    for (std::size_t i = 0; i < tries; ++i) {
        bool ok = false;
        const auto sol = newton_refine(seeds[i].le, seeds[i].ls, &ok);
        if (!ok) continue;
        bool duplicate = false;
        for (const auto& s : solutions) {
            if (std::abs(s.first - sol.first) < 1e-3 && std::abs(s.second - sol.second) < 1e-3) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) solutions.push_back(sol);
    }
    if (solutions.empty()) {
        double best = seeds.front().obj;
        throw std::runtime_error("invert_expansion_params: no solution found (residual floor " +
                                 std::to_string(best) + ")");
    }

    const auto [le, ls] = solutions.front();
    InversionResult out;
    out.params = ExpansionParams{std::exp(le), std::exp(ls), m};
    out.unique = solutions.size() == 1;

    // Report the entropy residual and the conditioning of dS/d(log params).
    const double Sa = entanglement_entropy(gamma_parameter(k1, out.params));
    const double Sb = entanglement_entropy(gamma_parameter(k2, out.params));
    out.residual = std::max(std::abs(Sa - S1), std::abs(Sb - S2));
    const double h = 1e-6;
    auto entropy_at = [&](double dle, double dls, double k) {
        return entanglement_entropy(
            gamma_parameter(k, ExpansionParams{std::exp(le + dle), std::exp(ls + dls), m}));
    };
    Eigen::Matrix2d jac;
    jac << (entropy_at(h, 0, k1) - Sa) / h, (entropy_at(0, h, k1) - Sa) / h,
        (entropy_at(h, 0, k2) - Sb) / h, (entropy_at(0, h, k2) - Sb) / h;
    const Eigen::JacobiSVD<Eigen::Matrix2d> svd(jac);
    const double smin = svd.singularValues()(1);
    out.jacobian_condition = smin > 0.0 ? svd.singularValues()(0) / smin
                                        : std::numeric_limits<double>::infinity();
    if (out.residual > 1e-8) {
        throw std::runtime_error("invert_expansion_params: residual " +
                                 std::to_string(out.residual) + " above 1e-8");
    }
    return out;
}

}  // namespace rqi::cosmology
