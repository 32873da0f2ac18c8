#include "rqi/cavity.hpp"

#include <cmath>
#include <stdexcept>

#include "rqi/quadrature.hpp"

namespace rqi::cavity {

namespace {

void check_pair(const ModePair& pair) {
    if (pair.k < 1 || pair.k_prime < 1 || pair.k == pair.k_prime) {
        throw std::invalid_argument("ModePair: labels must be distinct positive integers");
    }
}

// F_mn and G_mn on [x_l, x_r]; weight(x) = 1 or 1/x.
double overlap_integral(const CavityGeometry& g, int m, int n, int points, bool inverse_x) {
    const double omega_n = n * M_PI / g.L;
    const double Omega_m = m * M_PI / std::log(g.x_r / g.x_l);
    const int order = 16;
    const int panels = (points + order - 1) / order;
    return quad::integrate(
        [&](double x) {
            const double s = std::sin(omega_n * (x - g.x_l)) * std::sin(Omega_m * std::log(x / g.x_l));
            return inverse_x ? s / x : s;
        },
        g.x_l, g.x_r, panels, order);
}

double beta_coefficient(const CavityGeometry& g, int m, int n, int points) {
    const double F = overlap_integral(g, m, n, points, false);
    const double G = overlap_integral(g, m, n, points, true);
    const double lnr = std::log(g.x_r / g.x_l);
    return std::sqrt(double(n) / m) * F / g.L - std::sqrt(double(m) / n) * G / lnr;
}

// Diagonal phase rotation exp(-i theta_n) per mode as a symplectic matrix.
gaussian::SymplecticMatrix phase_rotation(const std::vector<double>& thetas) {
    const int n = static_cast<int>(thetas.size());
    gaussian::BogoliubovPair b;
    b.alpha = Eigen::MatrixXcd::Zero(n, n);
    b.beta = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        b.alpha(i, i) = std::polar(1.0, -thetas[static_cast<std::size_t>(i)]);
    }
    return gaussian::symplectic_from_bogoliubov(b, 1e-12);
}

int required_points(int n_modes) { return 8 * n_modes; }

}  // namespace

CavityGeometry CavityGeometry::from_walls(double x_l, double x_r) {
    if (!(x_l > 0.0) || !(x_r > x_l)) {
        throw std::invalid_argument("CavityGeometry: need 0 < x_l < x_r");
    }
    CavityGeometry g;
    g.x_l = x_l;
    g.x_r = x_r;
    g.L = x_r - x_l;
    g.a = 2.0 / (x_l + x_r);
    g.h = g.a * g.L;
    return g;
}

CavityGeometry CavityGeometry::from_length_h(double L, double h) {
    if (!(L > 0.0)) throw std::invalid_argument("CavityGeometry: L must be > 0");
    if (!(h > 0.0 && h < 2.0)) {
        throw std::invalid_argument("CavityGeometry: h must lie in (0, 2)");
    }
    return from_walls(L / h - L / 2.0, L / h + L / 2.0);
}

CavityModeFrequencies mode_frequencies(const CavityGeometry& geom, int n) {
    if (n < 1) throw std::invalid_argument("mode_frequencies: n must be >= 1");
    CavityModeFrequencies f;
    f.omega = n * M_PI / geom.L;
    f.Omega = n * M_PI / std::log(geom.x_r / geom.x_l);
    return f;
}

gaussian::BogoliubovPair building_block_bogoliubov(const CavityGeometry& geom, int n_modes,
                                                   int quadrature_points) {
    if (n_modes < 2) throw std::invalid_argument("building_block_bogoliubov: n_modes >= 2");
    if (quadrature_points < required_points(n_modes)) {
        throw std::invalid_argument(
            "building_block_bogoliubov: under-resolved quadrature, need >= 8 points per period");
    }
    const double lnr = std::log(geom.x_r / geom.x_l);
    gaussian::BogoliubovPair b;
    b.alpha = Eigen::MatrixXcd::Zero(n_modes, n_modes);
    b.beta = Eigen::MatrixXcd::Zero(n_modes, n_modes);
    for (int m = 1; m <= n_modes; ++m) {
        for (int n = 1; n <= n_modes; ++n) {
            const double F = overlap_integral(geom, m, n, quadrature_points, false);
            const double G = overlap_integral(geom, m, n, quadrature_points, true);
            const double fterm = std::sqrt(double(n) / m) * F / geom.L;
            const double gterm = std::sqrt(double(m) / n) * G / lnr;
            b.alpha(m - 1, n - 1) = fterm + gterm;
            b.beta(m - 1, n - 1) = fterm - gterm;
        }
    }
    return b;
}

double first_order_mode_negativity(const CavityGeometry& geom, const ModePair& pair,
                                   double h_probe) {
    check_pair(pair);
    if (!(h_probe > 0.0) || h_probe > 1e-2) {
        throw std::invalid_argument("first_order_mode_negativity: h_probe must lie in (0, 1e-2]");
    }
    const int points = std::max(256, 32 * (pair.k + pair.k_prime));
    const auto probe = [&](double h) {
        const CavityGeometry g = CavityGeometry::from_length_h(geom.L, h);
        return std::abs(beta_coefficient(g, pair.k, pair.k_prime, points));
    };
    const double s1 = probe(h_probe) / h_probe;
    const double s2 = probe(0.5 * h_probe) / (0.5 * h_probe);
    const double slope = 2.0 * s2 - s1;  // Richardson: kills the O(h) bias
    if (std::abs(s1 - s2) > 0.5 * std::abs(slope)) {
        throw std::runtime_error(
            "first_order_mode_negativity: quadratic term dominates at h_probe; reduce it");
    }
    return std::abs(slope);
}

TrajectorySegment TrajectorySegment::inertial(double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("TrajectorySegment: duration must be >= 0");
    TrajectorySegment s;
    s.kind = Kind::inertial;
    s.duration = tau;
    return s;
}

TrajectorySegment TrajectorySegment::accelerated(const CavityGeometry& geom, double eta) {
    if (!(eta >= 0.0)) throw std::invalid_argument("TrajectorySegment: duration must be >= 0");
    TrajectorySegment s;
    s.kind = Kind::accelerated;
    s.duration = eta;
    s.geometry = geom;
    return s;
}

ComposedTrajectory compose_trajectory(const std::vector<TrajectorySegment>& segments,
                                      int n_modes, int quadrature_points,
                                      double cavity_length) {
    if (segments.empty()) throw std::invalid_argument("compose_trajectory: empty segment list");
    if (n_modes < 2) throw std::invalid_argument("compose_trajectory: n_modes >= 2");

    double L = cavity_length;
    for (const auto& s : segments) {
        if (s.kind != TrajectorySegment::Kind::accelerated) continue;
        if (L == 0.0) {
            L = s.geometry.L;
        } else if (std::abs(s.geometry.L - L) > 1e-12 * L) {
            throw std::invalid_argument("compose_trajectory: cavity proper length must be rigid");
        }
    }
    if (L == 0.0) {
        bool has_dwell = false;
        for (const auto& s : segments) has_dwell = has_dwell || s.duration > 0.0;
        if (has_dwell) {
            throw std::invalid_argument(
                "compose_trajectory: inertial-only dwell needs an explicit cavity_length");
        }
        return ComposedTrajectory{gaussian::SymplecticMatrix::identity(n_modes), 0.0};
    }

    Eigen::MatrixXd total = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    double correction = 0.0;

    auto left_multiply = [&](const Eigen::MatrixXd& m) { total = m * total; };

    for (const auto& seg : segments) {
        if (seg.kind == TrajectorySegment::Kind::inertial) {
            std::vector<double> thetas(static_cast<std::size_t>(n_modes));
            for (int n = 1; n <= n_modes; ++n) {
                thetas[static_cast<std::size_t>(n - 1)] = n * M_PI / L * seg.duration;
            }
            left_multiply(phase_rotation(thetas).entries());
            continue;
        }
        const CavityGeometry& g = seg.geometry;
        const gaussian::BogoliubovPair block = building_block_bogoliubov(g, n_modes,
                                                                         quadrature_points);
        // Truncation makes the raw image only approximately symplectic;
        // project back onto the group and record the correction.
        const gaussian::RepairResult rep =
            gaussian::symplectic_repair(gaussian::bogoliubov_block_matrix(block), 1e-10);
        correction += rep.correction_norm;

        std::vector<double> thetas(static_cast<std::size_t>(n_modes));
        for (int n = 1; n <= n_modes; ++n) {
            thetas[static_cast<std::size_t>(n - 1)] =
                g.a * mode_frequencies(g, n).Omega * seg.duration;
        }
        // S_B: inertial -> co-moving Rindler; dwell phases there; back.
        const Eigen::MatrixXd rot = phase_rotation(thetas).entries();
        left_multiply(rep.S.inverse().entries() * rot * rep.S.entries());
    }

    const gaussian::RepairResult final_rep = gaussian::symplectic_repair(total, 1e-9);
    correction += final_rep.correction_norm;
    return ComposedTrajectory{final_rep.S, correction};
}

ResonanceScan resonance_scan(const std::vector<TrajectorySegment>& period, int N_max,
                             const ModePair& pair, int n_modes, int quadrature_points) {
    check_pair(pair);
    if (N_max < 3) throw std::invalid_argument("resonance_scan: N_max must be >= 3");
    if (pair.k > n_modes || pair.k_prime > n_modes) {
        throw std::invalid_argument("resonance_scan: pair outside the truncated mode set");
    }
    const ComposedTrajectory one = compose_trajectory(period, n_modes, quadrature_points);

    ResonanceScan out;
    out.correction_norm = one.correction_norm;
    out.negativity.reserve(static_cast<std::size_t>(N_max) + 1);
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    for (int N = 0; N <= N_max; ++N) {
        Eigen::MatrixXd cov = power * power.transpose();
        cov = 0.5 * (cov + cov.transpose()).eval();
        const gaussian::CovarianceMatrix sigma(n_modes, std::move(cov));
        const gaussian::CovarianceMatrix pair_sigma =
            gaussian::reduce_modes(sigma, {pair.k - 1, pair.k_prime - 1});
        out.negativity.push_back(gaussian::two_mode_negativity(pair_sigma));
        power = one.S.entries() * power;
    }

    // Least-squares line through (N, negativity), N = 1..N_max.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int N = 1; N <= N_max; ++N) {
        const double y = out.negativity[static_cast<std::size_t>(N)];
        sx += N;
        sy += y;
        sxx += double(N) * N;
        sxy += N * y;
    }
    const double n = N_max;
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    for (int N = 1; N <= N_max; ++N) {
        const double y = out.negativity[static_cast<std::size_t>(N)];
        const double fit = intercept + slope * N;
        ss_res += (y - fit) * (y - fit);
        ss_tot += (y - sy / n) * (y - sy / n);
    }
    out.slope = slope;
    out.linear_fit_r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return out;
}

}  // namespace rqi::cavity
