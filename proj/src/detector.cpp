#include "rqi/detector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rqi/quadrature.hpp"

namespace rqi::detector {

Trajectory Trajectory::inertial(double v) {
    if (!(std::abs(v) < 1.0)) throw std::invalid_argument("Trajectory: need |v| < 1");
    Trajectory t;
    t.kind = Kind::inertial;
    t.v = v;
    return t;
}

Trajectory Trajectory::accelerated(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("Trajectory: need a > 0");
    Trajectory t;
    t.kind = Kind::uniformly_accelerated;
    t.a = a;
    return t;
}

std::complex<double> wightman_pullback(const Trajectory& traj, double dtau, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("wightman_pullback: epsilon must be > 0");
    const std::complex<double> i(0.0, 1.0);
    if (traj.kind == Trajectory::Kind::inertial) {
        const std::complex<double> d = 2.0 * M_PI * (dtau - i * epsilon);
        return -1.0 / (d * d);
    }
    const double a = traj.a;
    const std::complex<double> s = std::sinh(0.5 * a * dtau - i * epsilon * a);
    const std::complex<double> d = (4.0 * M_PI / a) * s;
    return -1.0 / (d * d);
}

namespace {

double windowed_response(double omega, const Trajectory& traj, double epsilon, double T,
                         int order) {
    // F = int_0^{inf} 2 Re[e^{-i omega d} g(d)] e^{-d^2/(4T^2)} dd, using
    // g(-d) = conj g(d). Truncate at 7 window sigmas (overlap factor 1e-21)
    // or where the accelerated correlator has decayed to 1e-300.
    double dmax = 14.0 * T;
    if (traj.kind == Trajectory::Kind::uniformly_accelerated) {
        // past a dtau ~ 250 the correlator is < 1e-100 and sinh^2 would overflow
        dmax = std::min(dmax, 250.0 / traj.a);
    }
    // Panels graded off the epsilon-scale spike at d = 0, capped so no panel
    // spans more than ~2/3 of an oscillation of e^{-i omega d}.
    const double max_panel = (2.0 * M_PI / omega) / 1.5;
    const auto edges = quad::graded_edges(0.0, dmax, 0.5 * epsilon, max_panel);
    return quad::integrate_panels(
        [&](double d) {
            const std::complex<double> g = wightman_pullback(traj, d, epsilon);
            const double re = std::cos(omega * d) * g.real() + std::sin(omega * d) * g.imag();
            return 2.0 * re * std::exp(-d * d / (4.0 * T * T));
        },
        edges, order);
}

}  // namespace

ResponseResult response_numeric(double omega, const Trajectory& traj, const ResponseConfig& cfg) {
    if (!(omega > 0.0)) throw std::invalid_argument("response_numeric: omega must be > 0");
    if (!(cfg.epsilon > 0.0) || !(cfg.T > 0.0) || cfg.order < 4) {
        throw std::invalid_argument("response_numeric: invalid config");
    }
    ResponseResult out;
    out.value = windowed_response(omega, traj, cfg.epsilon, cfg.T, cfg.order);
    out.value_doubled = windowed_response(omega, traj, cfg.epsilon, 2.0 * cfg.T, cfg.order);
    const double floor = 1e-14;
    out.rel_change = std::abs(out.value_doubled - out.value) /
                     std::max({std::abs(out.value), std::abs(out.value_doubled), floor});
    out.converged = out.rel_change <= 0.05;
    out.window_ok = cfg.T * omega >= 20.0;
    return out;
}

double planck_response(double omega, double a) {
    if (!(omega > 0.0) || !(a > 0.0)) {
        throw std::invalid_argument("planck_response: omega and a must be > 0");
    }
    return omega / std::expm1(2.0 * M_PI * omega / a) / (2.0 * M_PI);
}

double doppler_frequency(double tau, double omega_source, double a) {
    if (!(omega_source > 0.0)) throw std::invalid_argument("doppler_frequency: omega_source > 0");
    if (!(a > 0.0)) throw std::invalid_argument("doppler_frequency: a > 0");
    return omega_source * std::exp(a * tau);
}

double homodyne_variance(double omega_source, double u) {
    if (!(omega_source * u > 0.0)) {
        throw std::invalid_argument("homodyne_variance: omega_source * u must be > 0");
    }
    return 1.0 / std::expm1(2.0 * M_PI * omega_source * u);
}

}  // namespace rqi::detector
