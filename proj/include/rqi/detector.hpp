// Unruh-DeWitt detector response along inertial and uniformly accelerated
// trajectories, plus the Doppler/homodyne communication formulas.
#pragma once

#include <complex>

namespace rqi::detector {

struct Trajectory {
    enum class Kind { inertial, uniformly_accelerated };
    Kind kind = Kind::inertial;
    double v = 0.0;  // inertial velocity, |v| < 1
    double a = 0.0;  // proper acceleration, > 0

    static Trajectory inertial(double v);
    static Trajectory accelerated(double a);
};

struct ResponseConfig {
    double epsilon;  // i-epsilon regulator, > 0, choose << 1/omega
    // Gaussian switching time scale. T*omega >= 20 suppresses spectral
    // leakage; for accelerated trajectories T >~ 40/a also keeps the window
    // smearing of the exponential Planck tail below 1%.
    double T;
    int order = 16;  // Gauss-Legendre order per quadrature panel
};

// Vacuum Wightman function pulled back to the trajectory:
// inertial     -> -[2 pi (dtau - i eps)]^{-2}
// accelerated  -> -[(4 pi / a) sinh(a dtau / 2 - i eps a)]^{-2}
std::complex<double> wightman_pullback(const Trajectory& traj, double dtau, double epsilon);

struct ResponseResult {
    double value;         // response per unit proper time at window scale T
    double value_doubled; // same at window scale 2T (convergence probe)
    double rel_change;    // |value_doubled - value| / max(|value|, floor)
    bool converged;       // rel_change <= 5%
    bool window_ok;       // T * omega >= 20
};

// Windowed response per unit proper time: the double integral over the
// Gaussian switching function reduces to
//   F(omega) = Re int e^{-i omega dtau} e^{-dtau^2/(4T^2)} g(dtau) ddtau,
// the exp factor being the overlap of the two switching windows.
ResponseResult response_numeric(double omega, const Trajectory& traj, const ResponseConfig& cfg);

// Thermal form (1/2pi) omega / (e^{2 pi omega / a} - 1).
double planck_response(double omega, double a);

// omega_R(tau) = omega_source e^{a tau} for the receiver on the hyperbola.
double doppler_frequency(double tau, double omega_source, double a);

// Normalized homodyne variance 1 / (e^{2 pi omega_source u} - 1), u = x + t.
double homodyne_variance(double omega_source, double u);

}  // namespace rqi::detector
