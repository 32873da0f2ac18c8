// Unruh/Rindler physics: squeezing from acceleration, two-mode squeezed vacua,
// Unruh single-particle states, Alice-Rob entanglement degradation, the
// near-horizon black hole analog, Killing-observer Doppler shifts and
// wavepacket coefficients. Natural units c = hbar = k_B = 1 throughout.
#pragma once

#include <complex>
#include <vector>

#include "rqi/fock.hpp"

namespace rqi::rindler {

struct AccelerationContext {
    double omega;  // mode angular frequency (> 0)
    double a;      // proper acceleration (> 0)
    double Omega;  // omega / a
    double r;      // squeezing, tanh r = exp(-pi Omega)
};

AccelerationContext acceleration_context(double omega, double a);

// T_U = a / (2 pi).
double unruh_temperature(double a);

// c_n = tanh^n(r)/cosh(r) on |n, n>; squared-norm deficit tanh^{2(cutoff+1)} r.
fock::StateVector two_mode_squeezed_vacuum(double r, int cutoff);

// Reduced single-wedge state: diagonal weights (1 - t^2) t^{2n}, t = tanh r.
fock::DensityMatrix rindler_thermal_state(double r, int cutoff);

// Single-particle Unruh state for |q_R| = 1:
// sqrt(n+1) tanh^n(r)/cosh^2(r) on |n+1, n>.
fock::StateVector single_particle_unruh_state(double r, int cutoff);

// Alice qubit (x) Rob region-I mode after tracing region II of the tripartite
// maximally entangled state.
fock::DensityMatrix alice_rob_state(double r, int cutoff);

// Closed-form logarithmic negativity of the Alice-Rob state. `terms` must
// make the series tail tanh^{2 terms}(r) < 1e-12.
double alice_rob_log_negativity_closed(double r, int terms);

struct UnruhWeights {
    std::complex<double> q_R;
    std::complex<double> q_L;
};

// Norm of (q_R a_R + q_L a_L)|0_M> in the cutoff-truncated Rindler basis.
// Exactly tanh^{cutoff+1}(r) sqrt(cutoff+1) for unit weights.
double unruh_annihilation_residual(double r, const UnruhWeights& weights, int cutoff);

// Near-horizon squeezing q = atanh(exp(-pi omega / A)) with A = 1/(4m).
double black_hole_squeezing(double m, double omega);
// Stationary observer at r0 > 2m: A -> 1/(4m sqrt(1 - 2m/r0)).
double black_hole_squeezing(double m, double omega, double r0);

// omega_K = omega0 sqrt(g00) sqrt((1 + s*alpha)/(1 - s*alpha)) with
// alpha = sqrt(-g00/g11) K1/K0; requires timelike K (|alpha| < 1).
double killing_doppler_frequency(double g00, double g11, double K0, double K1,
                                 double omega0, int sign);

struct WavepacketSpec {
    double log_center;      // center of the Gaussian envelope in ln(omega l)
    double log_width;       // envelope width in ln(omega l), > 0
    double l;               // length constant in the kernel phase (omega l)^{i eps Omega}
    int epsilon_sign;       // mover direction, +1 or -1
    double rindler_center;  // Omega_0 modulation (omega l)^{-i eps Omega_0}; 0 = plain envelope
};

struct WavepacketCoefficients {
    std::vector<std::complex<double>> g_R;
    std::vector<std::complex<double>> g_L;
    double sma_ratio;  // integral |g_L|^2 dOmega / integral |g_R|^2 dOmega
};

// g_{R/L}(Omega) = int f(omega) alpha^{R/L}_{omega Omega} domega by composite
// Gauss-Legendre on ln(omega), panels refined until the kernel phase advances
// at most half an oscillation per cell. f is renormalized on the grid.
WavepacketCoefficients unruh_wavepacket_coefficients(const WavepacketSpec& spec,
                                                     const std::vector<double>& omega_grid,
                                                     const std::vector<double>& Omega_grid);

}  // namespace rqi::rindler
