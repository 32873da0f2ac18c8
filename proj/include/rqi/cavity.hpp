// Moving-cavity mode structure: building-block Bogoliubov coefficients by
// quadrature, first-order mode entanglement, trajectory composition and
// resonance scans. The Rindler cavity spectrum uses the logarithmic mode
// profile sin(Omega_m ln(x / x_l)), consistent with the F/G integrals.
#pragma once

#include <vector>

#include "rqi/gaussian.hpp"

namespace rqi::cavity {

struct CavityGeometry {
    double x_l;  // left mirror Rindler position, > 0
    double x_r;  // right mirror, > x_l
    double L;    // proper length x_r - x_l
    double a;    // center acceleration 2 / (x_l + x_r)
    double h;    // dimensionless acceleration a * L

    static CavityGeometry from_walls(double x_l, double x_r);
    // Same cavity family parameterized by its small parameter; requires 0 < h < 2.
    static CavityGeometry from_length_h(double L, double h);
};

struct ModePair {
    int k;
    int k_prime;
};

struct CavityModeFrequencies {
    double omega;  // inertial, n pi / L
    double Omega;  // dimensionless Rindler label, n pi / ln(x_r / x_l)
};

// The co-moving proper-time angular frequency during acceleration is a*Omega,
// which tends to omega as h -> 0.
CavityModeFrequencies mode_frequencies(const CavityGeometry& geom, int n);

// Coefficients of the inertial->Rindler boundary at the acceleration onset:
//   alpha_mn = (1/L) sqrt(n/m) F_mn + (1/ln(x_r/x_l)) sqrt(m/n) G_mn
//   beta_mn  = (1/L) sqrt(n/m) F_mn - (1/ln(x_r/x_l)) sqrt(m/n) G_mn
// with F/G the sine-overlap integrals on [x_l, x_r]. quadrature_points must
// give at least 8 points per period of the fastest integrand.
gaussian::BogoliubovPair building_block_bogoliubov(const CavityGeometry& geom, int n_modes,
                                                   int quadrature_points);

// |beta^{(1)}_{k k'}|: the linear coefficient of |beta_{k k'}(h)| at h -> 0,
// extracted from probes at h_probe and h_probe/2 with Richardson
// extrapolation. The pair negativity at small h is this slope times h.
double first_order_mode_negativity(const CavityGeometry& geom, const ModePair& pair,
                                   double h_probe);

struct TrajectorySegment {
    enum class Kind { inertial, accelerated };
    Kind kind = Kind::inertial;
    double duration = 0.0;  // proper time at the cavity center
    CavityGeometry geometry{};  // meaningful for accelerated segments

    static TrajectorySegment inertial(double tau);
    static TrajectorySegment accelerated(const CavityGeometry& geom, double eta);
};

struct ComposedTrajectory {
    gaussian::SymplecticMatrix S;
    double correction_norm;  // total symplectic-repair correction applied
};

// Ordered product over the segments: each acceleration onset contributes the
// building-block symplectic image, each offset its inverse, dwells contribute
// diagonal phase rotations (omega_n tau inertial, a Omega_n eta accelerated).
// cavity_length is only needed when no accelerated segment fixes the geometry.
ComposedTrajectory compose_trajectory(const std::vector<TrajectorySegment>& segments,
                                      int n_modes, int quadrature_points,
                                      double cavity_length = 0.0);

struct ResonanceScan {
    std::vector<double> negativity;  // index N = 0 .. N_max repetitions
    double linear_fit_r2;            // R^2 of negativity vs N over N = 1..N_max
    double slope;                    // fitted growth per repetition
    double correction_norm;
};

// Repeat one period N times and track the pair negativity via the Gaussian
// engine. On resonance (period frequency = omega_k + omega_k') the growth is
// linear in N.
ResonanceScan resonance_scan(const std::vector<TrajectorySegment>& period, int N_max,
                             const ModePair& pair, int n_modes, int quadrature_points);

}  // namespace rqi::cavity
