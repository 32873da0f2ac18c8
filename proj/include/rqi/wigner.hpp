// Special-relativistic spin machinery: Lorentz matrices, standard boosts,
// Wigner rotations (massive SO(3) and massless ISO(2) little groups),
// Gaussian wavepacket boosts, reduced spin density matrices and the competing
// relativistic spin observables. Metric (+,-,-,-), four-vectors (p0, px, py, pz).
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "rqi/fock.hpp"

namespace rqi::wigner {

using FourVector = Eigen::Vector4d;

double minkowski_norm2(const FourVector& p);

// On-shell four-momentum from a spatial three-momentum.
FourVector on_shell(const Eigen::Vector3d& p3, double m);

class LorentzMatrix {
public:
    // Validates Lambda^T eta Lambda = eta and det = +1 within 1e-10, and
    // orthochronicity.
    explicit LorentzMatrix(Eigen::Matrix4d entries, double tol = 1e-10);

    static LorentzMatrix identity();

    const Eigen::Matrix4d& entries() const { return m_; }
    FourVector apply(const FourVector& p) const { return m_ * p; }
    LorentzMatrix inverse() const;

    // Deviation from a pure spatial rotation (time row/column vs identity).
    double rotation_defect() const;

private:
    Eigen::Matrix4d m_;
};

// Standard boost L(p) with L(p) (m,0,0,0) = p; symmetric as a matrix.
LorentzMatrix standard_boost(const FourVector& p, double m);

LorentzMatrix lorentz_from_rapidity(const Eigen::Vector3d& direction, double xi);
LorentzMatrix lorentz_from_rotation(const Eigen::Vector3d& axis, double angle);

// W(Lambda, p) = L^{-1}(Lambda p) Lambda L(p); fixes (m, 0, 0, 0).
LorentzMatrix wigner_rotation(const LorentzMatrix& Lambda, const FourVector& p, double m);

// Spin-1/2 image D = cos(theta/2) I - i sin(theta/2) n.sigma of a spatial
// rotation, branch anchored at +I for W = I.
Eigen::Matrix2cd su2_from_rotation(const LorentzMatrix& W);

// Rotation angle of the ISO(2) little-group element for a null momentum;
// independent of p^0.
double massless_wigner_phase(const LorentzMatrix& Lambda, const FourVector& p);

struct GaussianSpinPacket {
    Eigen::Vector3d mean;    // mean three-momentum
    double width;            // isotropic Gaussian width
    Eigen::Vector2cd spin;   // (up, down) spin amplitudes, unit norm
};

// Wavepacket with a closed-form evaluator (never interpolated) plus a
// Gauss-Legendre box grid for momentum quadrature under the Lorentz
// invariant measure d^3p / ((2 pi)^3 2 p^0). Boosted amplitudes keep the
// pre-boost box and push the nodes forward through the transform; the
// invariance of the measure makes the pushed-forward weights exact.
class SpinHalfAmplitude {
public:
    using Evaluator = std::function<Eigen::Vector2cd(const Eigen::Vector3d&)>;
    using NodeMap = std::function<Eigen::Vector3d(const Eigen::Vector3d&)>;

    static SpinHalfAmplitude gaussian(const GaussianSpinPacket& packet, double mass,
                                      int points_per_axis = 24);

    Eigen::Vector2cd operator()(const Eigen::Vector3d& p) const { return eval_(p); }
    double mass() const { return mass_; }

    double norm_squared() const;

    // Quadrature over the (possibly pushed-forward) grid: accumulates
    // f(p, measure_weight).
    void for_each_node(const std::function<void(const Eigen::Vector3d&, double)>& f) const;

    // Internal: arbitrary evaluator over an explicit base box; node_map pushes
    // base nodes into the current frame (identity when absent).
    SpinHalfAmplitude(Evaluator eval, double mass, const Eigen::Vector3d& lo,
                      const Eigen::Vector3d& hi, int points_per_axis, NodeMap node_map = nullptr);

private:
    friend SpinHalfAmplitude boost_single_particle(const SpinHalfAmplitude&, const LorentzMatrix&,
                                                   double);
    Evaluator eval_;
    double mass_;
    Eigen::Vector3d lo_, hi_;
    int n_;
    NodeMap node_map_;
};

// psi'(p) = D(W(Lambda, Lambda^{-1} p)) psi(Lambda^{-1} p), evaluated through
// the closed form; norm preserved.
SpinHalfAmplitude boost_single_particle(const SpinHalfAmplitude& psi, const LorentzMatrix& Lambda,
                                        double m);

// rho_{s s'} = int dmu psi*_s psi_s'; Hermitian with unit trace.
fock::DensityMatrix reduced_spin_density(const SpinHalfAmplitude& psi);

// Spin-Bell-type amplitude with product Gaussian momenta:
// sum_{s t} G_{s t} phi_A(p) phi_B(q) |p, s>|q, t>.
struct TwoParticleAmplitude {
    Eigen::Matrix2cd spin_amplitudes;  // Frobenius-normalized G
    GaussianSpinPacket packet_a;       // spin fields unused here
    GaussianSpinPacket packet_b;
    int points_per_axis = 16;
};

// Concurrence of the two-qubit reduced spin state after U(Lambda) (x) U(Lambda).
double two_particle_concurrence(const TwoParticleAmplitude& g, const LorentzMatrix& Lambda,
                                double m);

enum class SpinObservable { center_of_mass, newton_wigner, czachor, friis_local };

// Momentum-resolved expectation of the selected spin observable along n_hat.
double spin_observable_expectation(const SpinHalfAmplitude& psi, const Eigen::Vector3d& n_hat,
                                   SpinObservable which);

// The p-dependent 2x2 observable matrix itself (exposed for spectra checks).
Eigen::Matrix2cd spin_observable_matrix(const Eigen::Vector3d& p, double m,
                                        const Eigen::Vector3d& n_hat, SpinObservable which);

}  // namespace rqi::wigner
