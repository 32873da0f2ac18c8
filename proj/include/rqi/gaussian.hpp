// Continuous-variable Gaussian-state engine. Quadratures are interleaved
// (x1, p1, x2, p2, ...) and scaled so the vacuum covariance is the identity;
// a Gaussian state is physical iff sigma + i*Omega >= 0 with the symplectic
// form Omega built from [[0, 1], [-1, 0]] blocks. Cross-tool comparisons
// against sigma_vac = I/2 conventions must rescale.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace rqi::gaussian {

// Block-diagonal symplectic form, one [[0,1],[-1,0]] block per mode.
Eigen::MatrixXd symplectic_form(int n_modes);

class CovarianceMatrix {
public:
    // Checks symmetry within 1e-10. Physicality is checked on demand, not
    // here: partial-transpose images are legitimately unphysical.
    CovarianceMatrix(int n_modes, Eigen::MatrixXd entries);

    static CovarianceMatrix vacuum(int n_modes);

    int n_modes() const { return n_modes_; }
    const Eigen::MatrixXd& entries() const { return m_; }

    // Smallest eigenvalue of sigma + i*Omega (>= -tol for physical states).
    double physicality_margin() const;
    bool is_physical(double tol = 1e-8) const { return physicality_margin() >= -tol; }

private:
    int n_modes_;
    Eigen::MatrixXd m_;
};

class SymplecticMatrix {
public:
    // Verifies S Omega S^T = Omega within tol (max-abs).
    SymplecticMatrix(int n_modes, Eigen::MatrixXd entries, double tol = 1e-9);

    static SymplecticMatrix identity(int n_modes);

    int n_modes() const { return n_modes_; }
    const Eigen::MatrixXd& entries() const { return m_; }
    double symplectic_violation() const;

    // Exact-on-the-group inverse: S^-1 = -Omega S^T Omega.
    SymplecticMatrix inverse() const;

private:
    int n_modes_;
    Eigen::MatrixXd m_;
};

struct BogoliubovPair {
    Eigen::MatrixXcd alpha;
    Eigen::MatrixXcd beta;

    // max-abs entry of (alpha alpha^dag - beta beta^dag - I); meaningful for
    // square pairs.
    double identity_violation() const;
};

// Raw 2n x 2n image of a Bogoliubov transform via the 2x2 block map
// M_mn = [[Re(a-b), Im(a+b)], [-Im(a-b), Re(a+b)]], without any group check.
Eigen::MatrixXd bogoliubov_block_matrix(const BogoliubovPair& b);

// Checked symplectic image of a Bogoliubov transform.
SymplecticMatrix symplectic_from_bogoliubov(const BogoliubovPair& b, double tol = 1e-9);

// Iterated first-order projection of a near-symplectic matrix onto the group.
// Returns the repaired matrix and the total correction norm applied.
struct RepairResult {
    SymplecticMatrix S;
    double correction_norm;
};
RepairResult symplectic_repair(Eigen::MatrixXd raw, double target_tol = 1e-9);

CovarianceMatrix apply_symplectic(const CovarianceMatrix& sigma, const SymplecticMatrix& S);

CovarianceMatrix reduce_modes(const CovarianceMatrix& sigma, const std::vector<int>& keep);

// T sigma T with T flipping the momentum quadrature of `mode`; 2-mode only.
CovarianceMatrix partial_transpose_mode(const CovarianceMatrix& sigma, int mode);

// |eigenvalues of i Omega sigma|, magnitude-paired and deduplicated into
// n ascending values.
std::vector<double> symplectic_spectrum(const CovarianceMatrix& sigma);

struct TwoModeEntanglement {
    double nu_minus;         // smallest PT symplectic eigenvalue
    double negativity;       // max{0, (1 - nu)/(2 nu)}
    double log_negativity;   // log2(2 N + 1) = -log2 nu_minus when entangled
    bool entangled;          // nu_minus < 1
};
TwoModeEntanglement two_mode_entanglement(const CovarianceMatrix& sigma);
double two_mode_negativity(const CovarianceMatrix& sigma);

}  // namespace rqi::gaussian
