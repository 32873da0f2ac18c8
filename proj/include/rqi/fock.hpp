// Truncated multimode Fock-space states and discrete-variable entanglement
// measures. Occupation numbers index amplitudes row-major, with heterogeneous
// per-mode cutoffs so a qubit can sit next to a high-cutoff bosonic mode.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace rqi::fock {

using Complex = std::complex<double>;

class ModeRegister {
public:
    explicit ModeRegister(std::vector<int> dims);

    int n_modes() const { return static_cast<int>(dims_.size()); }
    int dim(int mode) const { return dims_.at(static_cast<std::size_t>(mode)); }
    const std::vector<int>& dims() const { return dims_; }
    std::size_t total_dim() const { return total_; }

    // Row-major flattening of an occupation-number tuple.
    std::size_t index_of(std::span<const int> occupation) const;
    std::vector<int> occupation_of(std::size_t index) const;

    bool operator==(const ModeRegister& other) const { return dims_ == other.dims_; }

private:
    std::vector<int> dims_;
    std::size_t total_ = 1;
};

class StateVector {
public:
    StateVector(ModeRegister reg, Eigen::VectorXcd amplitudes);

    const ModeRegister& reg() const { return reg_; }
    const Eigen::VectorXcd& amplitudes() const { return amp_; }

    double squared_norm() const { return amp_.squaredNorm(); }
    // Truncation loss: 1 - |psi|^2. Stored implicitly, never silently removed.
    double norm_deficit() const { return 1.0 - squared_norm(); }
    StateVector normalized() const;

private:
    ModeRegister reg_;
    Eigen::VectorXcd amp_;
};

class DensityMatrix {
public:
    DensityMatrix(ModeRegister reg, Eigen::MatrixXcd entries);

    static DensityMatrix from_pure(const StateVector& psi);

    const ModeRegister& reg() const { return reg_; }
    const Eigen::MatrixXcd& entries() const { return m_; }

    double trace_real() const { return m_.trace().real(); }
    double hermiticity_error() const;  // max-abs entry of rho - rho^dagger
    DensityMatrix renormalized() const;

private:
    ModeRegister reg_;
    Eigen::MatrixXcd m_;
};

StateVector tensor_product(const StateVector& a, const StateVector& b);

// Reduced matrix on `keep` (trace preserved); throws on empty/out-of-range set.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Pure-state shortcut rho_keep = Tr_rest |psi><psi| without forming the full
// density matrix.
DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep);

// Transposes the indices of the named modes; proper nonempty subset required.
DensityMatrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& subsystem);

struct NegativityResult {
    double negativity;      // (||rho^PT||_1 - 1) / 2
    double log_negativity;  // log2 ||rho^PT||_1
};
NegativityResult negativity_measures(const DensityMatrix& rho, const std::vector<int>& subsystem);

// -sum lambda log2 lambda, eigenvalues clipped at 0; throws if an eigenvalue
// falls below -1e-8.
double von_neumann_entropy(const DensityMatrix& rho);

struct SchmidtDecomposition {
    Eigen::VectorXd coefficients;  // descending, nonnegative
    Eigen::MatrixXcd left_basis;   // columns on the left factor
    Eigen::MatrixXcd right_basis;  // columns on the right factor
};
// psi = sum_i lambda_i |left_i> (x) |right_i>, modes of each side kept in
// their original relative order.
SchmidtDecomposition schmidt_decomposition(const StateVector& psi,
                                           const std::vector<int>& left_modes);

// Wootters concurrence on a (2,2) register.
double concurrence(const DensityMatrix& rho);

}  // namespace rqi::fock
