#include "rqi/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rqi::gaussian {

namespace {
constexpr double kSymTol = 1e-10;
}

Eigen::MatrixXd symplectic_form(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int m = 0; m < n_modes; ++m) {
        omega(2 * m, 2 * m + 1) = 1.0;
        omega(2 * m + 1, 2 * m) = -1.0;
    }
    return omega;
}

CovarianceMatrix::CovarianceMatrix(int n_modes, Eigen::MatrixXd entries)
    : n_modes_(n_modes), m_(std::move(entries)) {
    if (n_modes_ < 1) throw std::invalid_argument("CovarianceMatrix: n_modes must be >= 1");
    if (m_.rows() != 2 * n_modes_ || m_.cols() != 2 * n_modes_) {
        throw std::invalid_argument("CovarianceMatrix: shape must be 2n x 2n");
    }
    if (!m_.allFinite()) throw std::invalid_argument("CovarianceMatrix: non-finite entry");
    if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > kSymTol) {
        throw std::invalid_argument("CovarianceMatrix: not symmetric within 1e-10");
    }
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
    return CovarianceMatrix(n_modes, Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

double CovarianceMatrix::physicality_margin() const {
    Eigen::MatrixXcd h = m_.cast<std::complex<double>>() +
                         std::complex<double>(0.0, 1.0) * symplectic_form(n_modes_);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

SymplecticMatrix::SymplecticMatrix(int n_modes, Eigen::MatrixXd entries, double tol)
    : n_modes_(n_modes), m_(std::move(entries)) {
    if (n_modes_ < 1) throw std::invalid_argument("SymplecticMatrix: n_modes must be >= 1");
    if (m_.rows() != 2 * n_modes_ || m_.cols() != 2 * n_modes_) {
        throw std::invalid_argument("SymplecticMatrix: shape must be 2n x 2n");
    }
    const double v = symplectic_violation();
    if (!(v <= tol)) {
        throw std::invalid_argument("SymplecticMatrix: S Omega S^T - Omega violation " +
                                    std::to_string(v) + " exceeds tolerance");
    }
}

SymplecticMatrix SymplecticMatrix::identity(int n_modes) {
    return SymplecticMatrix(n_modes, Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

double SymplecticMatrix::symplectic_violation() const {
    const Eigen::MatrixXd omega = symplectic_form(n_modes_);
    return (m_ * omega * m_.transpose() - omega).cwiseAbs().maxCoeff();
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    const Eigen::MatrixXd omega = symplectic_form(n_modes_);
    return SymplecticMatrix(n_modes_, -omega * m_.transpose() * omega,
                            std::max(1e-9, 10.0 * symplectic_violation()));
}

double BogoliubovPair::identity_violation() const {
    if (alpha.rows() != beta.rows() || alpha.cols() != beta.cols()) {
        throw std::invalid_argument("BogoliubovPair: alpha/beta shape mismatch");
    }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(alpha.rows(), alpha.rows());
    return (alpha * alpha.adjoint() - beta * beta.adjoint() - id).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd bogoliubov_block_matrix(const BogoliubovPair& b) {
    if (b.alpha.rows() != b.alpha.cols()) {
        throw std::invalid_argument("bogoliubov_block_matrix: alpha must be square");
    }
    if (b.beta.rows() != b.alpha.rows() || b.beta.cols() != b.alpha.cols()) {
        throw std::invalid_argument("bogoliubov_block_matrix: beta shape mismatch");
    }
    const int n = static_cast<int>(b.alpha.rows());
    Eigen::MatrixXd s(2 * n, 2 * n);
    for (int m = 0; m < n; ++m) {
        for (int k = 0; k < n; ++k) {
            const std::complex<double> a = b.alpha(m, k);
            const std::complex<double> bb = b.beta(m, k);
            s(2 * m, 2 * k) = (a - bb).real();
            s(2 * m, 2 * k + 1) = (a + bb).imag();
            s(2 * m + 1, 2 * k) = -(a - bb).imag();
            s(2 * m + 1, 2 * k + 1) = (a + bb).real();
        }
    }
    return s;
}

SymplecticMatrix symplectic_from_bogoliubov(const BogoliubovPair& b, double tol) {
    const double v = b.identity_violation();
    if (!(v <= tol)) {
        throw std::invalid_argument(
            "symplectic_from_bogoliubov: Bogoliubov identity violation " + std::to_string(v));
    }
    const int n = static_cast<int>(b.alpha.rows());
    // An exact Bogoliubov transform maps to an exact symplectic matrix;
    // truncation error in (alpha, beta) carries over linearly.
    return SymplecticMatrix(n, bogoliubov_block_matrix(b), std::max(tol, 4.0 * n * v + 1e-12));
}

RepairResult symplectic_repair(Eigen::MatrixXd raw, double target_tol) {
    if (raw.rows() != raw.cols() || raw.rows() % 2 != 0 || raw.rows() == 0) {
        throw std::invalid_argument("symplectic_repair: shape must be 2n x 2n");
    }
    const int n = static_cast<int>(raw.rows()) / 2;
    const Eigen::MatrixXd omega = symplectic_form(n);
    double total_correction = 0.0;
    // Newton-like projection: S' = (I + E Omega / 2) S cancels the symplectic
    // defect E = S Omega S^T - Omega to first order; quadratic convergence.
    for (int it = 0; it < 50; ++it) {
        const Eigen::MatrixXd err = raw * omega * raw.transpose() - omega;
        const double v = err.cwiseAbs().maxCoeff();
        if (v <= target_tol) break;
        const Eigen::MatrixXd x = 0.5 * err * omega;
        total_correction += x.norm();
        raw = (Eigen::MatrixXd::Identity(2 * n, 2 * n) + x) * raw;
        if (it == 49) throw std::runtime_error("symplectic_repair: did not converge");
    }
    return RepairResult{SymplecticMatrix(n, std::move(raw), target_tol), total_correction};
}

CovarianceMatrix apply_symplectic(const CovarianceMatrix& sigma, const SymplecticMatrix& S) {
    if (sigma.n_modes() != S.n_modes()) {
        throw std::invalid_argument("apply_symplectic: mode count mismatch");
    }
    Eigen::MatrixXd out = S.entries() * sigma.entries() * S.entries().transpose();
    // Symmetrize away round-off before the constructor's symmetry check.
    out = 0.5 * (out + out.transpose()).eval();
    return CovarianceMatrix(sigma.n_modes(), std::move(out));
}

CovarianceMatrix reduce_modes(const CovarianceMatrix& sigma, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("reduce_modes: empty keep set");
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw std::invalid_argument("reduce_modes: duplicate mode");
    }
    if (kept.front() < 0 || kept.back() >= sigma.n_modes()) {
        throw std::out_of_range("reduce_modes: mode out of range");
    }
    const int n = static_cast<int>(kept.size());
    Eigen::MatrixXd out(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.block<2, 2>(2 * i, 2 * j) =
                sigma.entries().block<2, 2>(2 * kept[static_cast<std::size_t>(i)],
                                            2 * kept[static_cast<std::size_t>(j)]);
        }
    }
    return CovarianceMatrix(n, std::move(out));
}

CovarianceMatrix partial_transpose_mode(const CovarianceMatrix& sigma, int mode) {
    if (sigma.n_modes() != 2) {
        throw std::invalid_argument("partial_transpose_mode: exactly 2 modes required");
    }
    if (mode < 0 || mode > 1) throw std::out_of_range("partial_transpose_mode: mode index");
    Eigen::VectorXd t = Eigen::VectorXd::Ones(4);
    t(2 * mode + 1) = -1.0;
    return CovarianceMatrix(2, t.asDiagonal() * sigma.entries() * t.asDiagonal());
}

std::vector<double> symplectic_spectrum(const CovarianceMatrix& sigma) {
    const int n = sigma.n_modes();
    const Eigen::MatrixXd m = symplectic_form(n) * sigma.entries();
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("symplectic_spectrum: eigensolver failed");
    }
    std::vector<double> mags(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) {
        mags[static_cast<std::size_t>(i)] = std::abs(es.eigenvalues()(i));
    }
    std::sort(mags.begin(), mags.end());
    // Eigenvalues of i Omega sigma come in +/- nu pairs; fold pairs together.
    std::vector<double> out;
    for (int k = 0; k < n; ++k) {
        const double lo = mags[static_cast<std::size_t>(2 * k)];
        const double hi = mags[static_cast<std::size_t>(2 * k + 1)];
        if (std::abs(hi - lo) > 1e-10 * (1.0 + hi)) {
            throw std::runtime_error("symplectic_spectrum: magnitude pairing failed");
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

TwoModeEntanglement two_mode_entanglement(const CovarianceMatrix& sigma) {
    if (sigma.n_modes() != 2) {
        throw std::invalid_argument("two_mode_entanglement: exactly 2 modes required");
    }
    const auto spectrum = symplectic_spectrum(partial_transpose_mode(sigma, 1));
    TwoModeEntanglement out;
    out.nu_minus = spectrum.front();
    out.negativity = std::max(0.0, (1.0 - out.nu_minus) / (2.0 * out.nu_minus));
    out.log_negativity = std::log2(2.0 * out.negativity + 1.0);
    out.entangled = out.nu_minus < 1.0;
    return out;
}

double two_mode_negativity(const CovarianceMatrix& sigma) {
    return two_mode_entanglement(sigma).negativity;
}

}  // namespace rqi::gaussian
