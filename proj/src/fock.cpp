#include "rqi/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rqi::fock {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kPsdTol = 1e-8;

void check_mode_set(const ModeRegister& reg, const std::vector<int>& modes,
                    const char* what) {
    if (modes.empty()) throw std::invalid_argument(std::string(what) + ": empty mode set");
    std::vector<int> sorted = modes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument(std::string(what) + ": duplicate mode index");
    }
    if (sorted.front() < 0 || sorted.back() >= reg.n_modes()) {
        throw std::out_of_range(std::string(what) + ": mode index out of range");
    }
}

std::vector<int> complement(const ModeRegister& reg, const std::vector<int>& modes) {
    std::vector<bool> in(static_cast<std::size_t>(reg.n_modes()), false);
    for (int m : modes) in[static_cast<std::size_t>(m)] = true;
    std::vector<int> rest;
    for (int m = 0; m < reg.n_modes(); ++m) {
        if (!in[static_cast<std::size_t>(m)]) rest.push_back(m);
    }
    return rest;
}

std::size_t subdim(const ModeRegister& reg, const std::vector<int>& modes) {
    std::size_t d = 1;
    for (int m : modes) d *= static_cast<std::size_t>(reg.dim(m));
    return d;
}

// Flatten the occupations of `modes` (in the given order) out of a full tuple.
std::size_t pack(const std::vector<int>& occ, const std::vector<int>& modes,
                 const ModeRegister& reg) {
    std::size_t idx = 0;
    for (int m : modes) {
        idx = idx * static_cast<std::size_t>(reg.dim(m)) +
              static_cast<std::size_t>(occ[static_cast<std::size_t>(m)]);
    }
    return idx;
}

Eigen::VectorXd hermitian_eigenvalues(const DensityMatrix& rho) {
    if (rho.hermiticity_error() > kHermTol) {
        throw std::invalid_argument("density matrix is not Hermitian within 1e-10");
    }
    // Real symmetric fast path: TMSV-like states carry purely real entries and
    // the real solver is ~4x cheaper at the large cutoffs used by the physics
    // modules.
    const Eigen::MatrixXcd& m = rho.entries();
    if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real(), Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

}  // namespace

ModeRegister::ModeRegister(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("ModeRegister: no modes");
    for (int d : dims_) {
        if (d < 1) throw std::invalid_argument("ModeRegister: every dim must be >= 1");
        if (total_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(d) ||
            total_ * static_cast<std::size_t>(d) > (std::size_t{1} << 31)) {
            throw std::overflow_error("ModeRegister: total dimension overflow");
        }
        total_ *= static_cast<std::size_t>(d);
    }
}

std::size_t ModeRegister::index_of(std::span<const int> occ) const {
    if (occ.size() != dims_.size()) {
        throw std::invalid_argument("index_of: occupation arity mismatch");
    }
    std::size_t idx = 0;
    for (std::size_t m = 0; m < dims_.size(); ++m) {
        if (occ[m] < 0 || occ[m] >= dims_[m]) {
            throw std::out_of_range("index_of: occupation out of range");
        }
        idx = idx * static_cast<std::size_t>(dims_[m]) + static_cast<std::size_t>(occ[m]);
    }
    return idx;
}

std::vector<int> ModeRegister::occupation_of(std::size_t index) const {
    if (index >= total_) throw std::out_of_range("occupation_of: index out of range");
    std::vector<int> occ(dims_.size());
    for (std::size_t m = dims_.size(); m-- > 0;) {
        occ[m] = static_cast<int>(index % static_cast<std::size_t>(dims_[m]));
        index /= static_cast<std::size_t>(dims_[m]);
    }
    return occ;
}

StateVector::StateVector(ModeRegister reg, Eigen::VectorXcd amplitudes)
    : reg_(std::move(reg)), amp_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amp_.size()) != reg_.total_dim()) {
        throw std::invalid_argument("StateVector: amplitude length != total dimension");
    }
    if (!amp_.allFinite()) throw std::invalid_argument("StateVector: non-finite amplitude");
    const double n2 = amp_.squaredNorm();
    if (!(n2 > 0.0) || n2 > 1.0 + 1e-9) {
        throw std::invalid_argument("StateVector: squared norm must lie in (0, 1]");
    }
}

StateVector StateVector::normalized() const {
    return StateVector(reg_, amp_ / amp_.norm());
}

DensityMatrix::DensityMatrix(ModeRegister reg, Eigen::MatrixXcd entries)
    : reg_(std::move(reg)), m_(std::move(entries)) {
    const auto d = static_cast<Eigen::Index>(reg_.total_dim());
    if (m_.rows() != d || m_.cols() != d) {
        throw std::invalid_argument("DensityMatrix: shape != total dimension");
    }
    if (!m_.allFinite()) throw std::invalid_argument("DensityMatrix: non-finite entry");
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
    return DensityMatrix(psi.reg(), psi.amplitudes() * psi.amplitudes().adjoint());
}

double DensityMatrix::hermiticity_error() const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

DensityMatrix DensityMatrix::renormalized() const {
    const double tr = trace_real();
    if (!(std::abs(tr) > 0.0)) throw std::domain_error("renormalized: zero trace");
    return DensityMatrix(reg_, m_ / tr);
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    std::vector<int> dims = a.reg().dims();
    dims.insert(dims.end(), b.reg().dims().begin(), b.reg().dims().end());
    ModeRegister reg(std::move(dims));  // throws on dimension overflow
    const auto da = a.amplitudes().size();
    const auto db = b.amplitudes().size();
    Eigen::VectorXcd out(da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
    }
    return StateVector(std::move(reg), std::move(out));
}

namespace {

// Per-index packed coordinates on a mode subset, precomputed once so the
// O(d^2) loops below stay allocation-free.
std::vector<std::size_t> pack_table(const ModeRegister& reg, const std::vector<int>& modes) {
    const std::size_t d = reg.total_dim();
    std::vector<std::size_t> t(d);
    for (std::size_t i = 0; i < d; ++i) {
        t[i] = pack(reg.occupation_of(i), modes, reg);
    }
    return t;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const ModeRegister& reg = rho.reg();
    check_mode_set(reg, keep, "partial_trace");
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    const std::vector<int> traced = complement(reg, kept);

    std::vector<int> kept_dims;
    for (int m : kept) kept_dims.push_back(reg.dim(m));
    ModeRegister out_reg(kept_dims);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(
        static_cast<Eigen::Index>(out_reg.total_dim()),
        static_cast<Eigen::Index>(out_reg.total_dim()));

    const std::size_t d = reg.total_dim();
    const auto kept_idx = pack_table(reg, kept);
    const auto traced_idx = pack_table(reg, traced);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (traced_idx[r] != traced_idx[c]) continue;
            out(static_cast<Eigen::Index>(kept_idx[r]), static_cast<Eigen::Index>(kept_idx[c])) +=
                rho.entries()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return DensityMatrix(std::move(out_reg), std::move(out));
}

DensityMatrix reduced_density(const StateVector& psi, const std::vector<int>& keep) {
    const ModeRegister& reg = psi.reg();
    check_mode_set(reg, keep, "reduced_density");
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    const std::vector<int> traced = complement(reg, kept);

    std::vector<int> kept_dims;
    for (int m : kept) kept_dims.push_back(reg.dim(m));
    ModeRegister out_reg(kept_dims);
    const std::size_t dk = out_reg.total_dim();
    const std::size_t dt = subdim(reg, traced);

    // Reshape |psi> into a (kept x traced) matrix, then rho = M M^dagger.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                static_cast<Eigen::Index>(dt));
    for (std::size_t i = 0; i < reg.total_dim(); ++i) {
        const auto occ = reg.occupation_of(i);
        m(static_cast<Eigen::Index>(pack(occ, kept, reg)),
          static_cast<Eigen::Index>(pack(occ, traced, reg))) += psi.amplitudes()(
            static_cast<Eigen::Index>(i));
    }
    return DensityMatrix(std::move(out_reg), m * m.adjoint());
}

DensityMatrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& subsystem) {
    const ModeRegister& reg = rho.reg();
    check_mode_set(reg, subsystem, "partial_transpose");
    if (static_cast<int>(subsystem.size()) >= reg.n_modes()) {
        throw std::invalid_argument("partial_transpose: subsystem must be a proper subset");
    }
    // index = sub_part + rest_part is a disjoint linear split of the row-major
    // flattening, so swapping sub parts between row and column transposes
    // exactly the named modes.
    const std::size_t d = reg.total_dim();
    std::vector<std::size_t> sub_part(d), rest_part(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto occ = reg.occupation_of(i);
        std::vector<int> masked(occ.size(), 0);
        for (int m : subsystem) masked[static_cast<std::size_t>(m)] = occ[static_cast<std::size_t>(m)];
        sub_part[i] = reg.index_of(masked);
        rest_part[i] = i - sub_part[i];
    }
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            out(static_cast<Eigen::Index>(sub_part[c] + rest_part[r]),
                static_cast<Eigen::Index>(sub_part[r] + rest_part[c])) =
                rho.entries()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return DensityMatrix(reg, std::move(out));
}

NegativityResult negativity_measures(const DensityMatrix& rho, const std::vector<int>& subsystem) {
    const DensityMatrix pt = partial_transpose(rho, subsystem);
    const Eigen::VectorXd ev = hermitian_eigenvalues(pt);
    const double trace_norm = ev.cwiseAbs().sum();
    NegativityResult out;
    out.negativity = 0.5 * (trace_norm - 1.0);
    out.log_negativity = std::log2(trace_norm);
    if (out.negativity < -1e-10 || out.log_negativity < -1e-10) {
        throw std::runtime_error("negativity_measures: negative monotone; input not a state?");
    }
    return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Eigen::VectorXd ev = hermitian_eigenvalues(rho);
    if (ev.minCoeff() < -kPsdTol) {
        throw std::invalid_argument("von_neumann_entropy: eigenvalue below -1e-8");
    }
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        const double lambda = std::max(ev(i), 0.0);  // 0 log 0 := 0
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    }
    return s;
}

SchmidtDecomposition schmidt_decomposition(const StateVector& psi,
                                           const std::vector<int>& left_modes) {
    const ModeRegister& reg = psi.reg();
    check_mode_set(reg, left_modes, "schmidt_decomposition");
    if (static_cast<int>(left_modes.size()) >= reg.n_modes()) {
        throw std::invalid_argument("schmidt_decomposition: bipartition must be proper");
    }
    if (std::abs(psi.norm_deficit()) > 1e-8) {
        throw std::invalid_argument("schmidt_decomposition: state not normalized within 1e-8");
    }
    std::vector<int> left = left_modes;
    std::sort(left.begin(), left.end());
    const std::vector<int> right = complement(reg, left);

    const std::size_t dl = subdim(reg, left);
    const std::size_t dr = subdim(reg, right);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dl),
                                                static_cast<Eigen::Index>(dr));
    for (std::size_t i = 0; i < reg.total_dim(); ++i) {
        const auto occ = reg.occupation_of(i);
        m(static_cast<Eigen::Index>(pack(occ, left, reg)),
          static_cast<Eigen::Index>(pack(occ, right, reg))) =
            psi.amplitudes()(static_cast<Eigen::Index>(i));
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SchmidtDecomposition out;
    out.coefficients = svd.singularValues();
    out.left_basis = svd.matrixU();
    // psi_{lr} = sum_i s_i U_{li} conj(V_{ri}); conjugate V so that
    // psi = sum_i s_i |left_i> (x) |right_i> holds directly.
    out.right_basis = svd.matrixV().conjugate();
    return out;
}

double concurrence(const DensityMatrix& rho) {
    if (rho.reg().dims() != std::vector<int>{2, 2}) {
        throw std::invalid_argument("concurrence: register must be (2, 2)");
    }
    if (rho.hermiticity_error() > kHermTol) {
        throw std::invalid_argument("concurrence: non-Hermitian input");
    }
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    // sigma_y (x) sigma_y in the (|00>,|01>,|10>,|11>) basis.
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd r = rho.entries() * yy * rho.entries().conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r, false);
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) {
        lambda[static_cast<std::size_t>(i)] = std::sqrt(std::max(es.eigenvalues()(i).real(), 0.0));
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

}  // namespace rqi::fock
