#include "rqi/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rqi/quadrature.hpp"

namespace rqi::wigner {

namespace {

const Eigen::Matrix2cd kPauliX = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
const Eigen::Matrix2cd kPauliY =
    (Eigen::Matrix2cd() << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0)
        .finished();
const Eigen::Matrix2cd kPauliZ = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();

Eigen::Matrix4d minkowski_metric() {
    Eigen::Vector4d d;
    d << 1.0, -1.0, -1.0, -1.0;
    return d.asDiagonal();
}

Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& v) {
    return v.x() * kPauliX + v.y() * kPauliY + v.z() * kPauliZ;
}

void check_on_shell(const FourVector& p, double m, const char* who) {
    const double defect = std::abs(minkowski_norm2(p) - m * m);
    if (!(p(0) > 0.0) || defect > 1e-10 * (1.0 + p(0) * p(0))) {
        throw std::invalid_argument(std::string(who) + ": four-momentum is off shell");
    }
}

// Rotation taking z-hat to the direction of p: R = R_z(phi) R_y(theta).
Eigen::Matrix3d rotation_to(const Eigen::Vector3d& dir) {
    const double theta = std::acos(std::clamp(dir.normalized().z(), -1.0, 1.0));
    const double phi = std::atan2(dir.y(), dir.x());
    const Eigen::Matrix3d ry = Eigen::AngleAxisd(theta, Eigen::Vector3d::UnitY()).matrix();
    const Eigen::Matrix3d rz = Eigen::AngleAxisd(phi, Eigen::Vector3d::UnitZ()).matrix();
    return rz * ry;
}

Eigen::Matrix4d embed_rotation(const Eigen::Matrix3d& r) {
    Eigen::Matrix4d out = Eigen::Matrix4d::Identity();
    out.block<3, 3>(1, 1) = r;
    return out;
}

Eigen::Matrix4d boost_z(double xi) {
    Eigen::Matrix4d b = Eigen::Matrix4d::Identity();
    b(0, 0) = std::cosh(xi);
    b(0, 3) = std::sinh(xi);
    b(3, 0) = std::sinh(xi);
    b(3, 3) = std::cosh(xi);
    return b;
}

}  // namespace

double minkowski_norm2(const FourVector& p) {
    return p(0) * p(0) - p(1) * p(1) - p(2) * p(2) - p(3) * p(3);
}

FourVector on_shell(const Eigen::Vector3d& p3, double m) {
    FourVector p;
    p << std::sqrt(m * m + p3.squaredNorm()), p3.x(), p3.y(), p3.z();
    return p;
}

LorentzMatrix::LorentzMatrix(Eigen::Matrix4d entries, double tol) : m_(std::move(entries)) {
    const Eigen::Matrix4d eta = minkowski_metric();
    const double defect = (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
    if (defect > tol) {
        throw std::invalid_argument("LorentzMatrix: metric not preserved, defect " +
                                    std::to_string(defect));
    }
    if (std::abs(m_.determinant() - 1.0) > tol || m_(0, 0) < 1.0 - tol) {
        throw std::invalid_argument("LorentzMatrix: not proper orthochronous");
    }
}

LorentzMatrix LorentzMatrix::identity() { return LorentzMatrix(Eigen::Matrix4d::Identity()); }

LorentzMatrix LorentzMatrix::inverse() const {
    const Eigen::Matrix4d eta = minkowski_metric();
    // Lambda^{-1} = eta Lambda^T eta, exact on the group.
    return LorentzMatrix(eta * m_.transpose() * eta, 1e-8);
}

double LorentzMatrix::rotation_defect() const {
    double d = std::abs(m_(0, 0) - 1.0);
    for (int i = 1; i < 4; ++i) {
        d = std::max({d, std::abs(m_(0, i)), std::abs(m_(i, 0))});
    }
    return d;
}

LorentzMatrix standard_boost(const FourVector& p, double m) {
    if (!(m > 0.0)) throw std::invalid_argument("standard_boost: m must be > 0");
    check_on_shell(p, m, "standard_boost");
    const Eigen::Vector3d p3(p(1), p(2), p(3));
    const double pmag = p3.norm();
    Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
    l(0, 0) = p(0) / m;
    if (pmag > 0.0) {
        const Eigen::Vector3d n = p3 / pmag;
        const double sh = pmag / m;
        const double ch = p(0) / m;
        for (int i = 0; i < 3; ++i) {
            l(0, i + 1) = sh * n(i);
            l(i + 1, 0) = sh * n(i);
            for (int j = 0; j < 3; ++j) {
                l(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n(i) * n(j);
            }
        }
    }
    return LorentzMatrix(std::move(l), 1e-9);
}

LorentzMatrix lorentz_from_rapidity(const Eigen::Vector3d& direction, double xi) {
    if (std::abs(direction.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("lorentz_from_rapidity: direction must be a unit vector");
    }
    const Eigen::Vector3d n = direction;
    Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
    l(0, 0) = std::cosh(xi);
    for (int i = 0; i < 3; ++i) {
        l(0, i + 1) = std::sinh(xi) * n(i);
        l(i + 1, 0) = std::sinh(xi) * n(i);
        for (int j = 0; j < 3; ++j) {
            l(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (std::cosh(xi) - 1.0) * n(i) * n(j);
        }
    }
    return LorentzMatrix(std::move(l), 1e-9);
}

LorentzMatrix lorentz_from_rotation(const Eigen::Vector3d& axis, double angle) {
    if (std::abs(axis.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("lorentz_from_rotation: axis must be a unit vector");
    }
    return LorentzMatrix(embed_rotation(Eigen::AngleAxisd(angle, axis).matrix()), 1e-9);
}

LorentzMatrix wigner_rotation(const LorentzMatrix& Lambda, const FourVector& p, double m) {
    check_on_shell(p, m, "wigner_rotation");
    const FourVector q = Lambda.apply(p);
    const Eigen::Matrix4d w = standard_boost(q, m).inverse().entries() * Lambda.entries() *
                              standard_boost(p, m).entries();
    return LorentzMatrix(w, 1e-8);
}

Eigen::Matrix2cd su2_from_rotation(const LorentzMatrix& W) {
    if (W.rotation_defect() > 1e-8) {
        throw std::invalid_argument("su2_from_rotation: input is not a spatial rotation");
    }
    const Eigen::Matrix3d r = W.entries().block<3, 3>(1, 1);
    const double cos_theta = std::clamp(0.5 * (r.trace() - 1.0), -1.0, 1.0);
    const double theta = std::acos(cos_theta);

    Eigen::Vector3d axis(0, 0, 1);
    const double sin_theta = std::sin(theta);
    if (sin_theta > 1e-6) {
        axis << r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1);
        axis /= 2.0 * sin_theta;
    } else if (cos_theta < 0.0) {
        // theta ~ pi: axis from the symmetric part, signs from off-diagonals.
        Eigen::Vector3d sq;
        for (int i = 0; i < 3; ++i) sq(i) = std::max(0.0, 0.5 * (r(i, i) + 1.0));
        int k = 0;
        sq.maxCoeff(&k);
        axis(k) = std::sqrt(sq(k));
        for (int i = 0; i < 3; ++i) {
            if (i != k) axis(i) = 0.5 * (r(k, i) + r(i, k)) / (2.0 * axis(k));
        }
        axis.normalize();
    }
    // theta in [0, pi]: scaling the angle from 0 traces a continuous path of
    // D's starting at +I, which fixes the double-cover branch.
    const std::complex<double> i(0.0, 1.0);
    return std::cos(0.5 * theta) * Eigen::Matrix2cd::Identity() -
           i * std::sin(0.5 * theta) * pauli_dot(axis);
}

double massless_wigner_phase(const LorentzMatrix& Lambda, const FourVector& p) {
    if (!(p(0) > 0.0) ||
        std::abs(minkowski_norm2(p)) > 1e-10 * (1.0 + p(0) * p(0))) {
        throw std::invalid_argument("massless_wigner_phase: momentum must be null with p0 > 0");
    }
    const auto helicity_frame = [](const FourVector& k) -> Eigen::Matrix4d {
        // H(k) = R(k-hat) B_3(xi) with e^xi = k0, taking (1,0,0,1) to k.
        const Eigen::Vector3d k3(k(1), k(2), k(3));
        return embed_rotation(rotation_to(k3)) * boost_z(std::log(k(0)));
    };
    const FourVector q = Lambda.apply(p);
    const Eigen::Matrix4d h_p = helicity_frame(p);
    const Eigen::Matrix4d h_q = helicity_frame(q);
    const Eigen::Matrix4d w =
        minkowski_metric() * h_q.transpose() * minkowski_metric() * Lambda.entries() * h_p;
    // ISO(2) element: W = S(a, b) R_z(theta), and S acts as the identity on
    // the x-y block, so the rotation angle reads off that block.
    return std::atan2(w(2, 1), w(1, 1));
}

SpinHalfAmplitude::SpinHalfAmplitude(Evaluator eval, double mass, const Eigen::Vector3d& lo,
                                     const Eigen::Vector3d& hi, int points_per_axis,
                                     NodeMap node_map)
    : eval_(std::move(eval)), mass_(mass), lo_(lo), hi_(hi), n_(points_per_axis),
      node_map_(std::move(node_map)) {
    if (!(mass_ > 0.0)) throw std::invalid_argument("SpinHalfAmplitude: mass must be > 0");
    if (n_ < 4) throw std::invalid_argument("SpinHalfAmplitude: need >= 4 points per axis");
    for (int i = 0; i < 3; ++i) {
        if (!(hi_(i) > lo_(i))) throw std::invalid_argument("SpinHalfAmplitude: empty box");
    }
}

SpinHalfAmplitude SpinHalfAmplitude::gaussian(const GaussianSpinPacket& packet, double mass,
                                              int points_per_axis) {
    if (!(packet.width > 0.0)) throw std::invalid_argument("GaussianSpinPacket: width must be > 0");
    if (std::abs(packet.spin.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("GaussianSpinPacket: spin amplitudes must be unit norm");
    }
    const Eigen::Vector3d mean = packet.mean;
    const double w = packet.width;
    const Eigen::Vector2cd spin = packet.spin;
    const double norm3 = std::pow(2.0 * M_PI * w * w, -0.75);
    Evaluator eval = [mean, w, spin, norm3, mass](const Eigen::Vector3d& p) -> Eigen::Vector2cd {
        const double e = std::sqrt(mass * mass + p.squaredNorm());
        const double phi = norm3 * std::exp(-(p - mean).squaredNorm() / (4.0 * w * w));
        // sqrt((2 pi)^3 2E) makes int dmu |psi|^2 = int d^3p |phi|^2 = 1.
        const double scale = std::sqrt(std::pow(2.0 * M_PI, 3) * 2.0 * e);
        return spin * (phi * scale);
    };
    // 6 sigma: a 5 sigma box truncates 1.7e-6 of probability, already above
    // the 1e-6 normalization tolerance.
    const Eigen::Vector3d half = Eigen::Vector3d::Constant(6.0 * w);
    return SpinHalfAmplitude(std::move(eval), mass, mean - half, mean + half, points_per_axis);
}

void SpinHalfAmplitude::for_each_node(
    const std::function<void(const Eigen::Vector3d&, double)>& f) const {
    const quad::Rule& rule = quad::gauss_legendre(n_);
    std::array<std::vector<double>, 3> nodes, weights;
    for (int ax = 0; ax < 3; ++ax) {
        const double half = 0.5 * (hi_(ax) - lo_(ax));
        const double mid = 0.5 * (hi_(ax) + lo_(ax));
        for (int i = 0; i < n_; ++i) {
            nodes[ax].push_back(mid + half * rule.nodes[static_cast<std::size_t>(i)]);
            weights[ax].push_back(half * rule.weights[static_cast<std::size_t>(i)]);
        }
    }
    const double twopi3 = std::pow(2.0 * M_PI, 3);
    for (int ix = 0; ix < n_; ++ix) {
        for (int iy = 0; iy < n_; ++iy) {
            for (int iz = 0; iz < n_; ++iz) {
                const Eigen::Vector3d q(nodes[0][static_cast<std::size_t>(ix)],
                                        nodes[1][static_cast<std::size_t>(iy)],
                                        nodes[2][static_cast<std::size_t>(iz)]);
                const double e = std::sqrt(mass_ * mass_ + q.squaredNorm());
                const double w3 = weights[0][static_cast<std::size_t>(ix)] *
                                  weights[1][static_cast<std::size_t>(iy)] *
                                  weights[2][static_cast<std::size_t>(iz)];
                // d mu is Lorentz invariant, so the base-frame weight carries
                // over to the pushed-forward node unchanged.
                const double mu = w3 / (twopi3 * 2.0 * e);
                f(node_map_ ? node_map_(q) : q, mu);
            }
        }
    }
}

double SpinHalfAmplitude::norm_squared() const {
    double total = 0.0;
    for_each_node([&](const Eigen::Vector3d& p, double mu) { total += mu * eval_(p).squaredNorm(); });
    return total;
}

SpinHalfAmplitude boost_single_particle(const SpinHalfAmplitude& psi, const LorentzMatrix& Lambda,
                                        double m) {
    if (std::abs(m - psi.mass()) > 1e-12) {
        throw std::invalid_argument("boost_single_particle: mass mismatch with the packet");
    }
    const LorentzMatrix inv = Lambda.inverse();
    auto eval = [psi, Lambda, inv, m](const Eigen::Vector3d& p3) -> Eigen::Vector2cd {
        const FourVector q = inv.apply(on_shell(p3, m));
        const Eigen::Vector3d q3(q(1), q(2), q(3));
        const Eigen::Matrix2cd d = su2_from_rotation(wigner_rotation(Lambda, on_shell(q3, m), m));
        return d * psi(q3);
    };

    // Keep the pre-boost box and chain the node pushforward.
    SpinHalfAmplitude::NodeMap previous = psi.node_map_;
    SpinHalfAmplitude::NodeMap node_map = [previous, Lambda, m](const Eigen::Vector3d& q) {
        const Eigen::Vector3d base = previous ? previous(q) : q;
        const FourVector p = Lambda.apply(on_shell(base, m));
        return Eigen::Vector3d(p(1), p(2), p(3));
    };
    return SpinHalfAmplitude(std::move(eval), m, psi.lo_, psi.hi_, psi.n_, std::move(node_map));
}

fock::DensityMatrix reduced_spin_density(const SpinHalfAmplitude& psi) {
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    psi.for_each_node([&](const Eigen::Vector3d& p, double mu) {
        const Eigen::Vector2cd v = psi(p);
        // rho_{s s'} = int dmu psi*_s psi_{s'}
        rho += mu * v.conjugate() * v.transpose();
    });
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-4) {
        throw std::runtime_error("reduced_spin_density: quadrature norm drift " +
                                 std::to_string(tr));
    }
    fock::ModeRegister reg({2});
    return fock::DensityMatrix(std::move(reg), Eigen::MatrixXcd(rho));
}

namespace {

// 4x4 kernel K_{(s, s~),(s', s~')} = int dmu |phi(q)|^2 D_{s s'}(W(Lambda, q))
// conj(D_{s~ s~'}(W(Lambda, q))) for one particle; the two-particle reduced
// spin density factorizes through it for product momenta.
Eigen::Matrix4cd boosted_spin_kernel(const GaussianSpinPacket& packet, double mass,
                                     const LorentzMatrix& Lambda, int points_per_axis) {
    GaussianSpinPacket scalar = packet;
    scalar.spin << 1.0, 0.0;
    const SpinHalfAmplitude amp = SpinHalfAmplitude::gaussian(scalar, mass, points_per_axis);
    Eigen::Matrix4cd k = Eigen::Matrix4cd::Zero();
    amp.for_each_node([&](const Eigen::Vector3d& q, double mu) {
        const double density = mu * amp(q).squaredNorm();
        if (density == 0.0) return;
        const Eigen::Matrix2cd d = su2_from_rotation(wigner_rotation(Lambda, on_shell(q, mass), mass));
        for (int s = 0; s < 2; ++s) {
            for (int st = 0; st < 2; ++st) {
                for (int sp = 0; sp < 2; ++sp) {
                    for (int stp = 0; stp < 2; ++stp) {
                        k(2 * s + st, 2 * sp + stp) += density * d(s, sp) * std::conj(d(st, stp));
                    }
                }
            }
        }
    });
    return k;
}

}  // namespace

double two_particle_concurrence(const TwoParticleAmplitude& g, const LorentzMatrix& Lambda,
                                double m) {
    Eigen::Matrix2cd G = g.spin_amplitudes;
    const double fn = G.norm();
    if (!(fn > 0.0)) throw std::invalid_argument("two_particle_concurrence: zero spin amplitude");
    G /= fn;
    const Eigen::Matrix4cd ka = boosted_spin_kernel(g.packet_a, m, Lambda, g.points_per_axis);
    const Eigen::Matrix4cd kb = boosted_spin_kernel(g.packet_b, m, Lambda, g.points_per_axis);

    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            for (int su = 0; su < 2; ++su)
                for (int tu = 0; tu < 2; ++tu)
                    for (int sp = 0; sp < 2; ++sp)
                        for (int tp = 0; tp < 2; ++tp)
                            for (int spp = 0; spp < 2; ++spp)
                                for (int tpp = 0; tpp < 2; ++tpp) {
                                    rho(2 * s + t, 2 * su + tu) +=
                                        ka(2 * s + su, 2 * sp + spp) * kb(2 * t + tu, 2 * tp + tpp) *
                                        G(sp, tp) * std::conj(G(spp, tpp));
                                }
    rho /= rho.trace();
    fock::ModeRegister reg({2, 2});
    return fock::concurrence(fock::DensityMatrix(std::move(reg), Eigen::MatrixXcd(rho)));
}

Eigen::Matrix2cd spin_observable_matrix(const Eigen::Vector3d& p, double m,
                                        const Eigen::Vector3d& n_hat, SpinObservable which) {
    if (std::abs(n_hat.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("spin_observable_matrix: n_hat must be a unit vector");
    }
    const double e = std::sqrt(m * m + p.squaredNorm());
    // Pauli-Lubanski spatial part on the spin qubit:
    // n.W = (1/2)[m n + (n.p) p / (m + E)] . sigma.
    const Eigen::Vector3d w_dir = m * n_hat + (n_hat.dot(p) / (m + e)) * p;
    switch (which) {
        case SpinObservable::center_of_mass:
            return pauli_dot(w_dir) / (2.0 * e);
        case SpinObservable::newton_wigner:
            return pauli_dot(n_hat) / 2.0;
        case SpinObservable::czachor:
            return pauli_dot(w_dir) / (2.0 * std::sqrt(m * m + std::pow(n_hat.dot(p), 2)));
        case SpinObservable::friis_local: {
            const double p2 = p.squaredNorm();
            if (p2 == 0.0) return pauli_dot(n_hat) / 2.0;
            const Eigen::Vector3d beta_hat = p / std::sqrt(p2);
            const double beta2 = p2 / (e * e);
            const Eigen::Vector3d n_par = n_hat.dot(beta_hat) * beta_hat;
            const Eigen::Vector3d n_perp = n_hat - n_par;
            const Eigen::Vector3d local =
                (std::sqrt(1.0 - beta2) * n_perp + n_par) /
                std::sqrt(1.0 - beta2 * (1.0 - n_par.squaredNorm()));
            return pauli_dot(local) / 2.0;
        }
    }
    throw std::invalid_argument("spin_observable_matrix: invalid selector");
}

double spin_observable_expectation(const SpinHalfAmplitude& psi, const Eigen::Vector3d& n_hat,
                                   SpinObservable which) {
    double total = 0.0;
    double norm = 0.0;
    psi.for_each_node([&](const Eigen::Vector3d& p, double mu) {
        const Eigen::Vector2cd v = psi(p);
        const Eigen::Matrix2cd o = spin_observable_matrix(p, psi.mass(), n_hat, which);
        total += mu * (v.adjoint() * o * v)(0, 0).real();
        norm += mu * v.squaredNorm();
    });
    if (std::abs(norm - 1.0) > 1e-4) {
        throw std::runtime_error("spin_observable_expectation: input not normalized on its grid");
    }
    return total;
}

}  // namespace rqi::wigner
