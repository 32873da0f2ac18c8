#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "rqi/fock.hpp"
#include "rqi/wigner.hpp"

using namespace rqi;
using Complex = std::complex<double>;

namespace {

wigner::LorentzMatrix random_rotation(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector3d axis(gauss(rng), gauss(rng), gauss(rng));
    axis.normalize();
    std::uniform_real_distribution<double> uang(0.0, M_PI);
    return wigner::lorentz_from_rotation(axis, uang(rng));
}

}  // namespace

TEST_CASE("standard boost takes the rest momentum to p and is symmetric") {
    const double m = 1.3;
    const wigner::FourVector rest = wigner::on_shell({0.0, 0.0, 0.0}, m);
    CHECK((wigner::standard_boost(rest, m).entries() - Eigen::Matrix4d::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);

    const wigner::FourVector p = wigner::on_shell({0.4, -0.7, 1.1}, m);
    const auto L = wigner::standard_boost(p, m);
    CHECK((L.apply(rest) - p).cwiseAbs().maxCoeff() < 1e-10);
    // entry-inspection oracle: the matrix is symmetric
    CHECK((L.entries() - L.entries().transpose()).cwiseAbs().maxCoeff() < 1e-12);

    // boost along z has the familiar 2x2 block structure
    const double xi = 0.8;
    const wigner::FourVector pz = wigner::on_shell({0.0, 0.0, m * std::sinh(xi)}, m);
    const auto Lz = wigner::standard_boost(pz, m);
    CHECK(Lz.entries()(0, 0) == doctest::Approx(std::cosh(xi)).epsilon(1e-12));
    CHECK(Lz.entries()(0, 3) == doctest::Approx(std::sinh(xi)).epsilon(1e-12));
    CHECK(Lz.entries()(1, 1) == doctest::Approx(1.0));
    CHECK(Lz.entries()(2, 2) == doctest::Approx(1.0));

    wigner::FourVector off = p;
    off(0) += 0.1;
    CHECK_THROWS_AS(wigner::standard_boost(off, m), std::invalid_argument);
}

TEST_CASE("Lorentz constructors") {
    CHECK((wigner::lorentz_from_rapidity({1.0, 0.0, 0.0}, 0.0).entries() -
           Eigen::Matrix4d::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    const auto fwd = wigner::lorentz_from_rapidity({1.0, 0.0, 0.0}, 0.9);
    const auto bwd = wigner::lorentz_from_rapidity({1.0, 0.0, 0.0}, -0.9);
    CHECK((fwd.entries() * bwd.entries() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <
          1e-12);
    const auto full_turn = wigner::lorentz_from_rotation({0.0, 0.0, 1.0}, 2.0 * M_PI);
    CHECK((full_turn.entries() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(wigner::lorentz_from_rapidity({1.0, 1.0, 0.0}, 0.5), std::invalid_argument);
}

TEST_CASE("wigner rotation: identity, collinear, perpendicular closed form") {
    const double m = 1.0;
    const wigner::FourVector p = wigner::on_shell({0.0, 0.0, 1.2}, m);

    const auto w_id = wigner::wigner_rotation(wigner::LorentzMatrix::identity(), p, m);
    CHECK((w_id.entries() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-10);

    // collinear boost: one-parameter subgroup, W = I
    const auto boost_z = wigner::lorentz_from_rapidity({0.0, 0.0, 1.0}, 0.75);
    const auto w_col = wigner::wigner_rotation(boost_z, p, m);
    CHECK((w_col.entries() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-10);

    // perpendicular boosts: direct 4x4 product oracle plus the closed-form
    // angle tan(theta) = sinh(a) sinh(b) / (cosh(a) + cosh(b))
    const double a = 0.5, b = 0.8;
    const wigner::FourVector pa = wigner::on_shell({m * std::sinh(a), 0.0, 0.0}, m);
    const auto boost_y = wigner::lorentz_from_rapidity({0.0, 1.0, 0.0}, b);
    const auto w = wigner::wigner_rotation(boost_y, pa, m);
    const double expect = std::atan(std::sinh(a) * std::sinh(b) / (std::cosh(a) + std::cosh(b)));
    // rotation sits in the x-y plane; read the angle off the spatial block
    const double got = std::atan2(w.entries()(2, 1), w.entries()(1, 1));
    CHECK(std::abs(std::abs(got) - expect) < 1e-10);

    // W fixes the rest momentum
    const wigner::FourVector rest = wigner::on_shell({0.0, 0.0, 0.0}, m);
    CHECK((w.apply(rest) - rest).cwiseAbs().maxCoeff() < 1e-10);
    // orthogonality and unit determinant
    const Eigen::Matrix3d r = w.entries().block<3, 3>(1, 1);
    CHECK((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("su2 double cover") {
    CHECK((wigner::su2_from_rotation(wigner::LorentzMatrix::identity()) -
           Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);

    // rotation by pi about z: axis-angle oracle gives diag(e^{-i pi/2}, e^{+i pi/2})
    const auto d_pi = wigner::su2_from_rotation(wigner::lorentz_from_rotation({0, 0, 1}, M_PI));
    CHECK(std::abs(d_pi(0, 0) - std::polar(1.0, -M_PI / 2.0)) < 1e-12);
    CHECK(std::abs(d_pi(1, 1) - std::polar(1.0, M_PI / 2.0)) < 1e-12);
    CHECK(std::abs(d_pi(0, 1)) < 1e-12);

    // group law about a common axis, up to the double-cover sign
    const Eigen::Vector3d axis = Eigen::Vector3d(1.0, 2.0, -0.5).normalized();
    const double t1 = 0.7, t2 = 1.9;
    const auto d1 = wigner::su2_from_rotation(wigner::lorentz_from_rotation(axis, t1));
    const auto d2 = wigner::su2_from_rotation(wigner::lorentz_from_rotation(axis, t2));
    const auto d12 = wigner::su2_from_rotation(wigner::lorentz_from_rotation(axis, t1 + t2));
    const double match = std::min((d1 * d2 - d12).cwiseAbs().maxCoeff(),
                                  (d1 * d2 + d12).cwiseAbs().maxCoeff());
    CHECK(match < 1e-12);

    // unitarity and unit determinant
    CHECK((d1 * d1.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(d1.determinant() - Complex(1.0)) < 1e-12);

    CHECK_THROWS_AS(wigner::su2_from_rotation(wigner::lorentz_from_rapidity({1, 0, 0}, 0.3)),
                    std::invalid_argument);
}

TEST_CASE("su2 homomorphism on random rotation pairs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto ra = random_rotation(rng);
        const auto rb = random_rotation(rng);
        const auto dab = wigner::su2_from_rotation(
            wigner::LorentzMatrix(ra.entries() * rb.entries(), 1e-8));
        const auto da = wigner::su2_from_rotation(ra);
        const auto db = wigner::su2_from_rotation(rb);
        const double dev = std::min((da * db - dab).cwiseAbs().maxCoeff(),
                                    (da * db + dab).cwiseAbs().maxCoeff());
        CHECK(dev < 1e-9);
    }
}

TEST_CASE("massless wigner phase") {
    const wigner::FourVector p = wigner::on_shell({0.3, -0.4, 1.2}, 0.0);

    // rotation about the momentum direction shows up as exactly that phase
    const Eigen::Vector3d phat = Eigen::Vector3d(0.3, -0.4, 1.2).normalized();
    for (double phi : {0.3, 1.1, -0.8}) {
        const auto rot = wigner::lorentz_from_rotation(phat, phi);
        CHECK(wigner::massless_wigner_phase(rot, p) == doctest::Approx(phi).epsilon(1e-10));
    }

    // collinear boost: no phase
    const auto boost_p = wigner::lorentz_from_rapidity(phat, 0.9);
    CHECK(wigner::massless_wigner_phase(boost_p, p) == doctest::Approx(0.0).epsilon(1e-10));

    // frequency independence at fixed direction and generic Lambda
    const auto generic = wigner::LorentzMatrix(
        (wigner::lorentz_from_rapidity({0.0, 1.0, 0.0}, 0.6).entries() *
         wigner::lorentz_from_rotation({1.0, 0.0, 0.0}, 0.4).entries()),
        1e-9);
    const double th1 = wigner::massless_wigner_phase(generic, wigner::on_shell(phat * 1.0, 0.0));
    const double th2 = wigner::massless_wigner_phase(generic, wigner::on_shell(phat * 10.0, 0.0));
    CHECK(std::abs(th1 - th2) < 1e-10);

    // additivity for two successive rotations about the momentum direction
    const auto rot_a = wigner::lorentz_from_rotation(phat, 0.5);
    const auto rot_b = wigner::lorentz_from_rotation(phat, 0.9);
    const auto rot_ab = wigner::LorentzMatrix(rot_a.entries() * rot_b.entries(), 1e-9);
    CHECK(wigner::massless_wigner_phase(rot_ab, p) ==
          doctest::Approx(wigner::massless_wigner_phase(rot_a, p) +
                          wigner::massless_wigner_phase(rot_b, p))
              .epsilon(1e-10));

    CHECK_THROWS_AS(wigner::massless_wigner_phase(generic, wigner::on_shell({0, 0, 1}, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("gaussian packets normalize and boosts preserve the norm") {
    const double m = 1.0;
    wigner::GaussianSpinPacket packet;
    packet.mean = {0.0, 0.0, 0.5};
    packet.width = 0.4;
    packet.spin << 1.0, 0.0;
    const auto psi = wigner::SpinHalfAmplitude::gaussian(packet, m);
    CHECK(psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-8));

    const auto boost = wigner::lorentz_from_rapidity({1.0, 0.0, 0.0}, 1.0);
    const auto boosted = wigner::boost_single_particle(psi, boost, m);
    // quadrature oracle: norm preserved within 1e-6
    CHECK(boosted.norm_squared() == doctest::Approx(1.0).epsilon(1e-6));

    // identity boost leaves values unchanged
    const auto same = wigner::boost_single_particle(psi, wigner::LorentzMatrix::identity(), m);
    const Eigen::Vector3d probe(0.1, -0.2, 0.6);
    CHECK((same(probe) - psi(probe)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reduced spin density: product packet pure, wide boost mixes, sharp stays pure") {
    const double m = 1.0;
    wigner::GaussianSpinPacket packet;
    packet.mean = {0.0, 0.0, 0.0};
    packet.width = 1.0;  // wide in momentum: strong Wigner spread under boosts
    packet.spin << 1.0, 0.0;
    const auto psi = wigner::SpinHalfAmplitude::gaussian(packet, m);

    const auto rho0 = wigner::reduced_spin_density(psi);
    // residual entropy ~ -d log d from the quadrature deficit d ~ 1e-9
    CHECK(fock::von_neumann_entropy(rho0) == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(rho0.hermiticity_error() < 1e-12);
    CHECK(rho0.trace_real() == doctest::Approx(1.0).epsilon(1e-6));

    const auto boost = wigner::lorentz_from_rapidity({1.0, 0.0, 0.0}, 1.0);
    const auto boosted = wigner::boost_single_particle(psi, boost, m);
    const auto rho1 = wigner::reduced_spin_density(boosted);
    const double s1 = fock::von_neumann_entropy(rho1);
    CHECK(s1 > 0.01);  // Peres-Terno: strictly positive spin entropy

    // the full state stays pure: purity certificate from the norm
    CHECK(std::abs(boosted.norm_squared() - 1.0) < 1e-6);

    // sharp packet: entropy stays ~0 under the same boost; the residual
    // mixing scales like width^2 log(1/width^2)
    wigner::GaussianSpinPacket sharp = packet;
    sharp.width = 1e-5;
    const auto sharp_psi = wigner::SpinHalfAmplitude::gaussian(sharp, m);
    const auto sharp_boosted = wigner::boost_single_particle(sharp_psi, boost, m);
    CHECK(fock::von_neumann_entropy(wigner::reduced_spin_density(sharp_boosted)) < 1e-8);
}

TEST_CASE("collinear boost leaves a sharp packet's spin density unchanged") {
    const double m = 1.0;
    wigner::GaussianSpinPacket sharp;
    sharp.mean = {0.0, 0.0, 0.8};
    sharp.width = 1e-4;  // transverse spread drives O(width^2) Wigner mixing
    sharp.spin << std::sqrt(0.3), std::sqrt(0.7);
    const auto psi = wigner::SpinHalfAmplitude::gaussian(sharp, m);
    const auto rho0 = wigner::reduced_spin_density(psi);
    const auto boost = wigner::lorentz_from_rapidity({0.0, 0.0, 1.0}, 0.9);
    const auto rho1 = wigner::reduced_spin_density(wigner::boost_single_particle(psi, boost, m));
    CHECK((rho0.entries() - rho1.entries()).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("sharp-momentum boost acts as the pure Wigner rotation") {
    const double m = 1.0;
    wigner::GaussianSpinPacket sharp;
    sharp.mean = {0.9, 0.0, 0.0};
    sharp.width = 1e-4;
    sharp.spin << 1.0, 0.0;
    const auto psi = wigner::SpinHalfAmplitude::gaussian(sharp, m);
    const auto boost = wigner::lorentz_from_rapidity({0.0, 0.0, 1.0}, 0.7);
    const auto boosted = wigner::boost_single_particle(psi, boost, m);

    const auto d = wigner::su2_from_rotation(
        wigner::wigner_rotation(boost, wigner::on_shell(sharp.mean, m), m));
    const Eigen::Vector2cd expected_spin = d * sharp.spin;

    // compare spin direction at the boosted peak momentum
    const wigner::FourVector peak = boost.apply(wigner::on_shell(sharp.mean, m));
    const Eigen::Vector2cd got = boosted(Eigen::Vector3d(peak(1), peak(2), peak(3)));
    const Complex overlap = expected_spin.adjoint() * got.normalized();
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("two-particle concurrence under boosts") {
    const double m = 1.0;
    wigner::TwoParticleAmplitude amp;
    amp.spin_amplitudes << 1.0, 0.0, 0.0, 1.0;  // Bell (|00> + |11>)/sqrt(2)
    amp.packet_a = {{0.0, 0.0, 0.0}, 1.0, {1.0, 0.0}};
    amp.packet_b = {{0.0, 0.0, 0.0}, 1.0, {1.0, 0.0}};
    amp.points_per_axis = 14;

    // zero rapidity: maximal entanglement
    CHECK(wigner::two_particle_concurrence(amp, wigner::LorentzMatrix::identity(), m) ==
          doctest::Approx(1.0).epsilon(1e-6));

    // sharp momenta: concurrence stays 1 at all rapidities
    wigner::TwoParticleAmplitude sharp = amp;
    sharp.packet_a.width = 1e-3;
    sharp.packet_b.width = 1e-3;
    for (double xi : {0.4, 1.0, 1.5}) {
        const auto boost = wigner::lorentz_from_rapidity({1.0, 0.0, 0.0}, xi);
        CHECK(wigner::two_particle_concurrence(sharp, boost, m) ==
              doctest::Approx(1.0).epsilon(1e-6));
    }

    // wide packets: monotone non-increasing concurrence over the rapidity grid
    double prev = 1.0 + 1e-9;
    for (double xi : {0.0, 0.3, 0.6, 0.9, 1.2, 1.5}) {
        const auto boost = wigner::lorentz_from_rapidity({1.0, 0.0, 0.0}, xi);
        const double c = wigner::two_particle_concurrence(amp, boost, m);
        CHECK(c <= prev + 1e-6);
        prev = c;
    }
    CHECK(prev < 0.99);  // Gingrich-Adami degradation at rapidity 1.5
}

TEST_CASE("spin observables") {
    const double m = 1.0;
    const Eigen::Vector3d z(0.0, 0.0, 1.0);

    // rest-frame sharp packet: all four observables give n.<sigma>/2
    wigner::GaussianSpinPacket rest;
    rest.mean = {0.0, 0.0, 0.0};
    rest.width = 1e-4;
    rest.spin << 1.0, 0.0;  // <sigma_z> = 1
    const auto psi = wigner::SpinHalfAmplitude::gaussian(rest, m);
    for (auto which : {wigner::SpinObservable::center_of_mass, wigner::SpinObservable::newton_wigner,
                       wigner::SpinObservable::czachor, wigner::SpinObservable::friis_local}) {
        CHECK(wigner::spin_observable_expectation(psi, z, which) ==
              doctest::Approx(0.5).epsilon(1e-6));
    }

    // eigenvalue structure at fixed p (not parallel to n, where the
    // center-of-mass eigenvalues degenerate back to 1/2): NW is +/- 1/2, the
    // center-of-mass observable is momentum dependent (2x2 eigen oracle),
    // Czachor's normalization restores +/- 1/2
    const Eigen::Vector3d p(1.5, 0.0, 1.0);
    const double e = std::sqrt(m * m + p.squaredNorm());
    auto eigs = [&](wigner::SpinObservable which) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(
            wigner::spin_observable_matrix(p, m, z, which));
        return es.eigenvalues();
    };
    CHECK(eigs(wigner::SpinObservable::newton_wigner)(1) == doctest::Approx(0.5).epsilon(1e-12));
    const double cm_expect = 0.5 * std::sqrt(m * m + std::pow(z.dot(p), 2)) / e;
    CHECK(eigs(wigner::SpinObservable::center_of_mass)(1) ==
          doctest::Approx(cm_expect).epsilon(1e-12));
    CHECK(cm_expect < 0.5);  // genuinely momentum dependent
    CHECK(eigs(wigner::SpinObservable::czachor)(1) == doctest::Approx(0.5).epsilon(1e-12));

    // Friis observable: boosting the state leaves the reading at the
    // rest-frame value for directions parallel and perpendicular to the boost
    wigner::GaussianSpinPacket tilted = rest;
    tilted.spin << std::cos(0.3), std::sin(0.3);
    const auto chi = wigner::SpinHalfAmplitude::gaussian(tilted, m);
    const auto boost = wigner::lorentz_from_rapidity({0.0, 0.0, 1.0}, 0.7);
    const auto boosted = wigner::boost_single_particle(chi, boost, m);
    for (const Eigen::Vector3d& n : {Eigen::Vector3d(0.0, 0.0, 1.0), Eigen::Vector3d(1.0, 0.0, 0.0)}) {
        const double rest_val =
            wigner::spin_observable_expectation(chi, n, wigner::SpinObservable::friis_local);
        const double moving_val =
            wigner::spin_observable_expectation(boosted, n, wigner::SpinObservable::friis_local);
        CHECK(moving_val == doctest::Approx(rest_val).epsilon(1e-6));
    }
}
