#include <doctest.h>

#include <cmath>
#include <complex>

#include "rqi/fock.hpp"
#include "rqi/rindler.hpp"

using namespace rqi;

TEST_CASE("acceleration context") {
    // frozen oracle: atanh(exp(-pi)) at 40 digits
    const auto ctx = rindler::acceleration_context(1.0, 1.0);
    CHECK(ctx.Omega == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ctx.r == doctest::Approx(0.04324084828357017785773926436745).epsilon(1e-14));
    CHECK(std::tanh(ctx.r) == doctest::Approx(std::exp(-M_PI * ctx.Omega)).epsilon(1e-12));

    // inertial limit: a -> 0+ gives r -> 0 (exp(-pi omega/a) underflows)
    CHECK(rindler::acceleration_context(1.0, 1e-6).r == 0.0);
    CHECK(rindler::acceleration_context(1.0, 1e-2).r < 1e-100);
    // infinite-acceleration limit: Omega -> 0 makes r blow up
    CHECK(rindler::acceleration_context(1e-9, 1.0).r > 9.0);
    CHECK_THROWS_AS(rindler::acceleration_context(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rindler::acceleration_context(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("unruh temperature") {
    CHECK(rindler::unruh_temperature(2.0 * M_PI) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(rindler::unruh_temperature(0.0), std::invalid_argument);
    CHECK(rindler::unruh_temperature(2.6) ==
          doctest::Approx(2.0 * rindler::unruh_temperature(1.3)).epsilon(1e-14));
}

TEST_CASE("two-mode squeezed vacuum amplitudes and truncation deficit") {
    const auto vac0 = rindler::two_mode_squeezed_vacuum(0.0, 5);
    CHECK(vac0.amplitudes()(0) == std::complex<double>(1.0));
    CHECK(vac0.norm_deficit() == doctest::Approx(0.0).epsilon(1e-15));

    const double r = 0.8;
    const int cutoff = 25;
    const auto vac = rindler::two_mode_squeezed_vacuum(r, cutoff);
    // paper-pinned ratio: c_{n+1}/c_n = tanh r on the diagonal
    for (int n = 0; n + 1 <= cutoff; ++n) {
        const int a[2] = {n, n}, b[2] = {n + 1, n + 1};
        const auto ca = vac.amplitudes()(static_cast<Eigen::Index>(vac.reg().index_of(a)));
        const auto cb = vac.amplitudes()(static_cast<Eigen::Index>(vac.reg().index_of(b)));
        CHECK(std::abs(cb / ca - std::tanh(r)) < 1e-12);
    }
    // closed-form deficit tanh^{2(cutoff+1)} r; frozen oracle tanh(0.8)^52
    CHECK(vac.norm_deficit() == doctest::Approx(5.675324345943879e-10).epsilon(1e-10));
    CHECK(vac.norm_deficit() ==
          doctest::Approx(std::pow(std::tanh(r), 2.0 * (cutoff + 1))).epsilon(1e-12));
}

TEST_CASE("rindler thermal state: geometric weights, mean occupation, TMSV marginal") {
    const auto pure = rindler::rindler_thermal_state(0.0, 4);
    CHECK(pure.entries()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));

    const double r = 0.5;
    const auto th = rindler::rindler_thermal_state(r, 40);
    // weight ratio is exp(-2 pi omega / a) = tanh^2 r
    const double ratio = (th.entries()(3, 3) / th.entries()(2, 2)).real();
    CHECK(ratio == doctest::Approx(std::tanh(r) * std::tanh(r)).epsilon(1e-12));

    // truncated-sum oracle for <n>: frozen sinh(0.5)^2 = 0.27154031740762189
    double mean_n = 0.0;
    for (int n = 0; n <= 40; ++n) mean_n += n * th.entries()(n, n).real();
    CHECK(mean_n == doctest::Approx(0.2715403174076219).epsilon(1e-10));

    // thermal state equals the partial trace of the two-mode squeezed vacuum
    const auto vac = rindler::two_mode_squeezed_vacuum(r, 40);
    const auto marginal = fock::partial_trace(fock::DensityMatrix::from_pure(vac), {0});
    CHECK((marginal.entries() - th.entries()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("single-particle Unruh state") {
    const auto one0 = rindler::single_particle_unruh_state(0.0, 6);
    const int occ10[2] = {1, 0};
    CHECK(one0.amplitudes()(static_cast<Eigen::Index>(one0.reg().index_of(occ10))) ==
          std::complex<double>(1.0));

    const double r = 0.6;
    const auto one = rindler::single_particle_unruh_state(r, 30);
    // paper-pinned ratio between consecutive amplitudes
    for (int n = 1; n <= 10; ++n) {
        const int a[2] = {n, n - 1}, b[2] = {n + 1, n};
        const auto ca = one.amplitudes()(static_cast<Eigen::Index>(one.reg().index_of(a)));
        const auto cb = one.amplitudes()(static_cast<Eigen::Index>(one.reg().index_of(b)));
        CHECK(std::abs(cb / ca - std::tanh(r) * std::sqrt((n + 1.0) / n)) < 1e-12);
    }
    // partial-sum convergence: deficit -> 0 with growing cutoff
    const double d20 = rindler::single_particle_unruh_state(r, 20).norm_deficit();
    const double d40 = rindler::single_particle_unruh_state(r, 40).norm_deficit();
    CHECK(d40 < d20);
    CHECK(d40 < 1e-7);
}

TEST_CASE("Alice-Rob state structure") {
    // r = 0: Bell projector on qubit (x) {|0>, |1>}
    const auto rho0 = rindler::alice_rob_state(0.0, 8);
    const auto n0 = fock::negativity_measures(rho0, {0});
    CHECK(n0.log_negativity == doctest::Approx(1.0).epsilon(1e-12));

    const double r = 0.5;
    const int cutoff = 30;
    const auto rho = rindler::alice_rob_state(r, cutoff);
    CHECK(rho.hermiticity_error() < 1e-14);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-8));

    // diagonal pattern (tanh^{2n}/cosh^2) {1, (n+1)/cosh^2} from the rho_n expansion
    const double ch2 = std::cosh(r) * std::cosh(r);
    for (int n = 0; n <= 3; ++n) {
        const double base = std::pow(std::tanh(r), 2.0 * n) / (2.0 * ch2);
        const int a0[2] = {0, n}, a1[2] = {1, n + 1};
        const auto i0 = static_cast<Eigen::Index>(rho.reg().index_of(a0));
        const auto i1 = static_cast<Eigen::Index>(rho.reg().index_of(a1));
        CHECK(rho.entries()(i0, i0).real() == doctest::Approx(base).epsilon(1e-12));
        CHECK(rho.entries()(i1, i1).real() ==
              doctest::Approx(base * (n + 1.0) / ch2).epsilon(1e-12));
        // off-diagonal coherence sqrt(n+1)/cosh
        CHECK(rho.entries()(i0, i1).real() ==
              doctest::Approx(base * std::sqrt(n + 1.0) / std::cosh(r)).epsilon(1e-12));
    }
}

TEST_CASE("closed-form log negativity vs the Fock engine") {
    CHECK(rindler::alice_rob_log_negativity_closed(0.0, 50) == doctest::Approx(1.0));

    // Fock-engine oracle across r in [0, 1.5]; cutoff chosen so the
    // truncation deficit tanh^{2(cutoff+1)} r stays below 1e-7
    for (double r : {0.2, 0.5, 0.9, 1.3}) {
        int cutoff = 10;
        while (std::pow(std::tanh(r), 2.0 * (cutoff + 1)) >= 1e-7) ++cutoff;
        const auto rho = rindler::alice_rob_state(r, cutoff);
        const double fock_en = fock::negativity_measures(rho, {0}).log_negativity;
        const double closed = rindler::alice_rob_log_negativity_closed(r, 400);
        CHECK(std::abs(closed - fock_en) < 1e-4);
    }

    // monotone decreasing on an r-grid
    double prev = rindler::alice_rob_log_negativity_closed(0.0, 600);
    for (double r = 0.2; r <= 2.01; r += 0.2) {
        const double cur = rindler::alice_rob_log_negativity_closed(r, 600);
        CHECK(cur < prev + 1e-12);
        prev = cur;
    }

    CHECK_THROWS_AS(rindler::alice_rob_log_negativity_closed(1.2, 5), std::invalid_argument);
}

TEST_CASE("unruh annihilation residual") {
    const rindler::UnruhWeights pure_r{1.0, 0.0};
    CHECK(rindler::unruh_annihilation_residual(0.0, pure_r, 10) ==
          doctest::Approx(0.0).epsilon(1e-15));

    // exact closed form tanh^{cutoff+1}(r) sqrt(cutoff+1); frozen at r = 0.5,
    // cutoff 25: 9.795826723314423e-09
    const double res = rindler::unruh_annihilation_residual(0.5, pure_r, 25);
    CHECK(res == doctest::Approx(9.795826723314423e-09).epsilon(1e-10));

    // geometric decay with cutoff
    const double res30 = rindler::unruh_annihilation_residual(0.5, pure_r, 30);
    CHECK(res30 < res * std::pow(std::tanh(0.5), 4));

    // phase invariance of q_R
    const rindler::UnruhWeights phased{std::polar(1.0, 1.1), 0.0};
    CHECK(rindler::unruh_annihilation_residual(0.5, phased, 25) ==
          doctest::Approx(res).epsilon(1e-12));

    // mixed weights share the same residual
    const rindler::UnruhWeights mixed{std::sqrt(0.5), std::complex<double>(0.0, std::sqrt(0.5))};
    CHECK(rindler::unruh_annihilation_residual(0.5, mixed, 25) ==
          doctest::Approx(res).epsilon(1e-12));

    CHECK_THROWS_AS(rindler::unruh_annihilation_residual(0.5, {0.9, 0.0}, 10),
                    std::invalid_argument);
}

TEST_CASE("black hole squeezing") {
    // deep-Boltzmann limit: omega -> infinity kills q
    CHECK(rindler::black_hole_squeezing(1.0, 50.0) < 1e-200);
    // frozen oracle: q = atanh(e^{-4 pi}) at m = omega = 1
    CHECK(rindler::black_hole_squeezing(1.0, 1.0) ==
          doctest::Approx(3.487342356223133e-06).epsilon(1e-12));
    // equality with the horizon form as r0 -> infinity
    CHECK(rindler::black_hole_squeezing(1.0, 1.0, 1e9) ==
          doctest::Approx(rindler::black_hole_squeezing(1.0, 1.0)).epsilon(1e-6));
    // q grows monotonically as the observer approaches the horizon
    double prev = 0.0;
    for (double r0 : {100.0, 10.0, 4.0, 2.5, 2.1, 2.01, 2.0000001}) {
        const double q = rindler::black_hole_squeezing(1.0, 1.0, r0);
        CHECK(q > prev);
        prev = q;
    }
    CHECK(prev > 3.0);  // q-tilde blows up at the horizon
    CHECK_THROWS_AS(rindler::black_hole_squeezing(1.0, 1.0, 1.9), std::invalid_argument);
}

TEST_CASE("Killing-observer Doppler frequency") {
    // static Minkowski observer: no shift
    CHECK(rindler::killing_doppler_frequency(1.0, -1.0, 1.0, 0.0, 2.5, +1) ==
          doctest::Approx(2.5).epsilon(1e-14));
    // kinematic Doppler in Minkowski
    const double alpha = 0.4;
    const double wk = rindler::killing_doppler_frequency(1.0, -1.0, 1.0, alpha, 1.0, +1);
    CHECK(wk == doctest::Approx(std::sqrt((1 + alpha) / (1 - alpha))).epsilon(1e-14));
    const double wk_minus = rindler::killing_doppler_frequency(1.0, -1.0, 1.0, alpha, 1.0, -1);
    CHECK(wk * wk_minus == doctest::Approx(1.0).epsilon(1e-13));
    // lightlike limit rejected
    CHECK_THROWS_AS(rindler::killing_doppler_frequency(1.0, -1.0, 1.0, 1.0, 1.0, +1),
                    std::invalid_argument);
    CHECK_THROWS_AS(rindler::killing_doppler_frequency(-1.0, -1.0, 1.0, 0.0, 1.0, +1),
                    std::invalid_argument);
}

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
    return v;
}

}  // namespace

TEST_CASE("wavepacket coefficients: Gaussian transform against a dense oracle") {
    rindler::WavepacketSpec spec{0.0, 1.0, 1.0, +1, 0.0};
    // domain wide enough that the envelope tails (exp(-25)) are negligible
    const auto omega = linspace(std::exp(-10.0), std::exp(10.0), 360);
    const auto Omega = linspace(0.05, 3.0, 24);
    const auto got = rindler::unruh_wavepacket_coefficients(spec, omega, Omega);

    // dense-quadrature oracle at ~10x resolution
    const auto omega_dense = linspace(std::exp(-10.0), std::exp(10.0), 3600);
    const auto dense = rindler::unruh_wavepacket_coefficients(spec, omega_dense, Omega);
    for (std::size_t i = 0; i < Omega.size(); ++i) {
        CHECK(std::abs(got.g_R[i] - dense.g_R[i]) < 1e-8);
    }

    // |g_R| is the Gaussian exp(-w^2 Omega^2) up to a constant, symmetric in
    // Omega, which for a real envelope means |g_L| = |g_R| pointwise.
    for (std::size_t i = 0; i < Omega.size(); ++i) {
        CHECK(std::abs(got.g_R[i]) == doctest::Approx(std::abs(got.g_L[i])).epsilon(1e-10));
    }
    const double ratio0 = std::abs(got.g_R[0]);
    for (std::size_t i = 1; i < Omega.size(); ++i) {
        const double expect =
            ratio0 * std::exp(-(Omega[i] * Omega[i] - Omega[0] * Omega[0]) * 1.0);
        CHECK(std::abs(got.g_R[i]) == doctest::Approx(expect).epsilon(1e-6));
    }
    CHECK(got.sma_ratio == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("narrow wavepacket spreads over all Rindler frequencies") {
    // width -> 0 in ln(omega l): |g_R| approaches a constant in Omega
    rindler::WavepacketSpec spec{0.0, 0.02, 1.0, +1, 0.0};
    const auto omega = linspace(std::exp(-0.4), std::exp(0.4), 400);
    const auto Omega = linspace(0.1, 2.0, 12);
    const auto got = rindler::unruh_wavepacket_coefficients(spec, omega, Omega);
    double lo = 1e300, hi = 0.0;
    for (const auto& g : got.g_R) {
        lo = std::min(lo, std::abs(g));
        hi = std::max(hi, std::abs(g));
    }
    CHECK(hi / lo < 1.01);
}

TEST_CASE("modulated wavepacket satisfies the single-mode approximation") {
    // envelope centered in Omega at 3 with width 1/(2w) = 0.5
    rindler::WavepacketSpec spec{0.0, 1.0, 1.0, +1, 3.0};
    const auto omega = linspace(std::exp(-6.0), std::exp(6.0), 500);
    const auto Omega = linspace(0.02, 8.0, 160);
    const auto got = rindler::unruh_wavepacket_coefficients(spec, omega, Omega);
    CHECK(got.sma_ratio < 1e-3);

    // peak sits near the modulation frequency
    std::size_t imax = 0;
    for (std::size_t i = 0; i < Omega.size(); ++i) {
        if (std::abs(got.g_R[i]) > std::abs(got.g_R[imax])) imax = i;
    }
    CHECK(Omega[imax] == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("wavepacket grid validation") {
    rindler::WavepacketSpec spec{0.0, 1.0, 1.0, +1, 0.0};
    CHECK_THROWS_AS(
        rindler::unruh_wavepacket_coefficients(spec, {1.0}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(
        rindler::unruh_wavepacket_coefficients(spec, {1.0, 0.5}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(
        rindler::unruh_wavepacket_coefficients(spec, {1.0, 2.0}, {-0.5}), std::invalid_argument);
    // grid too coarse for an extreme kernel phase
    rindler::WavepacketSpec wild{0.0, 1.0, 1.0, +1, 1e7};
    CHECK_THROWS_AS(rindler::unruh_wavepacket_coefficients(wild, {1e-3, 1e3}, {1.0}),
                    std::invalid_argument);
}
