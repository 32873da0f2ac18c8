#include "rqi/rindler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rqi/quadrature.hpp"

namespace rqi::rindler {

namespace {

void require_r_cutoff(double r, int cutoff, const char* who) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument(std::string(who) + ": r must be finite and >= 0");
    }
    if (cutoff < 0) throw std::invalid_argument(std::string(who) + ": cutoff must be >= 0");
}

}  // namespace

AccelerationContext acceleration_context(double omega, double a) {
    if (!(omega > 0.0)) throw std::invalid_argument("acceleration_context: omega must be > 0");
    if (!(a > 0.0)) throw std::invalid_argument("acceleration_context: a must be > 0");
    AccelerationContext ctx;
    ctx.omega = omega;
    ctx.a = a;
    ctx.Omega = omega / a;
    ctx.r = std::atanh(std::exp(-M_PI * ctx.Omega));
    return ctx;
}

double unruh_temperature(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("unruh_temperature: a must be > 0");
    return a / (2.0 * M_PI);
}

fock::StateVector two_mode_squeezed_vacuum(double r, int cutoff) {
    require_r_cutoff(r, cutoff, "two_mode_squeezed_vacuum");
    const int d = cutoff + 1;
    fock::ModeRegister reg({d, d});
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.total_dim()));
    const double t = std::tanh(r);
    double c = 1.0 / std::cosh(r);
    for (int n = 0; n <= cutoff; ++n) {
        amp(static_cast<Eigen::Index>(n) * d + n) = c;
        c *= t;
    }
    return fock::StateVector(std::move(reg), std::move(amp));
}

fock::DensityMatrix rindler_thermal_state(double r, int cutoff) {
    require_r_cutoff(r, cutoff, "rindler_thermal_state");
    const int d = cutoff + 1;
    fock::ModeRegister reg({d});
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    const double t2 = std::tanh(r) * std::tanh(r);
    double w = 1.0 - t2;
    for (int n = 0; n <= cutoff; ++n) {
        m(n, n) = w;
        w *= t2;
    }
    return fock::DensityMatrix(std::move(reg), std::move(m));
}

fock::StateVector single_particle_unruh_state(double r, int cutoff) {
    require_r_cutoff(r, cutoff, "single_particle_unruh_state");
    fock::ModeRegister reg({cutoff + 2, cutoff + 1});
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.total_dim()));
    const double t = std::tanh(r);
    const double ch = std::cosh(r);
    double c = 1.0 / (ch * ch);
    for (int n = 0; n <= cutoff; ++n) {
        const int occ[2] = {n + 1, n};
        amp(static_cast<Eigen::Index>(reg.index_of(occ))) = c * std::sqrt(n + 1.0);
        c *= t;
    }
    return fock::StateVector(std::move(reg), std::move(amp));
}

fock::DensityMatrix alice_rob_state(double r, int cutoff) {
    require_r_cutoff(r, cutoff, "alice_rob_state");
    const int dI = cutoff + 2;
    const int dII = cutoff + 1;
    fock::ModeRegister reg({2, dI, dII});
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.total_dim()));

    const fock::StateVector vac = two_mode_squeezed_vacuum(r, cutoff);
    const fock::StateVector one = single_particle_unruh_state(r, cutoff);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int n = 0; n <= cutoff; ++n) {
        // |0_A>|n, n> branch (vacuum register is (cutoff+1, cutoff+1)).
        const int vac_occ[2] = {n, n};
        const int occ0[3] = {0, n, n};
        amp(static_cast<Eigen::Index>(reg.index_of(occ0))) =
            inv_sqrt2 * vac.amplitudes()(static_cast<Eigen::Index>(vac.reg().index_of(vac_occ)));
        // |1_A>|n+1, n> branch.
        const int one_occ[2] = {n + 1, n};
        const int occ1[3] = {1, n + 1, n};
        amp(static_cast<Eigen::Index>(reg.index_of(occ1))) =
            inv_sqrt2 * one.amplitudes()(static_cast<Eigen::Index>(one.reg().index_of(one_occ)));
    }
    const fock::StateVector psi(std::move(reg), std::move(amp));
    // Pure-state reduction; forming |psi><psi| first would cost O(dim^2)
    // memory, prohibitive at the cutoffs needed for r ~ 1.5.
    return fock::reduced_density(psi, {0, 1});
}

double alice_rob_log_negativity_closed(double r, int terms) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("alice_rob_log_negativity_closed: r must be >= 0");
    }
    if (terms < 2) throw std::invalid_argument("alice_rob_log_negativity_closed: terms >= 2");
    if (r == 0.0) return 1.0;  // removable limit: n = 0, 1 terms contribute 1 and 1/2

    const double t = std::tanh(r);
    const double tail = std::pow(t, 2.0 * terms);
    if (!(tail < 1e-12)) {
        throw std::invalid_argument(
            "alice_rob_log_negativity_closed: insufficient terms, series tail ~" +
            std::to_string(tail));
    }
    const double ch2 = std::cosh(r) * std::cosh(r);
    const double t2 = t * t;
    double sum = 0.0;
    double t_2n = 1.0;        // tanh^{2n}
    double t_2n_minus = 0.0;  // n * tanh^{2(n-1)}, zero at n = 0
    for (int n = 0; n < terms; ++n) {
        // tanh^{2n} (n / sinh^2 r) rewritten as n tanh^{2(n-1)} / cosh^2 r to
        // keep the n/sinh^2 factor finite near r = 0.
        const double first = t_2n_minus / ch2 + t_2n * t2;
        const double term = std::sqrt(first * first + 4.0 * t_2n * t_2n / ch2);
        sum += term / (2.0 * ch2);
        t_2n_minus = (n + 1.0) * t_2n;
        t_2n *= t2;
    }
    return std::log2(1.0 / (2.0 * ch2) + sum);
}

double unruh_annihilation_residual(double r, const UnruhWeights& weights, int cutoff) {
    require_r_cutoff(r, cutoff, "unruh_annihilation_residual");
    const double unit = std::norm(weights.q_R) + std::norm(weights.q_L);
    if (std::abs(unit - 1.0) > 1e-12) {
        throw std::invalid_argument("unruh_annihilation_residual: |q_R|^2 + |q_L|^2 != 1");
    }
    const fock::StateVector vac = two_mode_squeezed_vacuum(r, cutoff);
    const int d_out = cutoff + 2;  // creation operators raise one quantum
    fock::ModeRegister out_reg({d_out, d_out});
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(out_reg.total_dim()));

    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    auto add = [&](int i, int j, std::complex<double> v) {
        const int occ[2] = {i, j};
        out(static_cast<Eigen::Index>(out_reg.index_of(occ))) += v;
    };
    for (int n = 0; n <= cutoff; ++n) {
        const int occ[2] = {n, n};
        const std::complex<double> c =
            vac.amplitudes()(static_cast<Eigen::Index>(vac.reg().index_of(occ)));
        if (n > 0) {
            add(n - 1, n, weights.q_R * ch * std::sqrt(double(n)) * c);  // a_I
            add(n, n - 1, weights.q_L * ch * std::sqrt(double(n)) * c);  // a_II
        }
        add(n, n + 1, -weights.q_R * sh * std::sqrt(n + 1.0) * c);  // -sinh a^dag_II
        add(n + 1, n, -weights.q_L * sh * std::sqrt(n + 1.0) * c);  // -sinh a^dag_I
    }
    return out.norm();
}

namespace {

double squeezing_from_scale(double omega, double accel_scale) {
    return std::atanh(std::exp(-M_PI * omega / accel_scale));
}

}  // namespace

double black_hole_squeezing(double m, double omega) {
    if (!(m > 0.0)) throw std::invalid_argument("black_hole_squeezing: m must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("black_hole_squeezing: omega must be > 0");
    return squeezing_from_scale(omega, 1.0 / (4.0 * m));
}

double black_hole_squeezing(double m, double omega, double r0) {
    if (!(m > 0.0)) throw std::invalid_argument("black_hole_squeezing: m must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("black_hole_squeezing: omega must be > 0");
    if (!(r0 > 2.0 * m)) {
        throw std::invalid_argument("black_hole_squeezing: r0 must lie outside the horizon");
    }
    const double redshift = std::sqrt(1.0 - 2.0 * m / r0);
    return squeezing_from_scale(omega, 1.0 / (4.0 * m * redshift));
}

double killing_doppler_frequency(double g00, double g11, double K0, double K1,
                                 double omega0, int sign) {
    if (!(g00 > 0.0) || !(g11 < 0.0)) {
        throw std::invalid_argument("killing_doppler_frequency: need g00 > 0, g11 < 0");
    }
    if (!(omega0 > 0.0)) throw std::invalid_argument("killing_doppler_frequency: omega0 > 0");
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("killing_doppler_frequency: sign must be +1 or -1");
    }
    if (K0 == 0.0) throw std::invalid_argument("killing_doppler_frequency: K0 must be nonzero");
    const double alpha = std::sqrt(-g00 / g11) * (K1 / K0);
    if (!(std::abs(alpha) < 1.0)) {
        throw std::invalid_argument("killing_doppler_frequency: K is null or spacelike");
    }
    const double s = static_cast<double>(sign);
    return omega0 * std::sqrt(g00) * std::sqrt((1.0 + s * alpha) / (1.0 - s * alpha));
}

WavepacketCoefficients unruh_wavepacket_coefficients(const WavepacketSpec& spec,
                                                     const std::vector<double>& omega_grid,
                                                     const std::vector<double>& Omega_grid) {
    if (!(spec.log_width > 0.0) || !(spec.l > 0.0)) {
        throw std::invalid_argument("unruh_wavepacket_coefficients: width and l must be > 0");
    }
    if (spec.epsilon_sign != 1 && spec.epsilon_sign != -1) {
        throw std::invalid_argument("unruh_wavepacket_coefficients: epsilon_sign must be +/-1");
    }
    if (omega_grid.size() < 2 || Omega_grid.empty()) {
        throw std::invalid_argument("unruh_wavepacket_coefficients: grids too small");
    }
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        if (!(omega_grid[i] > 0.0) || (i > 0 && !(omega_grid[i] > omega_grid[i - 1]))) {
            throw std::invalid_argument(
                "unruh_wavepacket_coefficients: omega grid must be positive ascending");
        }
    }
    for (double W : Omega_grid) {
        if (!(W > 0.0)) {
            throw std::invalid_argument("unruh_wavepacket_coefficients: Omega grid must be positive");
        }
    }

    const double eps = static_cast<double>(spec.epsilon_sign);
    const double max_Omega = *std::max_element(Omega_grid.begin(), Omega_grid.end());
    const double max_phase_rate = max_Omega + std::abs(spec.rindler_center);

    // Panels in u = ln(omega l); refine each grid cell until the kernel phase
    // advances at most pi (half an oscillation) per cell.
    std::vector<double> edges;
    for (std::size_t i = 0; i + 1 < omega_grid.size(); ++i) {
        const double u0 = std::log(omega_grid[i] * spec.l);
        const double u1 = std::log(omega_grid[i + 1] * spec.l);
        const double phase = max_phase_rate * (u1 - u0);
        const int split = static_cast<int>(std::ceil(phase / M_PI)) + 1;
        if (split > 4096) {
            throw std::invalid_argument(
                "unruh_wavepacket_coefficients: omega grid too coarse for the kernel phase");
        }
        for (int s = 0; s < split; ++s) {
            edges.push_back(u0 + (u1 - u0) * s / split);
        }
    }
    edges.push_back(std::log(omega_grid.back() * spec.l));

    // Envelope of f in u, without normalization; the (2 pi omega)^{-1/2}
    // kernel prefactor and the du = domega/omega Jacobian are folded in below.
    auto envelope = [&](double u) {
        const double d = (u - spec.log_center) / (2.0 * spec.log_width);
        return std::exp(-d * d);
    };

    const int order = 16;
    const double norm2 = quad::integrate_panels(
        [&](double u) {
            const double e = envelope(u);
            return e * e;  // |f|^2 domega = |f_u|^2 du with f = envelope / sqrt(omega)
        },
        edges, order);
    const double fnorm = 1.0 / std::sqrt(norm2);

    auto transform = [&](double kernel_sign) {
        std::vector<std::complex<double>> g(Omega_grid.size());
        for (std::size_t k = 0; k < Omega_grid.size(); ++k) {
            const double rate = eps * (kernel_sign * Omega_grid[k] - spec.rindler_center);
            g[k] = quad::integrate_panels(
                [&](double u) {
                    // f(omega) alpha(omega, Omega) domega, with
                    // f = N envelope(u) omega^{-1/2} (omega l)^{-i eps Omega_0}
                    // and alpha = (2 pi omega)^{-1/2} (omega l)^{+/- i eps Omega}.
                    const std::complex<double> phase(std::cos(rate * u), std::sin(rate * u));
                    return fnorm * envelope(u) / std::sqrt(2.0 * M_PI) * phase;
                },
                edges, order);
        }
        return g;
    };

    WavepacketCoefficients out;
    out.g_R = transform(+1.0);
    out.g_L = transform(-1.0);

    auto power = [&](const std::vector<std::complex<double>>& g) {
        double p = 0.0;
        for (std::size_t i = 0; i + 1 < Omega_grid.size(); ++i) {
            p += 0.5 * (std::norm(g[i]) + std::norm(g[i + 1])) * (Omega_grid[i + 1] - Omega_grid[i]);
        }
        return p;
    };
    const double pr = power(out.g_R);
    const double pl = power(out.g_L);
    out.sma_ratio = pr > 0.0 ? pl / pr : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace rqi::rindler
