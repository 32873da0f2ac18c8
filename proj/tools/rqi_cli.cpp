// Sweep-running command line front end. Every subcommand runs a deterministic
// parameter sweep, writes one table (CSV or JSON) plus a manifest echo, and
// uses exit codes 0 (success), 2 (validation failure), 3 (numerical failure).
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "rqi/cavity.hpp"
#include "rqi/cosmology.hpp"
#include "rqi/detector.hpp"
#include "rqi/fock.hpp"
#include "rqi/gaussian.hpp"
#include "rqi/rindler.hpp"
#include "rqi/wigner.hpp"
#include "table.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using rqi::cli::Cell;
using rqi::cli::Table;

struct OutputOptions {
    std::string format = "csv";
    std::string output;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts, const std::string& stem) {
    opts.output = stem + "." + opts.format;
    cmd->add_option("--format", opts.format, "output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", opts.output, "output path")->capture_default_str();
    cmd->callback([&opts, stem]() {
        if (opts.output == stem + ".csv" || opts.output == stem + ".json") {
            opts.output = stem + "." + opts.format;
        }
    });
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1) throw std::invalid_argument("sweep needs at least one step");
    if (steps == 1) return {lo};
    if (!(hi >= lo)) throw std::invalid_argument("sweep range is empty (max < min)");
    std::vector<double> v;
    for (int i = 0; i < steps; ++i) v.push_back(lo + (hi - lo) * i / (steps - 1));
    return v;
}

nlohmann::ordered_json base_manifest(const std::string& subcommand, const OutputOptions& opts) {
    nlohmann::ordered_json m;
    m["tool"] = "rqi";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["deterministic"] = true;
    m["format"] = opts.format;
    m["output"] = opts.output;
    return m;
}

int finish(const Table& table, nlohmann::ordered_json manifest, const OutputOptions& opts) {
    if (table.has_non_finite()) {
        std::fprintf(stderr, "rqi: non-finite value in results; no files written\n");
        return 3;
    }
    rqi::cli::emit_table(table, manifest["params"], opts.format, opts.output);
    rqi::cli::emit_manifest(manifest, opts.output);
    return 0;
}

int fock_cutoff_for_deficit(double r, double deficit) {
    const double t = std::tanh(r);
    int cutoff = 8;
    while (std::pow(t, 2.0 * (cutoff + 1)) >= deficit && cutoff < 4000) ++cutoff;
    return cutoff;
}

// ---------------------------------------------------------------------------

int run_unruh(double r_min, double r_max, int steps, int cutoff, int terms,
              const OutputOptions& opts) {
    Table table;
    table.columns = {"r", "logneg_closed", "logneg_fock", "abs_diff"};
    for (double r : linspace(r_min, r_max, steps)) {
        const double closed = rqi::rindler::alice_rob_log_negativity_closed(r, terms);
        const auto rho = rqi::rindler::alice_rob_state(r, cutoff);
        const double fock = rqi::fock::negativity_measures(rho, {0}).log_negativity;
        table.add_row({r, closed, fock, std::abs(closed - fock)});
    }
    auto manifest = base_manifest("unruh", opts);
    manifest["params"] = {{"r_min", r_min}, {"r_max", r_max}, {"steps", steps},
                          {"cutoff", cutoff}, {"terms", terms}};
    manifest["tolerances"] = {{"closed_vs_fock", 1e-4}, {"series_tail", 1e-12}};
    return finish(table, manifest, opts);
}

int run_gaussian_demo(std::vector<double> rs, const OutputOptions& opts) {
    if (rs.empty()) throw std::invalid_argument("gaussian demo: empty r list");
    Table table;
    table.columns = {"r",           "nu_minus",     "negativity",
                     "logneg_gauss", "logneg_fock", "abs_diff"};
    for (double r : rs) {
        rqi::gaussian::BogoliubovPair b;
        b.alpha = Eigen::MatrixXcd::Identity(2, 2) * std::cosh(r);
        b.beta = Eigen::MatrixXcd::Zero(2, 2);
        b.beta(0, 1) = std::sinh(r);
        b.beta(1, 0) = std::sinh(r);
        const auto S = rqi::gaussian::symplectic_from_bogoliubov(b, 1e-12);
        const auto sigma =
            rqi::gaussian::apply_symplectic(rqi::gaussian::CovarianceMatrix::vacuum(2), S);
        const auto ent = rqi::gaussian::two_mode_entanglement(sigma);

        const int cutoff = fock_cutoff_for_deficit(r, 1e-10);
        const auto psi = rqi::rindler::two_mode_squeezed_vacuum(r, cutoff);
        const double fock =
            rqi::fock::negativity_measures(rqi::fock::DensityMatrix::from_pure(psi), {0})
                .log_negativity;
        table.add_row({r, ent.nu_minus, ent.negativity, ent.log_negativity, fock,
                       std::abs(ent.log_negativity - fock)});
    }
    auto manifest = base_manifest("gaussian demo", opts);
    manifest["params"] = {{"r", rs}};
    manifest["tolerances"] = {{"gauss_vs_fock", 1e-4}, {"fock_norm_deficit", 1e-10}};
    return finish(table, manifest, opts);
}

int run_cavity_block(double length, double h, int modes, int quadrature,
                     const OutputOptions& opts) {
    const auto geom = rqi::cavity::CavityGeometry::from_length_h(length, h);
    const auto b = rqi::cavity::building_block_bogoliubov(geom, modes, quadrature);
    Table table;
    table.columns = {"m", "n", "alpha", "beta"};
    double max_alpha_dev = 0.0, max_beta = 0.0;
    for (int m = 0; m < modes; ++m) {
        for (int n = 0; n < modes; ++n) {
            const double a = b.alpha(m, n).real();
            const double bb = b.beta(m, n).real();
            max_alpha_dev = std::max(max_alpha_dev, std::abs(a - (m == n ? 1.0 : 0.0)));
            max_beta = std::max(max_beta, std::abs(bb));
            table.add_row({static_cast<long long>(m + 1), static_cast<long long>(n + 1), a, bb});
        }
    }
    auto manifest = base_manifest("cavity block", opts);
    manifest["params"] = {{"length", length}, {"h", h}, {"modes", modes},
                          {"quadrature", quadrature}};
    manifest["summary"] = {{"max_alpha_deviation", max_alpha_dev}, {"max_beta", max_beta}};
    manifest["tolerances"] = {{"points_per_period", 8}};
    return finish(table, manifest, opts);
}

int run_cavity_trajectory(double length, double h, int modes, int quadrature, int k, int kp,
                          int steps, const OutputOptions& opts) {
    const auto geom = rqi::cavity::CavityGeometry::from_length_h(length, h);
    const auto fk = rqi::cavity::mode_frequencies(geom, k);
    const auto fkp = rqi::cavity::mode_frequencies(geom, kp);
    const double period = 2.0 * M_PI / (geom.a * (fk.Omega + fkp.Omega));
    Table table;
    table.columns = {"eta", "negativity", "symplectic_violation"};
    double max_violation = 0.0, corr = 0.0;
    for (double eta : linspace(0.0, period, steps)) {
        const auto traj = rqi::cavity::compose_trajectory(
            {rqi::cavity::TrajectorySegment::accelerated(geom, eta)}, modes, quadrature);
        const auto sigma = rqi::gaussian::apply_symplectic(
            rqi::gaussian::CovarianceMatrix::vacuum(modes), traj.S);
        const double neg = rqi::gaussian::two_mode_negativity(
            rqi::gaussian::reduce_modes(sigma, {k - 1, kp - 1}));
        const double viol = traj.S.symplectic_violation();
        max_violation = std::max(max_violation, viol);
        corr = std::max(corr, traj.correction_norm);
        table.add_row({eta, neg, viol});
    }
    auto manifest = base_manifest("cavity trajectory", opts);
    manifest["params"] = {{"length", length}, {"h", h},      {"modes", modes},
                          {"quadrature", quadrature}, {"k", k}, {"k_prime", kp},
                          {"steps", steps}};
    manifest["summary"] = {{"dwell_period", period},
                           {"max_symplectic_violation", max_violation},
                           {"max_correction_norm", corr}};
    manifest["tolerances"] = {{"symplectic", 1e-8}};
    return finish(table, manifest, opts);
}

int run_cavity_resonance(double length, double h, int modes, int quadrature, int k, int kp,
                         int n_max, const OutputOptions& opts) {
    const auto geom = rqi::cavity::CavityGeometry::from_length_h(length, h);
    // on-resonance period: frequency = omega_k + omega_k'
    const double period = 2.0 * M_PI / (rqi::cavity::mode_frequencies(geom, k).omega +
                                        rqi::cavity::mode_frequencies(geom, kp).omega);
    const std::vector<rqi::cavity::TrajectorySegment> segs{
        rqi::cavity::TrajectorySegment::accelerated(geom, period / 2.0),
        rqi::cavity::TrajectorySegment::inertial(period / 2.0),
    };
    const auto scan = rqi::cavity::resonance_scan(segs, n_max, {k, kp}, modes, quadrature);
    Table table;
    table.columns = {"N", "negativity"};
    for (std::size_t n = 0; n < scan.negativity.size(); ++n) {
        table.add_row({static_cast<long long>(n), scan.negativity[n]});
    }
    auto manifest = base_manifest("cavity resonance", opts);
    manifest["params"] = {{"length", length}, {"h", h},      {"modes", modes},
                          {"quadrature", quadrature}, {"k", k}, {"k_prime", kp},
                          {"n_max", n_max}};
    manifest["summary"] = {{"period", period},
                           {"linear_fit_r2", scan.linear_fit_r2},
                           {"slope", scan.slope},
                           {"correction_norm", scan.correction_norm}};
    manifest["tolerances"] = {{"linear_fit_r2_min", 0.99}};
    return finish(table, manifest, opts);
}

int run_cosmo_entropy(double eps, double sigma, double mass, double k_min, double k_max,
                      int steps, const OutputOptions& opts) {
    const rqi::cosmology::ExpansionParams params{eps, sigma, mass};
    Table table;
    table.columns = {"k", "gamma", "entropy", "bogoliubov_gamma_residual"};
    for (double k : linspace(k_min, k_max, steps)) {
        const double gamma = rqi::cosmology::gamma_parameter(k, params);
        const double entropy = rqi::cosmology::entanglement_entropy(gamma);
        const auto b = rqi::cosmology::bogoliubov_rw(k, params);
        const double residual = std::abs(std::norm(b.beta / b.alpha) - gamma);
        table.add_row({k, gamma, entropy, residual});
    }
    auto manifest = base_manifest("cosmo entropy", opts);
    manifest["params"] = {{"epsilon", eps}, {"sigma", sigma}, {"mass", mass},
                          {"k_min", k_min}, {"k_max", k_max}, {"steps", steps}};
    manifest["tolerances"] = {{"gamma_cross_check", 1e-9}};
    return finish(table, manifest, opts);
}

int run_cosmo_invert(double s1, double k1, double s2, double k2, double mass,
                     const OutputOptions& opts) {
    // defaults regenerate the reference round trip (eps = 0.5, sigma = 2)
    if (std::isnan(s1)) {
        s1 = rqi::cosmology::entanglement_entropy(
            rqi::cosmology::gamma_parameter(k1, {0.5, 2.0, mass}));
    }
    if (std::isnan(s2)) {
        s2 = rqi::cosmology::entanglement_entropy(
            rqi::cosmology::gamma_parameter(k2, {0.5, 2.0, mass}));
    }
    const auto inv = rqi::cosmology::invert_expansion_params(s1, k1, s2, k2, mass);
    Table table;
    table.columns = {"epsilon", "sigma", "residual", "jacobian_condition", "unique"};
    table.add_row({inv.params.epsilon, inv.params.sigma, inv.residual, inv.jacobian_condition,
                   static_cast<long long>(inv.unique ? 1 : 0)});
    auto manifest = base_manifest("cosmo invert", opts);
    manifest["params"] = {{"s1", s1}, {"k1", k1}, {"s2", s2}, {"k2", k2}, {"mass", mass}};
    manifest["tolerances"] = {{"residual", 1e-8}};
    return finish(table, manifest, opts);
}

int run_wigner_angle(double particle_rapidity, double xi_min, double xi_max, int steps,
                     const OutputOptions& opts) {
    const double m = 1.0;
    const rqi::wigner::FourVector p =
        rqi::wigner::on_shell({m * std::sinh(particle_rapidity), 0.0, 0.0}, m);
    const rqi::wigner::FourVector null_p = rqi::wigner::on_shell({1.0, 0.0, 0.0}, 0.0);
    const rqi::wigner::FourVector null_p10 = rqi::wigner::on_shell({10.0, 0.0, 0.0}, 0.0);
    Table table;
    table.columns = {"boost_rapidity", "wigner_angle", "massless_phase",
                     "massless_p0_independence"};
    for (double xi : linspace(xi_min, xi_max, steps)) {
        const auto boost = rqi::wigner::lorentz_from_rapidity({0.0, 0.0, 1.0}, xi);
        const auto w = rqi::wigner::wigner_rotation(boost, p, m);
        const double angle = std::atan2(w.entries()(3, 1), w.entries()(1, 1));
        const double phase = rqi::wigner::massless_wigner_phase(boost, null_p);
        const double phase10 = rqi::wigner::massless_wigner_phase(boost, null_p10);
        table.add_row({xi, angle, phase, std::abs(phase - phase10)});
    }
    auto manifest = base_manifest("wigner angle", opts);
    manifest["params"] = {{"particle_rapidity", particle_rapidity}, {"mass", m},
                          {"xi_min", xi_min}, {"xi_max", xi_max}, {"steps", steps}};
    manifest["tolerances"] = {{"frequency_independence", 1e-10}};
    return finish(table, manifest, opts);
}

int run_wigner_concurrence(double mass, double width, double xi_max, int steps, int points,
                           const OutputOptions& opts) {
    rqi::wigner::TwoParticleAmplitude wide;
    wide.spin_amplitudes << 1.0, 0.0, 0.0, 1.0;
    wide.packet_a = {{0.0, 0.0, 0.0}, width, {1.0, 0.0}};
    wide.packet_b = {{0.0, 0.0, 0.0}, width, {1.0, 0.0}};
    wide.points_per_axis = points;
    rqi::wigner::TwoParticleAmplitude sharp = wide;
    sharp.packet_a.width = 1e-3;
    sharp.packet_b.width = 1e-3;

    Table table;
    table.columns = {"rapidity", "concurrence_wide", "concurrence_sharp"};
    for (double xi : linspace(0.0, xi_max, steps)) {
        const auto boost = rqi::wigner::lorentz_from_rapidity({1.0, 0.0, 0.0}, xi);
        table.add_row({xi, rqi::wigner::two_particle_concurrence(wide, boost, mass),
                       rqi::wigner::two_particle_concurrence(sharp, boost, mass)});
    }
    auto manifest = base_manifest("wigner concurrence", opts);
    manifest["params"] = {{"mass", mass}, {"width", width}, {"xi_max", xi_max},
                          {"steps", steps}, {"points_per_axis", points}};
    manifest["tolerances"] = {{"sharp_concurrence", 1e-6}};
    return finish(table, manifest, opts);
}

int run_wigner_spin(double mass, double width, double rapidity, const OutputOptions& opts) {
    rqi::wigner::GaussianSpinPacket packet;
    packet.mean = {0.0, 0.0, 0.0};
    packet.width = width;
    packet.spin << std::cos(0.3), std::sin(0.3);
    const auto psi = rqi::wigner::SpinHalfAmplitude::gaussian(packet, mass);
    const auto boost = rqi::wigner::lorentz_from_rapidity({0.0, 0.0, 1.0}, rapidity);
    const auto boosted = rqi::wigner::boost_single_particle(psi, boost, mass);

    const Eigen::Vector3d n(1.0, 0.0, 0.0);  // perpendicular to the boost
    Table table;
    table.columns = {"observable", "rest_value", "boosted_value"};
    const std::vector<std::pair<std::string, rqi::wigner::SpinObservable>> selectors{
        {"center_of_mass", rqi::wigner::SpinObservable::center_of_mass},
        {"newton_wigner", rqi::wigner::SpinObservable::newton_wigner},
        {"czachor", rqi::wigner::SpinObservable::czachor},
        {"friis_local", rqi::wigner::SpinObservable::friis_local},
    };
    for (const auto& [name, which] : selectors) {
        table.add_row({name, rqi::wigner::spin_observable_expectation(psi, n, which),
                       rqi::wigner::spin_observable_expectation(boosted, n, which)});
    }
    auto manifest = base_manifest("wigner spin", opts);
    manifest["params"] = {{"mass", mass}, {"width", width}, {"rapidity", rapidity},
                          {"direction", {n(0), n(1), n(2)}}};
    manifest["tolerances"] = {{"grid_norm", 1e-4}};
    return finish(table, manifest, opts);
}

int run_detector_response(double a, double omega_min, double omega_max, int steps,
                          double T_a, double eps_omega, const OutputOptions& opts) {
    const auto accel = rqi::detector::Trajectory::accelerated(a);
    const auto inertial = rqi::detector::Trajectory::inertial(0.0);
    Table table;
    table.columns = {"omega", "response", "planck", "ratio", "inertial_response"};
    for (double omega : linspace(omega_min, omega_max, steps)) {
        rqi::detector::ResponseConfig cfg{eps_omega / omega, T_a / a, 16};
        const auto res = rqi::detector::response_numeric(omega, accel, cfg);
        if (!res.converged) {
            std::fprintf(stderr, "rqi: detector response failed to converge at omega %g\n",
                         omega);
            return 3;
        }
        const double planck = rqi::detector::planck_response(omega, a);
        const auto inert = rqi::detector::response_numeric(omega, inertial, cfg);
        table.add_row({omega, res.value, planck, res.value / planck, inert.value});
    }
    auto manifest = base_manifest("detector response", opts);
    manifest["params"] = {{"a", a}, {"omega_min", omega_min}, {"omega_max", omega_max},
                          {"steps", steps}, {"T_a", T_a}, {"eps_omega", eps_omega}};
    manifest["tolerances"] = {{"ratio_spread", 0.05}, {"convergence", 0.05}};
    return finish(table, manifest, opts);
}

int run_detector_variance(double omega_source, double a, double tau_min, double tau_max,
                          int steps, const OutputOptions& opts) {
    Table table;
    table.columns = {"tau", "omega_R", "normalized_variance"};
    for (double tau : linspace(tau_min, tau_max, steps)) {
        const double omega_r = rqi::detector::doppler_frequency(tau, omega_source, a);
        const double u = std::exp(a * tau) / a;
        table.add_row({tau, omega_r, rqi::detector::homodyne_variance(omega_source, u)});
    }
    auto manifest = base_manifest("detector variance", opts);
    manifest["params"] = {{"omega_source", omega_source}, {"a", a}, {"tau_min", tau_min},
                          {"tau_max", tau_max}, {"steps", steps}};
    manifest["tolerances"] = nlohmann::ordered_json::object();
    return finish(table, manifest, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relativistic quantum information sweeps"};
    // --h is the cavity smallness parameter, so help keeps only its long form
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    // unruh ------------------------------------------------------------
    double r_min = 0.0, r_max = 1.5;
    int steps = 16, cutoff = 30, terms = 600;
    OutputOptions unruh_out;
    auto* unruh = app.add_subcommand("unruh", "Alice-Rob entanglement degradation sweep");
    unruh->add_option("--r-min", r_min)->capture_default_str();
    unruh->add_option("--r-max", r_max)->capture_default_str();
    unruh->add_option("--steps", steps)->capture_default_str();
    unruh->add_option("--cutoff", cutoff)->check(CLI::NonNegativeNumber)->capture_default_str();
    unruh->add_option("--terms", terms)->capture_default_str();
    add_output_options(unruh, unruh_out, "unruh");

    // gaussian demo ------------------------------------------------------
    std::vector<double> demo_r{0.1, 0.3, 0.6, 1.0};
    OutputOptions demo_out;
    auto* gaussian_cmd = app.add_subcommand("gaussian", "Gaussian-state engine demos");
    auto* demo = gaussian_cmd->add_subcommand("demo", "two-mode squeezed Gaussian-vs-Fock table");
    demo->add_option("--r", demo_r, "squeezing values")->capture_default_str();
    add_output_options(demo, demo_out, "gaussian_demo");

    // cavity -------------------------------------------------------------
    auto* cavity_cmd = app.add_subcommand("cavity", "moving-cavity entanglement");
    double cav_length = 1.0, cav_h = 1e-4;
    int cav_modes = 6, cav_quad = 768;
    OutputOptions block_out;
    auto* block = cavity_cmd->add_subcommand("block", "building-block Bogoliubov coefficients");
    block->add_option("--length", cav_length)->capture_default_str();
    block->add_option("--h", cav_h)->capture_default_str();
    block->add_option("--modes", cav_modes)->capture_default_str();
    block->add_option("--quadrature", cav_quad)->capture_default_str();
    add_output_options(block, block_out, "cavity_block");

    double traj_length = 1.0, traj_h = 1e-3;
    int traj_modes = 8, traj_quad = 2048, traj_k = 1, traj_kp = 2, traj_steps = 16;
    OutputOptions traj_out;
    auto* traj = cavity_cmd->add_subcommand("trajectory", "dwell sweep over one phase period");
    traj->add_option("--length", traj_length)->capture_default_str();
    traj->add_option("--h", traj_h)->capture_default_str();
    traj->add_option("--modes", traj_modes)->capture_default_str();
    traj->add_option("--quadrature", traj_quad)->capture_default_str();
    traj->add_option("--k", traj_k)->capture_default_str();
    traj->add_option("--k-prime", traj_kp)->capture_default_str();
    traj->add_option("--steps", traj_steps)->capture_default_str();
    add_output_options(traj, traj_out, "cavity_trajectory");

    double res_length = 1.0, res_h = 1e-3;
    int res_modes = 8, res_quad = 2048, res_k = 1, res_kp = 2, res_nmax = 20;
    OutputOptions res_out;
    auto* resonance = cavity_cmd->add_subcommand("resonance", "repetition scan at resonance");
    resonance->add_option("--length", res_length)->capture_default_str();
    resonance->add_option("--h", res_h)->capture_default_str();
    resonance->add_option("--modes", res_modes)->capture_default_str();
    resonance->add_option("--quadrature", res_quad)->capture_default_str();
    resonance->add_option("--k", res_k)->capture_default_str();
    resonance->add_option("--k-prime", res_kp)->capture_default_str();
    resonance->add_option("--n-max", res_nmax)->capture_default_str();
    add_output_options(resonance, res_out, "cavity_resonance");

    // cosmo ----------------------------------------------------------------
    auto* cosmo_cmd = app.add_subcommand("cosmo", "expanding-universe particle creation");
    double cos_eps = 1.0, cos_sigma = 1.0, cos_mass = 1.0, cos_kmin = 0.1, cos_kmax = 5.0;
    int cos_steps = 25;
    OutputOptions entropy_out;
    auto* entropy = cosmo_cmd->add_subcommand("entropy", "entanglement entropy over momentum");
    entropy->add_option("--eps", cos_eps)->capture_default_str();
    entropy->add_option("--sigma", cos_sigma)->capture_default_str();
    entropy->add_option("--mass", cos_mass)->capture_default_str();
    entropy->add_option("--k-min", cos_kmin)->capture_default_str();
    entropy->add_option("--k-max", cos_kmax)->capture_default_str();
    entropy->add_option("--steps", cos_steps)->capture_default_str();
    add_output_options(entropy, entropy_out, "cosmo_entropy");

    double inv_s1 = std::nan(""), inv_s2 = std::nan(""), inv_k1 = 0.5, inv_k2 = 1.0,
           inv_mass = 0.1;
    OutputOptions invert_out;
    invert_out.format = "json";
    auto* invert = cosmo_cmd->add_subcommand("invert", "recover expansion parameters");
    invert->add_option("--s1", inv_s1, "entropy at k1 (default: generated from eps=0.5, sigma=2)");
    invert->add_option("--k1", inv_k1)->capture_default_str();
    invert->add_option("--s2", inv_s2, "entropy at k2 (default: generated from eps=0.5, sigma=2)");
    invert->add_option("--k2", inv_k2)->capture_default_str();
    invert->add_option("--m,--mass", inv_mass)->capture_default_str();
    add_output_options(invert, invert_out, "cosmo_invert");

    // wigner ---------------------------------------------------------------
    auto* wigner_cmd = app.add_subcommand("wigner", "special-relativistic spin");
    double ang_particle = 0.5, ang_min = 0.1, ang_max = 2.0;
    int ang_steps = 10;
    OutputOptions angle_out;
    auto* angle = wigner_cmd->add_subcommand("angle", "Wigner angles and the massless phase");
    angle->add_option("--particle-rapidity", ang_particle)->capture_default_str();
    angle->add_option("--xi-min", ang_min)->capture_default_str();
    angle->add_option("--xi-max", ang_max)->capture_default_str();
    angle->add_option("--steps", ang_steps)->capture_default_str();
    add_output_options(angle, angle_out, "wigner_angle");

    double con_mass = 1.0, con_width = 1.0, con_ximax = 1.5;
    int con_steps = 6, con_points = 14;
    OutputOptions con_out;
    auto* concurrence = wigner_cmd->add_subcommand("concurrence", "boosted pair concurrence");
    concurrence->add_option("--mass", con_mass)->capture_default_str();
    concurrence->add_option("--width", con_width)->capture_default_str();
    concurrence->add_option("--xi-max", con_ximax)->capture_default_str();
    concurrence->add_option("--steps", con_steps)->capture_default_str();
    concurrence->add_option("--points", con_points)->capture_default_str();
    add_output_options(concurrence, con_out, "wigner_concurrence");

    double spin_mass = 1.0, spin_width = 1e-3, spin_rapidity = 0.7;
    OutputOptions spin_out;
    auto* spin = wigner_cmd->add_subcommand("spin", "relativistic spin observables");
    spin->add_option("--mass", spin_mass)->capture_default_str();
    spin->add_option("--width", spin_width)->capture_default_str();
    spin->add_option("--rapidity", spin_rapidity)->capture_default_str();
    add_output_options(spin, spin_out, "wigner_spin");

    // detector ---------------------------------------------------------------
    auto* detector_cmd = app.add_subcommand("detector", "Unruh-DeWitt detector response");
    double det_a = 1.0, det_omin = 0.5, det_omax = 3.0, det_T = 40.0, det_eps = 1e-3;
    int det_steps = 11;
    OutputOptions response_out;
    auto* response = detector_cmd->add_subcommand("response", "response vs the Planck form");
    response->add_option("--a", det_a)->capture_default_str();
    response->add_option("--omega-min", det_omin)->capture_default_str();
    response->add_option("--omega-max", det_omax)->capture_default_str();
    response->add_option("--steps", det_steps)->capture_default_str();
    response->add_option("--T-a", det_T, "window scale in units of 1/a")->capture_default_str();
    response->add_option("--eps-omega", det_eps, "regulator in units of 1/omega")
        ->capture_default_str();
    add_output_options(response, response_out, "detector_response");

    double var_omega = 1.0, var_a = 1.0, var_tmin = 0.0, var_tmax = 2.0;
    int var_steps = 9;
    OutputOptions variance_out;
    auto* variance = detector_cmd->add_subcommand("variance", "homodyne variance vs proper time");
    variance->add_option("--omega-source", var_omega)->capture_default_str();
    variance->add_option("--a", var_a)->capture_default_str();
    variance->add_option("--tau-min", var_tmin)->capture_default_str();
    variance->add_option("--tau-max", var_tmax)->capture_default_str();
    variance->add_option("--steps", var_steps)->capture_default_str();
    add_output_options(variance, variance_out, "detector_variance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (unruh->parsed()) return run_unruh(r_min, r_max, steps, cutoff, terms, unruh_out);
        if (demo->parsed()) return run_gaussian_demo(demo_r, demo_out);
        if (block->parsed()) {
            return run_cavity_block(cav_length, cav_h, cav_modes, cav_quad, block_out);
        }
        if (traj->parsed()) {
            return run_cavity_trajectory(traj_length, traj_h, traj_modes, traj_quad, traj_k,
                                         traj_kp, traj_steps, traj_out);
        }
        if (resonance->parsed()) {
            return run_cavity_resonance(res_length, res_h, res_modes, res_quad, res_k, res_kp,
                                        res_nmax, res_out);
        }
        if (entropy->parsed()) {
            return run_cosmo_entropy(cos_eps, cos_sigma, cos_mass, cos_kmin, cos_kmax, cos_steps,
                                     entropy_out);
        }
        if (invert->parsed()) {
            return run_cosmo_invert(inv_s1, inv_k1, inv_s2, inv_k2, inv_mass, invert_out);
        }
        if (angle->parsed()) {
            return run_wigner_angle(ang_particle, ang_min, ang_max, ang_steps, angle_out);
        }
        if (concurrence->parsed()) {
            return run_wigner_concurrence(con_mass, con_width, con_ximax, con_steps, con_points,
                                          con_out);
        }
        if (spin->parsed()) return run_wigner_spin(spin_mass, spin_width, spin_rapidity, spin_out);
        if (response->parsed()) {
            return run_detector_response(det_a, det_omin, det_omax, det_steps, det_T, det_eps,
                                         response_out);
        }
        if (variance->parsed()) {
            return run_detector_variance(var_omega, var_a, var_tmin, var_tmax, var_steps,
                                         variance_out);
        }
        std::fprintf(stderr, "rqi: missing subcommand\n");
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "rqi: invalid input: %s\n", e.what());
        return 2;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "rqi: invalid input: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "rqi: numerical failure: %s\n", e.what());
        return 3;
    }
}
