// Python bindings for the main operations: the Fock and Gaussian entanglement
// engines plus the physics front ends, mirroring the C++ API.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rqi/cavity.hpp"
#include "rqi/cosmology.hpp"
#include "rqi/detector.hpp"
#include "rqi/fock.hpp"
#include "rqi/gaussian.hpp"
#include "rqi/rindler.hpp"
#include "rqi/wigner.hpp"

namespace py = pybind11;
using namespace rqi;

PYBIND11_MODULE(_rqilab, m) {
    m.doc() = "Fock/Gaussian entanglement engines and relativistic quantum information sweeps";
    m.attr("__version__") = "0.1.0";

    // ---- fock ----------------------------------------------------------
    auto fk = m.def_submodule("fock");
    py::class_<fock::ModeRegister>(fk, "ModeRegister")
        .def(py::init<std::vector<int>>(), py::arg("dims"))
        .def_property_readonly("dims", &fock::ModeRegister::dims)
        .def_property_readonly("total_dim", &fock::ModeRegister::total_dim)
        .def("index_of",
             [](const fock::ModeRegister& reg, const std::vector<int>& occ) {
                 return reg.index_of(occ);
             })
        .def("occupation_of", &fock::ModeRegister::occupation_of);
    py::class_<fock::StateVector>(fk, "StateVector")
        .def(py::init<fock::ModeRegister, Eigen::VectorXcd>(), py::arg("register"),
             py::arg("amplitudes"))
        .def_property_readonly("register_", &fock::StateVector::reg)
        .def_property_readonly("amplitudes", &fock::StateVector::amplitudes)
        .def_property_readonly("norm_deficit", &fock::StateVector::norm_deficit)
        .def("normalized", &fock::StateVector::normalized);
    py::class_<fock::DensityMatrix>(fk, "DensityMatrix")
        .def(py::init<fock::ModeRegister, Eigen::MatrixXcd>(), py::arg("register"),
             py::arg("entries"))
        .def_static("from_pure", &fock::DensityMatrix::from_pure)
        .def_property_readonly("register_", &fock::DensityMatrix::reg)
        .def_property_readonly("entries", &fock::DensityMatrix::entries)
        .def_property_readonly("trace", &fock::DensityMatrix::trace_real)
        .def("renormalized", &fock::DensityMatrix::renormalized);
    fk.def("tensor_product", &fock::tensor_product);
    fk.def("partial_trace", &fock::partial_trace, py::arg("rho"), py::arg("keep"));
    fk.def("reduced_density", &fock::reduced_density, py::arg("psi"), py::arg("keep"));
    fk.def("partial_transpose", &fock::partial_transpose, py::arg("rho"), py::arg("subsystem"));
    fk.def(
        "negativity_measures",
        [](const fock::DensityMatrix& rho, const std::vector<int>& subsystem) {
            const auto r = fock::negativity_measures(rho, subsystem);
            return py::make_tuple(r.negativity, r.log_negativity);
        },
        py::arg("rho"), py::arg("subsystem"));
    fk.def("von_neumann_entropy", &fock::von_neumann_entropy);
    fk.def(
        "schmidt_decomposition",
        [](const fock::StateVector& psi, const std::vector<int>& left) {
            const auto r = fock::schmidt_decomposition(psi, left);
            return py::make_tuple(r.coefficients, r.left_basis, r.right_basis);
        },
        py::arg("psi"), py::arg("left_modes"));
    fk.def("concurrence", &fock::concurrence);

    // ---- gaussian --------------------------------------------------------
    auto ga = m.def_submodule("gaussian");
    py::class_<gaussian::CovarianceMatrix>(ga, "CovarianceMatrix")
        .def(py::init<int, Eigen::MatrixXd>(), py::arg("n_modes"), py::arg("entries"))
        .def_static("vacuum", &gaussian::CovarianceMatrix::vacuum)
        .def_property_readonly("n_modes", &gaussian::CovarianceMatrix::n_modes)
        .def_property_readonly("entries", &gaussian::CovarianceMatrix::entries)
        .def("is_physical", &gaussian::CovarianceMatrix::is_physical, py::arg("tol") = 1e-8);
    py::class_<gaussian::SymplecticMatrix>(ga, "SymplecticMatrix")
        .def(py::init<int, Eigen::MatrixXd, double>(), py::arg("n_modes"), py::arg("entries"),
             py::arg("tol") = 1e-9)
        .def_static("identity", &gaussian::SymplecticMatrix::identity)
        .def_property_readonly("entries", &gaussian::SymplecticMatrix::entries)
        .def_property_readonly("symplectic_violation",
                               &gaussian::SymplecticMatrix::symplectic_violation)
        .def("inverse", &gaussian::SymplecticMatrix::inverse);
    py::class_<gaussian::BogoliubovPair>(ga, "BogoliubovPair")
        .def(py::init([](Eigen::MatrixXcd alpha, Eigen::MatrixXcd beta) {
                 return gaussian::BogoliubovPair{std::move(alpha), std::move(beta)};
             }),
             py::arg("alpha"), py::arg("beta"))
        .def_readonly("alpha", &gaussian::BogoliubovPair::alpha)
        .def_readonly("beta", &gaussian::BogoliubovPair::beta)
        .def("identity_violation", &gaussian::BogoliubovPair::identity_violation);
    ga.def("symplectic_form", &gaussian::symplectic_form);
    ga.def("symplectic_from_bogoliubov", &gaussian::symplectic_from_bogoliubov, py::arg("pair"),
           py::arg("tol") = 1e-9);
    ga.def("apply_symplectic", &gaussian::apply_symplectic);
    ga.def("reduce_modes", &gaussian::reduce_modes);
    ga.def("partial_transpose_mode", &gaussian::partial_transpose_mode);
    ga.def("symplectic_spectrum", &gaussian::symplectic_spectrum);
    ga.def("two_mode_negativity", &gaussian::two_mode_negativity);
    ga.def("two_mode_entanglement", [](const gaussian::CovarianceMatrix& sigma) {
        const auto e = gaussian::two_mode_entanglement(sigma);
        py::dict out;
        out["nu_minus"] = e.nu_minus;
        out["negativity"] = e.negativity;
        out["log_negativity"] = e.log_negativity;
        out["entangled"] = e.entangled;
        return out;
    });

    // ---- rindler ---------------------------------------------------------
    auto ri = m.def_submodule("rindler");
    py::class_<rindler::AccelerationContext>(ri, "AccelerationContext")
        .def_readonly("omega", &rindler::AccelerationContext::omega)
        .def_readonly("a", &rindler::AccelerationContext::a)
        .def_readonly("Omega", &rindler::AccelerationContext::Omega)
        .def_readonly("r", &rindler::AccelerationContext::r);
    ri.def("acceleration_context", &rindler::acceleration_context, py::arg("omega"), py::arg("a"));
    ri.def("unruh_temperature", &rindler::unruh_temperature);
    ri.def("two_mode_squeezed_vacuum", &rindler::two_mode_squeezed_vacuum, py::arg("r"),
           py::arg("cutoff"));
    ri.def("rindler_thermal_state", &rindler::rindler_thermal_state, py::arg("r"),
           py::arg("cutoff"));
    ri.def("single_particle_unruh_state", &rindler::single_particle_unruh_state, py::arg("r"),
           py::arg("cutoff"));
    ri.def("alice_rob_state", &rindler::alice_rob_state, py::arg("r"), py::arg("cutoff"));
    ri.def("alice_rob_log_negativity_closed", &rindler::alice_rob_log_negativity_closed,
           py::arg("r"), py::arg("terms"));
    ri.def(
        "unruh_annihilation_residual",
        [](double r, std::complex<double> q_R, std::complex<double> q_L, int cutoff) {
            return rindler::unruh_annihilation_residual(r, {q_R, q_L}, cutoff);
        },
        py::arg("r"), py::arg("q_R"), py::arg("q_L"), py::arg("cutoff"));
    ri.def("black_hole_squeezing",
           py::overload_cast<double, double>(&rindler::black_hole_squeezing), py::arg("m"),
           py::arg("omega"));
    ri.def("black_hole_squeezing",
           py::overload_cast<double, double, double>(&rindler::black_hole_squeezing), py::arg("m"),
           py::arg("omega"), py::arg("r0"));
    ri.def("killing_doppler_frequency", &rindler::killing_doppler_frequency, py::arg("g00"),
           py::arg("g11"), py::arg("K0"), py::arg("K1"), py::arg("omega0"), py::arg("sign"));
    py::class_<rindler::WavepacketSpec>(ri, "WavepacketSpec")
        .def(py::init([](double log_center, double log_width, double l, int epsilon_sign,
                         double rindler_center) {
                 return rindler::WavepacketSpec{log_center, log_width, l, epsilon_sign,
                                                rindler_center};
             }),
             py::arg("log_center"), py::arg("log_width"), py::arg("l"), py::arg("epsilon_sign"),
             py::arg("rindler_center") = 0.0);
    ri.def(
        "unruh_wavepacket_coefficients",
        [](const rindler::WavepacketSpec& spec, const std::vector<double>& omega_grid,
           const std::vector<double>& Omega_grid) {
            const auto r = rindler::unruh_wavepacket_coefficients(spec, omega_grid, Omega_grid);
            return py::make_tuple(r.g_R, r.g_L, r.sma_ratio);
        },
        py::arg("spec"), py::arg("omega_grid"), py::arg("Omega_grid"));

    // ---- detector ----------------------------------------------------------
    auto de = m.def_submodule("detector");
    py::class_<detector::Trajectory>(de, "Trajectory")
        .def_static("inertial", &detector::Trajectory::inertial, py::arg("v"))
        .def_static("accelerated", &detector::Trajectory::accelerated, py::arg("a"));
    py::class_<detector::ResponseConfig>(de, "ResponseConfig")
        .def(py::init([](double epsilon, double T, int order) {
                 return detector::ResponseConfig{epsilon, T, order};
             }),
             py::arg("epsilon"), py::arg("T"), py::arg("order") = 16);
    de.def("wightman_pullback", &detector::wightman_pullback, py::arg("traj"), py::arg("dtau"),
           py::arg("epsilon"));
    de.def(
        "response_numeric",
        [](double omega, const detector::Trajectory& traj, const detector::ResponseConfig& cfg) {
            const auto r = detector::response_numeric(omega, traj, cfg);
            py::dict out;
            out["value"] = r.value;
            out["value_doubled"] = r.value_doubled;
            out["rel_change"] = r.rel_change;
            out["converged"] = r.converged;
            out["window_ok"] = r.window_ok;
            return out;
        },
        py::arg("omega"), py::arg("traj"), py::arg("cfg"));
    de.def("planck_response", &detector::planck_response, py::arg("omega"), py::arg("a"));
    de.def("doppler_frequency", &detector::doppler_frequency, py::arg("tau"),
           py::arg("omega_source"), py::arg("a"));
    de.def("homodyne_variance", &detector::homodyne_variance, py::arg("omega_source"),
           py::arg("u"));

    // ---- cavity ------------------------------------------------------------
    auto ca = m.def_submodule("cavity");
    py::class_<cavity::CavityGeometry>(ca, "CavityGeometry")
        .def_static("from_walls", &cavity::CavityGeometry::from_walls, py::arg("x_l"),
                    py::arg("x_r"))
        .def_static("from_length_h", &cavity::CavityGeometry::from_length_h, py::arg("L"),
                    py::arg("h"))
        .def_readonly("x_l", &cavity::CavityGeometry::x_l)
        .def_readonly("x_r", &cavity::CavityGeometry::x_r)
        .def_readonly("L", &cavity::CavityGeometry::L)
        .def_readonly("a", &cavity::CavityGeometry::a)
        .def_readonly("h", &cavity::CavityGeometry::h);
    py::class_<cavity::TrajectorySegment>(ca, "TrajectorySegment")
        .def_static("inertial", &cavity::TrajectorySegment::inertial, py::arg("tau"))
        .def_static("accelerated", &cavity::TrajectorySegment::accelerated, py::arg("geometry"),
                    py::arg("eta"));
    ca.def(
        "mode_frequencies",
        [](const cavity::CavityGeometry& g, int n) {
            const auto f = cavity::mode_frequencies(g, n);
            return py::make_tuple(f.omega, f.Omega);
        },
        py::arg("geometry"), py::arg("n"));
    ca.def("building_block_bogoliubov", &cavity::building_block_bogoliubov, py::arg("geometry"),
           py::arg("n_modes"), py::arg("quadrature_points"));
    ca.def(
        "first_order_mode_negativity",
        [](const cavity::CavityGeometry& g, int k, int k_prime, double h_probe) {
            return cavity::first_order_mode_negativity(g, {k, k_prime}, h_probe);
        },
        py::arg("geometry"), py::arg("k"), py::arg("k_prime"), py::arg("h_probe"));
    ca.def(
        "compose_trajectory",
        [](const std::vector<cavity::TrajectorySegment>& segments, int n_modes,
           int quadrature_points, double cavity_length) {
            const auto r = cavity::compose_trajectory(segments, n_modes, quadrature_points,
                                                      cavity_length);
            return py::make_tuple(r.S, r.correction_norm);
        },
        py::arg("segments"), py::arg("n_modes"), py::arg("quadrature_points"),
        py::arg("cavity_length") = 0.0);
    ca.def(
        "resonance_scan",
        [](const std::vector<cavity::TrajectorySegment>& period, int n_max, int k, int k_prime,
           int n_modes, int quadrature_points) {
            const auto r = cavity::resonance_scan(period, n_max, {k, k_prime}, n_modes,
                                                  quadrature_points);
            py::dict out;
            out["negativity"] = r.negativity;
            out["linear_fit_r2"] = r.linear_fit_r2;
            out["slope"] = r.slope;
            out["correction_norm"] = r.correction_norm;
            return out;
        },
        py::arg("period"), py::arg("n_max"), py::arg("k"), py::arg("k_prime"), py::arg("n_modes"),
        py::arg("quadrature_points"));

    // ---- cosmology -----------------------------------------------------------
    auto co = m.def_submodule("cosmology");
    py::class_<cosmology::ExpansionParams>(co, "ExpansionParams")
        .def(py::init([](double epsilon, double sigma, double m_) {
                 return cosmology::ExpansionParams{epsilon, sigma, m_};
             }),
             py::arg("epsilon"), py::arg("sigma"), py::arg("m"))
        .def_readonly("epsilon", &cosmology::ExpansionParams::epsilon)
        .def_readonly("sigma", &cosmology::ExpansionParams::sigma)
        .def_readonly("m", &cosmology::ExpansionParams::m);
    co.def("complex_gamma", &cosmology::complex_gamma);
    co.def(
        "mode_frequencies",
        [](double k, const cosmology::ExpansionParams& p) {
            const auto f = cosmology::mode_frequencies(k, p);
            py::dict out;
            out["omega_in"] = f.omega_in;
            out["omega_out"] = f.omega_out;
            out["omega_plus"] = f.omega_plus;
            out["omega_minus"] = f.omega_minus;
            return out;
        },
        py::arg("k"), py::arg("params"));
    co.def(
        "bogoliubov_rw",
        [](double k, const cosmology::ExpansionParams& p) {
            const auto b = cosmology::bogoliubov_rw(k, p);
            return py::make_tuple(b.alpha, b.beta);
        },
        py::arg("k"), py::arg("params"));
    co.def("gamma_parameter", &cosmology::gamma_parameter, py::arg("k"), py::arg("params"));
    co.def("out_state", &cosmology::out_state, py::arg("gamma"), py::arg("cutoff"));
    co.def("entanglement_entropy", &cosmology::entanglement_entropy, py::arg("gamma"));
    co.def(
        "invert_expansion_params",
        [](double s1, double k1, double s2, double k2, double m_) {
            const auto r = cosmology::invert_expansion_params(s1, k1, s2, k2, m_);
            py::dict out;
            out["epsilon"] = r.params.epsilon;
            out["sigma"] = r.params.sigma;
            out["residual"] = r.residual;
            out["jacobian_condition"] = r.jacobian_condition;
            out["unique"] = r.unique;
            return out;
        },
        py::arg("S1"), py::arg("k1"), py::arg("S2"), py::arg("k2"), py::arg("m"));

    // ---- wigner -----------------------------------------------------------
    auto wi = m.def_submodule("wigner");
    py::class_<wigner::LorentzMatrix>(wi, "LorentzMatrix")
        .def(py::init<Eigen::Matrix4d, double>(), py::arg("entries"), py::arg("tol") = 1e-10)
        .def_static("identity", &wigner::LorentzMatrix::identity)
        .def_property_readonly("entries", &wigner::LorentzMatrix::entries)
        .def("apply", &wigner::LorentzMatrix::apply)
        .def("inverse", &wigner::LorentzMatrix::inverse);
    wi.def("on_shell", &wigner::on_shell, py::arg("p3"), py::arg("m"));
    wi.def("standard_boost", &wigner::standard_boost, py::arg("p"), py::arg("m"));
    wi.def("lorentz_from_rapidity", &wigner::lorentz_from_rapidity, py::arg("direction"),
           py::arg("xi"));
    wi.def("lorentz_from_rotation", &wigner::lorentz_from_rotation, py::arg("axis"),
           py::arg("angle"));
    wi.def("wigner_rotation", &wigner::wigner_rotation, py::arg("Lambda"), py::arg("p"),
           py::arg("m"));
    wi.def("su2_from_rotation", &wigner::su2_from_rotation, py::arg("W"));
    wi.def("massless_wigner_phase", &wigner::massless_wigner_phase, py::arg("Lambda"),
           py::arg("p"));
    py::class_<wigner::GaussianSpinPacket>(wi, "GaussianSpinPacket")
        .def(py::init([](Eigen::Vector3d mean, double width, Eigen::Vector2cd spin) {
                 return wigner::GaussianSpinPacket{std::move(mean), width, std::move(spin)};
             }),
             py::arg("mean"), py::arg("width"), py::arg("spin"));
    py::class_<wigner::SpinHalfAmplitude>(wi, "SpinHalfAmplitude")
        .def_static("gaussian", &wigner::SpinHalfAmplitude::gaussian, py::arg("packet"),
                    py::arg("mass"), py::arg("points_per_axis") = 24)
        .def("__call__",
             [](const wigner::SpinHalfAmplitude& a, const Eigen::Vector3d& p) { return a(p); })
        .def_property_readonly("mass", &wigner::SpinHalfAmplitude::mass)
        .def("norm_squared", &wigner::SpinHalfAmplitude::norm_squared);
    wi.def("boost_single_particle", &wigner::boost_single_particle, py::arg("psi"),
           py::arg("Lambda"), py::arg("m"));
    wi.def("reduced_spin_density", &wigner::reduced_spin_density, py::arg("psi"));
    py::class_<wigner::TwoParticleAmplitude>(wi, "TwoParticleAmplitude")
        .def(py::init([](Eigen::Matrix2cd spin, wigner::GaussianSpinPacket a,
                         wigner::GaussianSpinPacket b, int points) {
                 return wigner::TwoParticleAmplitude{std::move(spin), std::move(a), std::move(b),
                                                     points};
             }),
             py::arg("spin_amplitudes"), py::arg("packet_a"), py::arg("packet_b"),
             py::arg("points_per_axis") = 14);
    wi.def("two_particle_concurrence", &wigner::two_particle_concurrence, py::arg("g"),
           py::arg("Lambda"), py::arg("m"));
    py::enum_<wigner::SpinObservable>(wi, "SpinObservable")
        .value("center_of_mass", wigner::SpinObservable::center_of_mass)
        .value("newton_wigner", wigner::SpinObservable::newton_wigner)
        .value("czachor", wigner::SpinObservable::czachor)
        .value("friis_local", wigner::SpinObservable::friis_local);
    wi.def("spin_observable_expectation", &wigner::spin_observable_expectation, py::arg("psi"),
           py::arg("n_hat"), py::arg("which"));
    wi.def("spin_observable_matrix", &wigner::spin_observable_matrix, py::arg("p"), py::arg("m"),
           py::arg("n_hat"), py::arg("which"));
}
