// Robertson-Walker particle creation: asymptotic in/out frequencies,
// Bogoliubov coefficients via complex Gamma functions, the gamma parameter,
// entanglement entropy, and inversion of the expansion parameters from
// entanglement at two momenta.
#pragma once

#include <complex>

#include "rqi/fock.hpp"

namespace rqi::cosmology {

// Lanczos complex Gamma (see rqi/special.hpp).
std::complex<double> complex_gamma(std::complex<double> z);

struct ExpansionParams {
    double epsilon;  // expansion volume, > 0
    double sigma;    // expansion rate, > 0
    double m;        // field mass, >= 0
};

struct ModeFrequencies {
    double k;
    double omega_in;     // sqrt(k^2 + m^2)
    double omega_out;    // sqrt(k^2 + m^2 (1 + 2 epsilon))
    double omega_plus;   // (out + in) / 2
    double omega_minus;  // (out - in) / 2
};

ModeFrequencies mode_frequencies(double k, const ExpansionParams& params);

struct BogoliubovCoefficients {
    std::complex<double> alpha;
    std::complex<double> beta;
};

// In/out coefficients from the Gamma-function closed form; conformal inputs
// (m = 0 or epsilon = 0) short-circuit to (1, 0).
BogoliubovCoefficients bogoliubov_rw(double k, const ExpansionParams& params);

// gamma = sinh^2(pi w_minus / sigma) / sinh^2(pi w_plus / sigma), in [0, 1);
// evaluated in log space when the arguments are large.
double gamma_parameter(double k, const ExpansionParams& params);

// Out-region two-mode state: sqrt(1-gamma) sum gamma^{n/2} |n,n>, identical to
// the two-mode squeezed vacuum with tanh r = sqrt(gamma).
fock::StateVector out_state(double gamma, int cutoff);

// S = log2[gamma^{gamma/(gamma-1)} / (1 - gamma)].
double entanglement_entropy(double gamma);

struct InversionResult {
    ExpansionParams params;
    double residual;            // max |S(k_i) - S_i| at the solution
    double jacobian_condition;  // conditioning of dS/d(log eps, log sigma)
    bool unique;                // false if the grid search found separated basins
};

// Recover (epsilon, sigma) from entropies at two momenta by damped Newton on
// log-parameters with a coarse grid-search initialization. Throws for m = 0
// (conformal case carries no information) and when no solution is found.
InversionResult invert_expansion_params(double S1, double k1, double S2, double k2, double m);

}  // namespace rqi::cosmology
