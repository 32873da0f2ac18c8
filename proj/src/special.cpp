#include "rqi/special.hpp"

#include <cmath>
#include <stdexcept>

namespace rqi::special {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

std::complex<double> lanczos_gamma(std::complex<double> z) {
    // Valid for Re z >= 0.5.
    z -= 1.0;
    std::complex<double> acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        acc += kLanczos[i] / (z + static_cast<double>(i));
    }
    const std::complex<double> t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw std::domain_error("complex_gamma: pole at nonpositive integer");
    }
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return M_PI / (std::sin(M_PI * z) * lanczos_gamma(1.0 - z));
    }
    return lanczos_gamma(z);
}

double log_sinh(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_sinh: requires x > 0");
    if (x > 20.0) {
        return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
    }
    return std::log(std::sinh(x));
}

}  // namespace rqi::special
