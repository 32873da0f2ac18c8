#pragma once

#include <complex>

namespace rqi::special {

// Gamma function for complex argument, Lanczos approximation (g = 7, 9 terms)
// with the reflection formula for Re z < 1/2. Relative error <= ~1e-13 on
// the strip |Im z| <= 50, 0 < Re z <= 5. Throws on poles (nonpositive integers).
std::complex<double> complex_gamma(std::complex<double> z);

// log(sinh x) evaluated stably for large x (log-space to avoid overflow).
double log_sinh(double x);

}  // namespace rqi::special
