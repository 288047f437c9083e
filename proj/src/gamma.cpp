#include "fractoda/gamma.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fractoda/types.hpp"

namespace fractoda {

namespace {

// Lanczos coefficients for g = 7 (relative error below 1e-13 on the
// positive real axis once combined with the reflection formula).
constexpr int kLanczosG = 7;
constexpr double kLanczosP[kLanczosG + 2] = {
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

// n! for n = 0..20, correctly rounded to double.
constexpr double kFactorial[21] = {
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
};

double lanczos(double x) {
    // Valid for x >= 0.5.
    const double z = x - 1.0;
    double series = kLanczosP[0];
    for (int i = 1; i < kLanczosG + 2; ++i) {
        series += kLanczosP[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

}  // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::domain_error("gamma_fn: argument must be positive and finite, got " +
                                std::to_string(x));
    }
    // Integer arguments hit the factorial identity exactly; this also makes
    // the q = 1 integrator coefficient h^1/gamma(2) collapse to h bit-for-bit.
    if (x == std::floor(x) && x <= 21.0) {
        return kFactorial[static_cast<int>(x) - 1];
    }
    if (x < 0.5) {
        return kPi / (std::sin(kPi * x) * lanczos(1.0 - x));
    }
    return lanczos(x);
}

}  // namespace fractoda
