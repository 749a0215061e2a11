#include "shellflow/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace shellflow {

namespace {

// Lanczos coefficients for g = 7 (9-term expansion).
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

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2 pi)/2

double log_gamma_lanczos(double x) {
    // Valid for x >= 0.5; the reflection below covers (0, 0.5).
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        acc += kLanczos[i] / (x - 1.0 + static_cast<double>(i));
    }
    const double t = x + kLanczosG - 0.5;
    return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive");
    }
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma_lanczos(1.0 - x);
    }
    return log_gamma_lanczos(x);
}

double beta_func(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw std::domain_error("beta_func: arguments must be positive");
    }
    return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double sphere_area(int dim) {
    if (dim < 1) {
        throw std::domain_error("sphere_area: dimension must be >= 1");
    }
    const double half = 0.5 * static_cast<double>(dim);
    return 2.0 * std::pow(M_PI, half) / std::exp(log_gamma(half));
}

}  // namespace shellflow
