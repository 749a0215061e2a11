#include "shellflow/potential.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shellflow {

PowerLawPotential::PowerLawPotential(double a, double b, int dim)
    : a_(a), b_(b), dim_(dim) {
    if (dim < 1) {
        throw std::domain_error("PowerLawPotential: dimension must be >= 1");
    }
    if (!(b > 2.0 - dim) || !(b < a)) {
        throw std::domain_error("PowerLawPotential: exponents must satisfy 2-N < b < a");
    }
    if (a == 0.0 || b == 0.0) {
        throw std::domain_error("PowerLawPotential: zero exponent has no r^c/c form");
    }
}

double PowerLawPotential::k(double r) const {
    if (r == 0.0) {
        if (b_ < 0.0) throw std::domain_error("k: singular at r = 0 for b < 0");
        // b > 0 (hence a > 0): both power terms vanish.
        return 0.0;
    }
    if (r < 0.0) throw std::domain_error("k: radius must be nonnegative");
    return std::pow(r, a_) / a_ - std::pow(r, b_) / b_;
}

double PowerLawPotential::k_prime(double r) const {
    if (!(r > 0.0)) throw std::domain_error("k_prime: radius must be positive");
    return std::pow(r, a_ - 1.0) - std::pow(r, b_ - 1.0);
}

double PowerLawPotential::k_second(double r) const {
    if (!(r > 0.0)) throw std::domain_error("k_second: radius must be positive");
    return (a_ - 1.0) * std::pow(r, a_ - 2.0) - (b_ - 1.0) * std::pow(r, b_ - 2.0);
}

RegularityFlags regularity_for_exponent(double b, int dim) {
    RegularityFlags flags;
    flags.kprime_integrable_on_hypersurfaces = b > 2.0 - dim;
    flags.laplacian_integrable_on_hypersurfaces = b > 3.0 - dim;
    if (b > 3.0 - dim) {
        flags.omega_continuity_class = OmegaContinuity::C1;
    } else if (b > 2.0 - dim) {
        // The boundary b = 3-N stays in the blow-up class.
        flags.omega_continuity_class = OmegaContinuity::ContinuousOnly;
    } else {
        flags.omega_continuity_class = OmegaContinuity::NotContinuous;
    }
    return flags;
}

RegularityFlags PowerLawPotential::regularity() const {
    return regularity_for_exponent(b_, dim_);
}

RegularityFlags RadialPotentialDescriptor::regularity(int dim) const {
    return regularity_for_exponent(near_origin_exponent, dim);
}

void RadialPotentialDescriptor::validate(double r_lo, double r_hi, int samples,
                                         double rel_tol) const {
    if (!k || !k_prime || !k_second) {
        throw std::invalid_argument("RadialPotentialDescriptor: missing callable");
    }
    for (int i = 0; i < samples; ++i) {
        const double r = r_lo + (r_hi - r_lo) * (i + 0.5) / samples;
        const double h = 1e-5 * std::max(r, 1.0);
        const double fd1 = (k(r + h) - k(r - h)) / (2.0 * h);
        const double fd2 = (k_prime(r + h) - k_prime(r - h)) / (2.0 * h);
        const double scale1 = std::max(std::abs(k_prime(r)), 1e-8);
        const double scale2 = std::max(std::abs(k_second(r)), 1e-8);
        if (std::abs(fd1 - k_prime(r)) > rel_tol * scale1) {
            throw std::invalid_argument(
                "RadialPotentialDescriptor: k_prime disagrees with d/dr k at r=" +
                std::to_string(r));
        }
        if (std::abs(fd2 - k_second(r)) > rel_tol * scale2) {
            throw std::invalid_argument(
                "RadialPotentialDescriptor: k_second disagrees with d/dr k_prime at r=" +
                std::to_string(r));
        }
    }
}

RadialPotentialDescriptor make_descriptor(const PowerLawPotential& p) {
    RadialPotentialDescriptor d;
    const double a = p.a(), b = p.b();
    d.k = [a, b](double r) { return std::pow(r, a) / a - std::pow(r, b) / b; };
    d.k_prime = [a, b](double r) {
        return std::pow(r, a - 1.0) - std::pow(r, b - 1.0);
    };
    d.k_second = [a, b](double r) {
        return (a - 1.0) * std::pow(r, a - 2.0) - (b - 1.0) * std::pow(r, b - 2.0);
    };
    d.near_origin_exponent = b;
    d.attractive_beyond = 1.0;  // k'(r) = r^(a-1) - r^(b-1) >= 0 for r >= 1
    return d;
}

RadialPotentialDescriptor pure_attractive_descriptor(double exponent) {
    if (exponent == 0.0) {
        throw std::domain_error("pure_attractive_descriptor: exponent must be nonzero");
    }
    RadialPotentialDescriptor d;
    const double c = exponent;
    d.k = [c](double r) { return std::pow(r, c) / c; };
    d.k_prime = [c](double r) { return std::pow(r, c - 1.0); };
    d.k_second = [c](double r) { return (c - 1.0) * std::pow(r, c - 2.0); };
    d.near_origin_exponent = c;
    d.attractive_beyond = 0.0;
    return d;
}

}  // namespace shellflow
