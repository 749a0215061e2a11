#pragma once

#include <functional>
#include <optional>

namespace shellflow {

// Continuity class of the velocity kernel omega on the open quadrant,
// decided by the strength of the repulsive singularity at the origin.
enum class OmegaContinuity {
    NotContinuous,   // k' not integrable on hypersurfaces
    ContinuousOnly,  // omega continuous, d1 omega blows up on the diagonal
    C1,              // omega continuously differentiable
};

struct RegularityFlags {
    bool kprime_integrable_on_hypersurfaces = false;
    bool laplacian_integrable_on_hypersurfaces = false;
    OmegaContinuity omega_continuity_class = OmegaContinuity::NotContinuous;
};

// W(x) = |x|^a / a - |x|^b / b with 2 - N < b < a: repulsive in the short
// range, attractive in the long range.
class PowerLawPotential {
public:
    PowerLawPotential(double a, double b, int dim);

    double a() const { return a_; }
    double b() const { return b_; }
    int dim() const { return dim_; }

    // k(r) = r^a/a - r^b/b.  r = 0 is allowed only when both powers are
    // positive (the value is then 0); otherwise it is a singularity.
    double k(double r) const;
    double k_prime(double r) const;   // r^(a-1) - r^(b-1), r > 0
    double k_second(double r) const;  // (a-1) r^(a-2) - (b-1) r^(b-2), r > 0

    RegularityFlags regularity() const;

private:
    double a_;
    double b_;
    int dim_;
};

// Generic radial potential described by user-supplied callables.  The
// derivative fields must actually be the derivatives of k; validate()
// checks this by central differences on a sample grid.
struct RadialPotentialDescriptor {
    std::function<double(double)> k;
    std::function<double(double)> k_prime;
    std::function<double(double)> k_second;
    // Leading power p with k(r) ~ c r^p as r -> 0; drives the regularity
    // flags exactly as the exponent b does for the power-law family.
    double near_origin_exponent = 2.0;
    // Radius beyond which k' >= 0 (potential purely attractive), if known.
    std::optional<double> attractive_beyond;

    RegularityFlags regularity(int dim) const;

    // Throws std::invalid_argument if k_prime/k_second disagree with
    // finite differences of k within rel_tol on [r_lo, r_hi].
    void validate(double r_lo = 0.1, double r_hi = 10.0, int samples = 24,
                  double rel_tol = 1e-5) const;
};

// Descriptor view of a power-law potential (used by the generic-kernel
// consistency oracles and the root finder).
RadialPotentialDescriptor make_descriptor(const PowerLawPotential& p);

// Purely attractive k(r) = r^exponent / exponent.
RadialPotentialDescriptor pure_attractive_descriptor(double exponent);

RegularityFlags regularity_for_exponent(double b, int dim);

}  // namespace shellflow
