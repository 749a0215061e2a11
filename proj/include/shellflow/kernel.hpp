#pragma once

#include <vector>

#include "shellflow/potential.hpp"

namespace shellflow {

// Which closed-form evaluation paths omega may take instead of quadrature.
// PolynomialN2EvenPowers: exact polynomials for N = 2 with even integer
// powers >= 2.  Full additionally enables the complete-elliptic-integral
// form of the unit power in N = 2 (the other exactly solvable case, needed
// to keep the singular-potential simulations fast).
enum class ClosedForm { None, PolynomialN2EvenPowers, Full };

struct KernelContext {
    int quad_order = 16;       // Gauss-Legendre panel order
    double abs_tol = 1e-12;    // adaptive refinement: absolute target
    double rel_tol = 1e-10;    // adaptive refinement: relative target
    bool peak_grading = true;  // geometric mesh grading toward theta = 0
    ClosedForm closed_form = ClosedForm::Full;

    KernelContext() = default;
    KernelContext(int order, double at, double rt, bool grading = true,
                  ClosedForm cf = ClosedForm::Full)
        : quad_order(order), abs_tol(at), rel_tol(rt), peak_grading(grading),
          closed_form(cf) {}
};

struct OmegaValue {
    double value = 0.0;  // radial velocity at r induced by the unit shell at eta
    double r = 0.0;
    double eta = 0.0;
    bool on_diagonal = false;
};

// Spherical-mean profile psi_c(s) in dimension N >= 2, always by
// singularity-aware adaptive quadrature of its angular integral.
// Requires c > 2 - N and s >= 0.
double psi(double c, double s, int dim, const KernelContext& ctx);

// One-dimensional analogue (even reflection), closed form.
double psi_1d(double c, double s);

// psi_c(1) through the Beta-function closed form; requires c + N - 1 > 0
// and N >= 2.
double psi_at_one(double c, int dim);

// psi_c'(1) / psi_c(1) = (c-2)(c+N-2) / (2(c+N-3)); the pole at
// c + N - 3 <= 0 is the non-C^1 regime and throws BlowupRegimeError.
double psi_prime_ratio_at_one(double c, int dim);

// Single kernel term r^(c-1) psi_c(eta/r) (used by the homogeneity checks
// and by omega itself).
double omega_power_term(double c, double r, double eta, int dim,
                        const KernelContext& ctx);

// Interaction law as a signed sum of power terms:
// W(x) = sum_i sign_i |x|^(c_i) / c_i.
struct PowerTerm {
    double exponent;
    double sign;
};

struct InteractionLaw {
    std::vector<PowerTerm> terms;
    int dim = 2;

    static InteractionLaw from(const PowerLawPotential& p);
    static InteractionLaw attractive(double exponent, int dim);

    // Smallest exponent: it controls the near-origin singularity and hence
    // the regularity class of omega.
    double min_exponent() const;
    OmegaContinuity continuity() const;
};

// Evaluator for omega(r, eta) and its partial derivatives for a fixed law
// and context.  Construction resolves each term to its evaluation path
// (polynomial / elliptic / quadrature) once; evaluation is pure and safe
// to call concurrently.
class OmegaEval {
public:
    OmegaEval(InteractionLaw law, KernelContext ctx);

    const InteractionLaw& law() const { return law_; }
    const KernelContext& context() const { return ctx_; }
    int dim() const { return law_.dim; }
    OmegaContinuity continuity() const { return law_.continuity(); }

    // omega(r, eta); r = 0 returns 0 (the velocity at the origin vanishes
    // by symmetry), eta = 0 is the point-mass limit sum_i -sign_i r^(c_i-1).
    double value(double r, double eta) const;
    OmegaValue labeled(double r, double eta) const;

    // Diagonal omega(r, r) from the psi_c(1) closed forms.
    double diagonal(double r) const;

    // Partial derivatives.  On the diagonal these use the psi(1) closed
    // forms and require the C^1 regime; off the diagonal, the polynomial
    // path differentiates exactly and everything else uses fourth-order
    // central differences with step 1e-5 * max(r, eta, 1).
    double d1(double r, double eta) const;
    double d2(double r, double eta) const;
    double d1_diagonal(double r) const;
    double d2_diagonal(double r) const;

    // Symmetric secants at a fixed offset: finite surrogates for the
    // divergent diagonal derivatives in the ContinuousOnly regime.
    double d1_diagonal_secant(double r, double offset = 1e-6) const;
    double d2_diagonal_secant(double r, double offset = 1e-6) const;

    bool fully_closed_form() const;  // no quadrature on any term

private:
    enum class TermPath { Quadrature, Polynomial, Elliptic };
    struct CompiledTerm {
        double c = 0.0;
        double sign = 1.0;
        TermPath path = TermPath::Quadrature;
        std::vector<double> poly;  // psi_c coefficients in s (even powers)
    };

    double term_value(const CompiledTerm& t, double r, double eta) const;
    double term_d1(const CompiledTerm& t, double r, double eta) const;
    double term_d2(const CompiledTerm& t, double r, double eta) const;

    InteractionLaw law_;
    KernelContext ctx_;
    std::vector<CompiledTerm> compiled_;
};

// Spec-level convenience wrappers over OmegaEval.
OmegaValue omega(const PowerLawPotential& p, double r, double eta,
                 const KernelContext& ctx);
double d1_omega(const PowerLawPotential& p, double r, double eta,
                const KernelContext& ctx);
double d2_omega(const PowerLawPotential& p, double r, double eta,
                const KernelContext& ctx);

// omega for a generic radial potential descriptor, by quadrature of
// -k'(A) (r - eta cos t) / A over the sphere angle.  Refuses descriptors
// whose k' is not integrable on hypersurfaces.
OmegaValue omega_generic(const RadialPotentialDescriptor& d, double r, double eta,
                         int dim, const KernelContext& ctx);

// Exact polynomial coefficients of psi_c(s) for N = 2 and even integer
// c >= 2 (dense in s; odd entries are zero).  Exposed for tests.
std::vector<double> psi_polynomial_n2(int c);

// Complete elliptic integrals K(m), E(m) (parameter m = k^2 in [0, 1)),
// by the arithmetic-geometric mean.
void elliptic_ke(double m, double& K, double& E);

}  // namespace shellflow
