#pragma once

#include <functional>
#include <vector>

namespace shellflow {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
};

// Gauss-Legendre nodes/weights on [-1, 1] for the given order (cached).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

// Adaptive panel-wise Gauss-Legendre integration of f over the mesh given
// by `breakpoints` (ascending, at least {a, b}).  Panels are bisected,
// worst first, until the summed error estimate drops below
// max(abs_tol, rel_tol * |integral|).  Throws QuadratureError (carrying
// the running estimate) if the panel budget is exhausted first.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              const std::vector<double>& breakpoints,
                              int order, double abs_tol, double rel_tol,
                              int max_panels = 4000);

// Breakpoints for [0, upper] geometrically graded toward 0: panel edges
// upper * 2^-k down to scale `finest`.  Used to resolve integrands that
// peak or lose smoothness at the left endpoint.
std::vector<double> graded_breakpoints(double upper, double finest);

}  // namespace shellflow
