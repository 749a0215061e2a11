#pragma once

namespace shellflow {

// ln Gamma(x) for x > 0.  Lanczos approximation, relative error below
// 1e-13 on [0.5, 50] (all exponent combinations used by the kernel
// closed forms fall in this range).  Throws std::domain_error for x <= 0.
double log_gamma(double x);

// Euler Beta function B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y), evaluated in
// log space so large arguments do not overflow.  Requires x, y > 0.
double beta_func(double x, double y);

// Surface measure of the unit sphere in R^dim: 2 pi^(dim/2) / Gamma(dim/2).
// dim=1 gives 2 (the two-point sphere), dim=2 gives 2 pi, dim=3 gives 4 pi.
double sphere_area(int dim);

}  // namespace shellflow
