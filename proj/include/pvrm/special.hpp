#pragma once

#include "pvrm/real.hpp"

namespace pvrm {

// Bessel function of the first kind, real order nu > -1, x > 0.
// Half-integer orders use the closed trigonometric (spherical) forms;
// other orders use the ascending series with precision tracking.
Real bessel_j(const Real& nu, const Real& x);

// Barnes G-function for z > 0. Integer arguments are evaluated exactly as
// superfactorials; otherwise the Taylor series of log G(1+w) in zeta values
// is used after reduction to |w| <= 1/2 via G(z+1) = Gamma(z) G(z).
Real barnes_g(const Real& z);
Real log_barnes_g(const Real& z);

} // namespace pvrm
