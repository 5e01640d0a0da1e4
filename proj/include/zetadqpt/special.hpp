// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zetadqpt/dd.hpp"

#include <complex>

namespace zdq {

using cxd = std::complex<double>;

// Principal branch of log Gamma(z) for Re z > 0 (Stirling series with
// upward recurrence). Relative accuracy ~1e-14 on the strip the project
// uses (Re z in [1/8, 4], |Im z| up to 1e12).
cxd log_gamma(cxd z);

// Digamma psi(z), Re z > 0.
cxd digamma(cxd z);

// Riemann-Siegel theta, principal continuous branch, odd in t.
double rs_theta(double t);

// theta(t) reduced into (-pi, pi], carried in double-double so the phase
// survives t ~ 3e11 (theta ~ 3e12 there).
DD rs_theta_mod2pi(double t);

// d theta / dt = Re psi(1/4 + it/2)/2 - ln(pi)/2; even in t.
double rs_theta_dot(double t);

// Functional-equation factor chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s),
// for 0 < Re s < 1, evaluated in log space through the equivalent Gamma
// ratio pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2) so |chi| stays exact on the
// critical line instead of losing ~t*eps to cancellation.
cxd chi(cxd s);

// log chi(s) (same evaluation path; useful for modulus scaling tests).
cxd log_chi(cxd s);

} // namespace zdq
