// SPDX-License-Identifier: Apache-2.0
#include "zetadqpt/special.hpp"

#include "zetadqpt/bernoulli.hpp"
#include "zetadqpt/errors.hpp"

#include <array>
#include <cmath>

namespace zdq {

namespace {

constexpr double kLnPi = 1.1447298858494002;
constexpr double kHalfLn2Pi = 0.9189385332046727; // ln(2*pi)/2

// arg with sign symmetry guaranteed: arg(conj z) == -arg(z) bitwise.
inline double sym_arg(const cxd& z) {
    double a = std::atan2(std::fabs(z.imag()), z.real());
    return std::signbit(z.imag()) ? -a : a;
}

// Complex log built from sym_arg so conjugation commutes bitwise with
// evaluation (needed for exact |chi|=1 on the critical line).
inline cxd sym_log(const cxd& z) {
    return {0.5 * std::log(std::norm(z)), sym_arg(z)};
}

inline cxd sym_exp(const cxd& z) {
    double m = std::exp(z.real());
    double im = std::fabs(z.imag());
    double c = std::cos(im);
    double s = std::sin(im);
    if (std::signbit(z.imag())) s = -s;
    return {m * c, m * s};
}

// Stirling coefficients B_{2r} / (2r (2r-1)).
constexpr int kStirlingTerms = 13;
double stirling_coeff(int r) {
    static const auto c = [] {
        std::array<double, kStirlingTerms + 1> a{};
        for (int j = 1; j <= kStirlingTerms; ++j)
            a[j] = bernoulli_d(2 * j) / (2.0 * j * (2.0 * j - 1.0));
        return a;
    }();
    return c[r];
}

constexpr double kShiftRadius = 13.0;

void check_not_pole(const cxd& z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw domain_error("log_gamma/digamma: pole at non-positive integer");
}

} // namespace

cxd log_gamma(cxd z) {
    check_not_pole(z);
    cxd shift{0.0, 0.0};
    while (std::abs(z) < kShiftRadius) {
        check_not_pole(z);
        shift += sym_log(z);
        z += 1.0;
    }
    cxd zi = 1.0 / z;
    cxd zi2 = zi * zi;
    cxd series{0.0, 0.0};
    cxd p = zi;
    for (int r = 1; r <= kStirlingTerms; ++r) {
        series += stirling_coeff(r) * p;
        p *= zi2;
    }
    cxd lg = (z - 0.5) * sym_log(z) - z + kHalfLn2Pi + series;
    return lg - shift;
}

cxd digamma(cxd z) {
    check_not_pole(z);
    cxd shift{0.0, 0.0};
    while (std::abs(z) < kShiftRadius) {
        check_not_pole(z);
        shift += 1.0 / z;
        z += 1.0;
    }
    cxd zi = 1.0 / z;
    cxd zi2 = zi * zi;
    cxd series{0.0, 0.0};
    cxd p = zi2;
    for (int r = 1; r <= kStirlingTerms; ++r) {
        series += (bernoulli_d(2 * r) / (2.0 * r)) * p;
        p *= zi2;
    }
    return sym_log(z) - 0.5 * zi - series - shift;
}

namespace {

constexpr double kThetaAsympMin = 32.0;

// theta(t) for t >= kThetaAsympMin by the standard asymptotic expansion,
// carried in dd: (t/2) ln(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3)
// + 31/(80640 t^5). Next term is below 1e-14 at t = 32.
DD theta_asymp_dd(double t) {
    DD x = dd_div(DD{t, 0.0}, kDDTwoPi);
    DD l = dd_log(x);
    DD th = dd_mul(l, 0.5 * t);
    th = dd_add(th, -0.5 * t);
    th = dd_sub(th, kDDPiOver8);
    double t2 = t * t;
    double corr = 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t2 * t2 * t);
    return dd_add(th, corr);
}

double theta_gamma_route(double t) {
    cxd lg = log_gamma(cxd(0.25, 0.5 * t));
    return lg.imag() - 0.5 * t * kLnPi;
}

} // namespace

double rs_theta(double t) {
    if (!std::isfinite(t)) throw domain_error("rs_theta: t must be finite");
    if (t == 0.0) return 0.0;
    double a = std::fabs(t);
    double v = (a < kThetaAsympMin) ? theta_gamma_route(a) : theta_asymp_dd(a).to_double();
    return t < 0.0 ? -v : v;
}

DD rs_theta_mod2pi(double t) {
    if (!std::isfinite(t)) throw domain_error("rs_theta: t must be finite");
    double a = std::fabs(t);
    DD th = (a < kThetaAsympMin) ? DD{theta_gamma_route(a), 0.0} : theta_asymp_dd(a);
    if (t < 0.0) th = dd_neg(th);
    return DD{dd_mod_2pi(th), 0.0};
}

double rs_theta_dot(double t) {
    if (!std::isfinite(t)) throw domain_error("rs_theta_dot: t must be finite");
    cxd ps = digamma(cxd(0.25, 0.5 * std::fabs(t)));
    return 0.5 * ps.real() - 0.5 * kLnPi;
}

cxd log_chi(cxd s) {
    if (!(s.real() > 0.0 && s.real() < 1.0))
        throw domain_error("chi: Re s must lie in (0,1)");
    cxd lg_top = log_gamma(0.5 * (1.0 - s));
    cxd lg_bot = log_gamma(0.5 * s);
    return (s - 0.5) * kLnPi + lg_top - lg_bot;
}

cxd chi(cxd s) { return sym_exp(log_chi(s)); }

} // namespace zdq
