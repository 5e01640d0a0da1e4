// SPDX-License-Identifier: Apache-2.0
//
// Minimal double-double arithmetic: an unevaluated sum hi + lo with
// |lo| <= ulp(hi)/2. Used for extended-precision phase reduction
// (t * ln n mod 2pi at t up to ~3e11) and for closed-form summation
// endpoints where plain doubles lose the certified error budget.
#pragma once

#include <cmath>

namespace zdq {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    constexpr DD(double h, double l) : hi(h), lo(l) {}
    explicit constexpr DD(double h) : hi(h), lo(0.0) {}

    double to_double() const { return hi + lo; }
};

namespace ddk {

// Error-free transforms.
inline DD two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    double e = (a - (s - v)) + (b - v);
    return {s, e};
}

inline DD quick_two_sum(double a, double b) { // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace ddk

inline DD dd_add(const DD& a, const DD& b) {
    DD s = ddk::two_sum(a.hi, b.hi);
    double e = s.lo + a.lo + b.lo;
    return ddk::quick_two_sum(s.hi, e);
}

inline DD dd_add(const DD& a, double b) {
    DD s = ddk::two_sum(a.hi, b);
    return ddk::quick_two_sum(s.hi, s.lo + a.lo);
}

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, DD{-b.hi, -b.lo}); }
inline DD dd_sub(const DD& a, double b) { return dd_add(a, -b); }
inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }

inline DD dd_mul(const DD& a, const DD& b) {
    DD p = ddk::two_prod(a.hi, b.hi);
    double e = p.lo + a.hi * b.lo + a.lo * b.hi;
    return ddk::quick_two_sum(p.hi, e);
}

inline DD dd_mul(const DD& a, double b) {
    DD p = ddk::two_prod(a.hi, b);
    return ddk::quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD dd_div(const DD& a, const DD& b) {
    double q1 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    DD q = ddk::quick_two_sum(q1, q2);
    return dd_add(q, q3);
}

inline DD dd_div(const DD& a, double b) { return dd_div(a, DD{b, 0.0}); }

// Constants split to 32 significant digits.
inline constexpr DD kDDTwoPi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr DD kDDPi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr DD kDDPiOver2{1.5707963267948966, 6.123233995736766e-17};
inline constexpr DD kDDPiOver4{0.7853981633974483, 3.061616997868383e-17};
inline constexpr DD kDDPiOver8{0.39269908169872414, 1.5308084989341915e-17};
inline constexpr DD kDDLn2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DD kDDLnPi{1.1447298858494002, 1.0265951162707826e-17};
inline constexpr double kInv2Pi = 0.15915494309189535;

DD dd_exp(const DD& a);            // |a| <= 700
DD dd_log(const DD& a);            // a.hi > 0
DD dd_log_u64(unsigned long long n);
DD dd_pow(unsigned long long n, const DD& expnt); // n^expnt, n >= 1
void dd_sincos(const DD& a, DD& s, DD& c);        // |a| <= ~4*pi

// Reduce a dd value into (-pi, pi], returning a double (the residual fits
// comfortably in one double once the multiple of 2pi is removed).
double dd_mod_2pi(const DD& a);

// Phase t * ln(n) reduced mod 2pi, with ln(n) given as a dd. Absolute
// error stays below 1e-12 rad for |t| <= 3e11.
inline double phase_mod_2pi(double t, double ln_hi, double ln_lo) {
    DD p = ddk::two_prod(t, ln_hi);
    double tail = p.lo + t * ln_lo;
    double k = std::nearbyint(p.hi * kInv2Pi);
    DD v = ddk::two_prod(k, kDDTwoPi.hi);
    double r = p.hi - v.hi; // exact: operands within a factor of 2
    r -= v.lo;
    r -= k * kDDTwoPi.lo;
    return r + tail;
}

} // namespace zdq
