// SPDX-License-Identifier: Apache-2.0
#include "zetadqpt/dd.hpp"

#include <cmath>

namespace zdq {

// exp(a) via: a = m*ln2 + r, expm1(r/512) by Taylor, nine doublings,
// then scale by 2^m.
DD dd_exp(const DD& a) {
    double m = std::nearbyint(a.hi / kDDLn2.hi);
    DD r = dd_sub(a, dd_mul(kDDLn2, m));
    r = dd_mul(r, 1.0 / 512.0);

    // expm1(r), |r| <= 0.0007: Taylor through r^8/8! leaves < 1e-34.
    DD p = r;
    DD term = r;
    for (int k = 2; k <= 8; ++k) {
        term = dd_mul(term, r);
        term = dd_mul(term, 1.0 / k);
        p = dd_add(p, term);
    }
    // e^{2x} - 1 = 2(e^x - 1) + (e^x - 1)^2
    for (int i = 0; i < 9; ++i)
        p = dd_add(dd_mul(p, 2.0), dd_mul(p, p));
    DD e = dd_add(p, 1.0);
    int mi = static_cast<int>(m);
    return {std::ldexp(e.hi, mi), std::ldexp(e.lo, mi)};
}

// log via one Newton step on exp from the double-precision seed.
DD dd_log(const DD& a) {
    double y0 = std::log(a.hi);
    DD ey = dd_exp(DD{-y0, 0.0});
    DD corr = dd_sub(dd_mul(a, ey), 1.0);
    return dd_add(corr, y0);
}

DD dd_log_u64(unsigned long long n) {
    return dd_log(DD{static_cast<double>(n), 0.0});
}

DD dd_pow(unsigned long long n, const DD& expnt) {
    if (n == 1) return DD{1.0, 0.0};
    return dd_exp(dd_mul(dd_log_u64(n), expnt));
}

double dd_mod_2pi(const DD& a) {
    double k = std::nearbyint(a.hi * kInv2Pi);
    DD v = ddk::two_prod(k, kDDTwoPi.hi);
    double r = a.hi - v.hi;
    r -= v.lo;
    r -= k * kDDTwoPi.lo;
    return r + a.lo;
}

// sin/cos by quadrant reduction and Taylor on |r| <= pi/4.
void dd_sincos(const DD& a, DD& s, DD& c) {
    double k = std::nearbyint(a.hi / kDDPiOver2.hi);
    DD r = dd_sub(a, dd_mul(kDDPiOver2, k));

    DD r2 = dd_mul(r, r);
    DD sr = r;
    DD term = r;
    for (int j = 1; j <= 14; ++j) {
        term = dd_mul(term, r2);
        term = dd_mul(term, -1.0 / ((2.0 * j) * (2.0 * j + 1.0)));
        sr = dd_add(sr, term);
    }
    DD cr{1.0, 0.0};
    term = DD{1.0, 0.0};
    for (int j = 1; j <= 14; ++j) {
        term = dd_mul(term, r2);
        term = dd_mul(term, -1.0 / ((2.0 * j) * (2.0 * j - 1.0)));
        cr = dd_add(cr, term);
    }

    switch (static_cast<long long>(k) & 3LL) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = dd_neg(sr); break;
        case 2: s = dd_neg(sr); c = dd_neg(cr); break;
        default: s = dd_neg(cr); c = sr; break;
    }
}

} // namespace zdq
