#include "pvrm/special.hpp"

#include <cmath>

#include "pvrm/errors.hpp"

namespace pvrm {

namespace {

// J_{m+1/2}(x) for integer m >= -1 from the trigonometric closed forms,
// upward order recurrence J_{nu+1} = (2 nu / x) J_nu - J_{nu-1}.
Real bessel_half_integer(long m, const Real& x, Prec wp) {
    Real xw = x.to_prec(wp);
    Real pref = sqrt(2 / (Real::pi(wp) * xw));
    Real jm = pref * cos(xw); // J_{-1/2}
    if (m == -1) return jm;
    Real j = pref * sin(xw); // J_{+1/2}
    for (long k = 0; k < m; ++k) {
        // nu = k + 1/2
        Real nu = Real(2 * k + 1, wp) / 2;
        Real jn = (2 * nu / xw) * j - jm;
        jm = j;
        j = jn;
    }
    return j;
}

Real bessel_series(const Real& nu, const Real& x, Prec wp) {
    Real xw = x.to_prec(wp), nw = nu.to_prec(wp);
    Real q = xw * xw / 4;
    Real term = 1 / gamma_fn(nw + 1);
    Real sum = term;
    Real peak = abs(term);
    Real tol = Real::pow2(-static_cast<long>(wp) + 4, wp);
    bool converged = false;
    for (long k = 1; k <= 100000; ++k) {
        term = -term * q / (k * (nw + k));
        sum += term;
        Real at = abs(term);
        if (at > peak) peak = at;
        if (at < tol * peak) {
            converged = true;
            break;
        }
    }
    if (!converged) throw precision_error("bessel_j: series did not converge at requested precision");
    return pow(xw / 2, nw) * sum;
}

} // namespace

Real bessel_j(const Real& nu, const Real& x) {
    if (!(x > 0)) throw domain_error("bessel_j: requires x > 0");
    if (!(nu > Real(-1L, nu.prec()))) throw domain_error("bessel_j: requires order > -1");
    Prec prec = x.prec() > nu.prec() ? x.prec() : nu.prec();
    // padding for the alternating-series cancellation (~ x * log2(e) bits)
    Prec wp = prec + 64 + static_cast<Prec>(x.to_double() * 1.5 + 16);
    Real two_nu = 2 * nu;
    if (is_integer(two_nu) && !is_integer(nu)) {
        long m = ((two_nu - 1) / 2).to_long();
        return bessel_half_integer(m, x, wp).to_prec(prec);
    }
    return bessel_series(nu, x, wp).to_prec(prec);
}

namespace {

Real log_barnes_series(const Real& w, Prec wp) {
    // log G(1+w) for |w| <= 1/2:
    //   (w/2) log(2 pi) - w(w+1)/2 - gamma w^2/2
    //   + sum_{n>=3} (-1)^(n-1) zeta(n-1) w^n / n,
    // tail bounded by zeta(2)|w|^(N+1) / ((N+1)(1-|w|)).
    Real two_pi = 2 * Real::pi(wp);
    Real acc = (w / 2) * log(two_pi) - w * (w + 1) / 2 - Real::euler_gamma(wp) * w * w / 2;
    Real tol = Real::pow2(-static_cast<long>(wp) + 4, wp);
    Real wn = w * w;
    for (unsigned long n = 3; n <= 200000; ++n) {
        wn *= w;
        Real term = zeta_ui(n - 1, wp) * wn / static_cast<long>(n);
        if ((n & 1UL) == 0) term = -term;
        acc += term;
        Real bound = abs(wn) * 2 / ((static_cast<long>(n) + 1) * (1 - abs(w)));
        if (bound < tol * (1 + abs(acc))) return acc;
    }
    throw precision_error("barnes_g: series did not reach the requested tolerance");
}

} // namespace

namespace {

// exact superfactorial product 1! 2! ... (n-2)! at a precision wide enough
// to hold every intermediate bit
Real superfactorial(long n, Prec prec) {
    double need = 0;
    for (long k = 2; k <= n - 2; ++k) need += k * std::log2(static_cast<double>(k));
    Prec wp = prec + 64 + static_cast<Prec>(need);
    Real g(1L, wp);
    Real f(1L, wp);
    for (long k = 1; k <= n - 2; ++k) {
        f *= k;
        g *= f;
    }
    return g;
}

} // namespace

Real log_barnes_g(const Real& z) {
    if (!(z > 0)) throw domain_error("barnes_g: requires z > 0");
    Prec prec = z.prec();
    Prec wp = prec + 64;
    Real zw = z.to_prec(wp);
    if (is_integer(z)) return log(superfactorial(z.to_long(), prec)).to_prec(prec);
    long m = (zw - 1).to_long();
    Real w = zw - 1 - m;
    Real acc = log_barnes_series(w, wp);
    if (m >= 0) {
        for (long j = 0; j < m; ++j) acc += lngamma(1 + w + j);
    } else {
        for (long j = m; j <= -1; ++j) acc -= lngamma(1 + w + j);
    }
    return acc.to_prec(prec);
}

Real barnes_g(const Real& z) {
    if (!(z > 0)) throw domain_error("barnes_g: requires z > 0");
    if (is_integer(z)) return superfactorial(z.to_long(), z.prec()).to_prec(z.prec());
    return exp(log_barnes_g(z));
}

} // namespace pvrm
