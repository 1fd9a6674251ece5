#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "pvrm/complex.hpp"

namespace pvrm {

enum class QuadScheme {
    GaussLegendre,    // integrand analytic on the closed interval
    EndpointSingular, // admissible |x-endpoint|^beta (beta > -1) or log endpoint singularities
};

// Gauss-Legendre nodes/weights on [-1,1] at the given precision (cached).
struct GLRule {
    std::vector<Real> x;
    std::vector<Real> w;
};
const GLRule& gauss_legendre(int n, Prec prec);

namespace qdetail {

inline Real abs_val(const Real& x) { return abs(x); }
inline Real abs_val(const Complex& x) { return abs(x); }
inline Real zero_like(Prec p, const Real&) { return Real(0L, p); }
inline Complex zero_like(Prec p, const Complex&) { return Complex(0L, p); }

template <typename T>
struct QuadOut {
    T value;
    Real err;
};

template <typename T>
QuadOut<T> quad_gl_fixed(const std::function<T(const Real&)>& f, const Real& a, const Real& b, int n, Prec prec) {
    const GLRule& rule = gauss_legendre(n, prec);
    Real c = (a + b) / 2, r = (b - a) / 2;
    T acc = zero_like(prec, T());
    for (int i = 0; i < n; ++i) {
        Real x = c + r * rule.x[static_cast<size_t>(i)];
        acc = acc + f(x) * rule.w[static_cast<size_t>(i)];
    }
    return {acc * r, Real(0L, prec)};
}

template <typename T>
QuadOut<T> quad_gl_adaptive(const std::function<T(const Real&)>& f, const Real& a, const Real& b,
                            long target_digits, Prec prec) {
    Real tol = Real(10.0, prec);
    tol = pow_si(tol, -target_digits);
    int n = 24;
    QuadOut<T> prev = quad_gl_fixed(f, a, b, n, prec);
    for (int iter = 0; iter < 9; ++iter) {
        n *= 2;
        QuadOut<T> cur = quad_gl_fixed(f, a, b, n, prec);
        Real err = abs_val(cur.value - prev.value);
        if (err <= tol * (1 + abs_val(cur.value))) return {cur.value, err};
        prev = cur;
    }
    QuadOut<T> cur = quad_gl_fixed(f, a, b, 2 * n, prec);
    Real err = abs_val(cur.value - prev.value);
    if (err <= tol * (1 + abs_val(cur.value))) return {cur.value, err};
    throw precision_error("quadrature failed to converge (gauss-legendre), achieved error ~ " + err.str(3));
}

// Double-exponential (tanh-sinh) rule on a finite interval. Handles
// integrable endpoint singularities |x-e|^beta, beta > -1, and log
// singularities at either endpoint.
template <typename T>
QuadOut<T> quad_de_finite(const std::function<T(const Real&)>& f, const Real& a, const Real& b,
                          long target_digits, Prec prec) {
    Real tol = pow_si(Real(10.0, prec), -target_digits);
    Real c = (a + b) / 2, r = (b - a) / 2;
    Real half_pi = Real::pi(prec) / 2;
    // t-range so that the node-to-endpoint distance reaches the tolerance scale
    double tmax_d = 1.0;
    {
        double d = static_cast<double>(target_digits) + 10.0;
        double s = d * 2.302585 / 3.1415926;     // sinh(tmax)
        tmax_d = std::log(s + std::sqrt(s * s + 1.0));
    }
    Real tmax(tmax_d, prec);

    auto node_sum = [&](const Real& h, bool odd_only) {
        // sum of w(t)*f(x(t)) over the grid t = k*h (k odd if odd_only), |t| <= tmax
        T acc = zero_like(prec, T());
        long kmax = (tmax / h).to_long() + 1;
        for (long k = odd_only ? 1 : 0; k <= kmax; k += odd_only ? 2 : 1) {
            for (int sgn = 0; sgn < (k == 0 ? 1 : 2); ++sgn) {
                Real t = h * k;
                if (sgn) t = -t;
                Real u = half_pi * sinh(t);
                Real sech = 1 / cosh(u);
                Real w = half_pi * cosh(t) * sech * sech;
                Real x = c + r * tanh(u);
                if (x <= a || x >= b) continue; // underflowed onto an endpoint
                acc = acc + f(x) * w;
            }
        }
        return acc;
    };

    Real h(1.0, prec);
    T total = node_sum(h, false);
    T prev_val = total * (h * r);
    Real err = abs_val(prev_val) + 1;
    for (int level = 1; level <= 13; ++level) {
        h = h / 2;
        total = total + node_sum(h, true);
        T cur_val = total * (h * r);
        err = abs_val(cur_val - prev_val);
        if (level >= 3 && err <= tol * (1 + abs_val(cur_val))) return {cur_val, err};
        prev_val = cur_val;
    }
    throw precision_error("quadrature failed to converge (tanh-sinh), achieved error ~ " + err.str(3));
}

// sinh-sinh rule over the whole real line; integrand must decay at least
// like exp(-c|x|).
template <typename T>
QuadOut<T> quad_de_bi_infinite(const std::function<T(const Real&)>& f, long target_digits, Prec prec) {
    Real tol = pow_si(Real(10.0, prec), -target_digits);
    Real half_pi = Real::pi(prec) / 2;
    Real tmax(4.5, prec);

    auto node_sum = [&](const Real& h, bool odd_only) {
        T acc = zero_like(prec, T());
        long kmax = (tmax / h).to_long() + 1;
        for (long k = odd_only ? 1 : 0; k <= kmax; k += odd_only ? 2 : 1) {
            for (int sgn = 0; sgn < (k == 0 ? 1 : 2); ++sgn) {
                Real t = h * k;
                if (sgn) t = -t;
                Real u = half_pi * sinh(t);
                Real x = sinh(u);
                Real w = half_pi * cosh(t) * cosh(u);
                T fx = f(x);
                acc = acc + fx * w;
            }
        }
        return acc;
    };

    Real h(1.0, prec);
    T total = node_sum(h, false);
    T prev_val = total * h;
    Real err = abs_val(prev_val) + 1;
    for (int level = 1; level <= 13; ++level) {
        h = h / 2;
        total = total + node_sum(h, true);
        T cur_val = total * h;
        err = abs_val(cur_val - prev_val);
        if (level >= 3 && err <= tol * (1 + abs_val(cur_val))) return {cur_val, err};
        prev_val = cur_val;
    }
    throw precision_error("quadrature failed to converge (sinh-sinh), achieved error ~ " + err.str(3));
}

template <typename T>
QuadOut<T> quad_impl(const std::function<T(const Real&)>& f, const Real& a, const Real& b,
                     QuadScheme scheme, long target_digits, Prec prec) {
    if (!(a < b)) throw domain_error("quad: requires a < b");
    bool ainf = !a.is_finite(), binf = !b.is_finite();
    if (ainf && binf) return quad_de_bi_infinite<T>(f, target_digits, prec);
    if (ainf || binf) {
        // exp-sinh via the substitution x = e +/- exp(u), then sinh-sinh in u
        Real e = ainf ? b : a;
        int sgn = ainf ? -1 : 1;
        std::function<T(const Real&)> g = [&f, &e, sgn](const Real& u) {
            Real ex = exp(u);
            return f(e + sgn * ex) * ex;
        };
        return quad_de_bi_infinite<T>(g, target_digits, prec);
    }
    if (scheme == QuadScheme::GaussLegendre) return quad_gl_adaptive<T>(f, a, b, target_digits, prec);
    return quad_de_finite<T>(f, a, b, target_digits, prec);
}

} // namespace qdetail

struct QuadResult {
    Real value;
    Real err;
};
struct CQuadResult {
    Complex value;
    Real err;
};

inline QuadResult quad(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                       QuadScheme scheme, long target_digits) {
    Prec prec = bits_for_digits(target_digits + 10);
    if (a.prec() > prec) prec = a.prec();
    auto r = qdetail::quad_impl<Real>(f, a.to_prec(prec), b.to_prec(prec), scheme, target_digits, prec);
    return {r.value, r.err};
}

inline CQuadResult quad_c(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                          QuadScheme scheme, long target_digits) {
    Prec prec = bits_for_digits(target_digits + 10);
    if (a.prec() > prec) prec = a.prec();
    auto r = qdetail::quad_impl<Complex>(f, a.to_prec(prec), b.to_prec(prec), scheme, target_digits, prec);
    return {r.value, r.err};
}

// Trapezoid rule over one period [0, 2*pi), doubled until convergence.
// Spectrally accurate for smooth periodic integrands.
CQuadResult quad_periodic(const std::function<Complex(const Real&)>& f, long target_digits, Prec prec,
                          int n_start = 64, int n_max = 1 << 16);

} // namespace pvrm
