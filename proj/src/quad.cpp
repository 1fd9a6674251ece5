#include "pvrm/quad.hpp"

#include <map>
#include <mutex>

namespace pvrm {

namespace {

GLRule compute_gl(int n, Prec prec) {
    // Newton on P_n with Chebyshev initial guesses; standard three-term
    // recurrence for P_n and P_n'.
    GLRule rule;
    rule.x.reserve(static_cast<size_t>(n));
    rule.w.reserve(static_cast<size_t>(n));
    Real pi = Real::pi(prec);
    Real tol = Real::pow2(-static_cast<long>(prec) + 8, prec);
    for (int i = 0; i < n; ++i) {
        Real x = cos(pi * (Real(4 * i + 3, prec) / (4 * n + 2)));
        Real dp(0L, prec);
        for (int iter = 0; iter < 200; ++iter) {
            Real p0(1L, prec), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x)
            dp = n * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x = x - dx;
            if (abs(dx) < tol) {
                // one final recomputation of dp at the converged node
                Real q0(1L, prec), q1 = x;
                for (int k = 2; k <= n; ++k) {
                    Real q2 = ((2 * k - 1) * x * q1 - (k - 1) * q0) / k;
                    q0 = q1;
                    q1 = q2;
                }
                dp = n * (x * q1 - q0) / (x * x - 1);
                break;
            }
        }
        rule.x.push_back(x);
        rule.w.push_back(2 / ((1 - x * x) * dp * dp));
    }
    return rule;
}

std::mutex g_gl_mutex;
std::map<std::pair<int, Prec>, GLRule> g_gl_cache;

} // namespace

const GLRule& gauss_legendre(int n, Prec prec) {
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto key = std::make_pair(n, prec);
    auto it = g_gl_cache.find(key);
    if (it != g_gl_cache.end()) return it->second;
    auto [pos, ok] = g_gl_cache.emplace(key, compute_gl(n, prec));
    (void)ok;
    return pos->second;
}

CQuadResult quad_periodic(const std::function<Complex(const Real&)>& f, long target_digits, Prec prec,
                          int n_start, int n_max) {
    Real tol = pow_si(Real(10.0, prec), -target_digits);
    Real two_pi = 2 * Real::pi(prec);
    int n = n_start;
    auto eval_sum = [&](int m, int stride, int offset) {
        // sum of f(2*pi*k/m) over k = offset, offset+stride, ...
        Complex acc(0L, prec);
        for (int k = offset; k < m; k += stride) acc += f(two_pi * k / m);
        return acc;
    };
    Complex total = eval_sum(n, 1, 0);
    Complex prev = total * (two_pi / n);
    Real err = abs(prev) + 1;
    while (n < n_max) {
        n *= 2;
        total += eval_sum(n, 2, 1);
        Complex cur = total * (two_pi / n);
        err = abs(cur - prev);
        if (err <= tol * (1 + abs(cur))) return {cur, err};
        prev = cur;
    }
    throw precision_error("quadrature failed to converge (periodic trapezoid), achieved error ~ " + err.str(3));
}

} // namespace pvrm
