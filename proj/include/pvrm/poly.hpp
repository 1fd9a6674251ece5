#pragma once

#include <vector>

#include "pvrm/complex.hpp"
#include "pvrm/errors.hpp"

namespace pvrm {

// Polynomial / truncated power series in z with Complex coefficients,
// index = power of z. order < 0 means exact polynomial (no truncation);
// order >= 0 means the coefficients are only meaningful through z^order,
// and multiplication truncates at the smaller order of the operands.
struct PolySeries {
    std::vector<Complex> c;
    long order = -1;

    PolySeries() = default;
    explicit PolySeries(Prec prec) { c.assign(1, Complex(0L, prec)); }

    static PolySeries constant(Complex v) {
        PolySeries p;
        p.c.assign(1, std::move(v));
        return p;
    }
    static PolySeries one(Prec prec) { return constant(Complex(1L, prec)); }
    // the monomial z
    static PolySeries z(Prec prec) {
        PolySeries p;
        p.c = {Complex(0L, prec), Complex(1L, prec)};
        return p;
    }

    long degree() const { return static_cast<long>(c.size()) - 1; }
    Prec prec() const { return c.empty() ? kDefaultPrec : c[0].prec(); }

    const Complex& coeff(long k) const {
        static const Complex zero(0L, kDefaultPrec);
        if (k < 0 || k >= static_cast<long>(c.size())) return zero;
        return c[static_cast<size_t>(k)];
    }

    Complex eval(const Complex& x) const {
        Complex acc(0L, x.prec());
        for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
    }

    PolySeries derivative() const {
        PolySeries d;
        d.order = order < 0 ? -1 : order - 1;
        if (c.size() <= 1) {
            d.c.assign(1, Complex(0L, prec()));
            return d;
        }
        d.c.reserve(c.size() - 1);
        for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * static_cast<long>(k));
        return d;
    }

    void truncate(long ord) {
        order = ord;
        if (static_cast<long>(c.size()) > ord + 1) c.resize(static_cast<size_t>(ord + 1));
    }
};

inline long series_order_min(const PolySeries& a, const PolySeries& b) {
    if (a.order < 0) return b.order;
    if (b.order < 0) return a.order;
    return a.order < b.order ? a.order : b.order;
}

inline PolySeries operator+(const PolySeries& a, const PolySeries& b) {
    PolySeries r;
    r.order = series_order_min(a, b);
    size_t n = a.c.size() > b.c.size() ? a.c.size() : b.c.size();
    r.c.reserve(n);
    Prec p = a.prec() > b.prec() ? a.prec() : b.prec();
    for (size_t k = 0; k < n; ++k) {
        Complex s(0L, p);
        if (k < a.c.size()) s += a.c[k];
        if (k < b.c.size()) s += b.c[k];
        r.c.push_back(std::move(s));
    }
    if (r.order >= 0) r.truncate(r.order);
    return r;
}

inline PolySeries operator-(const PolySeries& a, const PolySeries& b) {
    PolySeries nb = b;
    for (auto& x : nb.c) x = -x;
    return a + nb;
}

inline PolySeries operator*(const PolySeries& a, const PolySeries& b) {
    PolySeries r;
    r.order = series_order_min(a, b);
    if (a.c.empty() || b.c.empty()) return r;
    size_t n = a.c.size() + b.c.size() - 1;
    if (r.order >= 0 && n > static_cast<size_t>(r.order) + 1) n = static_cast<size_t>(r.order) + 1;
    Prec p = a.prec() > b.prec() ? a.prec() : b.prec();
    r.c.assign(n, Complex(0L, p));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (i >= n) break;
        for (size_t j = 0; j < b.c.size() && i + j < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

inline PolySeries operator*(const Complex& s, const PolySeries& a) {
    PolySeries r = a;
    for (auto& x : r.c) x = s * x;
    return r;
}

// quotient of p by z^k; the discarded low coefficients are returned through
// `remainder_scale` as their largest modulus (caller asserts it is noise)
inline PolySeries shift_down(const PolySeries& p, long k, Real* remainder_scale = nullptr) {
    PolySeries r;
    r.order = p.order < 0 ? -1 : p.order - k;
    Real rem(0L, p.prec());
    for (long i = 0; i < k && i < static_cast<long>(p.c.size()); ++i)
        rem = max(rem, abs(p.c[static_cast<size_t>(i)]));
    if (remainder_scale) *remainder_scale = rem;
    for (size_t i = static_cast<size_t>(k); i < p.c.size(); ++i) r.c.push_back(p.c[i]);
    if (r.c.empty()) r.c.assign(1, Complex(0L, p.prec()));
    return r;
}

// synthetic division by (z - root); remainder = p(root)
inline PolySeries divide_linear(const PolySeries& p, const Complex& root, Complex* remainder) {
    PolySeries q;
    q.order = -1;
    if (p.c.size() <= 1) {
        if (remainder) *remainder = p.c.empty() ? Complex(0L, p.prec()) : p.c[0];
        q.c.assign(1, Complex(0L, p.prec()));
        return q;
    }
    q.c.assign(p.c.size() - 1, Complex(0L, p.prec()));
    Complex carry = p.c.back();
    for (size_t k = p.c.size() - 1; k-- > 0;) {
        q.c[k] = carry;
        carry = p.c[k] + carry * root;
    }
    if (remainder) *remainder = carry;
    return q;
}

// coefficients of p(a*z + b)
inline PolySeries compose_affine(const PolySeries& p, const Complex& a, const Complex& b) {
    Prec pr = p.prec();
    PolySeries r = PolySeries::constant(Complex(0L, pr));
    PolySeries lin;
    lin.c = {b, a};
    for (size_t k = p.c.size(); k-- > 0;) {
        r = r * lin;
        if (r.c.empty()) r.c.assign(1, Complex(0L, pr));
        r.c[0] += p.c[k];
    }
    return r;
}

// Taylor coefficients of exp(c*z) through z^order
inline PolySeries exp_series(const Complex& c, long order) {
    if (order < 0) throw domain_error("exp_series: order must be >= 0");
    PolySeries p;
    p.order = order;
    p.c.reserve(static_cast<size_t>(order) + 1);
    Complex term(1L, c.prec());
    p.c.push_back(term);
    for (long k = 1; k <= order; ++k) {
        term = term * c / k;
        p.c.push_back(term);
    }
    return p;
}

// Taylor coefficients of (1-z)^(-beta) through z^order (binomial series)
inline PolySeries binom_series(const Real& beta, long order) {
    PolySeries p;
    p.order = order;
    Complex term(1L, beta.prec());
    p.c.push_back(term);
    for (long k = 1; k <= order; ++k) {
        term = term * Complex((beta + (k - 1)) / k);
        p.c.push_back(term);
    }
    return p;
}

inline Real max_coeff_abs(const PolySeries& p) {
    Real m(0L, p.prec());
    for (const auto& x : p.c) m = max(m, abs(x));
    return m;
}

} // namespace pvrm
