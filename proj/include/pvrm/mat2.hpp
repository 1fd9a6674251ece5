#pragma once

#include <array>

#include "pvrm/poly.hpp"

namespace pvrm {

// 2x2 complex matrix, row-major
struct Mat2 {
    Complex a, b, c, d;

    Mat2() = default;
    explicit Mat2(Prec p) : a(0L, p), b(0L, p), c(0L, p), d(0L, p) {}
    Mat2(Complex a_, Complex b_, Complex c_, Complex d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity(Prec p) { return {Complex(1L, p), Complex(0L, p), Complex(0L, p), Complex(1L, p)}; }

    const Complex& at(int i, int j) const {
        return i == 0 ? (j == 0 ? a : b) : (j == 0 ? c : d);
    }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
inline Mat2 operator*(const Complex& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
inline Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
inline Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

inline Complex det(const Mat2& m) { return m.a * m.d - m.b * m.c; }
inline Mat2 inverse(const Mat2& m) {
    Complex dt = det(m);
    return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}
inline Real max_abs(const Mat2& m) {
    return max(max(abs(m.a), abs(m.b)), max(abs(m.c), abs(m.d)));
}
// conjugation by sigma_3: flips the sign of the off-diagonal entries
inline Mat2 sigma3_conj(const Mat2& m) { return {m.a, -m.b, -m.c, m.d}; }
// sigma_1 m sigma_1: swaps both indices
inline Mat2 sigma1_conj(const Mat2& m) { return {m.d, m.c, m.b, m.a}; }

struct Vec2 {
    Complex x, y;
};
inline Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

// 2x2 matrix with polynomial entries
struct PolyMat2 {
    PolySeries a, b, c, d;

    static PolyMat2 identity(Prec p) {
        PolyMat2 m;
        m.a = PolySeries::one(p);
        m.d = PolySeries::one(p);
        m.b = PolySeries::constant(Complex(0L, p));
        m.c = PolySeries::constant(Complex(0L, p));
        return m;
    }
    PolySeries& at(int i, int j) { return i == 0 ? (j == 0 ? a : b) : (j == 0 ? c : d); }
    const PolySeries& at(int i, int j) const { return i == 0 ? (j == 0 ? a : b) : (j == 0 ? c : d); }

    Mat2 eval(const Complex& z) const { return {a.eval(z), b.eval(z), c.eval(z), d.eval(z)}; }

    long degree() const {
        long m = a.degree();
        if (b.degree() > m) m = b.degree();
        if (c.degree() > m) m = c.degree();
        if (d.degree() > m) m = d.degree();
        return m;
    }
    // coefficient matrix of z^k
    Mat2 coeff(long k) const { return {a.coeff(k), b.coeff(k), c.coeff(k), d.coeff(k)}; }
};

inline PolyMat2 operator*(const PolyMat2& x, const PolyMat2& y) {
    PolyMat2 r;
    r.a = x.a * y.a + x.b * y.c;
    r.b = x.a * y.b + x.b * y.d;
    r.c = x.c * y.a + x.d * y.c;
    r.d = x.c * y.b + x.d * y.d;
    return r;
}

inline PolySeries det(const PolyMat2& m) { return m.a * m.d - m.b * m.c; }

} // namespace pvrm
