#pragma once

#include "pvrm/real.hpp"

namespace pvrm {

// Complex number over Real. log/sqrt/pow use the principal branch
// (arg in (-pi, pi]); modules that need other branch geometry assemble
// it explicitly from these primitives.
class Complex {
public:
    Complex() = default;
    explicit Complex(Prec prec) : re_(prec), im_(0L, prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re) : re_(std::move(re)) { im_ = Real(0L, re_.prec()); }
    Complex(long re, Prec prec) : re_(re, prec), im_(0L, prec) {}
    Complex(double re, double im, Prec prec) : re_(re, prec), im_(im, prec) {}

    static Complex i(Prec prec) { return Complex(Real(0L, prec), Real(1L, prec)); }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }

    Prec prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }

    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
    bool is_real_exact() const { return im_.is_zero(); }

    std::string str() const { return "(" + re_.str() + ", " + im_.str() + ")"; }
    std::string str(long digits) const { return "(" + re_.str(digits) + ", " + im_.str(digits) + ")"; }

private:
    Real re_, im_;
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re() + b.re(), a.im() + b.im()}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re() - b.re(), a.im() - b.im()}; }
inline Complex operator-(const Complex& a) { return {-a.re(), -a.im()}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
inline Complex operator*(const Real& a, const Complex& b) { return {a * b.re(), a * b.im()}; }
inline Complex operator*(const Complex& a, const Real& b) { return {a.re() * b, a.im() * b}; }
inline Complex operator/(const Complex& a, const Real& b) { return {a.re() / b, a.im() / b}; }
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re() * b.re() + b.im() * b.im();
    return {(a.re() * b.re() + a.im() * b.im()) / d, (a.im() * b.re() - a.re() * b.im()) / d};
}
inline Complex& operator+=(Complex& a, const Complex& b) { a = a + b; return a; }
inline Complex& operator-=(Complex& a, const Complex& b) { a = a - b; return a; }
inline Complex& operator*=(Complex& a, const Complex& b) { a = a * b; return a; }

inline Complex conj(const Complex& z) { return {z.re(), -z.im()}; }
inline Real abs(const Complex& z) { return hypot(z.re(), z.im()); }
inline Real norm2(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }
inline Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re());
    return {m * cos(z.im()), m * sin(z.im())};
}
// principal branch, cut on the negative real axis
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }
inline Complex sqrt(const Complex& z) {
    // half-angle form; principal branch
    Real r = abs(z);
    if (r.is_zero()) return Complex(Real(0L, z.prec()), Real(0L, z.prec()));
    Real t = sqrt((r + z.re()) / 2);
    if (t.is_zero()) {
        Real s = sqrt(r);
        Real im = z.im().sign() >= 0 ? s : -s;
        return {Real(0L, z.prec()), im};
    }
    return {t, z.im() / (2 * t)};
}
// principal z^a for real exponent a
inline Complex pow(const Complex& z, const Real& a) { return exp(a * log(z)); }
inline Complex pow(const Complex& z, const Complex& a) { return exp(a * log(z)); }
// exact integer power by squaring
inline Complex pow_si(Complex z, long e) {
    Prec p = z.prec();
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Complex r(1L, p);
    while (n) {
        if (n & 1UL) r = r * z;
        z = z * z;
        n >>= 1;
    }
    if (invert) r = Complex(1L, p) / r;
    return r;
}

inline Complex operator+(const Complex& a, long b) { return {a.re() + b, a.im()}; }
inline Complex operator-(const Complex& a, long b) { return {a.re() - b, a.im()}; }
inline Complex operator*(const Complex& a, long b) { return {a.re() * b, a.im() * b}; }
inline Complex operator/(const Complex& a, long b) { return {a.re() / b, a.im() / b}; }
inline Complex operator/(long a, const Complex& b) { return Complex(Real(a, b.prec())) / b; }
inline Complex operator-(long a, const Complex& b) { return {a - b.re(), -b.im()}; }

} // namespace pvrm
