#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "pvrm/errors.hpp"

namespace pvrm {

using Prec = mpfr_prec_t;

inline constexpr Prec kDefaultPrec = 256;

// Working precision that leaves `digits` decimal digits after roundoff.
inline Prec bits_for_digits(long digits) {
    return static_cast<Prec>(digits * 3.3219280948873626 + 24);
}
inline long digits_for_bits(Prec bits) {
    return static_cast<long>(bits * 0.30102999566398119) - 2;
}

// Arbitrary-precision real number. Every value carries its own precision;
// binary operations produce results at the larger operand precision, so
// precision flows from the seed values of a computation. There is no
// process-global precision state.
class Real {
public:
    Real() { mpfr_init2(v_, kDefaultPrec); mpfr_set_nan(v_); }
    explicit Real(Prec prec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }
    Real(long x, Prec prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x, Prec prec) : Real(static_cast<long>(x), prec) {}
    // double payloads convert exactly; use only for small literal constants
    Real(double x, Prec prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    static Real from_str(std::string_view s, Prec prec) {
        Real r(prec);
        std::string tmp(s);
        if (mpfr_set_str(r.v_, tmp.c_str(), 10, MPFR_RNDN) != 0)
            throw domain_error("unparseable number: " + tmp);
        return r;
    }
    static Real pi(Prec prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real inf(int sign, Prec prec) { Real r(prec); mpfr_set_inf(r.v_, sign); return r; }
    static Real euler_gamma(Prec prec) { Real r(prec); mpfr_const_euler(r.v_, MPFR_RNDN); return r; }
    // 2^e
    static Real pow2(long e, Prec prec) {
        Real r(1L, prec);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    Prec prec() const { return mpfr_get_prec(v_); }
    Real to_prec(Prec p) const { Real r(p); mpfr_set(r.v_, v_, MPFR_RNDN); return r; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Full-precision decimal string (round-trips at the value's precision).
    std::string str() const { return str(digits_for_bits(prec()) + 3); }
    std::string str(long digits) const {
        if (digits < 2) digits = 2;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

private:
    mpfr_t v_;
};

namespace detail {
inline Prec pmax(const Real& a, const Real& b) {
    Prec pa = a.prec(), pb = b.prec();
    return pa > pb ? pa : pb;
}
} // namespace detail

#define PVRM_REAL_BINOP(op, fn)                                             \
    inline Real operator op(const Real& a, const Real& b) {                 \
        Real r(detail::pmax(a, b));                                         \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                           \
        return r;                                                           \
    }                                                                       \
    inline Real operator op(const Real& a, long b) {                        \
        Real r(a.prec());                                                   \
        fn##_si(r.raw(), a.raw(), b, MPFR_RNDN);                            \
        return r;                                                           \
    }

PVRM_REAL_BINOP(+, mpfr_add)
PVRM_REAL_BINOP(-, mpfr_sub)
PVRM_REAL_BINOP(*, mpfr_mul)
PVRM_REAL_BINOP(/, mpfr_div)
#undef PVRM_REAL_BINOP

inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real& operator+=(Real& a, const Real& b) { a = a + b; return a; }
inline Real& operator-=(Real& a, const Real& b) { a = a - b; return a; }
inline Real& operator*=(Real& a, const Real& b) { a = a * b; return a; }
inline Real& operator/=(Real& a, const Real& b) { a = a / b; return a; }
inline Real& operator+=(Real& a, long b) { a = a + b; return a; }
inline Real& operator-=(Real& a, long b) { a = a - b; return a; }
inline Real& operator*=(Real& a, long b) { a = a * b; return a; }
inline Real& operator/=(Real& a, long b) { a = a / b; return a; }

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

#define PVRM_REAL_FN1(name, fn)                                             \
    inline Real name(const Real& a) {                                       \
        Real r(a.prec());                                                   \
        fn(r.raw(), a.raw(), MPFR_RNDN);                                    \
        return r;                                                           \
    }

PVRM_REAL_FN1(abs, mpfr_abs)
PVRM_REAL_FN1(sqrt, mpfr_sqrt)
PVRM_REAL_FN1(exp, mpfr_exp)
PVRM_REAL_FN1(expm1, mpfr_expm1)
PVRM_REAL_FN1(log, mpfr_log)
PVRM_REAL_FN1(log1p, mpfr_log1p)
PVRM_REAL_FN1(sin, mpfr_sin)
PVRM_REAL_FN1(cos, mpfr_cos)
PVRM_REAL_FN1(tan, mpfr_tan)
PVRM_REAL_FN1(sinh, mpfr_sinh)
PVRM_REAL_FN1(cosh, mpfr_cosh)
PVRM_REAL_FN1(tanh, mpfr_tanh)
PVRM_REAL_FN1(atan, mpfr_atan)
PVRM_REAL_FN1(asinh, mpfr_asinh)
PVRM_REAL_FN1(gamma_fn, mpfr_gamma)
PVRM_REAL_FN1(lngamma, mpfr_lngamma)
#undef PVRM_REAL_FN1

inline Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.raw(), a.raw());
    return r;
}
inline Real round_nearest(const Real& a) {
    Real r(a.prec());
    mpfr_round(r.raw(), a.raw());
    return r;
}

inline Real atan2(const Real& y, const Real& x) {
    Real r(detail::pmax(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(detail::pmax(y, x));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, const Real& b) {
    Real r(detail::pmax(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline Real mul_2si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline Real zeta_ui(unsigned long n, Prec prec) {
    Real r(prec);
    mpfr_zeta_ui(r.raw(), n, MPFR_RNDN);
    return r;
}
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

inline bool is_integer(const Real& a) { return mpfr_integer_p(a.raw()) != 0; }

} // namespace pvrm
