#pragma once

#include "tsol/errors.hpp"

#include <cmath>

// Second-order truncated Taylor arithmetic. Jet1 tracks (f, f', f'') of a
// scalar function of one variable, Jet2 tracks (f, fs, ft, fss, fst, ftt) of a
// function of two variables. Both propagate derivatives through the usual
// elementary functions by the chain rule; nothing here is symbolic.

namespace tsol {

struct Jet1 {
    double f = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    static Jet1 variable(double s) { return {s, 1.0, 0.0}; }
    static Jet1 constant(double c) { return {c, 0.0, 0.0}; }
};

inline Jet1 operator+(const Jet1& a, const Jet1& b) { return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet1 operator-(const Jet1& a, const Jet1& b) { return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet1 operator-(const Jet1& a) { return {-a.f, -a.d1, -a.d2}; }
inline Jet1 operator+(const Jet1& a, double c) { return {a.f + c, a.d1, a.d2}; }
inline Jet1 operator+(double c, const Jet1& a) { return a + c; }
inline Jet1 operator-(const Jet1& a, double c) { return {a.f - c, a.d1, a.d2}; }
inline Jet1 operator-(double c, const Jet1& a) { return {c - a.f, -a.d1, -a.d2}; }

inline Jet1 operator*(const Jet1& a, const Jet1& b) {
    return {a.f * b.f, a.d1 * b.f + a.f * b.d1, a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2};
}
inline Jet1 operator*(const Jet1& a, double c) { return {a.f * c, a.d1 * c, a.d2 * c}; }
inline Jet1 operator*(double c, const Jet1& a) { return a * c; }

inline Jet1 operator/(const Jet1& a, const Jet1& b) {
    if (b.f == 0.0) throw Error(ErrorKind::EvalDomainError, "division by zero");
    double q = a.f / b.f;
    double q1 = (a.d1 - q * b.d1) / b.f;
    double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.f;
    return {q, q1, q2};
}
inline Jet1 operator/(const Jet1& a, double c) { return a * (1.0 / c); }
inline Jet1 operator/(double c, const Jet1& a) { return Jet1::constant(c) / a; }

namespace jet_detail {
// phi(f) for unary phi with derivatives (p1, p2) at f.
inline Jet1 chain(const Jet1& a, double val, double p1, double p2) {
    return {val, p1 * a.d1, p2 * a.d1 * a.d1 + p1 * a.d2};
}
} // namespace jet_detail

inline Jet1 sin(const Jet1& a) { return jet_detail::chain(a, std::sin(a.f), std::cos(a.f), -std::sin(a.f)); }
inline Jet1 cos(const Jet1& a) { return jet_detail::chain(a, std::cos(a.f), -std::sin(a.f), -std::cos(a.f)); }
inline Jet1 tan(const Jet1& a) {
    double t = std::tan(a.f);
    double sec2 = 1.0 + t * t;
    return jet_detail::chain(a, t, sec2, 2.0 * sec2 * t);
}
inline Jet1 sinh(const Jet1& a) { return jet_detail::chain(a, std::sinh(a.f), std::cosh(a.f), std::sinh(a.f)); }
inline Jet1 cosh(const Jet1& a) { return jet_detail::chain(a, std::cosh(a.f), std::sinh(a.f), std::cosh(a.f)); }
inline Jet1 tanh(const Jet1& a) {
    double t = std::tanh(a.f);
    double sech2 = 1.0 - t * t;
    return jet_detail::chain(a, t, sech2, -2.0 * sech2 * t);
}
inline Jet1 exp(const Jet1& a) {
    double e = std::exp(a.f);
    return jet_detail::chain(a, e, e, e);
}
inline Jet1 log(const Jet1& a) {
    if (a.f <= 0.0) throw Error(ErrorKind::EvalDomainError, "log of a non-positive value");
    return jet_detail::chain(a, std::log(a.f), 1.0 / a.f, -1.0 / (a.f * a.f));
}
inline Jet1 atan(const Jet1& a) {
    double d = 1.0 + a.f * a.f;
    return jet_detail::chain(a, std::atan(a.f), 1.0 / d, -2.0 * a.f / (d * d));
}
inline Jet1 atanh(const Jet1& a) {
    if (std::abs(a.f) >= 1.0) throw Error(ErrorKind::EvalDomainError, "atanh outside (-1,1)");
    double d = 1.0 - a.f * a.f;
    return jet_detail::chain(a, std::atanh(a.f), 1.0 / d, 2.0 * a.f / (d * d));
}
inline Jet1 sqrt(const Jet1& a) {
    if (a.f <= 0.0) throw Error(ErrorKind::EvalDomainError, "sqrt of a non-positive value");
    double r = std::sqrt(a.f);
    return jet_detail::chain(a, r, 0.5 / r, -0.25 / (a.f * r));
}

/// a^n for integer n (repeated multiplication, valid for any base).
Jet1 powi(const Jet1& a, long long n);

/// a^b via exp(b log a); requires a > 0 unless b is an integer constant.
Jet1 pow(const Jet1& a, const Jet1& b);

// Two-variable second-order jet.
struct Jet2 {
    double f = 0.0;
    double fs = 0.0;
    double ft = 0.0;
    double fss = 0.0;
    double fst = 0.0;
    double ftt = 0.0;

    static Jet2 var_s(double s) { return {s, 1.0, 0.0, 0.0, 0.0, 0.0}; }
    static Jet2 var_t(double t) { return {t, 0.0, 1.0, 0.0, 0.0, 0.0}; }
    static Jet2 constant(double c) { return {c, 0.0, 0.0, 0.0, 0.0, 0.0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.f + b.f, a.fs + b.fs, a.ft + b.ft, a.fss + b.fss, a.fst + b.fst, a.ftt + b.ftt};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.f - b.f, a.fs - b.fs, a.ft - b.ft, a.fss - b.fss, a.fst - b.fst, a.ftt - b.ftt};
}
inline Jet2 operator-(const Jet2& a) { return {-a.f, -a.fs, -a.ft, -a.fss, -a.fst, -a.ftt}; }
inline Jet2 operator+(const Jet2& a, double c) { Jet2 r = a; r.f += c; return r; }
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
inline Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.f * b.f,
            a.fs * b.f + a.f * b.fs,
            a.ft * b.f + a.f * b.ft,
            a.fss * b.f + 2.0 * a.fs * b.fs + a.f * b.fss,
            a.fst * b.f + a.fs * b.ft + a.ft * b.fs + a.f * b.fst,
            a.ftt * b.f + 2.0 * a.ft * b.ft + a.f * b.ftt};
}
inline Jet2 operator*(const Jet2& a, double c) {
    return {a.f * c, a.fs * c, a.ft * c, a.fss * c, a.fst * c, a.ftt * c};
}
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }

namespace jet_detail {
inline Jet2 chain(const Jet2& a, double val, double p1, double p2) {
    return {val,
            p1 * a.fs,
            p1 * a.ft,
            p2 * a.fs * a.fs + p1 * a.fss,
            p2 * a.fs * a.ft + p1 * a.fst,
            p2 * a.ft * a.ft + p1 * a.ftt};
}
} // namespace jet_detail

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.f == 0.0) throw Error(ErrorKind::EvalDomainError, "division by zero");
    double inv = 1.0 / b.f;
    return a * jet_detail::chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
inline Jet2 operator/(double c, const Jet2& a) { return Jet2::constant(c) / a; }

inline Jet2 sin(const Jet2& a) { return jet_detail::chain(a, std::sin(a.f), std::cos(a.f), -std::sin(a.f)); }
inline Jet2 cos(const Jet2& a) { return jet_detail::chain(a, std::cos(a.f), -std::sin(a.f), -std::cos(a.f)); }
inline Jet2 sinh(const Jet2& a) { return jet_detail::chain(a, std::sinh(a.f), std::cosh(a.f), std::sinh(a.f)); }
inline Jet2 cosh(const Jet2& a) { return jet_detail::chain(a, std::cosh(a.f), std::sinh(a.f), std::cosh(a.f)); }
inline Jet2 exp(const Jet2& a) {
    double e = std::exp(a.f);
    return jet_detail::chain(a, e, e, e);
}
inline Jet2 log(const Jet2& a) {
    if (a.f <= 0.0) throw Error(ErrorKind::EvalDomainError, "log of a non-positive value");
    return jet_detail::chain(a, std::log(a.f), 1.0 / a.f, -1.0 / (a.f * a.f));
}
inline Jet2 sqrt(const Jet2& a) {
    if (a.f <= 0.0) throw Error(ErrorKind::EvalDomainError, "sqrt of a non-positive value");
    double r = std::sqrt(a.f);
    return jet_detail::chain(a, r, 0.5 / r, -0.25 / (a.f * r));
}
inline Jet2 atan(const Jet2& a) {
    double d = 1.0 + a.f * a.f;
    return jet_detail::chain(a, std::atan(a.f), 1.0 / d, -2.0 * a.f / (d * d));
}

} // namespace tsol
