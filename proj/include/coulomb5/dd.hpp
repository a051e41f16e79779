#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two doubles,
// giving ~106 bits of significand. Only the operations needed by the
// confluent hypergeometric series branch are provided. Algorithms are
// the standard error-free transformations (Dekker/Knuth two_sum,
// fma-based two_prod) as used in the QD library.

#include <cmath>

namespace coulomb5::dd {

struct Real {
    double hi = 0.0;
    double lo = 0.0;

    Real() = default;
    Real(double h) : hi(h), lo(0.0) {}
    Real(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

// |a| >= |b| not required.
inline Real two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// Requires |a| >= |b| or a == 0.
inline Real quick_two_sum(double a, double b) {
    double s = a + b;
    double err = b - (s - a);
    return {s, err};
}

inline Real two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline Real add(const Real& a, const Real& b) {
    Real s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline Real add(const Real& a, double b) {
    Real s = two_sum(a.hi, b);
    double lo = s.lo + a.lo;
    return quick_two_sum(s.hi, lo);
}

inline Real sub(const Real& a, const Real& b) {
    return add(a, Real{-b.hi, -b.lo});
}

inline Real mul(const Real& a, const Real& b) {
    Real p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline Real mul(const Real& a, double b) {
    Real p = two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return quick_two_sum(p.hi, lo);
}

inline Real div(const Real& a, double b) {
    double q1 = a.hi / b;
    Real p = two_prod(q1, b);
    Real r = two_sum(a.hi, -p.hi);
    double q2 = (r.hi + (r.lo + a.lo - p.lo)) / b;
    return quick_two_sum(q1, q2);
}

inline Real div(const Real& a, const Real& b) {
    double q1 = a.hi / b.hi;
    Real r = sub(a, mul(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    double q3 = r.hi / b.hi;
    Real q = quick_two_sum(q1, q2);
    return add(q, q3);
}

// Complex double-double; componentwise representation is enough here
// because the series branch only needs +, *, and scaling.
struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(double r, double i = 0.0) : re(r), im(i) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
};

inline Complex add(const Complex& a, const Complex& b) {
    return {add(a.re, b.re), add(a.im, b.im)};
}

inline Complex mul(const Complex& a, const Complex& b) {
    Real r = sub(mul(a.re, b.re), mul(a.im, b.im));
    Real i = add(mul(a.re, b.im), mul(a.im, b.re));
    return {r, i};
}

inline Complex div(const Complex& a, double b) {
    return {div(a.re, b), div(a.im, b)};
}

inline Complex div(const Complex& a, const Real& b) {
    return {div(a.re, b), div(a.im, b)};
}

inline double abs_estimate(const Complex& a) {
    return std::hypot(a.re.hi, a.im.hi);
}

}  // namespace coulomb5::dd
