#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace toric {

// Third-order truncated Taylor data of a scalar function of (x, y) at a
// point: the value plus every partial derivative through order three.
// Mixed partials are stored once; d21 means ∂x∂x∂y and so on.
//
// Order three is the one order that serves the whole toolkit: curvature
// consumes two derivatives of metric coefficients, and the conformal-family
// ODE references f⁽³⁾.
struct Jet2 {
    double value = 0.0;
    double d10 = 0.0, d01 = 0.0;               // ∂x, ∂y
    double d20 = 0.0, d11 = 0.0, d02 = 0.0;    // ∂xx, ∂xy, ∂yy
    double d30 = 0.0, d21 = 0.0, d12 = 0.0, d03 = 0.0;

    static Jet2 constant(double c) {
        Jet2 j;
        j.value = c;
        return j;
    }
    // Seed for the coordinate function x at base value x0.
    static Jet2 variable_x(double x0) {
        Jet2 j;
        j.value = x0;
        j.d10 = 1.0;
        return j;
    }
    static Jet2 variable_y(double y0) {
        Jet2 j;
        j.value = y0;
        j.d01 = 1.0;
        return j;
    }
};

// Univariate third-order jet, used for profiles A(t), B(t), f(z).
struct Jet1 {
    double value = 0.0;
    double d1 = 0.0, d2 = 0.0, d3 = 0.0;

    static Jet1 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
    static Jet1 variable(double t0) { return {t0, 1.0, 0.0, 0.0}; }
};

enum class BinaryOp { add, sub, mul, div };

// Tags for the supported analytic functions of one variable.
enum class Analytic { sin, cos, tan, sinh, cosh, tanh, exp, log, sqrt, abs };

inline const char* analytic_name(Analytic f) {
    switch (f) {
        case Analytic::sin: return "sin";
        case Analytic::cos: return "cos";
        case Analytic::tan: return "tan";
        case Analytic::sinh: return "sinh";
        case Analytic::cosh: return "cosh";
        case Analytic::tanh: return "tanh";
        case Analytic::exp: return "exp";
        case Analytic::log: return "log";
        case Analytic::sqrt: return "sqrt";
        case Analytic::abs: return "abs";
    }
    return "?";
}

namespace detail {

// Value and first three derivatives of a univariate function at one point.
struct Derivs3 {
    double f0, f1, f2, f3;
};

[[noreturn]] inline void domain_fail(const char* fn, double v) {
    throw std::domain_error(std::string(fn) + ": argument " +
                            std::to_string(v) + " outside domain");
}

inline Derivs3 derivs_at(Analytic f, double u) {
    switch (f) {
        case Analytic::sin: {
            double s = std::sin(u), c = std::cos(u);
            return {s, c, -s, -c};
        }
        case Analytic::cos: {
            double s = std::sin(u), c = std::cos(u);
            return {c, -s, -c, s};
        }
        case Analytic::tan: {
            double c = std::cos(u);
            if (c == 0.0) domain_fail("tan", u);
            double t = std::tan(u), s = 1.0 + t * t;  // sec²
            return {t, s, 2.0 * t * s, 2.0 * s * s + 4.0 * t * t * s};
        }
        case Analytic::sinh: {
            double s = std::sinh(u), c = std::cosh(u);
            return {s, c, s, c};
        }
        case Analytic::cosh: {
            double s = std::sinh(u), c = std::cosh(u);
            return {c, s, c, s};
        }
        case Analytic::tanh: {
            double t = std::tanh(u), s = 1.0 - t * t;  // sech²
            return {t, s, -2.0 * t * s, -2.0 * s * s + 4.0 * t * t * s};
        }
        case Analytic::exp: {
            double e = std::exp(u);
            return {e, e, e, e};
        }
        case Analytic::log: {
            if (u <= 0.0) domain_fail("log", u);
            double r = 1.0 / u;
            return {std::log(u), r, -r * r, 2.0 * r * r * r};
        }
        case Analytic::sqrt: {
            if (u <= 0.0) domain_fail("sqrt", u);
            double r = std::sqrt(u);
            return {r, 0.5 / r, -0.25 / (r * u), 0.375 / (r * u * u)};
        }
        case Analytic::abs: {
            if (u == 0.0) domain_fail("abs", u);
            double s = u > 0.0 ? 1.0 : -1.0;
            return {s * u, s, 0.0, 0.0};
        }
    }
    domain_fail("analytic", u);
}

// Faà di Bruno through order three for φ∘u with u a two-variable jet.
inline Jet2 chain(const Derivs3& p, const Jet2& u) {
    Jet2 r;
    const double ux = u.d10, uy = u.d01;
    r.value = p.f0;
    r.d10 = p.f1 * ux;
    r.d01 = p.f1 * uy;
    r.d20 = p.f1 * u.d20 + p.f2 * ux * ux;
    r.d11 = p.f1 * u.d11 + p.f2 * ux * uy;
    r.d02 = p.f1 * u.d02 + p.f2 * uy * uy;
    r.d30 = p.f1 * u.d30 + 3.0 * p.f2 * ux * u.d20 + p.f3 * ux * ux * ux;
    r.d21 = p.f1 * u.d21 + p.f2 * (2.0 * ux * u.d11 + uy * u.d20) +
            p.f3 * ux * ux * uy;
    r.d12 = p.f1 * u.d12 + p.f2 * (2.0 * uy * u.d11 + ux * u.d02) +
            p.f3 * ux * uy * uy;
    r.d03 = p.f1 * u.d03 + 3.0 * p.f2 * uy * u.d02 + p.f3 * uy * uy * uy;
    return r;
}

inline Jet1 chain(const Derivs3& p, const Jet1& u) {
    Jet1 r;
    r.value = p.f0;
    r.d1 = p.f1 * u.d1;
    r.d2 = p.f1 * u.d2 + p.f2 * u.d1 * u.d1;
    r.d3 = p.f1 * u.d3 + 3.0 * p.f2 * u.d1 * u.d2 + p.f3 * u.d1 * u.d1 * u.d1;
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Jet2 arithmetic: exact Leibniz/quotient calculus through order three.

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.value = a.value + b.value;
    r.d10 = a.d10 + b.d10;
    r.d01 = a.d01 + b.d01;
    r.d20 = a.d20 + b.d20;
    r.d11 = a.d11 + b.d11;
    r.d02 = a.d02 + b.d02;
    r.d30 = a.d30 + b.d30;
    r.d21 = a.d21 + b.d21;
    r.d12 = a.d12 + b.d12;
    r.d03 = a.d03 + b.d03;
    return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.value = a.value - b.value;
    r.d10 = a.d10 - b.d10;
    r.d01 = a.d01 - b.d01;
    r.d20 = a.d20 - b.d20;
    r.d11 = a.d11 - b.d11;
    r.d02 = a.d02 - b.d02;
    r.d30 = a.d30 - b.d30;
    r.d21 = a.d21 - b.d21;
    r.d12 = a.d12 - b.d12;
    r.d03 = a.d03 - b.d03;
    return r;
}

inline Jet2 operator-(const Jet2& a) { return Jet2{} - a; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.value = a.value * b.value;
    r.d10 = a.d10 * b.value + a.value * b.d10;
    r.d01 = a.d01 * b.value + a.value * b.d01;
    r.d20 = a.d20 * b.value + 2.0 * a.d10 * b.d10 + a.value * b.d20;
    r.d11 = a.d11 * b.value + a.d10 * b.d01 + a.d01 * b.d10 + a.value * b.d11;
    r.d02 = a.d02 * b.value + 2.0 * a.d01 * b.d01 + a.value * b.d02;
    r.d30 = a.d30 * b.value + 3.0 * a.d20 * b.d10 + 3.0 * a.d10 * b.d20 +
            a.value * b.d30;
    r.d21 = a.d21 * b.value + a.d20 * b.d01 + 2.0 * a.d11 * b.d10 +
            2.0 * a.d10 * b.d11 + a.d01 * b.d20 + a.value * b.d21;
    r.d12 = a.d12 * b.value + a.d02 * b.d10 + 2.0 * a.d11 * b.d01 +
            2.0 * a.d01 * b.d11 + a.d10 * b.d02 + a.value * b.d12;
    r.d03 = a.d03 * b.value + 3.0 * a.d02 * b.d01 + 3.0 * a.d01 * b.d02 +
            a.value * b.d03;
    return r;
}

// 1/u as a composition: derivatives of the reciprocal are clean closed forms.
inline Jet2 recip(const Jet2& u) {
    if (u.value == 0.0) {
        throw std::domain_error("jet division by zero value");
    }
    double r = 1.0 / u.value;
    return detail::chain({r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r}, u);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }

inline Jet2 operator+(const Jet2& a, double c) { return a + Jet2::constant(c); }
inline Jet2 operator+(double c, const Jet2& a) { return Jet2::constant(c) + a; }
inline Jet2 operator-(const Jet2& a, double c) { return a - Jet2::constant(c); }
inline Jet2 operator-(double c, const Jet2& a) { return Jet2::constant(c) - a; }
inline Jet2 operator*(const Jet2& a, double c) { return a * Jet2::constant(c); }
inline Jet2 operator*(double c, const Jet2& a) { return Jet2::constant(c) * a; }
inline Jet2 operator/(const Jet2& a, double c) { return a / Jet2::constant(c); }
inline Jet2 operator/(double c, const Jet2& a) { return Jet2::constant(c) / a; }

inline Jet2 jet_binary(BinaryOp op, const Jet2& a, const Jet2& b) {
    switch (op) {
        case BinaryOp::add: return a + b;
        case BinaryOp::sub: return a - b;
        case BinaryOp::mul: return a * b;
        case BinaryOp::div: return a / b;
    }
    throw std::logic_error("jet_binary: bad op");
}

inline Jet2 jet_compose(Analytic f, const Jet2& a) {
    return detail::chain(detail::derivs_at(f, a.value), a);
}

inline Jet2 sin(const Jet2& a) { return jet_compose(Analytic::sin, a); }
inline Jet2 cos(const Jet2& a) { return jet_compose(Analytic::cos, a); }
inline Jet2 tan(const Jet2& a) { return jet_compose(Analytic::tan, a); }
inline Jet2 sinh(const Jet2& a) { return jet_compose(Analytic::sinh, a); }
inline Jet2 cosh(const Jet2& a) { return jet_compose(Analytic::cosh, a); }
inline Jet2 tanh(const Jet2& a) { return jet_compose(Analytic::tanh, a); }
inline Jet2 exp(const Jet2& a) { return jet_compose(Analytic::exp, a); }
inline Jet2 log(const Jet2& a) { return jet_compose(Analytic::log, a); }
inline Jet2 sqrt(const Jet2& a) { return jet_compose(Analytic::sqrt, a); }
inline Jet2 abs(const Jet2& a) { return jet_compose(Analytic::abs, a); }

// Integer powers by repeated multiplication: valid for any base, including
// negative and zero (with non-negative exponent).
inline Jet2 pow_int(const Jet2& a, long long n) {
    if (n < 0) return recip(pow_int(a, -n));
    Jet2 r = Jet2::constant(1.0);
    Jet2 base = a;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

// Real powers u^p via p·log(u); requires a positive base, matching the
// domain x, y > 0 on which fractional exponents arise.
inline Jet2 pow_real(const Jet2& a, double p) {
    if (a.value <= 0.0) detail::domain_fail("pow", a.value);
    double up = std::pow(a.value, p);
    return detail::chain({up, p * up / a.value,
                          p * (p - 1.0) * up / (a.value * a.value),
                          p * (p - 1.0) * (p - 2.0) * up /
                              (a.value * a.value * a.value)},
                         a);
}

// ---------------------------------------------------------------------------
// Jet1 arithmetic (same rules, one variable).

inline Jet1 operator+(const Jet1& a, const Jet1& b) {
    return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}
inline Jet1 operator-(const Jet1& a, const Jet1& b) {
    return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}
inline Jet1 operator-(const Jet1& a) { return Jet1{} - a; }

inline Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.value = a.value * b.value;
    r.d1 = a.d1 * b.value + a.value * b.d1;
    r.d2 = a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2;
    r.d3 = a.d3 * b.value + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 +
           a.value * b.d3;
    return r;
}

inline Jet1 recip(const Jet1& u) {
    if (u.value == 0.0) {
        throw std::domain_error("jet division by zero value");
    }
    double r = 1.0 / u.value;
    return detail::chain({r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r}, u);
}

inline Jet1 operator/(const Jet1& a, const Jet1& b) { return a * recip(b); }

inline Jet1 operator+(const Jet1& a, double c) { return a + Jet1::constant(c); }
inline Jet1 operator+(double c, const Jet1& a) { return Jet1::constant(c) + a; }
inline Jet1 operator-(const Jet1& a, double c) { return a - Jet1::constant(c); }
inline Jet1 operator-(double c, const Jet1& a) { return Jet1::constant(c) - a; }
inline Jet1 operator*(const Jet1& a, double c) { return a * Jet1::constant(c); }
inline Jet1 operator*(double c, const Jet1& a) { return Jet1::constant(c) * a; }
inline Jet1 operator/(const Jet1& a, double c) { return a / Jet1::constant(c); }
inline Jet1 operator/(double c, const Jet1& a) { return Jet1::constant(c) / a; }

inline Jet1 jet_compose(Analytic f, const Jet1& a) {
    return detail::chain(detail::derivs_at(f, a.value), a);
}

inline Jet1 sin(const Jet1& a) { return jet_compose(Analytic::sin, a); }
inline Jet1 cos(const Jet1& a) { return jet_compose(Analytic::cos, a); }
inline Jet1 tan(const Jet1& a) { return jet_compose(Analytic::tan, a); }
inline Jet1 sinh(const Jet1& a) { return jet_compose(Analytic::sinh, a); }
inline Jet1 cosh(const Jet1& a) { return jet_compose(Analytic::cosh, a); }
inline Jet1 tanh(const Jet1& a) { return jet_compose(Analytic::tanh, a); }
inline Jet1 exp(const Jet1& a) { return jet_compose(Analytic::exp, a); }
inline Jet1 log(const Jet1& a) { return jet_compose(Analytic::log, a); }
inline Jet1 sqrt(const Jet1& a) { return jet_compose(Analytic::sqrt, a); }
inline Jet1 abs(const Jet1& a) { return jet_compose(Analytic::abs, a); }

inline Jet1 pow_int(const Jet1& a, long long n) {
    if (n < 0) return recip(pow_int(a, -n));
    Jet1 r = Jet1::constant(1.0);
    Jet1 base = a;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

inline Jet1 pow_real(const Jet1& a, double p) {
    if (a.value <= 0.0) detail::domain_fail("pow", a.value);
    double up = std::pow(a.value, p);
    return detail::chain({up, p * up / a.value,
                          p * (p - 1.0) * up / (a.value * a.value),
                          p * (p - 1.0) * (p - 2.0) * up /
                              (a.value * a.value * a.value)},
                         a);
}

// Outer profile jet (already evaluated at inner.value) composed with a
// two-variable inner jet: turns univariate data like f(z) into the jet of
// f(u(x, y)). The caller supplies the outer derivatives with respect to its
// own argument; this is plain Faà di Bruno.
inline Jet2 compose_univariate(const Jet1& outer, const Jet2& inner) {
    return detail::chain({outer.value, outer.d1, outer.d2, outer.d3}, inner);
}

// Truncated derivative jets: the jet of ∂x(f) assembled by shifting slots.
// The top-order slots of the result would need fourth derivatives of the
// source, which a third-order jet does not carry; they are set to zero and
// are exact only through order two. Consumers (curvature assembly) read at
// most order two of these.
inline Jet2 dx_jet(const Jet2& a) {
    Jet2 r;
    r.value = a.d10;
    r.d10 = a.d20;
    r.d01 = a.d11;
    r.d20 = a.d30;
    r.d11 = a.d21;
    r.d02 = a.d12;
    return r;
}

inline Jet2 dy_jet(const Jet2& a) {
    Jet2 r;
    r.value = a.d01;
    r.d10 = a.d11;
    r.d01 = a.d02;
    r.d20 = a.d21;
    r.d11 = a.d12;
    r.d02 = a.d03;
    return r;
}

}  // namespace toric
