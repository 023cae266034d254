#pragma once

#include <functional>
#include <utility>

#include "toric/jet.hpp"

namespace toric {

// A scalar function of the base coordinates evaluated with full third-order
// jets. Evaluation is pure: same point, same jet, no side effects; fields
// are freely shareable across threads.
struct ScalarField2 {
    std::function<Jet2(double, double)> eval;

    Jet2 operator()(double x, double y) const { return eval(x, y); }
    double value(double x, double y) const { return eval(x, y).value; }
    explicit operator bool() const { return static_cast<bool>(eval); }
};

// A univariate profile (A(t), B(t), f(z), ...) with third-order jets.
struct Profile1 {
    std::function<Jet1(double)> eval;

    Jet1 operator()(double t) const { return eval(t); }
    double value(double t) const { return eval(t).value; }
    explicit operator bool() const { return static_cast<bool>(eval); }
};

inline ScalarField2 constant_field(double c) {
    return {[c](double, double) { return Jet2::constant(c); }};
}

inline Profile1 constant_profile(double c) {
    return {[c](double) { return Jet1::constant(c); }};
}

// Lift a profile to a field constant in the other variable.
inline ScalarField2 field_in_x(Profile1 p) {
    return {[p = std::move(p)](double x, double) {
        Jet1 a = p(x);
        Jet2 j;
        j.value = a.value;
        j.d10 = a.d1;
        j.d20 = a.d2;
        j.d30 = a.d3;
        return j;
    }};
}

inline ScalarField2 field_in_y(Profile1 p) {
    return {[p = std::move(p)](double, double y) {
        Jet1 a = p(y);
        Jet2 j;
        j.value = a.value;
        j.d01 = a.d1;
        j.d02 = a.d2;
        j.d03 = a.d3;
        return j;
    }};
}

// Axis-aligned validity box in the (x, y) base.
struct Box {
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;

    bool contains(double x, double y) const {
        return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
    }
    double x_mid() const { return 0.5 * (x_min + x_max); }
    double y_mid() const { return 0.5 * (y_min + y_max); }
    // Shrink by a fraction of each side length, keeping the center.
    Box shrunk(double fraction) const {
        double dx = (x_max - x_min) * fraction, dy = (y_max - y_min) * fraction;
        return {x_min + dx, x_max - dx, y_min + dy, y_max - dy};
    }
};

}  // namespace toric
