#pragma once

// Pointwise differential geometry for four-dimensional toric metrics whose
// coefficients depend on the base coordinates (x, y) only. Derivatives are
// carried by third-order jets end to end; finite differences never enter the
// main path here.

#include <array>
#include <cstddef>

#include "toric/fields.hpp"
#include "toric/jet.hpp"

namespace toric {

// Coordinate order of the chart. The first two are base coordinates; the
// torus fiber directions s and t carry no coefficient dependence, so partial
// derivatives along them vanish identically.
enum class Chart : int { x = 0, y = 1, s = 2, t = 3 };

constexpr int chart_index(Chart c) { return static_cast<int>(c); }

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Vector field tangent to the base: V = vx ∂x + vy ∂y. The components along
// the fiber directions are identically zero. An empty ScalarField2 counts as
// the zero component.
struct BaseVectorField {
    ScalarField2 vx;
    ScalarField2 vy;

    static BaseVectorField zero() { return {}; }
};

// Symmetric 4x4 field of metric coefficients over a declared validity box.
// Unset components are identically zero. Positive definiteness is enforced
// pointwise at evaluation time, not globally: families with coordinate
// degeneracies rely on the caller declaring a box that avoids them.
class MetricField {
public:
    MetricField() = default;
    explicit MetricField(Box domain) : domain_(domain) {}

    const Box& domain() const { return domain_; }
    void set_domain(Box b) { domain_ = b; }

    void set_component(int i, int j, ScalarField2 f);
    const ScalarField2& component(int i, int j) const;

    // All sixteen coefficients as third-order jets at a base point. Performs
    // no validity checks; metric_at is the checked entry point.
    std::array<std::array<Jet2, 4>, 4> component_jets(double x, double y) const;

private:
    static int flat_index(int i, int j);

    std::array<ScalarField2, 10> entries_;
    Box domain_{0.0, 1.0, 0.0, 1.0};
};

enum class TensorKind {
    covariant2,      // T_ij
    contravariant2,  // T^ij
    mixed11,         // T^i_j
    christoffel,     // Γ^k_ij, indexed (k, i, j)
    riemann13,       // R^i_jkl
    covariant4,      // T_ijkl
};

// Dense component values of a tensor at a single point. Rank-2 kinds use the
// first 16 slots, the Christoffel kind the first 64, rank-4 kinds all 256.
struct TensorValue {
    TensorKind kind = TensorKind::covariant2;
    std::array<double, 256> comp{};

    double& at(int i, int j) { return comp[4 * i + j]; }
    double at(int i, int j) const { return comp[4 * i + j]; }
    double& at(int k, int i, int j) { return comp[16 * k + 4 * i + j]; }
    double at(int k, int i, int j) const { return comp[16 * k + 4 * i + j]; }
    double& at(int i, int j, int k, int l) {
        return comp[64 * i + 16 * j + 4 * k + l];
    }
    double at(int i, int j, int k, int l) const {
        return comp[64 * i + 16 * j + 4 * k + l];
    }

    std::size_t active_size() const;
    double max_abs() const;
};

// Checked pointwise evaluations. All of them throw std::out_of_range when p
// lies outside the validity box and std::domain_error when the coefficient
// matrix fails the leading-principal-minor test (reporting the failing
// minor, which signals q = 0, A <= 0, B <= 0, or |cos θ| >= 1 upstream).

TensorValue metric_at(const MetricField& M, Point2 p);
TensorValue inverse_metric_at(const MetricField& M, Point2 p);
TensorValue christoffel(const MetricField& M, Point2 p);
TensorValue riemann(const MetricField& M, Point2 p);
TensorValue ricci(const MetricField& M, Point2 p);
double scalar_curvature(const MetricField& M, Point2 p);
TensorValue weyl(const MetricField& M, Point2 p);
TensorValue lie_derivative_metric(const MetricField& M,
                                  const BaseVectorField& V, Point2 p);

// Mixed soliton tensor Λ = g⁻¹(Ric + ½ 𝓛_V g). The soliton equation is then
// the statement Λ − λI = 0 with no further index manipulation.
TensorValue lambda_tensor(const MetricField& M, const BaseVectorField& V,
                          Point2 p);

// Metric multiplied entrywise by a constant factor > 0 (so the conformal
// scaling g → c² g is conformally_scaled(M, c*c)).
MetricField conformally_scaled(const MetricField& M, double factor);

}  // namespace toric
