#include "toric/tensor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

namespace {

using Mat4 = std::array<std::array<Jet2, 4>, 4>;

std::string point_str(Point2 p) {
    std::ostringstream os;
    os << "(" << p.x << ", " << p.y << ")";
    return os.str();
}

double partial_value(const Jet2& f, int mu) {
    if (mu == 0) return f.d10;
    if (mu == 1) return f.d01;
    return 0.0;
}

double det2(double a, double b, double c, double d) { return a * d - b * c; }

double det3(const double m[4][4]) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

double det4(const double m[4][4]) {
    double d = 0.0;
    for (int c = 0; c < 4; ++c) {
        double sub[4][4];
        for (int i = 1; i < 4; ++i) {
            int cc = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == c) continue;
                sub[i - 1][cc++] = m[i][j];
            }
        }
        double minor3 = det3(sub);
        d += ((c % 2 == 0) ? 1.0 : -1.0) * m[0][c] * minor3;
    }
    return d;
}

// Sylvester criterion on the value matrix: every leading principal minor
// must be strictly positive. Throws naming the first failing minor.
void require_positive_definite(const Mat4& g, Point2 p) {
    double m[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = g[i][j].value;

    double minors[4];
    minors[0] = m[0][0];
    minors[1] = det2(m[0][0], m[0][1], m[1][0], m[1][1]);
    minors[2] = det3(m);
    minors[3] = det4(m);
    for (int k = 0; k < 4; ++k) {
        if (!(minors[k] > 0.0)) {
            std::ostringstream os;
            os << "metric not positive definite at " << point_str(p)
               << ": leading principal minor " << (k + 1) << " = "
               << minors[k];
            throw std::domain_error(os.str());
        }
    }
}

// Gauss-Jordan elimination over the jet ring, pivoting on the value slot.
// Exact through third order because every step is a ring operation.
Mat4 invert_jets(const Mat4& g, Point2 p) {
    Mat4 a = g;
    Mat4 inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = Jet2::constant(1.0);

    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r) {
            if (std::abs(a[r][col].value) > std::abs(a[pivot][col].value))
                pivot = r;
        }
        if (std::abs(a[pivot][col].value) == 0.0) {
            throw std::domain_error("singular metric at " + point_str(p));
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);

        Jet2 scale = recip(a[col][col]);
        for (int j = 0; j < 4; ++j) {
            a[col][j] = a[col][j] * scale;
            inv[col][j] = inv[col][j] * scale;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            Jet2 f = a[r][col];
            for (int j = 0; j < 4; ++j) {
                a[r][j] = a[r][j] - f * a[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

// Everything downstream consumes these jets. The metric jets are exact to
// order three, so the Christoffel jets are exact to order two and their
// first derivatives (used by the curvature) are exact values.
struct Geometry {
    Mat4 g;
    Mat4 ginv;
    std::array<Jet2, 64> gamma;  // Γ^k_ij at 16k + 4i + j

    const Jet2& G(int k, int i, int j) const { return gamma[16 * k + 4 * i + j]; }
    Jet2& G(int k, int i, int j) { return gamma[16 * k + 4 * i + j]; }
};

Geometry geometry_at(const MetricField& M, Point2 p) {
    if (!M.domain().contains(p.x, p.y)) {
        std::ostringstream os;
        const Box& b = M.domain();
        os << "point " << point_str(p) << " outside metric validity domain ["
           << b.x_min << ", " << b.x_max << "] x [" << b.y_min << ", "
           << b.y_max << "]";
        throw std::out_of_range(os.str());
    }

    Geometry geo;
    geo.g = M.component_jets(p.x, p.y);
    require_positive_definite(geo.g, p);
    geo.ginv = invert_jets(geo.g, p);

    Mat4 dxg, dyg;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            dxg[i][j] = dx_jet(geo.g[i][j]);
            dyg[i][j] = dy_jet(geo.g[i][j]);
        }
    }
    auto dg = [&](int mu, int i, int j) -> Jet2 {
        if (mu == 0) return dxg[i][j];
        if (mu == 1) return dyg[i][j];
        return Jet2{};
    };

    Jet2 half = Jet2::constant(0.5);
    for (int k = 0; k < 4; ++k) {
        for (int i = 0; i < 4; ++i) {
            for (int j = i; j < 4; ++j) {
                Jet2 sum;
                for (int l = 0; l < 4; ++l) {
                    Jet2 bracket = dg(i, j, l) + dg(j, i, l) - dg(l, i, j);
                    sum = sum + geo.ginv[k][l] * bracket;
                }
                Jet2 value = half * sum;
                geo.G(k, i, j) = value;
                geo.G(k, j, i) = value;
            }
        }
    }
    return geo;
}

// R^r_{s m n} = ∂_m Γ^r_{ns} − ∂_n Γ^r_{ms} + Γ^r_{mλ}Γ^λ_{ns} − Γ^r_{nλ}Γ^λ_{ms}
TensorValue riemann13_values(const Geometry& geo) {
    TensorValue R;
    R.kind = TensorKind::riemann13;
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            for (int m = 0; m < 4; ++m) {
                for (int n = 0; n < 4; ++n) {
                    double v = partial_value(geo.G(r, n, s), m) -
                               partial_value(geo.G(r, m, s), n);
                    for (int l = 0; l < 4; ++l) {
                        v += geo.G(r, m, l).value * geo.G(l, n, s).value -
                             geo.G(r, n, l).value * geo.G(l, m, s).value;
                    }
                    R.at(r, s, m, n) = v;
                }
            }
        }
    }
    return R;
}

TensorValue ricci_values(const TensorValue& R13) {
    TensorValue ric;
    ric.kind = TensorKind::covariant2;
    for (int s = 0; s < 4; ++s) {
        for (int n = 0; n < 4; ++n) {
            double v = 0.0;
            for (int m = 0; m < 4; ++m) v += R13.at(m, s, m, n);
            ric.at(s, n) = v;
        }
    }
    return ric;
}

double scalar_from(const Geometry& geo, const TensorValue& ric) {
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r += geo.ginv[i][j].value * ric.at(i, j);
    return r;
}

TensorValue lie_values(const Geometry& geo, const BaseVectorField& V,
                       Point2 p) {
    Jet2 v[2];
    v[0] = V.vx ? V.vx(p.x, p.y) : Jet2{};
    v[1] = V.vy ? V.vy(p.x, p.y) : Jet2{};

    TensorValue lie;
    lie.kind = TensorKind::covariant2;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double t = 0.0;
            for (int k = 0; k < 2; ++k) {
                t += v[k].value * partial_value(geo.g[i][j], k);
                t += geo.g[k][j].value * partial_value(v[k], i);
                t += geo.g[i][k].value * partial_value(v[k], j);
            }
            lie.at(i, j) = t;
        }
    }
    return lie;
}

}  // namespace

int MetricField::flat_index(int i, int j) {
    if (i > j) std::swap(i, j);
    // Row-major upper triangle of a symmetric 4x4.
    static constexpr int offset[4] = {0, 4, 7, 9};
    return offset[i] + (j - i);
}

void MetricField::set_component(int i, int j, ScalarField2 f) {
    entries_[flat_index(i, j)] = std::move(f);
}

const ScalarField2& MetricField::component(int i, int j) const {
    return entries_[flat_index(i, j)];
}

std::array<std::array<Jet2, 4>, 4> MetricField::component_jets(
    double x, double y) const {
    std::array<std::array<Jet2, 4>, 4> g{};
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            const ScalarField2& f = entries_[flat_index(i, j)];
            Jet2 value = f ? f(x, y) : Jet2{};
            g[i][j] = value;
            g[j][i] = value;
        }
    }
    return g;
}

std::size_t TensorValue::active_size() const {
    switch (kind) {
        case TensorKind::christoffel:
            return 64;
        case TensorKind::riemann13:
        case TensorKind::covariant4:
            return 256;
        default:
            return 16;
    }
}

double TensorValue::max_abs() const {
    double m = 0.0;
    std::size_t n = active_size();
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(comp[i]));
    return m;
}

TensorValue metric_at(const MetricField& M, Point2 p) {
    Geometry geo = geometry_at(M, p);
    TensorValue g;
    g.kind = TensorKind::covariant2;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.at(i, j) = geo.g[i][j].value;
    return g;
}

TensorValue inverse_metric_at(const MetricField& M, Point2 p) {
    Geometry geo = geometry_at(M, p);
    TensorValue gi;
    gi.kind = TensorKind::contravariant2;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gi.at(i, j) = geo.ginv[i][j].value;
    return gi;
}

TensorValue christoffel(const MetricField& M, Point2 p) {
    Geometry geo = geometry_at(M, p);
    TensorValue c;
    c.kind = TensorKind::christoffel;
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) c.at(k, i, j) = geo.G(k, i, j).value;
    return c;
}

TensorValue riemann(const MetricField& M, Point2 p) {
    Geometry geo = geometry_at(M, p);
    return riemann13_values(geo);
}

TensorValue ricci(const MetricField& M, Point2 p) {
    Geometry geo = geometry_at(M, p);
    return ricci_values(riemann13_values(geo));
}

double scalar_curvature(const MetricField& M, Point2 p) {
    Geometry geo = geometry_at(M, p);
    return scalar_from(geo, ricci_values(riemann13_values(geo)));
}

TensorValue weyl(const MetricField& M, Point2 p) {
    Geometry geo = geometry_at(M, p);
    TensorValue R13 = riemann13_values(geo);
    TensorValue ric = ricci_values(R13);
    double scal = scalar_from(geo, ric);

    // Lower the first index.
    TensorValue R04;
    R04.kind = TensorKind::covariant4;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 4; ++l) {
                    double v = 0.0;
                    for (int a = 0; a < 4; ++a)
                        v += geo.g[i][a].value * R13.at(a, j, k, l);
                    R04.at(i, j, k, l) = v;
                }
            }
        }
    }

    auto gv = [&](int i, int j) { return geo.g[i][j].value; };
    TensorValue C;
    C.kind = TensorKind::covariant4;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                for (int l = 0; l < 4; ++l) {
                    double schouten =
                        gv(i, k) * ric.at(j, l) - gv(i, l) * ric.at(j, k) +
                        gv(j, l) * ric.at(i, k) - gv(j, k) * ric.at(i, l);
                    double pure =
                        gv(i, k) * gv(j, l) - gv(i, l) * gv(j, k);
                    C.at(i, j, k, l) = R04.at(i, j, k, l) - 0.5 * schouten +
                                       (scal / 6.0) * pure;
                }
            }
        }
    }
    return C;
}

TensorValue lie_derivative_metric(const MetricField& M,
                                  const BaseVectorField& V, Point2 p) {
    Geometry geo = geometry_at(M, p);
    return lie_values(geo, V, p);
}

TensorValue lambda_tensor(const MetricField& M, const BaseVectorField& V,
                          Point2 p) {
    Geometry geo = geometry_at(M, p);
    TensorValue ric = ricci_values(riemann13_values(geo));
    TensorValue lie = lie_values(geo, V, p);

    TensorValue lam;
    lam.kind = TensorKind::mixed11;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double v = 0.0;
            for (int k = 0; k < 4; ++k) {
                v += geo.ginv[i][k].value *
                     (ric.at(k, j) + 0.5 * lie.at(k, j));
            }
            lam.at(i, j) = v;
        }
    }
    return lam;
}

MetricField conformally_scaled(const MetricField& M, double factor) {
    MetricField scaled(M.domain());
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            const ScalarField2& f = M.component(i, j);
            if (!f) continue;
            ScalarField2 g;
            g.eval = [f, factor](double x, double y) {
                return f(x, y) * Jet2::constant(factor);
            };
            scaled.set_component(i, j, g);
        }
    }
    return scaled;
}

}  // namespace toric
