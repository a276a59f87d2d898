#pragma once

#include <vector>

#include "actm/model.hpp"
#include "actm/poly.hpp"

namespace actm {

/// Symmetric matrix of polynomials in m coordinates. Supports exactly the
/// metrics whose determinant is a nonzero constant, so that the inverse (and
/// with it the whole curvature chain) stays polynomial.
class PolyMetric {
public:
    PolyMetric(int dim, int nvars)
        : dim_(dim), nvars_(nvars),
          entries_(static_cast<size_t>(dim) * dim, MultiPoly(nvars)) {
        if (dim < 0) throw DimensionMismatch("PolyMetric: negative dimension");
    }

    int dim() const { return dim_; }
    int nvars() const { return nvars_; }

    const MultiPoly& at(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }

    /// Sets g_ij and g_ji together.
    void set(int i, int j, const MultiPoly& p) {
        if (p.nvars() != nvars_) throw VariableCountMismatch("PolyMetric::set: variable count mismatch");
        entries_[static_cast<size_t>(i) * dim_ + j] = p;
        entries_[static_cast<size_t>(j) * dim_ + i] = p;
    }

    /// Laplace-expansion determinant; fine at these dimensions.
    MultiPoly determinant() const;

    BilinearForm<Rational> evaluate_gram(const std::vector<Rational>& point) const {
        Matrix<Rational> g(dim_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) g(i, j) = at(i, j).evaluate(point);
        return BilinearForm<Rational>(std::move(g));
    }

private:
    int dim_;
    int nvars_;
    std::vector<MultiPoly> entries_;
};

namespace detail {

/// Determinant of a dense polynomial grid by first-row Laplace expansion.
inline MultiPoly grid_det(const std::vector<MultiPoly>& grid, int n, int nvars) {
    if (n == 0) return MultiPoly::constant(nvars, Rational(1));
    if (n == 1) return grid[0];
    MultiPoly acc(nvars);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        const MultiPoly& pivot = grid[col];
        if (!pivot.is_zero()) {
            std::vector<MultiPoly> sub;
            sub.reserve(static_cast<size_t>(n - 1) * (n - 1));
            for (int i = 1; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (j == col) continue;
                    sub.push_back(grid[static_cast<size_t>(i) * n + j]);
                }
            MultiPoly term = pivot * grid_det(sub, n - 1, nvars);
            if (sign > 0)
                acc += term;
            else
                acc -= term;
        }
        sign = -sign;
    }
    return acc;
}

} // namespace detail

inline MultiPoly PolyMetric::determinant() const {
    std::vector<MultiPoly> grid;
    grid.reserve(static_cast<size_t>(dim_) * dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) grid.push_back(at(i, j));
    return detail::grid_det(grid, dim_, nvars_);
}

/// The flagship 4-dimensional example metric in coordinates (x1..x4):
/// g13 = g24 = 1, g34 = s (x2^2 - x1^2), g33 = 2 s x1 x2, g44 = -2 s x1 x2.
/// Signature (2,2) at every point; curvature is constant in the coordinates.
inline PolyMetric example22_metric(const Rational& s) {
    PolyMetric g(4, 4);
    g.set(0, 2, MultiPoly::constant(4, Rational(1)));
    g.set(1, 3, MultiPoly::constant(4, Rational(1)));
    MultiPoly x1 = MultiPoly::variable(4, 0), x2 = MultiPoly::variable(4, 1);
    g.set(2, 3, s * (x2 * x2 - x1 * x1));
    g.set(2, 2, (Rational(2) * s) * (x1 * x2));
    g.set(3, 3, (Rational(-2) * s) * (x1 * x2));
    return g;
}

/// Adjugate over a constant determinant; refuses metrics whose determinant has
/// positive degree rather than leaving the polynomial ring.
inline PolyMetric inverse_metric(const PolyMetric& metric) {
    MultiPoly det = metric.determinant();
    if (!det.is_constant() || det.is_zero())
        throw NonConstantDeterminant("inverse_metric: determinant is not a nonzero constant");
    const Rational inv_det = Rational(1) / det.constant_value();
    const int n = metric.dim();
    const int nv = metric.nvars();
    PolyMetric out(n, nv);

    // cofactor: delete row di, column dj; minors are not symmetric, so they go
    // through a plain grid rather than PolyMetric
    auto minor_det = [&](int di, int dj) {
        std::vector<MultiPoly> sub;
        sub.reserve(static_cast<size_t>(n - 1) * (n - 1));
        for (int i = 0; i < n; ++i) {
            if (i == di) continue;
            for (int j = 0; j < n; ++j) {
                if (j == dj) continue;
                sub.push_back(metric.at(i, j));
            }
        }
        return detail::grid_det(sub, n - 1, nv);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            MultiPoly cof = minor_det(j, i);
            if ((i + j) % 2 != 0) cof = -cof;
            out.set(i, j, cof * inv_det);
        }
    return out;
}

/// Christoffel symbols Gamma^k_{ij} = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij),
/// symmetric in (i,j); exact polynomials. Index order: [k][i][j].
inline std::vector<std::vector<std::vector<MultiPoly>>> christoffel(const PolyMetric& metric) {
    const int n = metric.dim();
    const int nv = metric.nvars();
    PolyMetric ginv = inverse_metric(metric);
    std::vector<std::vector<std::vector<MultiPoly>>> gamma(
        n, std::vector<std::vector<MultiPoly>>(n, std::vector<MultiPoly>(n, MultiPoly(nv))));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                MultiPoly acc(nv);
                for (int l = 0; l < n; ++l) {
                    if (ginv.at(k, l).is_zero()) continue;
                    MultiPoly inner = metric.at(j, l).partial_derivative(i) +
                                      metric.at(i, l).partial_derivative(j) -
                                      metric.at(i, j).partial_derivative(l);
                    acc += ginv.at(k, l) * inner;
                }
                acc = acc * Rational(1, 2);
                gamma[k][i][j] = acc;
                gamma[k][j][i] = std::move(acc);
            }
    return gamma;
}

/// Lowered curvature components R_{ijkl} = g(R(d_i,d_j) d_k, d_l) as exact
/// polynomials, with the orientation
///   R(d_i,d_j) d_k = (d_j Gamma^l_{ik} - d_i Gamma^l_{jk}
///                     + Gamma^l_{jm} Gamma^m_{ik} - Gamma^l_{im} Gamma^m_{jk}) d_l.
/// This is the single global sign bit of the engine; it is pinned so that the
/// built-in signature-(2,2) example realizes R_1314 = +s.
inline std::vector<MultiPoly> riemann_poly(const PolyMetric& metric) {
    const int n = metric.dim();
    const int nv = metric.nvars();
    auto gamma = christoffel(metric);
    auto idx = [n](int i, int j, int k, int l) {
        return static_cast<size_t>(((i * n + j) * n + k)) * n + l;
    };
    std::vector<MultiPoly> up(static_cast<size_t>(n) * n * n * n, MultiPoly(nv));  // R^l_{ijk}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    MultiPoly acc = gamma[l][i][k].partial_derivative(j) - gamma[l][j][k].partial_derivative(i);
                    for (int mm = 0; mm < n; ++mm) {
                        if (!gamma[l][j][mm].is_zero() && !gamma[mm][i][k].is_zero())
                            acc += gamma[l][j][mm] * gamma[mm][i][k];
                        if (!gamma[l][i][mm].is_zero() && !gamma[mm][j][k].is_zero())
                            acc -= gamma[l][i][mm] * gamma[mm][j][k];
                    }
                    up[idx(i, j, k, l)] = std::move(acc);
                }
    std::vector<MultiPoly> low(static_cast<size_t>(n) * n * n * n, MultiPoly(nv));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    MultiPoly acc(nv);
                    for (int a = 0; a < n; ++a) {
                        if (up[idx(i, j, k, a)].is_zero() || metric.at(a, l).is_zero()) continue;
                        acc += metric.at(a, l) * up[idx(i, j, k, a)];
                    }
                    low[idx(i, j, k, l)] = std::move(acc);
                }
    return low;
}

/// The model (tangent space, metric at the point, curvature at the point),
/// evaluated exactly and validated against the curvature symmetries.
inline Model<Rational> riemann_model_at(const PolyMetric& metric, const std::vector<Rational>& point) {
    const int n = metric.dim();
    if (static_cast<int>(point.size()) != metric.nvars())
        throw DimensionMismatch("riemann_model_at: point length mismatch");
    std::vector<MultiPoly> low = riemann_poly(metric);
    auto idx = [n](int i, int j, int k, int l) {
        return static_cast<size_t>(((i * n + j) * n + k)) * n + l;
    };
    CurvTensor<Rational> tensor(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = i; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (k == i && l < j) continue;
                    Rational v = low[idx(i, j, k, l)].evaluate(point);
                    if (!v.is_zero()) tensor.set(i, j, k, l, v);
                }
    // the full dense evaluation must agree with the canonical expansion; any
    // mismatch means the Levi-Civita computation broke a symmetry
    DenseTensor<Rational> expanded = tensor.dense();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (expanded.at(i, j, k, l) != low[idx(i, j, k, l)].evaluate(point))
                        throw InvalidTensor("riemann_model_at: curvature lost the pair symmetries");
    return Model<Rational>::make(metric.evaluate_gram(point), std::move(tensor));
}

/// Exact local symmetry test: every component of the covariant derivative
///   nabla_a R_{ijkl} = d_a R_{ijkl} - Gamma^m_{ai} R_{mjkl} - Gamma^m_{aj} R_{imkl}
///                      - Gamma^m_{ak} R_{ijml} - Gamma^m_{al} R_{ijkm}
/// must be the zero polynomial. No sampling.
inline bool is_locally_symmetric(const PolyMetric& metric) {
    const int n = metric.dim();
    auto gamma = christoffel(metric);
    std::vector<MultiPoly> low = riemann_poly(metric);
    auto idx = [n](int i, int j, int k, int l) {
        return static_cast<size_t>(((i * n + j) * n + k)) * n + l;
    };
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        MultiPoly acc = low[idx(i, j, k, l)].partial_derivative(a);
                        for (int mm = 0; mm < n; ++mm) {
                            acc -= gamma[mm][a][i] * low[idx(mm, j, k, l)];
                            acc -= gamma[mm][a][j] * low[idx(i, mm, k, l)];
                            acc -= gamma[mm][a][k] * low[idx(i, j, mm, l)];
                            acc -= gamma[mm][a][l] * low[idx(i, j, k, mm)];
                        }
                        if (!acc.is_zero()) return false;
                    }
    return true;
}

} // namespace actm
