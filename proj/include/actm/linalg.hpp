#pragma once

#include <cstdint>
#include <vector>

#include "actm/errors.hpp"
#include "actm/matrix.hpp"

namespace actm {

/// Symmetric bilinear form given by its Gram matrix. Symmetry is enforced at
/// construction; nondegeneracy is decided by the exact routines below.
template <typename S>
class BilinearForm {
public:
    BilinearForm() = default;

    explicit BilinearForm(Matrix<S> gram) : gram_(std::move(gram)) {
        if (!gram_.is_square()) throw DimensionMismatch("BilinearForm: gram must be square");
        if (gram_ != gram_.transpose()) throw FormNotSymmetric("BilinearForm: gram must be symmetric");
    }

    static BilinearForm standard(int dim) { return BilinearForm(Matrix<S>::identity(dim)); }

    /// diag(+1 x p, -1 x q)
    static BilinearForm pseudo_euclidean(int p, int q) {
        Matrix<S> g(p + q, p + q);
        for (int i = 0; i < p; ++i) g(i, i) = S(1);
        for (int i = p; i < p + q; ++i) g(i, i) = S(-1);
        return BilinearForm(g);
    }

    int dim() const { return gram_.rows(); }
    const Matrix<S>& gram() const { return gram_; }

    S eval(const Vector<S>& v, const Vector<S>& w) const {
        if (static_cast<int>(v.size()) != dim() || static_cast<int>(w.size()) != dim())
            throw DimensionMismatch("BilinearForm::eval: vector size mismatch");
        S acc(0);
        for (int i = 0; i < dim(); ++i) {
            if (scalar_is_zero(v[i])) continue;
            for (int j = 0; j < dim(); ++j) acc += v[i] * gram_(i, j) * w[j];
        }
        return acc;
    }

    friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.gram_ == b.gram_; }

private:
    Matrix<S> gram_;
};

struct Signature {
    int positive = 0;
    int negative = 0;
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.positive == b.positive && a.negative == b.negative;
    }
};

enum class PivotPolicy { PreferFirst, PreferLast };

template <typename S>
struct Congruence {
    Matrix<S> basis;          // columns are the orthogonal basis vectors
    std::vector<S> diagonal;  // basis[k]^T G basis[k]; zero entries mark a degenerate direction
};

/// Symmetric Gaussian decongruence: returns P and d with P^T G P = diag(d).
/// Exact over Rational. The pivot policy only affects which orthogonal basis
/// comes out, never the sign counts (Sylvester).
template <typename S>
Congruence<S> diagonalize_congruence(const BilinearForm<S>& form, PivotPolicy policy = PivotPolicy::PreferFirst) {
    const int n = form.dim();
    Matrix<S> g = form.gram();
    Matrix<S> p = Matrix<S>::identity(n);

    auto add_column = [&](int dst, int src, const S& f) {
        // column op e_dst += f*e_src applied congruently to g, tracked in p
        for (int r = 0; r < n; ++r) g(r, dst) += f * g(r, src);
        for (int c = 0; c < n; ++c) g(dst, c) += f * g(src, c);
        for (int r = 0; r < n; ++r) p(r, dst) += f * p(r, src);
    };
    auto swap_columns = [&](int a, int b) {
        for (int r = 0; r < n; ++r) std::swap(g(r, a), g(r, b));
        for (int c = 0; c < n; ++c) std::swap(g(a, c), g(b, c));
        for (int r = 0; r < n; ++r) std::swap(p(r, a), p(r, b));
    };

    Congruence<S> out;
    out.diagonal.assign(static_cast<size_t>(n), S(0));

    for (int k = 0; k < n; ++k) {
        if (scalar_is_zero(g(k, k))) {
            int found = -1;
            if (policy == PivotPolicy::PreferFirst) {
                for (int j = k + 1; j < n && found < 0; ++j)
                    if (!scalar_is_zero(g(j, j))) found = j;
            } else {
                for (int j = n - 1; j > k && found < 0; --j)
                    if (!scalar_is_zero(g(j, j))) found = j;
            }
            if (found >= 0) {
                swap_columns(k, found);
            } else {
                // all diagonal entries vanish; use an off-diagonal entry to create one
                int fi = -1, fj = -1;
                for (int i = k; i < n && fi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (!scalar_is_zero(g(i, j))) {
                            fi = i;
                            fj = j;
                            break;
                        }
                if (fi < 0) break;  // remaining block is identically zero
                add_column(fi, fj, S(1));  // now g(fi,fi) = 2*g(fi,fj) != 0
                if (fi != k) swap_columns(k, fi);
            }
        }
        const S pivot = g(k, k);
        out.diagonal[k] = pivot;
        for (int i = k + 1; i < n; ++i) {
            if (scalar_is_zero(g(i, k))) continue;
            add_column(i, k, -g(i, k) / pivot);
        }
    }
    out.basis = std::move(p);
    return out;
}

/// Counts of positive/negative directions, exact. Throws DegenerateForm if the
/// form has a radical (some diagonal entry stays zero after pivoting exhausts).
inline Signature signature(const BilinearForm<Rational>& form, PivotPolicy policy = PivotPolicy::PreferFirst) {
    auto diag = diagonalize_congruence(form, policy);
    Signature sig;
    for (const auto& d : diag.diagonal) {
        if (d.is_zero()) throw DegenerateForm("signature: form is degenerate");
        (d.sign() > 0 ? sig.positive : sig.negative)++;
    }
    return sig;
}

/// Sylvester test via elimination pivots: positive definite iff every pivot of
/// the un-permuted symmetric elimination is positive (equivalently all leading
/// principal minors are positive).
inline bool is_positive_definite(const BilinearForm<Rational>& form) {
    const int n = form.dim();
    Matrix<Rational> g = form.gram();
    for (int k = 0; k < n; ++k) {
        if (g(k, k).sign() <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            if (g(i, k).is_zero()) continue;
            const Rational f = g(i, k) / g(k, k);
            for (int j = k; j < n; ++j) g(i, j) -= f * g(k, j);
            for (int j = k; j < n; ++j) g(j, i) = g(i, j);
        }
    }
    return true;
}

/// g(Tv,w) = -g(v,Tw) for all v,w, decided as the matrix identity
/// (gram*T)^T = -gram*T.
template <typename S>
bool is_skew_adjoint(const Matrix<S>& t, const BilinearForm<S>& g) {
    if (!t.is_square() || t.rows() != g.dim())
        throw DimensionMismatch("is_skew_adjoint: operator does not match form");
    Matrix<S> gt = g.gram() * t;
    return gt.transpose() == -gt;
}

template <typename S>
bool is_self_adjoint(const Matrix<S>& t, const BilinearForm<S>& g) {
    if (!t.is_square() || t.rows() != g.dim())
        throw DimensionMismatch("is_self_adjoint: operator does not match form");
    Matrix<S> gt = g.gram() * t;
    return gt.transpose() == gt;
}

/// The operator-norm condition |T| < 1 on a positive definite space, decided
/// exactly: gram - T^T gram T must be positive definite.
inline bool contraction_positive(const Matrix<Rational>& t, const BilinearForm<Rational>& g) {
    if (!t.is_square() || t.rows() != g.dim())
        throw DimensionMismatch("contraction_positive: operator does not match form");
    if (!is_positive_definite(g))
        throw FormNotPositiveDefinite("contraction_positive: form must be positive definite");
    Matrix<Rational> m = g.gram() - t.transpose() * g.gram() * t;
    return is_positive_definite(BilinearForm<Rational>(std::move(m)));
}

template <typename S>
struct MinimalQuadratic {
    S a1;                   // trace(rho)/m
    S c;                    // candidate with (rho - a1)^2 = -c * id
    bool is_quadratic;      // whether the identity holds exactly
    Matrix<S> traceless;    // rho - a1 * id
};

/// Reads c off entry (0,0) of -(rho - a1)^2 and verifies the full matrix
/// identity; a mismatch reports is_quadratic = false. c > 0 means complex
/// conjugate eigenvalue pair a1 +- sqrt(c) i; c == 0 needs the caller to test
/// traceless == 0 to separate the scalar case from a nilpotent part.
template <typename S>
MinimalQuadratic<S> minimal_quadratic(const Matrix<S>& rho) {
    if (!rho.is_square()) throw DimensionMismatch("minimal_quadratic: non-square matrix");
    const int m = rho.rows();
    MinimalQuadratic<S> out{S(0), S(0), true, Matrix<S>(m, m)};
    if (m == 0) return out;
    out.a1 = rho.trace() / S(m);
    out.traceless = rho;
    for (int i = 0; i < m; ++i) out.traceless(i, i) -= out.a1;
    Matrix<S> sq = out.traceless * out.traceless;
    out.c = -sq(0, 0);
    Matrix<S> expect(m, m);
    for (int i = 0; i < m; ++i) expect(i, i) = -out.c;
    out.is_quadratic = (sq == expect);
    if (!out.is_quadratic) out.c = S(0);
    return out;
}

} // namespace actm
