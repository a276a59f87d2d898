#pragma once

#include <array>
#include <vector>

#include "actm/ansatz.hpp"
#include "actm/model.hpp"
#include "actm/tensor_ops.hpp"

namespace actm {

/// Isomorphism data for two seeds: a linear isomorphism theta of the base
/// spaces and a skew-adjoint T with |T| < 1 describing how the plus-subspace
/// tilts inside the doubled space.
template <typename S>
struct Witness {
    Matrix<S> theta;
    Matrix<S> T;
};

/// One term of the multilinear expansion of the transformed tensors: which
/// source tensor, the sign, and which slots receive T.
struct TransformTerm {
    int source;                 // 1 or 2
    int sign;                   // +1 or -1
    std::array<bool, 4> apply;  // slot s gets T when apply[s]
};

/// The 16-term table for the transformed A_target (target = 1 or 2). Terms are
/// indexed by the subset of slots carrying T; with n = |subset|:
///   target 1: n=0,4 -> +A1, n=2 -> -A1, n=1 -> -A2, n=3 -> +A2
///   target 2: n=0,4 -> +A2, n=2 -> -A2, n=1 -> +A1, n=3 -> -A1
/// (real and imaginary parts of (1 + iT)^{x4} acting on A1 + i A2).
inline std::vector<TransformTerm> transform_terms(int target) {
    std::vector<TransformTerm> terms;
    for (int mask = 0; mask < 16; ++mask) {
        TransformTerm t;
        t.apply = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0};
        const int n = t.apply[0] + t.apply[1] + t.apply[2] + t.apply[3];
        if (target == 1) {
            t.source = (n % 2 == 0) ? 1 : 2;
            t.sign = (n == 0 || n == 4) ? 1 : (n == 2 ? -1 : (n == 1 ? -1 : 1));
        } else {
            t.source = (n % 2 == 0) ? 2 : 1;
            t.sign = (n == 0 || n == 4) ? 1 : (n == 2 ? -1 : (n == 1 ? 1 : -1));
        }
        terms.push_back(t);
    }
    return terms;
}

namespace detail {

template <typename S>
bool witness_operator_ok(const Matrix<S>& t, const BilinearForm<S>& g, double tol) {
    if constexpr (is_exact_scalar_v<S>) {
        (void)tol;
        return is_skew_adjoint(t, g) && contraction_positive(t, g);
    } else {
        Matrix<S> gt = g.gram() * t;
        if (to_double(max_abs(gt + gt.transpose())) > tol) return false;
        // |T| < 1 via pivots of the induced gram, floating
        Matrix<S> m = g.gram() - t.transpose() * g.gram() * t;
        const int n = m.rows();
        for (int k = 0; k < n; ++k) {
            if (m(k, k) <= tol) return false;
            for (int i = k + 1; i < n; ++i) {
                const S f = m(i, k) / m(k, k);
                for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
                for (int j = k; j < n; ++j) m(j, i) = m(i, j);
            }
        }
        return true;
    }
}

template <typename S>
Seed<S> finish_transformed_seed(Matrix<S> gram, const DenseTensor<S>& a1d, const DenseTensor<S>& a2d,
                                double tol) {
    BilinearForm<S> g(std::move(gram));
    Seed<S> out{g, from_dense(a1d), from_dense(a2d), S(0), S(0)};
    if constexpr (is_exact_scalar_v<S>) {
        (void)tol;
        out = make_seed(out.g, out.A1, out.A2);  // recomputes constants, full validation
    } else {
        auto fit1 = einstein_fit(Model<S>::make_unchecked(out.g, out.A1));
        auto fit2 = einstein_fit(Model<S>::make_unchecked(out.g, out.A2));
        if (fit1.second > tol || fit2.second > tol)
            throw ToleranceExceeded("transform_seed: transformed tensors are not Einstein within tolerance");
        out.a1 = fit1.first;
        out.a2 = fit2.first;
    }
    return out;
}

} // namespace detail

/// Graph-subspace route: evaluates the doubled model on the graph map
/// v -> v + JTv (block form [I;T]) with
///   g~(v,w)       = <v+JTv, w+JTw>
///   A1~(v,w,x,y)  = A(v+JTv, ..., y+JTy)
///   A2~(v,w,x,y)  = -A(J(v+JTv), w+JTw, x+JTx, y+JTy).
/// The A2~ sign is pinned by the T=0 case, which must return the seed itself.
template <typename S>
Seed<S> transform_seed_graph(const Seed<S>& seed, const Matrix<S>& t, double tol = 1e-9) {
    const int p = seed.p();
    if (!t.is_square() || t.rows() != p) throw DimensionMismatch("transform_seed_graph: T dimension mismatch");
    if (!detail::witness_operator_ok(t, seed.g, tol))
        throw WitnessInvalid("transform_seed_graph: T must be skew-adjoint with |T| < 1");

    Model<S> doubled = build_model_unchecked(seed);
    Matrix<S> phi(2 * p, p);  // graph map [I; T]
    for (int i = 0; i < p; ++i) {
        phi(i, i) = S(1);
        for (int r = 0; r < p; ++r) phi(p + r, i) = t(r, i);
    }
    Matrix<S> jphi = mult_by_i_block<S>(p) * phi;  // [-T; I]

    Matrix<S> gram = phi.transpose() * doubled.inner().gram() * phi;
    DenseTensor<S> a1d = pullback(doubled.dense(), phi);
    DenseTensor<S> raw2 = pullback4(doubled.dense(), jphi, phi, phi, phi);
    DenseTensor<S> a2d(p);
    for (size_t k = 0; k < raw2.a.size(); ++k) a2d.a[k] = -raw2.a[k];

    return detail::finish_transformed_seed(std::move(gram), a1d, a2d, tol);
}

/// Expanded route: the two 16-term multilinear expansions evaluated directly
/// on (A1, A2, T), independent of the graph construction. g~ = g(.,.) - g(T.,T.).
template <typename S>
Seed<S> transform_seed_expanded(const Seed<S>& seed, const Matrix<S>& t, double tol = 1e-9) {
    const int p = seed.p();
    if (!t.is_square() || t.rows() != p)
        throw DimensionMismatch("transform_seed_expanded: T dimension mismatch");
    if (!detail::witness_operator_ok(t, seed.g, tol))
        throw WitnessInvalid("transform_seed_expanded: T must be skew-adjoint with |T| < 1");

    Matrix<S> gram = seed.g.gram() - t.transpose() * seed.g.gram() * t;
    DenseTensor<S> d1 = seed.A1.dense();
    DenseTensor<S> d2 = seed.A2.dense();
    Matrix<S> id = Matrix<S>::identity(p);

    auto expand = [&](int target) {
        DenseTensor<S> acc(p);
        for (const auto& term : transform_terms(target)) {
            const DenseTensor<S>& src = term.source == 1 ? d1 : d2;
            DenseTensor<S> piece = pullback4(src, term.apply[0] ? t : id, term.apply[1] ? t : id,
                                             term.apply[2] ? t : id, term.apply[3] ? t : id);
            if (term.sign > 0)
                for (size_t k = 0; k < acc.a.size(); ++k) acc.a[k] += piece.a[k];
            else
                for (size_t k = 0; k < acc.a.size(); ++k) acc.a[k] -= piece.a[k];
        }
        return acc;
    };

    return detail::finish_transformed_seed(std::move(gram), expand(1), expand(2), tol);
}

/// Mixed Gram table <v + JTv, J(w + JTw)> computed literally inside the
/// doubled model; identically zero iff the tilted plus-space stays orthogonal
/// to its J-image (iff T is skew-adjoint).
template <typename S>
Matrix<S> graph_mixed_gram(const Seed<S>& seed, const Matrix<S>& t) {
    const int p = seed.p();
    if (!t.is_square() || t.rows() != p) throw DimensionMismatch("graph_mixed_gram: T dimension mismatch");
    Matrix<S> phi(2 * p, p);
    for (int i = 0; i < p; ++i) {
        phi(i, i) = S(1);
        for (int r = 0; r < p; ++r) phi(p + r, i) = t(r, i);
    }
    Matrix<S> jphi = mult_by_i_block<S>(p) * phi;
    return phi.transpose() * neutral_inner(seed.g).gram() * jphi;
}

/// Induced Gram on the tilted plus-space: g - T^T g T.
template <typename S>
Matrix<S> graph_induced_gram(const BilinearForm<S>& g, const Matrix<S>& t) {
    return g.gram() - t.transpose() * g.gram() * t;
}

namespace detail {

template <typename S>
bool within_tolerance(const S& deviation, double tol) {
    if constexpr (is_exact_scalar_v<S>) {
        if (tol <= 0.0) return deviation.is_zero();
        return deviation.to_double() <= tol;
    } else {
        return deviation <= tol;
    }
}

} // namespace detail

/// Checks that (theta, T) witnesses seed ~ seed_tilde: the expanded transform
/// of seed, pushed forward along theta, must reproduce seed_tilde's form and
/// both tensors within tol (exactly when tol <= 0 on the exact field).
template <typename S>
bool verify_witness(const Seed<S>& seed, const Seed<S>& seed_tilde, const Witness<S>& witness,
                    double tol = 0.0) {
    const int p = seed.p();
    if (seed_tilde.p() != p || witness.theta.rows() != p || witness.theta.cols() != p)
        throw DimensionMismatch("verify_witness: dimensions disagree");
    Seed<S> transformed = transform_seed_expanded(seed, witness.T, tol > 0 ? tol : 1e-9);

    // g~(theta v, theta w) = g(v,w) - g(Tv,Tw)
    Matrix<S> lhs_gram = witness.theta.transpose() * seed_tilde.g.gram() * witness.theta;
    S dev = max_abs(lhs_gram - transformed.g.gram());

    // A~_i(theta v, theta w, theta x, theta y) = transformed A_i(v,w,x,y)
    DenseTensor<S> lhs1 = pullback(seed_tilde.A1.dense(), witness.theta);
    DenseTensor<S> lhs2 = pullback(seed_tilde.A2.dense(), witness.theta);
    S dev1 = max_abs(dense_difference(lhs1, transformed.A1.dense()));
    S dev2 = max_abs(dense_difference(lhs2, transformed.A2.dense()));
    if (dev < dev1) dev = dev1;
    if (dev < dev2) dev = dev2;
    return detail::within_tolerance(dev, tol);
}

} // namespace actm
