#pragma once

#include <array>
#include <vector>

#include "actm/curv_tensor.hpp"
#include "actm/matrix.hpp"

namespace actm {

/// Multilinear evaluation A(v1,v2,v3,v4) from the dense component array.
template <typename S>
S evaluate(const DenseTensor<S>& d, const Vector<S>& v1, const Vector<S>& v2, const Vector<S>& v3,
           const Vector<S>& v4) {
    const int m = d.dim;
    if (static_cast<int>(v1.size()) != m || static_cast<int>(v2.size()) != m ||
        static_cast<int>(v3.size()) != m || static_cast<int>(v4.size()) != m)
        throw DimensionMismatch("evaluate: vector size mismatch");
    S acc(0);
    for (int i = 0; i < m; ++i) {
        if (scalar_is_zero(v1[i])) continue;
        for (int j = 0; j < m; ++j) {
            if (scalar_is_zero(v2[j])) continue;
            S partial(0);
            for (int k = 0; k < m; ++k) {
                if (scalar_is_zero(v3[k])) continue;
                for (int l = 0; l < m; ++l) partial += d.at(i, j, k, l) * v3[k] * v4[l];
            }
            acc += v1[i] * v2[j] * partial;
        }
    }
    return acc;
}

/// Substitutes the operator M into one tensor slot:
/// out(...,a,...) = sum_k A(...,k,...) M(k,a). Shape-preserving (M square).
template <typename S>
DenseTensor<S> contract_slot(const DenseTensor<S>& d, const Matrix<S>& m, int slot) {
    const int n = d.dim;
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("contract_slot: operator must be dim x dim");
    DenseTensor<S> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const S& v = d.at(i, j, k, l);
                    if (scalar_is_zero(v)) continue;
                    int idx[4] = {i, j, k, l};
                    const int r = idx[slot];
                    for (int a = 0; a < n; ++a) {
                        if (scalar_is_zero(m(r, a))) continue;
                        idx[slot] = a;
                        out.at(idx[0], idx[1], idx[2], idx[3]) += v * m(r, a);
                    }
                    idx[slot] = r;
                }
    return out;
}

/// Pullback along four (possibly rectangular, dim x k) slot maps:
/// out(a,b,c,d) = A(E1 e_a, E2 e_b, E3 e_c, E4 e_d). All Ei must share shape.
template <typename S>
DenseTensor<S> pullback4(const DenseTensor<S>& d, const Matrix<S>& e1, const Matrix<S>& e2,
                         const Matrix<S>& e3, const Matrix<S>& e4) {
    const int m = d.dim;
    const int k = e1.cols();
    const Matrix<S>* maps[4] = {&e1, &e2, &e3, &e4};
    for (const auto* e : maps)
        if (e->rows() != m || e->cols() != k) throw DimensionMismatch("pullback4: slot map shape mismatch");

    std::array<int, 4> shape = {m, m, m, m};
    std::vector<S> data = d.a;
    for (int slot = 0; slot < 4; ++slot) {
        std::array<int, 4> nshape = shape;
        nshape[slot] = k;
        const size_t nsize = static_cast<size_t>(nshape[0]) * nshape[1] * nshape[2] * nshape[3];
        std::vector<S> next(nsize, S(0));
        const Matrix<S>& e = *maps[slot];
        std::array<int, 4> idx{};
        for (idx[0] = 0; idx[0] < shape[0]; ++idx[0])
            for (idx[1] = 0; idx[1] < shape[1]; ++idx[1])
                for (idx[2] = 0; idx[2] < shape[2]; ++idx[2])
                    for (idx[3] = 0; idx[3] < shape[3]; ++idx[3]) {
                        const S& v = data[static_cast<size_t>(((idx[0] * shape[1] + idx[1]) * shape[2] + idx[2])) * shape[3] + idx[3]];
                        if (scalar_is_zero(v)) continue;
                        std::array<int, 4> odx = idx;
                        for (int a = 0; a < k; ++a) {
                            if (scalar_is_zero(e(idx[slot], a))) continue;
                            odx[slot] = a;
                            next[static_cast<size_t>(((odx[0] * nshape[1] + odx[1]) * nshape[2] + odx[2])) * nshape[3] + odx[3]] +=
                                v * e(idx[slot], a);
                        }
                    }
        data = std::move(next);
        shape = nshape;
    }
    DenseTensor<S> out(k);
    out.a = std::move(data);
    return out;
}

template <typename S>
DenseTensor<S> pullback(const DenseTensor<S>& d, const Matrix<S>& e) {
    return pullback4(d, e, e, e, e);
}

template <typename S>
S max_abs(const DenseTensor<S>& d) {
    S best(0);
    for (const auto& v : d.a) {
        S m = scalar_abs(v);
        if (best < m) best = m;
    }
    return best;
}

template <typename S>
DenseTensor<S> dense_difference(const DenseTensor<S>& a, const DenseTensor<S>& b) {
    if (a.dim != b.dim) throw DimensionMismatch("dense_difference: dimension mismatch");
    DenseTensor<S> out(a.dim);
    for (size_t k = 0; k < a.a.size(); ++k) out.a[k] = a.a[k] - b.a[k];
    return out;
}

} // namespace actm
