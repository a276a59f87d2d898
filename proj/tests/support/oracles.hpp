#pragma once

// Independent oracles for the unit and acceptance tests. Everything here
// deliberately avoids the library's own code paths for the quantity it
// checks: expansions walk the symmetry orbit breadth-first instead of using
// the canonical-storage rules, eigen sign counts come from classical Jacobi
// rotations, determinants from Laplace recursion, and the doubled-model
// oracle works in actual complex arithmetic.

#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "actm/curv_tensor.hpp"
#include "actm/linalg.hpp"
#include "actm/matrix.hpp"

namespace oracles {

using actm::BilinearForm;
using actm::CurvTensor;
using actm::DenseTensor;
using actm::Index4;
using actm::Matrix;
using actm::Rational;
using actm::Vector;

struct SignedIndex {
    Index4 idx;
    int sign;
};

/// Expands stored canonical components to a dense array by breadth-first
/// search over the three symmetry generators (swap first pair, swap second
/// pair, swap the pairs). Independent of canonical_index / CurvTensor::dense.
template <typename S>
DenseTensor<S> orbit_expand_bfs(const CurvTensor<S>& t) {
    DenseTensor<S> d(t.dim());
    for (const auto& [key, value] : t.components()) {
        std::set<std::pair<Index4, int>> seen;
        std::queue<SignedIndex> work;
        work.push({key, 1});
        while (!work.empty()) {
            SignedIndex cur = work.front();
            work.pop();
            if (!seen.insert({cur.idx, cur.sign}).second) continue;
            const auto [i, j, k, l] = cur.idx;
            work.push({{j, i, k, l}, -cur.sign});
            work.push({{i, j, l, k}, -cur.sign});
            work.push({{k, l, i, j}, cur.sign});
        }
        for (const auto& [idx, sign] : seen) {
            d.at(idx[0], idx[1], idx[2], idx[3]) = sign > 0 ? value : -value;
        }
    }
    return d;
}

/// Classical cyclic Jacobi eigenvalue iteration for small symmetric matrices;
/// returns (positive count, negative count) of the spectrum.
inline std::pair<int, int> eigen_sign_count(Matrix<double> a, int sweeps = 64) {
    const int n = a.rows();
    for (int s = 0; s < sweeps; ++s) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-18) continue;
                const double theta = 0.5 * std::atan2(2.0 * a(p, q), a(q, q) - a(p, p));
                const double c = std::cos(theta), t = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - t * akq;
                    a(k, q) = t * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - t * aqk;
                    a(q, k) = t * apk + c * aqk;
                }
            }
    }
    int pos = 0, neg = 0;
    for (int i = 0; i < n; ++i) (a(i, i) > 0 ? pos : neg)++;
    return {pos, neg};
}

/// Laplace-recursion determinant, exact; independent of the pivoting code.
inline Rational det_laplace(const Matrix<Rational>& m) {
    const int n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational acc(0);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        if (!m(0, col).is_zero()) {
            Matrix<Rational> sub(n - 1, n - 1);
            for (int i = 1; i < n; ++i)
                for (int j = 0, sj = 0; j < n; ++j) {
                    if (j == col) continue;
                    sub(i - 1, sj++) = m(i, j);
                }
            acc += Rational(sign) * m(0, col) * det_laplace(sub);
        }
        sign = -sign;
    }
    return acc;
}

/// Leading principal minors det(A[0..k][0..k]).
inline std::vector<Rational> leading_minors(const Matrix<Rational>& m) {
    std::vector<Rational> out;
    for (int k = 1; k <= m.rows(); ++k) {
        Matrix<Rational> sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = m(i, j);
        out.push_back(det_laplace(sub));
    }
    return out;
}

/// Brute-force Ricci bilinear table for a model whose inner product is the
/// diagonal matrix `diag`: rho(x,y) = sum_k (1/d_k) * (A(e_k,x,y,e_k)+A(e_k,y,x,e_k))/2.
template <typename S>
Matrix<S> ricci_bilinear_diag(const DenseTensor<S>& d, const std::vector<S>& diag) {
    const int m = d.dim;
    Matrix<S> b(m, m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            S acc(0);
            for (int k = 0; k < m; ++k)
                acc += (d.at(k, x, y, k) + d.at(k, y, x, k)) / (S(2) * diag[k]);
            b(x, y) = acc;
        }
    return b;
}

/// Exact complex rational a + b i, just enough arithmetic for the oracle.
struct CRat {
    Rational re{0}, im{0};
    CRat() = default;
    CRat(Rational r) : re(std::move(r)) {}
    CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

/// The doubled model by honest complex multilinearity: extend A1 + i A2
/// complex-bilinearly to V0 (x) C, evaluate on the real basis (e_k, i e_k) and
/// take real parts. The production sign table must reproduce this exactly.
inline DenseTensor<Rational> complexified_oracle(const DenseTensor<Rational>& a1,
                                                 const DenseTensor<Rational>& a2) {
    const int p = a1.dim;
    const int m = 2 * p;
    DenseTensor<Rational> out(m);
    const CRat iunit(Rational(0), Rational(1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    CRat val(a1.at(i % p, j % p, k % p, l % p), a2.at(i % p, j % p, k % p, l % p));
                    // each minus-block index multiplies the complex value by i
                    for (int count = (i >= p) + (j >= p) + (k >= p) + (l >= p); count > 0; --count)
                        val = val * iunit;
                    out.at(i, j, k, l) = val.re;
                }
    return out;
}

} // namespace oracles
