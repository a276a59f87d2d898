#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "actm/ansatz.hpp"
#include "actm/classify.hpp"
#include "actm/model.hpp"

namespace actm {

/// Deterministic source of randomness: std::mt19937_64 (fully specified by the
/// standard) with plain modulo reduction, so every platform draws the same
/// sequences for the same seed.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational rational_in(long lo, long hi, long max_den = 3) {
        long den = int_in(1, max_den);
        return Rational(int_in(lo * den, hi * den), den);
    }

private:
    std::mt19937_64 eng_;
};

inline Matrix<Rational> random_matrix(int n, SeededRng& rng, long lo = -2, long hi = 2) {
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rational(rng.int_in(lo, hi));
    return m;
}

inline Matrix<Rational> random_invertible(int n, SeededRng& rng, long lo = -2, long hi = 2) {
    for (;;) {
        Matrix<Rational> m = random_matrix(n, rng, lo, hi);
        try {
            (void)inverse(m);
            return m;
        } catch (const SingularMatrix&) {
        }
    }
}

/// Random positive definite form built as P^T P for invertible rational P.
inline BilinearForm<Rational> random_spd(int p, SeededRng& rng) {
    Matrix<Rational> m = random_invertible(p, rng);
    return BilinearForm<Rational>(m.transpose() * m);
}

/// The block complex structure [[0,-I],[I,0]] on an even-dimensional space.
inline Matrix<Rational> standard_symplectic(int p) {
    if (p % 2 != 0) throw DimensionMismatch("standard_symplectic: dimension must be even");
    return mult_by_i_block<Rational>(p / 2);
}

/// kaehler_like scaled so the Einstein constant is exactly 1.
inline CurvTensor<Rational> normalized_kaehler(const Matrix<Rational>& phi, const BilinearForm<Rational>& g) {
    CurvTensor<Rational> t = kaehler_like(phi, g);
    auto a = is_einstein(Model<Rational>::make_unchecked(g, t));
    if (!a || a->is_zero()) throw PhiNotComplexStructure("normalized_kaehler: generator is not Einstein");
    return t * (Rational(1) / *a);
}

/// Constant-curvature tensor scaled to a prescribed Einstein constant; probes
/// with c = 1 and rescales, so it is independent of the realized trace sign.
inline CurvTensor<Rational> constant_curvature_einstein(int p, const Rational& target,
                                                        const BilinearForm<Rational>& g) {
    CurvTensor<Rational> probe = constant_curvature(p, Rational(1), g);
    auto a = is_einstein(Model<Rational>::make_unchecked(g, probe));
    if (!a || a->is_zero()) throw DimensionMismatch("constant_curvature_einstein: needs dim >= 2");
    return probe * (target / *a);
}

/// Deterministic seed corpus over p in {2,3,4}: A1 ranges over zero and
/// constant curvature c in {-1,1,2}; A2 over the normalized Kaehler generator
/// (even p) and positive constant curvature; g over identity, an integer
/// diagonal and a random congruence P^T P. At least `min_count` seeds.
inline std::vector<Seed<Rational>> ansatz_corpus(size_t min_count, uint64_t seed) {
    SeededRng rng(seed);
    std::vector<Seed<Rational>> out;
    const long a1_choices[] = {0, -1, 1, 2};
    while (out.size() < min_count) {
        for (int p = 2; p <= 4; ++p) {
            std::vector<BilinearForm<Rational>> forms;
            forms.push_back(BilinearForm<Rational>::standard(p));
            {
                Matrix<Rational> d(p, p);
                for (int i = 0; i < p; ++i) d(i, i) = Rational(i + 1);
                forms.push_back(BilinearForm<Rational>(std::move(d)));
            }
            forms.push_back(random_spd(p, rng));
            for (const auto& g : forms) {
                for (long c1 : a1_choices) {
                    CurvTensor<Rational> a1t =
                        c1 == 0 ? CurvTensor<Rational>(p) : constant_curvature(p, Rational(c1), g);
                    // A2 alternatives with strictly positive Einstein constant
                    std::vector<CurvTensor<Rational>> a2s;
                    a2s.push_back(constant_curvature_einstein(p, Rational(1), g));
                    a2s.push_back(constant_curvature_einstein(p, Rational(2), g));
                    if (p % 2 == 0 && g.gram() == Matrix<Rational>::identity(p))
                        a2s.push_back(normalized_kaehler(standard_symplectic(p), g));
                    for (auto& a2t : a2s) out.push_back(make_seed(g, a1t, a2t));
                }
            }
            if (p % 2 == 0) {
                // conjugated Kaehler pair over a non-identity form: phi stays
                // compatible with g = P^T P when conjugated by P
                Matrix<Rational> pm = random_invertible(p, rng);
                BilinearForm<Rational> gc(pm.transpose() * pm);
                Matrix<Rational> phi = inverse(pm) * standard_symplectic(p) * pm;
                CurvTensor<Rational> a2t = normalized_kaehler(phi, gc);
                for (long c1 : a1_choices) {
                    CurvTensor<Rational> a1t =
                        c1 == 0 ? CurvTensor<Rational>(p) : constant_curvature(p, Rational(c1), gc);
                    out.push_back(make_seed(gc, a1t, a2t));
                }
            }
        }
    }
    return out;
}

/// Adds +1 to one canonical component with at most three distinct indices.
/// Such a perturbation never touches a four-distinct-index Bianchi sum, so the
/// result is still a valid curvature tensor; generically it stops commuting.
inline Model<Rational> perturb_one_component(const Model<Rational>& model, SeededRng& rng) {
    const int m = model.dim();
    if (m < 3) throw DimensionMismatch("perturb_one_component: need dimension >= 3");
    for (;;) {
        int a = static_cast<int>(rng.int_in(0, m - 1));
        int b = static_cast<int>(rng.int_in(0, m - 1));
        int c = static_cast<int>(rng.int_in(0, m - 1));
        if (a == b || a == c || b == c) continue;
        CurvTensor<Rational> t = model.tensor();
        t.add(a, b, a, c, Rational(1));
        return Model<Rational>::make(model.inner(), std::move(t));
    }
}

/// Random skew-adjoint T with |T| < 1 on (V0, g): T = g^{-1} K for a random
/// antisymmetric K, halved until the contraction condition holds.
inline Matrix<Rational> random_contraction_skew(const BilinearForm<Rational>& g, SeededRng& rng) {
    const int p = g.dim();
    Matrix<Rational> k(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            Rational v = rng.rational_in(-2, 2);
            k(i, j) = v;
            k(j, i) = -v;
        }
    Matrix<Rational> t = inverse(g.gram()) * k;
    const Rational half(1, 2);
    for (int guard = 0; guard < 256; ++guard) {
        if (contraction_positive(t, g)) return t;
        t *= half;
    }
    throw IllConditioned("random_contraction_skew: could not scale under the norm bound");
}

/// Random T that is definitely not skew-adjoint for g.
inline Matrix<Rational> random_non_skew(const BilinearForm<Rational>& g, SeededRng& rng) {
    const int p = g.dim();
    for (;;) {
        Matrix<Rational> t = random_matrix(p, rng);
        if (!is_skew_adjoint(t, g)) return t;
    }
}

/// Einstein model generators behind the CLI: kind is "constant" or "kaehler",
/// `constant` is the requested Einstein constant.
inline Model<Rational> random_einstein_model(int dim, const std::string& kind, const Rational& constant,
                                             uint64_t seed) {
    SeededRng rng(seed);
    BilinearForm<Rational> g = random_spd(dim, rng);
    if (kind == "constant") {
        if (dim < 2) throw DimensionMismatch("random-einstein: constant curvature needs dim >= 2");
        return Model<Rational>::make_unchecked(g, constant_curvature_einstein(dim, constant, g));
    }
    if (kind == "kaehler") {
        if (dim % 2 != 0) throw DimensionMismatch("random-einstein: kaehler kind needs even dimension");
        // conjugate the standard pair so phi stays compatible with g = P^T P
        Matrix<Rational> p_map = random_invertible(dim, rng);
        BilinearForm<Rational> gg(p_map.transpose() * p_map);
        Matrix<Rational> phi = inverse(p_map) * standard_symplectic(dim) * p_map;
        CurvTensor<Rational> t = kaehler_like(phi, gg);
        Model<Rational> base = Model<Rational>::make_unchecked(gg, t);
        auto a = is_einstein(base);
        if (!a || a->is_zero()) throw PhiNotComplexStructure("random-einstein: kaehler generator failed");
        return Model<Rational>::make_unchecked(gg, t * (constant / *a));
    }
    throw ParseError("random-einstein: unknown kind '" + kind + "'");
}

} // namespace actm
