#pragma once

#include <string>
#include <vector>

#include "actm/classify.hpp"
#include "actm/model.hpp"

namespace actm {

/// Construction data: a positive definite space with two Einstein curvature
/// tensors. The constants a1, a2 are always recomputed from the tensors, never
/// trusted from input.
template <typename S>
struct Seed {
    BilinearForm<S> g;
    CurvTensor<S> A1;
    CurvTensor<S> A2;
    S a1{0};
    S a2{0};

    int p() const { return g.dim(); }
};

/// Validates the defining requirements of a seed over the exact field and
/// fills in the Einstein constants: g positive definite, A1/A2 algebraic
/// curvature tensors, both Einstein, and the A2 constant strictly positive.
inline Seed<Rational> make_seed(BilinearForm<Rational> g, CurvTensor<Rational> a1t, CurvTensor<Rational> a2t) {
    const int p = g.dim();
    if (a1t.dim() != p || a2t.dim() != p)
        throw SeedInvariantViolation("make_seed: tensor dimensions do not match the form");
    if (!is_positive_definite(g)) throw SeedInvariantViolation("make_seed: form is not positive definite");
    if (!validate_act(a1t)) throw SeedInvariantViolation("make_seed: A1 fails the curvature symmetries");
    if (!validate_act(a2t)) throw SeedInvariantViolation("make_seed: A2 fails the curvature symmetries");
    Seed<Rational> seed{std::move(g), std::move(a1t), std::move(a2t), Rational(0), Rational(0)};
    auto e1 = is_einstein(Model<Rational>::make_unchecked(seed.g, seed.A1));
    if (!e1) throw SeedInvariantViolation("make_seed: A1 is not Einstein");
    auto e2 = is_einstein(Model<Rational>::make_unchecked(seed.g, seed.A2));
    if (!e2) throw SeedInvariantViolation("make_seed: A2 is not Einstein");
    if (e2->sign() <= 0) throw SeedInvariantViolation("make_seed: A2 Einstein constant must be positive");
    seed.a1 = *e1;
    seed.a2 = *e2;
    return seed;
}

/// Multiplication by i on V0 + i V0 with the plus block first:
/// e_i^+ -> e_i^-, e_i^- -> -e_i^+.
template <typename S>
Matrix<S> mult_by_i_block(int p) {
    Matrix<S> j(2 * p, 2 * p);
    for (int i = 0; i < p; ++i) {
        j(p + i, i) = S(1);
        j(i, p + i) = S(-1);
    }
    return j;
}

/// diag(+g, -g): the real part of the complex-bilinear extension of g.
template <typename S>
BilinearForm<S> neutral_inner(const BilinearForm<S>& g) {
    const int p = g.dim();
    Matrix<S> gram(2 * p, 2 * p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            gram(i, j) = g.gram()(i, j);
            gram(p + i, p + j) = -g.gram()(i, j);
        }
    return BilinearForm<S>(std::move(gram));
}

/// The component table of Re(A1 + i A2) on the basis (e^+ block, e^- block):
/// with n = number of minus-block indices, the component is
/// n=0: +A1, n=1: -A2, n=2: -A1, n=3: +A2, n=4: +A1
/// (the real part of i^n times A1 + i A2).
template <typename S>
DenseTensor<S> complexified_dense(const DenseTensor<S>& a1, const DenseTensor<S>& a2) {
    const int p = a1.dim;
    if (a2.dim != p) throw DimensionMismatch("complexified_dense: tensor dimensions differ");
    DenseTensor<S> out(2 * p);
    const int m = 2 * p;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    const int minus = (i >= p) + (j >= p) + (k >= p) + (l >= p);
                    const S& base = (minus % 2 == 0) ? a1.at(i % p, j % p, k % p, l % p)
                                                     : a2.at(i % p, j % p, k % p, l % p);
                    switch (minus) {
                        case 0: case 4: out.at(i, j, k, l) = base; break;
                        case 1: out.at(i, j, k, l) = -base; break;
                        case 2: out.at(i, j, k, l) = -base; break;
                        case 3: out.at(i, j, k, l) = base; break;
                    }
                }
    return out;
}

/// The neutral-signature model built from a seed; dimension doubles, the
/// inner product is diag(+g,-g) and the components follow the sign table of
/// complexified_dense. Validates the seed first.
inline Model<Rational> build_model(const Seed<Rational>& seed) {
    Seed<Rational> checked = make_seed(seed.g, seed.A1, seed.A2);  // throws SeedInvariantViolation
    DenseTensor<Rational> dense = complexified_dense(checked.A1.dense(), checked.A2.dense());
    return Model<Rational>::make_unchecked(neutral_inner(checked.g), from_dense(dense));
}

/// Unvalidated counterpart used by transforms, sign flips and floating paths.
template <typename S>
Model<S> build_model_unchecked(const Seed<S>& seed) {
    DenseTensor<S> dense = complexified_dense(seed.A1.dense(), seed.A2.dense());
    return Model<S>::make_unchecked(neutral_inner(seed.g), from_dense(dense));
}

struct AnsatzCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AnsatzReport {
    std::vector<AnsatzCheck> checks;
    Rational a1{0};
    Rational a2{0};
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Exact verification that the construction has the advertised structure:
/// (a) rho e_i^+- = 2 a1 e_i^+- +- 2 a2 e_i^-+ entrywise,
/// (b) the classification is SimpleComplex(2 a1, 4 a2^2),
/// (c) the exact traceless part equals 2 a2 * (multiplication by i),
/// (d) the commuting identity holds.
inline AnsatzReport verify_ansatz(const Seed<Rational>& seed_in) {
    Seed<Rational> seed = make_seed(seed_in.g, seed_in.A1, seed_in.A2);
    AnsatzReport report;
    report.a1 = seed.a1;
    report.a2 = seed.a2;
    const int p = seed.p();
    Model<Rational> model = build_model(seed);

    Matrix<Rational> rho = ricci(model);
    Matrix<Rational> expected(2 * p, 2 * p);
    for (int i = 0; i < p; ++i) {
        expected(i, i) = Rational(2) * seed.a1;
        expected(p + i, p + i) = Rational(2) * seed.a1;
        expected(p + i, i) = Rational(2) * seed.a2;   // rho e_i^+ has +2 a2 along e_i^-
        expected(i, p + i) = -Rational(2) * seed.a2;  // rho e_i^- has -2 a2 along e_i^+
    }
    report.checks.push_back({"ricci-maps-plus-minus-pairs", rho == expected, ""});

    Classification cls = classify_simple(model);
    bool class_ok = cls.kind == ModelKind::SimpleComplex && cls.a1 == Rational(2) * seed.a1 &&
                    cls.a2_squared == Rational(4) * seed.a2 * seed.a2;
    report.checks.push_back({"classified-simple-complex", class_ok, ""});

    bool s_ok = class_ok && cls.traceless == (Rational(2) * seed.a2) * mult_by_i_block<Rational>(p);
    report.checks.push_back({"traceless-part-is-multiplication-by-i", s_ok, ""});

    report.checks.push_back({"jacobi-ricci-commuting", commuting_tensor_identity(model), ""});
    return report;
}

} // namespace actm
