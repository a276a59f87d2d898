#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actm/ansatz.hpp"
#include "actm/generators.hpp"
#include "support/oracles.hpp"

using namespace actm;

TEST_CASE("seed validation recomputes constants and rejects bad data") {
    auto g2 = BilinearForm<Rational>::standard(2);
    CurvTensor<Rational> a2 = constant_curvature_einstein(2, Rational(1), g2);
    Seed<Rational> seed = make_seed(g2, constant_curvature(2, Rational(1), g2), a2);
    CHECK(seed.a1 == Rational(-1));  // realized constant of c = 1 at p = 2
    CHECK(seed.a2 == Rational(1));

    // zero A2 has Einstein constant 0: rejected (strict positivity)
    CHECK_THROWS_AS(make_seed(g2, CurvTensor<Rational>(2), CurvTensor<Rational>(2)), SeedInvariantViolation);
    // indefinite g rejected
    CHECK_THROWS_AS(make_seed(BilinearForm<Rational>::pseudo_euclidean(1, 1), CurvTensor<Rational>(2), a2),
                    SeedInvariantViolation);
    // non-Einstein A2 rejected: direct sum of different constants on p = 4
    auto g4 = BilinearForm<Rational>::standard(4);
    CurvTensor<Rational> mixed(4);
    mixed.set(0, 1, 0, 1, Rational(1));
    mixed.set(2, 3, 2, 3, Rational(2));
    CHECK_THROWS_AS(make_seed(g4, CurvTensor<Rational>(4), mixed), SeedInvariantViolation);
    // broken curvature symmetries rejected
    CurvTensor<Rational> lone(4);
    lone.set(0, 1, 2, 3, Rational(1));
    CHECK_THROWS_AS(make_seed(g4, lone, constant_curvature_einstein(4, Rational(1), g4)),
                    SeedInvariantViolation);
}

TEST_CASE("component table: the four sign blocks") {
    // p = 2, A2 = 0, A1 = constant curvature: the two-minus block carries -A1
    auto g2 = BilinearForm<Rational>::standard(2);
    CurvTensor<Rational> a1 = constant_curvature(2, Rational(1), g2);
    DenseTensor<Rational> table = complexified_dense(a1.dense(), CurvTensor<Rational>(2).dense());
    // basis order (e1+, e2+, e1-, e2-): A(e1+,e2+,e2-,e1-) = -A1(e1,e2,e2,e1)
    CHECK(table.at(0, 1, 3, 2) == -a1.dense().at(0, 1, 1, 0));
    // plus block and minus block carry +A1
    CHECK(table.at(0, 1, 0, 1) == a1.get(0, 1, 0, 1));
    CHECK(table.at(2, 3, 2, 3) == a1.get(0, 1, 0, 1));

    // A1 = 0: one-minus block carries -A2, three-minus block +A2
    CurvTensor<Rational> a2 = constant_curvature(2, Rational(1), g2);
    DenseTensor<Rational> table2 = complexified_dense(CurvTensor<Rational>(2).dense(), a2.dense());
    CHECK(table2.at(2, 1, 0, 1) == -a2.get(0, 1, 0, 1));  // A(e1-,e2+,e1+,e2+)
    CHECK(table2.at(0, 3, 2, 3) == a2.get(0, 1, 0, 1));   // A(e1+,e2-,e1-,e2-)

    // zero seeds give the zero model of doubled dimension
    DenseTensor<Rational> z = complexified_dense(CurvTensor<Rational>(3).dense(), CurvTensor<Rational>(3).dense());
    CHECK(max_abs(z).is_zero());
    CHECK(z.dim == 6);
}

TEST_CASE("component table equals the complex-arithmetic oracle") {
    SeededRng rng(3);
    auto corpus = ansatz_corpus(10, 808);
    for (int i = 0; i < 10; ++i) {
        const Seed<Rational>& s = corpus[i];
        DenseTensor<Rational> table = complexified_dense(s.A1.dense(), s.A2.dense());
        DenseTensor<Rational> oracle = oracles::complexified_oracle(s.A1.dense(), s.A2.dense());
        CHECK(table.a == oracle.a);
    }
}

TEST_CASE("build_model output: validity, neutral inner product, signature") {
    auto corpus = ansatz_corpus(6, 99);
    for (int i = 0; i < 6; ++i) {
        const Seed<Rational>& s = corpus[i];
        Model<Rational> m = build_model(s);
        CHECK(m.dim() == 2 * s.p());
        CHECK(validate_act(m.tensor()));
        Signature sig = signature(m.inner());
        CHECK(sig.positive == s.p());
        CHECK(sig.negative == s.p());
        // diag(+g, -g) block structure
        for (int a = 0; a < s.p(); ++a)
            for (int b = 0; b < s.p(); ++b) {
                CHECK(m.inner().gram()(a, b) == s.g.gram()(a, b));
                CHECK(m.inner().gram()(s.p() + a, s.p() + b) == -s.g.gram()(a, b));
                CHECK(m.inner().gram()(a, s.p() + b) == Rational(0));
            }
    }
    // invalid seed data is rejected at build time too
    auto g2 = BilinearForm<Rational>::standard(2);
    Seed<Rational> bad{g2, CurvTensor<Rational>(2), CurvTensor<Rational>(2), Rational(0), Rational(0)};
    CHECK_THROWS_AS(build_model(bad), SeedInvariantViolation);
}

TEST_CASE("construction is linear in the seed tensors") {
    auto g3 = BilinearForm<Rational>::standard(3);
    CurvTensor<Rational> a1 = constant_curvature(3, Rational(1), g3);
    CurvTensor<Rational> a1p = constant_curvature(3, Rational(-2), g3);
    CurvTensor<Rational> a2 = constant_curvature(3, Rational(2), g3);
    DenseTensor<Rational> lhs = complexified_dense((a1 + a1p).dense(), a2.dense());
    DenseTensor<Rational> rhs1 = complexified_dense(a1.dense(), a2.dense());
    DenseTensor<Rational> rhs2 = complexified_dense(a1p.dense(), CurvTensor<Rational>(3).dense());
    for (size_t k = 0; k < lhs.a.size(); ++k) CHECK(lhs.a[k] == rhs1.a[k] + rhs2.a[k]);
}

TEST_CASE("four-slot identity for the block complex structure, exactly") {
    auto corpus = ansatz_corpus(4, 31337);
    for (int i = 0; i < 4; ++i) {
        Model<Rational> m = build_model(corpus[i]);
        Matrix<Rational> j0 = mult_by_i_block<Rational>(corpus[i].p());
        DenseTensor<Rational> slot0 = contract_slot(m.dense(), j0, 0);
        for (int slot = 1; slot < 4; ++slot) CHECK(contract_slot(m.dense(), j0, slot).a == slot0.a);
    }
}

TEST_CASE("ansatz verification report") {
    auto corpus = ansatz_corpus(60, 616);
    // spread over the whole corpus, not just the first block
    for (size_t i = 0; i < corpus.size(); i += 7) {
        AnsatzReport rep = verify_ansatz(corpus[i]);
        CHECK(rep.all_pass());
        REQUIRE(rep.checks.size() == 4);
        for (const auto& c : rep.checks) CHECK(c.pass);
    }
    // A2 with Einstein constant 0 is rejected at the precondition
    auto g2 = BilinearForm<Rational>::standard(2);
    Seed<Rational> bad{g2, constant_curvature(2, Rational(1), g2), CurvTensor<Rational>(2), Rational(0),
                       Rational(0)};
    CHECK_THROWS_AS(verify_ansatz(bad), SeedInvariantViolation);
}

TEST_CASE("the flagship example is a built model in disguise") {
    // a p=2 seed with a1 = 0, a2 = s classifies identically to the example
    auto g2 = BilinearForm<Rational>::standard(2);
    Seed<Rational> seed = make_seed(g2, CurvTensor<Rational>(2), constant_curvature_einstein(2, Rational(1), g2));
    Classification cls = classify_simple(build_model(seed));
    REQUIRE(cls.kind == ModelKind::SimpleComplex);
    CHECK(cls.a1 == Rational(0));
    CHECK(cls.a2_squared == Rational(4));  // spectrum {0 +- 2i}, matching s = 1
}
