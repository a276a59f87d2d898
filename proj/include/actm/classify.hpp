#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "actm/model.hpp"

namespace actm {

enum class ModelKind { Einstein, SimpleComplex, NotSimple, NotCommuting };

enum class NotSimpleReason {
    None,
    SquareNotScalar,       // (rho - a1)^2 is not a scalar multiple of the identity
    NilpotentTracelessPart,// (rho - a1)^2 = 0 but rho != a1 * id
    RealEigenvaluePair     // (rho - a1)^2 = +c * id with c > 0: two real eigenvalues
};

inline std::string to_string(NotSimpleReason r) {
    switch (r) {
        case NotSimpleReason::SquareNotScalar: return "rho not complex diagonalizable with single conjugate pair";
        case NotSimpleReason::NilpotentTracelessPart: return "rho has a nilpotent part";
        case NotSimpleReason::RealEigenvaluePair: return "rho has two distinct real eigenvalues";
        default: return "";
    }
}

/// Result of the simple-spectrum classification. The traceless part
/// S = rho - a1*id is kept exactly; the complex structure J = S/sqrt(c) only
/// exists on the floating side since sqrt(c) is irrational in general.
struct Classification {
    ModelKind kind = ModelKind::NotSimple;
    Rational a1{0};
    Rational a2_squared{0};
    Matrix<Rational> traceless;
    Matrix<double> complex_structure;
    NotSimpleReason reason = NotSimpleReason::None;
};

/// Slot-substitution form of the commuting property:
/// A(rho v1,v2,v3,v4) = A(v1,rho v2,v3,v4) = ... for all basis quadruples.
/// Exact and finite; this is the authoritative decision procedure.
inline bool commuting_tensor_identity(const Model<Rational>& model) {
    Matrix<Rational> rho = ricci(model);
    const DenseTensor<Rational>& d = model.dense();
    DenseTensor<Rational> slot0 = contract_slot(d, rho, 0);
    for (int slot = 1; slot < 4; ++slot)
        if (contract_slot(d, rho, slot).a != slot0.a) return false;
    return true;
}

namespace detail {

inline uint64_t xorshift64(uint64_t& state) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
}

inline Vector<Rational> sampled_vector(int dim, uint64_t& state) {
    Vector<Rational> v(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
        v[i] = Rational(static_cast<long>(xorshift64(state) % 7) - 3);
    return v;
}

} // namespace detail

/// J(v) rho = rho J(v) on a finite sufficient family: all basis vectors, all
/// pairwise sums e_i + e_j (enough by polarization, the condition being
/// quadratic in v), plus `samples` extra seeded vectors.
inline bool commuting_via_jacobi(const Model<Rational>& model, int samples, uint64_t seed = 0x51caffeULL) {
    if (samples < 1) throw Error("commuting_via_jacobi: samples must be >= 1");
    const int m = model.dim();
    Matrix<Rational> rho = ricci(model);
    auto commutes = [&](const Vector<Rational>& v) {
        Matrix<Rational> j = jacobi(model, v);
        return j * rho == rho * j;
    };
    for (int i = 0; i < m; ++i)
        if (!commutes(basis_vector<Rational>(m, i))) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Vector<Rational> v = basis_vector<Rational>(m, i);
            v[j] += Rational(1);
            if (!commutes(v)) return false;
        }
    uint64_t state = seed ? seed : 1;
    for (int s = 0; s < samples; ++s)
        if (!commutes(detail::sampled_vector(m, state))) return false;
    return true;
}

/// R(v1,v2) rho = rho R(v1,v2); basis pairs are already sufficient by
/// bilinearity, seeded samples are kept as cross-validation.
inline bool commuting_via_skew_curv(const Model<Rational>& model, int samples, uint64_t seed = 0x51caffeULL) {
    if (samples < 1) throw Error("commuting_via_skew_curv: samples must be >= 1");
    const int m = model.dim();
    Matrix<Rational> rho = ricci(model);
    auto commutes = [&](const Vector<Rational>& v, const Vector<Rational>& w) {
        Matrix<Rational> r = skew_curv(model, v, w);
        return r * rho == rho * r;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!commutes(basis_vector<Rational>(m, i), basis_vector<Rational>(m, j))) return false;
    uint64_t state = seed ? seed : 1;
    for (int s = 0; s < samples; ++s) {
        Vector<Rational> v = detail::sampled_vector(m, state);
        Vector<Rational> w = detail::sampled_vector(m, state);
        if (!commutes(v, w)) return false;
    }
    return true;
}

/// Decides the commuting property, then the shape of Spec(rho) through the
/// exact minimal quadratic of the Ricci operator.
inline Classification classify_simple(const Model<Rational>& model) {
    Classification out;
    if (!commuting_tensor_identity(model)) {
        out.kind = ModelKind::NotCommuting;
        return out;
    }
    Matrix<Rational> rho = ricci(model);
    auto mq = minimal_quadratic(rho);
    out.a1 = mq.a1;
    out.traceless = mq.traceless;
    const int m = model.dim();
    if (!mq.is_quadratic) {
        out.kind = ModelKind::NotSimple;
        out.reason = NotSimpleReason::SquareNotScalar;
        return out;
    }
    if (mq.c.sign() > 0) {
        out.kind = ModelKind::SimpleComplex;
        out.a2_squared = mq.c;
        const double inv_a2 = 1.0 / std::sqrt(mq.c.to_double());
        out.complex_structure = Matrix<double>(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) out.complex_structure(i, j) = mq.traceless(i, j).to_double() * inv_a2;
        return out;
    }
    if (mq.c.is_zero()) {
        if (mq.traceless == Matrix<Rational>(m, m)) {
            out.kind = ModelKind::Einstein;
        } else {
            out.kind = ModelKind::NotSimple;
            out.reason = NotSimpleReason::NilpotentTracelessPart;
        }
        return out;
    }
    out.kind = ModelKind::NotSimple;
    out.reason = NotSimpleReason::RealEigenvaluePair;
    return out;
}

} // namespace actm
