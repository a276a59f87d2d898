#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "actm/errors.hpp"
#include "actm/linalg.hpp"
#include "actm/matrix.hpp"

namespace actm {

using Index4 = std::array<int, 4>;

struct CanonicalIndex {
    Index4 key;
    int sign;  // 0 when the symmetries force the component to vanish
};

/// Orbit representative of (i,j,k,l) under the sign symmetries: antisymmetry
/// inside each pair and symmetry under swapping the pairs. Representatives
/// have i<j, k<l and (i,j) <= (k,l) lexicographically.
inline CanonicalIndex canonical_index(int i, int j, int k, int l) {
    if (i == j || k == l) return {{i, j, k, l}, 0};
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    if (k < i || (k == i && l < j)) {
        std::swap(i, k);
        std::swap(j, l);
    }
    return {{i, j, k, l}, sign};
}

/// Dense rank-4 component array; the uncompressed view of a CurvTensor.
template <typename S>
struct DenseTensor {
    int dim = 0;
    std::vector<S> a;

    DenseTensor() = default;
    explicit DenseTensor(int m)
        : dim(m), a(static_cast<size_t>(m) * m * m * m, S(0)) {}

    S& at(int i, int j, int k, int l) {
        return a[static_cast<size_t>(((i * dim + j) * dim + k)) * dim + l];
    }
    const S& at(int i, int j, int k, int l) const {
        return a[static_cast<size_t>(((i * dim + j) * dim + k)) * dim + l];
    }
};

/// Rank-4 algebraic curvature tensor in symmetry-canonical sparse storage:
/// only orbit representatives are kept, expansion applies the sign symmetries.
/// The first Bianchi identity is not a storage symmetry; validate_act decides it.
template <typename S>
class CurvTensor {
public:
    CurvTensor() : dim_(0) {}
    explicit CurvTensor(int dim) : dim_(dim) {
        if (dim < 0) throw DimensionMismatch("CurvTensor: negative dimension");
    }

    int dim() const { return dim_; }
    const std::map<Index4, S>& components() const { return comp_; }
    bool is_zero() const { return comp_.empty(); }

    /// Assigns the whole symmetry orbit of (i,j,k,l). Zero erases.
    void set(int i, int j, int k, int l, const S& value) {
        auto c = checked_canonical(i, j, k, l);
        if (c.sign == 0) {
            if (!scalar_is_zero(value))
                throw InvalidTensor("CurvTensor::set: component is forced to zero by antisymmetry");
            return;
        }
        S stored = c.sign > 0 ? value : -value;
        if (scalar_is_zero(stored))
            comp_.erase(c.key);
        else
            comp_[c.key] = stored;
    }

    void add(int i, int j, int k, int l, const S& value) {
        if (scalar_is_zero(value)) return;
        set(i, j, k, l, get(i, j, k, l) + value);
    }

    S get(int i, int j, int k, int l) const {
        auto c = checked_canonical(i, j, k, l);
        if (c.sign == 0) return S(0);
        auto it = comp_.find(c.key);
        if (it == comp_.end()) return S(0);
        return c.sign > 0 ? it->second : -it->second;
    }

    DenseTensor<S> dense() const {
        DenseTensor<S> d(dim_);
        for (const auto& [key, value] : comp_) {
            const auto [i, j, k, l] = key;
            // orbit of the representative: 8 signed index patterns
            d.at(i, j, k, l) = value;
            d.at(j, i, k, l) = -value;
            d.at(i, j, l, k) = -value;
            d.at(j, i, l, k) = value;
            d.at(k, l, i, j) = value;
            d.at(l, k, i, j) = -value;
            d.at(k, l, j, i) = -value;
            d.at(l, k, j, i) = value;
        }
        return d;
    }

    CurvTensor& operator+=(const CurvTensor& o) {
        if (dim_ != o.dim_) throw DimensionMismatch("CurvTensor: dimension mismatch");
        for (const auto& [key, value] : o.comp_) add(key[0], key[1], key[2], key[3], value);
        return *this;
    }
    friend CurvTensor operator+(CurvTensor a, const CurvTensor& b) { return a += b; }

    CurvTensor& operator*=(const S& s) {
        if (scalar_is_zero(s)) {
            comp_.clear();
            return *this;
        }
        for (auto& [key, value] : comp_) value *= s;
        return *this;
    }
    friend CurvTensor operator*(CurvTensor a, const S& s) { return a *= s; }
    friend CurvTensor operator*(const S& s, CurvTensor a) { return a *= s; }

    friend bool operator==(const CurvTensor& a, const CurvTensor& b) {
        return a.dim_ == b.dim_ && a.comp_ == b.comp_;
    }

private:
    CanonicalIndex checked_canonical(int i, int j, int k, int l) const {
        if (i < 0 || j < 0 || k < 0 || l < 0 || i >= dim_ || j >= dim_ || k >= dim_ || l >= dim_)
            throw DimensionMismatch("CurvTensor: index out of range");
        return canonical_index(i, j, k, l);
    }

    int dim_;
    std::map<Index4, S> comp_;
};

/// Exact compression of a dense array that already has the pair symmetries.
template <typename S>
CurvTensor<S> from_dense(const DenseTensor<S>& d) {
    CurvTensor<S> t(d.dim);
    for (int i = 0; i < d.dim; ++i)
        for (int j = i + 1; j < d.dim; ++j)
            for (int k = i; k < d.dim; ++k)
                for (int l = k + 1; l < d.dim; ++l) {
                    if (k == i && l < j) continue;
                    const S& v = d.at(i, j, k, l);
                    if (!scalar_is_zero(v)) t.set(i, j, k, l, v);
                }
    return t;
}

/// First index quadruple where A(i,j,k,l) + A(j,k,i,l) + A(k,i,j,l) != 0.
template <typename S>
std::optional<Index4> first_bianchi_violation(const DenseTensor<S>& d) {
    for (int i = 0; i < d.dim; ++i)
        for (int j = 0; j < d.dim; ++j)
            for (int k = 0; k < d.dim; ++k)
                for (int l = 0; l < d.dim; ++l) {
                    S sum = d.at(i, j, k, l) + d.at(j, k, i, l) + d.at(k, i, j, l);
                    if (!scalar_is_zero(sum)) return Index4{i, j, k, l};
                }
    return std::nullopt;
}

inline constexpr int kMaxFullBianchiDim = 8;

/// Full check of the curvature symmetries on the expanded tensor. The sign
/// symmetries hold by construction of the canonical storage, so the decidable
/// content is the first Bianchi identity, swept over every index quadruple.
/// Refuses dimensions above kMaxFullBianchiDim; use validate_act_sampled there.
template <typename S>
bool validate_act(const CurvTensor<S>& t) {
    if (t.dim() > kMaxFullBianchiDim)
        throw Error("validate_act: dimension too large for the exhaustive sweep; call validate_act_sampled");
    return !first_bianchi_violation(t.dense()).has_value();
}

/// Seeded random sweep for dimensions where the full quadruple loop is too big.
template <typename S>
bool validate_act_sampled(const CurvTensor<S>& t, int samples, uint64_t seed = 0x5eedULL) {
    const int m = t.dim();
    if (m == 0) return true;
    DenseTensor<S> d = t.dense();
    uint64_t state = seed ? seed : 1;
    auto next = [&state]() {
        // xorshift64; fixed algorithm so sampling is reproducible everywhere
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int s = 0; s < samples; ++s) {
        int i = static_cast<int>(next() % m), j = static_cast<int>(next() % m);
        int k = static_cast<int>(next() % m), l = static_cast<int>(next() % m);
        S sum = d.at(i, j, k, l) + d.at(j, k, i, l) + d.at(k, i, j, l);
        if (!scalar_is_zero(sum)) return false;
    }
    return true;
}

inline DenseTensor<double> to_double(const DenseTensor<Rational>& d) {
    DenseTensor<double> out(d.dim);
    for (size_t k = 0; k < d.a.size(); ++k) out.a[k] = d.a[k].to_double();
    return out;
}

inline CurvTensor<double> to_double(const CurvTensor<Rational>& t) {
    CurvTensor<double> out(t.dim());
    for (const auto& [key, value] : t.components()) out.set(key[0], key[1], key[2], key[3], value.to_double());
    return out;
}

} // namespace actm
