#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include "actm/errors.hpp"

namespace actm {

/// Exact rational scalar. Invariant: always reduced to lowest terms with a
/// positive denominator (maintained by the underlying mpq representation).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}       // NOLINT: implicit so integer literals flow into scalar code
    Rational(long n) : q_(static_cast<long>(n)) {}

    Rational(long num, long den) {
        if (den == 0) throw ParseError("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Parses "p", "-p", "p/q". Anything else (including decimals) is a ParseError.
    static Rational parse(const std::string& text) {
        try {
            mpq_class q(text, 10);
            if (q.get_den() == 0) throw ParseError("Rational: zero denominator in '" + text + "'");
            q.canonicalize();
            Rational r;
            r.q_ = q;
            return r;
        } catch (const std::invalid_argument&) {
            throw ParseError("Rational: cannot parse '" + text + "'");
        }
    }

    /// Exact conversion: every finite double is a dyadic rational.
    static Rational from_double(double x) {
        Rational r;
        r.q_ = mpq_class(x);
        return r;
    }

    Rational numerator() const {
        Rational r;
        r.q_ = mpq_class(q_.get_num());
        return r;
    }
    Rational denominator() const {
        Rational r;
        r.q_ = mpq_class(q_.get_den());
        return r;
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Uniform scalar helpers so the linear-algebra templates work over both the
// exact field and IEEE doubles.
template <typename S>
inline constexpr bool is_exact_scalar_v = std::is_same_v<S, Rational>;

inline double to_double(const Rational& r) { return r.to_double(); }
inline constexpr double to_double(double x) { return x; }

inline bool scalar_is_zero(const Rational& r) { return r.is_zero(); }
inline bool scalar_is_zero(double x) { return x == 0.0; }

inline Rational scalar_abs(const Rational& r) { return abs(r); }
inline double scalar_abs(double x) { return x < 0 ? -x : x; }

} // namespace actm
