#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "actm/errors.hpp"
#include "actm/rational.hpp"

namespace actm {

/// Sparse multivariate polynomial over the exact rationals: exponent tuple ->
/// coefficient, zero coefficients never stored.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw VariableCountMismatch("MultiPoly: negative variable count");
    }

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_[Exponents(static_cast<size_t>(nvars), 0)] = c;
        return p;
    }

    static MultiPoly variable(int nvars, int idx) {
        return monomial(nvars, idx, 1, Rational(1));
    }

    static MultiPoly monomial(int nvars, int idx, unsigned power, const Rational& coeff) {
        MultiPoly p(nvars);
        if (idx < 0 || idx >= nvars) throw VariableCountMismatch("MultiPoly: variable index out of range");
        if (!coeff.is_zero()) {
            Exponents e(static_cast<size_t>(nvars), 0);
            e[idx] = power;
            p.terms_[std::move(e)] = coeff;
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Exponents(static_cast<size_t>(nvars_), 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        int d = -1;  // degree of the zero polynomial by the usual convention
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
        return d;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_) throw VariableCountMismatch("MultiPoly: exponent tuple length");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    MultiPoly operator-() const {
        MultiPoly p(nvars_);
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly p(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                p.add_term(e, ca * cb);
            }
        return p;
    }

    friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
        MultiPoly p(a.nvars_);
        if (s.is_zero()) return p;
        for (const auto& [e, c] : a.terms_) p.terms_[e] = c * s;
        return p;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& a) { return a * s; }

    MultiPoly partial_derivative(int var) const {
        if (var < 0 || var >= nvars_) throw VariableCountMismatch("partial_derivative: variable out of range");
        MultiPoly p(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d(e);
            d[var] -= 1;
            p.add_term(d, c * Rational(static_cast<long>(e[var])));
        }
        return p;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw VariableCountMismatch("evaluate: point length mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (int i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
            acc += term;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.to_string();
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << "*x" << i + 1;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    static unsigned total_degree(const Exponents& e) {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        return d;
    }

    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw VariableCountMismatch("MultiPoly: variable count mismatch");
    }

    int nvars_;
    std::map<Exponents, Rational> terms_;
};

} // namespace actm
