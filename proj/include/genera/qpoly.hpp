#pragma once

#include <string>
#include <vector>

#include "genera/errors.hpp"
#include "genera/rational.hpp"

namespace genera {

// Truncated polynomial in q over the exact rationals: coefficients of
// q^0..q^q_order, fixed length, trailing zeros kept. Ring operations
// truncate above q_order; mixing q_orders is a usage error.
class QPoly {
public:
    explicit QPoly(int q_order) : c_(static_cast<size_t>(q_order) + 1) {
        if (q_order < 0) throw usage_error("negative q_order");
    }
    QPoly(int q_order, Rational constant) : QPoly(q_order) { c_[0] = std::move(constant); }

    static QPoly one(int q_order) { return QPoly(q_order, Rational(1)); }
    // the monomial q^k (k <= q_order)
    static QPoly q_power(int q_order, int k) {
        QPoly p(q_order);
        if (k < 0 || k > q_order) throw usage_error("q exponent out of range");
        p.c_[static_cast<size_t>(k)] = Rational(1);
        return p;
    }

    int q_order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    void set_coeff(int k, Rational v) { c_.at(static_cast<size_t>(k)) = std::move(v); }

    // the q^0 part, i.e. reduction mod q
    const Rational& constant() const { return c_[0]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_unit() const { return !c_[0].is_zero(); }

    QPoly operator-() const {
        QPoly r(q_order());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    QPoly& operator+=(const QPoly& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }
    QPoly& operator*=(const Rational& r) {
        for (auto& x : c_) x *= r;
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        a.check(b);
        QPoly r(a.q_order());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; i + j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend QPoly operator*(QPoly a, const Rational& r) { a *= r; return a; }

    // inverse of a unit, truncated at q_order
    QPoly inverse() const {
        if (!is_unit()) throw domain_error("q-polynomial with zero constant term is not invertible");
        QPoly r(q_order());
        Rational u = c_[0].inverse();
        r.c_[0] = u;
        for (size_t k = 1; k < c_.size(); ++k) {
            Rational acc;
            for (size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -(acc * u);
        }
        return r;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    // "1/2 - 3*q + q^2"; "0" for the zero polynomial
    std::string str() const;

private:
    void check(const QPoly& o) const {
        if (o.c_.size() != c_.size()) throw usage_error("mixed q_order in q-polynomial arithmetic");
    }
    std::vector<Rational> c_;
};

inline std::string QPoly::str() const {
    std::string out;
    for (int k = 0; k <= q_order(); ++k) {
        const Rational& v = coeff(k);
        if (v.is_zero()) continue;
        Rational a = v;
        if (out.empty()) {
            if (a.sign() < 0) { out += "-"; a = -a; }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        std::string mag = a.str();
        if (k == 0) {
            out += mag;
        } else {
            if (!a.is_one()) out += mag + "*";
            out += "q";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace genera
