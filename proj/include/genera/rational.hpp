#pragma once

#include <gmpxx.h>

#include <string>

#include "genera/errors.hpp"

namespace genera {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Arithmetic is exact; there is no floating-point path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
    Rational(long num, long den);

    // Accepts "num", "num/den", optional leading '-'.
    static Rational parse(const std::string& s);

    static Rational binomial(unsigned long n, unsigned long k);
    static Rational factorial(unsigned long n);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const;

    std::string str() const;  // "num" or "num/den"
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_.canonicalize();
}

inline Rational Rational::parse(const std::string& s) {
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw usage_error("malformed rational '" + s + "'");
    if (sgn(v.get_den()) == 0) throw usage_error("zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

inline Rational Rational::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

inline Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

inline Rational Rational::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    return Rational(1 / v_);
}

inline Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

inline Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

inline std::string Rational::str() const {
    return v_.get_str();
}

}  // namespace genera
