#pragma once

#include <string>
#include <vector>

#include "genera/errors.hpp"
#include "genera/scalar.hpp"

namespace genera {

// Univariate formal power series truncated at a fixed order, coefficients in
// one scalar ring with one q_order throughout. Truncation order is an
// explicit contract: operations never extend or guess orders, mismatches
// are errors.
template <class S>
class Series {
public:
    Series(int order, int q_order)
        : order_(order), q_order_(q_order),
          c_(static_cast<size_t>(order) + 1, ScalarRing<S>::zero(q_order)) {
        if (order < 0) throw usage_error("negative series order");
        if (q_order < 0) throw usage_error("negative q_order");
    }

    static Series zero(int order, int q_order = 0) { return Series(order, q_order); }
    static Series constant(const Rational& v, int order, int q_order = 0) {
        Series s(order, q_order);
        s.c_[0] = ScalarRing<S>::lift(v, q_order);
        return s;
    }
    static Series identity(int order, int q_order = 0) {
        Series s(order, q_order);
        if (order >= 1) s.c_[1] = ScalarRing<S>::one(q_order);
        return s;
    }

    int order() const { return order_; }
    int q_order() const { return q_order_; }
    const S& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    void set_coeff(int k, S v) { c_.at(static_cast<size_t>(k)) = std::move(v); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    // index of the first nonzero coefficient; order+1 for the zero series
    int vanishing_order() const {
        for (int k = 0; k <= order_; ++k)
            if (!c_[static_cast<size_t>(k)].is_zero()) return k;
        return order_ + 1;
    }

    // sliced copy at a lower order (explicit, never implicit)
    Series truncated(int new_order) const {
        if (new_order > order_) throw usage_error("truncation cannot raise the order");
        Series r(new_order, q_order_);
        for (int k = 0; k <= new_order; ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.q_order_ == b.q_order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series operator-() const {
        Series r(order_, q_order_);
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
        return r;
    }
    Series& operator+=(const Series& o) {
        check(o, "series addition");
        for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check(o, "series subtraction");
        for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { a += b; return a; }
    friend Series operator-(Series a, const Series& b) { a -= b; return a; }

    void check(const Series& o, const char* op) const {
        if (o.order_ != order_)
            throw usage_error(std::string(op) + ": mismatched orders " + std::to_string(order_) +
                              " vs " + std::to_string(o.order_));
        if (o.q_order_ != q_order_)
            throw usage_error(std::string(op) + ": mismatched q_order");
    }

private:
    int order_;
    int q_order_;
    std::vector<S> c_;
};

// Cauchy product truncated to the common order.
template <class S>
Series<S> series_mul(const Series<S>& a, const Series<S>& b) {
    a.check(b, "series_mul");
    Series<S> r(a.order(), a.q_order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

template <class S>
Series<S> scalar_mul(const Series<S>& a, const S& s) {
    Series<S> r(a.order(), a.q_order());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, a.coeff(k) * s);
    return r;
}

// q with q*b = a. b must have a unit constant term, or a and b must vanish
// to the same order k with b's coefficient at x^k a unit; then the quotient
// has order reduced by k.
template <class S>
Series<S> series_div(const Series<S>& a, const Series<S>& b) {
    a.check(b, "series_div");
    const int k = b.vanishing_order();
    if (k > b.order()) throw domain_error("series_div: division by the zero series");
    if (k > 0) {
        if (a.vanishing_order() < k)
            throw domain_error("series_div: divisor vanishes to higher order than dividend");
        const int n = a.order() - k;
        Series<S> as(n, a.q_order()), bs(n, b.q_order());
        for (int i = 0; i <= n; ++i) {
            as.set_coeff(i, a.coeff(i + k));
            bs.set_coeff(i, b.coeff(i + k));
        }
        return series_div(as, bs);
    }
    if (!ScalarRing<S>::is_unit(b.coeff(0)))
        throw domain_error("series_div: leading coefficient is not invertible");
    const S inv0 = ScalarRing<S>::inverse(b.coeff(0));
    Series<S> q(a.order(), a.q_order());
    for (int n = 0; n <= a.order(); ++n) {
        S acc = a.coeff(n);
        for (int j = 1; j <= n; ++j) acc -= b.coeff(j) * q.coeff(n - j);
        q.set_coeff(n, acc * inv0);
    }
    return q;
}

// a(b(x)) truncated; requires b(0) = 0.
template <class S>
Series<S> series_compose(const Series<S>& a, const Series<S>& b) {
    a.check(b, "series_compose");
    if (!b.coeff(0).is_zero()) throw domain_error("series_compose: inner series has nonzero constant term");
    Series<S> r = Series<S>::zero(a.order(), a.q_order());
    for (int k = a.order(); k >= 0; --k) {
        r = series_mul(r, b);
        r.set_coeff(0, r.coeff(0) + a.coeff(k));
    }
    return r;
}

// Compositional inverse of a = x + higher. Triangular solve: after each
// step compose(a, b) agrees with x one order further; the composition
// identity is asserted in the tests rather than trusted.
template <class S>
Series<S> series_reverse(const Series<S>& a) {
    if (a.order() < 1 || !a.coeff(0).is_zero() ||
        a.coeff(1) != ScalarRing<S>::one(a.q_order()))
        throw domain_error("series_reverse: series must be x + higher-order terms");
    Series<S> b = Series<S>::identity(a.order(), a.q_order());
    for (int k = 2; k <= a.order(); ++k) {
        Series<S> c = series_compose(a, b);
        b.set_coeff(k, b.coeff(k) - c.coeff(k));
    }
    return b;
}

enum class Variables { pontryagin, chern };

// f = x/e. For an oriented (Pontryagin-variable) genus e must be odd; the
// check is skipped for Chern-variable genera such as Todd.
template <class S>
Series<S> f_from_e(const Series<S>& e, Variables vars = Variables::pontryagin) {
    if (e.order() < 1 || !e.coeff(0).is_zero() || !ScalarRing<S>::is_unit(e.coeff(1)))
        throw domain_error("f_from_e: e must be x + higher-order terms");
    if (vars == Variables::pontryagin) {
        for (int k = 0; k <= e.order(); k += 2)
            if (!e.coeff(k).is_zero())
                throw domain_error("f_from_e: oriented e-series must be odd (coefficient at x^" +
                                   std::to_string(k) + " is nonzero)");
    }
    return series_div(Series<S>::identity(e.order(), e.q_order()), e);
}

// l = x + sum_{n>=1} values[n-1] x^{2n+1}/(2n+1), truncated at 2*len+1.
inline Series<Rational> log_from_cp_values(const std::vector<Rational>& values) {
    const int order = 2 * static_cast<int>(values.size()) + 1;
    Series<Rational> l = Series<Rational>::identity(order);
    for (size_t n = 1; n <= values.size(); ++n)
        l.set_coeff(static_cast<int>(2 * n + 1), values[n - 1] / Rational(static_cast<long>(2 * n + 1)));
    return l;
}

template <class S>
Series<S> e_from_log(const Series<S>& l) {
    return series_reverse(l);
}

enum class BuiltinSeries { tanh, arctanh, two_sinh_half, todd_q, witten_e };

inline BuiltinSeries parse_builtin_series(const std::string& name) {
    if (name == "tanh") return BuiltinSeries::tanh;
    if (name == "arctanh") return BuiltinSeries::arctanh;
    if (name == "two_sinh_half") return BuiltinSeries::two_sinh_half;
    if (name == "todd_Q") return BuiltinSeries::todd_q;
    if (name == "witten_e") return BuiltinSeries::witten_e;
    throw usage_error("unknown builtin series '" + name + "'");
}

namespace detail {

// exp(c*x) with rational c, as a q_order-aware series
template <class S>
Series<S> exp_series(const Rational& c, int order, int q_order) {
    Series<S> r(order, q_order);
    Rational pw(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) pw *= c;
        r.set_coeff(k, ScalarRing<S>::lift(pw / Rational::factorial(static_cast<unsigned long>(k)), q_order));
    }
    return r;
}

}  // namespace detail

inline Series<Rational> arctanh_series(int order) {
    Series<Rational> s(order, 0);
    for (int k = 1; k <= order; k += 2) s.set_coeff(k, Rational(1, k));
    return s;
}

inline Series<Rational> two_sinh_half_series(int order) {
    // 2 sinh(x/2) = sum_{k odd} x^k / (2^{k-1} k!)
    Series<Rational> s(order, 0);
    for (int k = 1; k <= order; k += 2) {
        Rational den = Rational::factorial(static_cast<unsigned long>(k));
        for (int i = 0; i < k - 1; ++i) den *= Rational(2);
        s.set_coeff(k, den.inverse());
    }
    return s;
}

inline Series<Rational> todd_q_series(int order) {
    // x / (1 - e^{-x})
    Series<Rational> denom(order + 1, 0);
    for (int k = 1; k <= order + 1; ++k) {
        Rational c = Rational::factorial(static_cast<unsigned long>(k)).inverse();
        if (k % 2 == 0) c = -c;
        denom.set_coeff(k, c);
    }
    return series_div(Series<Rational>::identity(order + 1), denom);
}

// e(x) = 2 sinh(x/2) prod_{n=1}^{q_order} (1 - q^n e^x)(1 - q^n e^{-x})(1 + q^n)^{-2};
// factors with n > q_order are congruent to 1 mod q^{q_order+1} and dropped.
inline Series<QPoly> witten_e_series(int order, int q_order) {
    Series<QPoly> e(order, q_order);
    {
        Series<Rational> base = two_sinh_half_series(order);
        for (int k = 0; k <= order; ++k) e.set_coeff(k, QPoly(q_order, base.coeff(k)));
    }
    const Series<QPoly> exp_pos = detail::exp_series<QPoly>(Rational(1), order, q_order);
    const Series<QPoly> exp_neg = detail::exp_series<QPoly>(Rational(-1), order, q_order);
    for (int n = 1; n <= q_order; ++n) {
        const QPoly qn = QPoly::q_power(q_order, n);
        Series<QPoly> one = Series<QPoly>::constant(Rational(1), order, q_order);
        Series<QPoly> f1 = one - scalar_mul(exp_pos, qn);
        Series<QPoly> f2 = one - scalar_mul(exp_neg, qn);
        QPoly unit = QPoly::one(q_order) + qn;
        e = series_mul(series_mul(e, f1), f2);
        e = scalar_mul(e, (unit * unit).inverse());
    }
    return e;
}

inline Series<Rational> builtin_series(BuiltinSeries which, int order) {
    switch (which) {
        case BuiltinSeries::tanh: return series_reverse(arctanh_series(order));
        case BuiltinSeries::arctanh: return arctanh_series(order);
        case BuiltinSeries::two_sinh_half: return two_sinh_half_series(order);
        case BuiltinSeries::todd_q: return todd_q_series(order);
        case BuiltinSeries::witten_e:
            throw usage_error("witten_e has q-polynomial coefficients; request it at a q_order");
    }
    throw usage_error("unknown builtin series");
}

// Same table with every series lifted to q-polynomial coefficients.
inline Series<QPoly> builtin_series_q(BuiltinSeries which, int order, int q_order) {
    if (which == BuiltinSeries::witten_e) return witten_e_series(order, q_order);
    Series<Rational> base = builtin_series(which, order);
    Series<QPoly> out(order, q_order);
    for (int k = 0; k <= order; ++k) out.set_coeff(k, QPoly(q_order, base.coeff(k)));
    return out;
}

}  // namespace genera
