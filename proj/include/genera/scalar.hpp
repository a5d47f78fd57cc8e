#pragma once

#include "genera/qpoly.hpp"
#include "genera/rational.hpp"

namespace genera {

// The closed two-member scalar family: exact rationals and truncated
// q-polynomials over them. Everything generic over a coefficient ring is
// templated on one of these via the traits below.
template <class S>
struct ScalarRing;

template <>
struct ScalarRing<Rational> {
    static constexpr bool has_q = false;
    static Rational zero(int /*q_order*/) { return Rational(); }
    static Rational one(int /*q_order*/) { return Rational(1); }
    static Rational lift(const Rational& r, int /*q_order*/) { return r; }
    static int q_order_of(const Rational&) { return 0; }
    static bool is_unit(const Rational& r) { return !r.is_zero(); }
    static Rational inverse(const Rational& r) { return r.inverse(); }
    static std::string str(const Rational& r) { return r.str(); }
};

template <>
struct ScalarRing<QPoly> {
    static constexpr bool has_q = true;
    static QPoly zero(int q_order) { return QPoly(q_order); }
    static QPoly one(int q_order) { return QPoly::one(q_order); }
    static QPoly lift(const Rational& r, int q_order) { return QPoly(q_order, r); }
    static int q_order_of(const QPoly& p) { return p.q_order(); }
    static bool is_unit(const QPoly& p) { return p.is_unit(); }
    static QPoly inverse(const QPoly& p) { return p.inverse(); }
    static std::string str(const QPoly& p) { return p.str(); }
};

inline Rational scalar_mul(const Rational& s, const Rational& r) { return s * r; }
inline QPoly scalar_mul(const QPoly& s, const Rational& r) { return s * r; }

}  // namespace genera
