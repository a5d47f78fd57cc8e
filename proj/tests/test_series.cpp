#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genera/rng.hpp"
#include "genera/series.hpp"

using namespace genera;

namespace {

Series<Rational> from_coeffs(std::initializer_list<Rational> cs, int order) {
    Series<Rational> s(order, 0);
    int k = 0;
    for (const Rational& c : cs) s.set_coeff(k++, c);
    return s;
}

Series<Rational> random_unit_composable(Rng& rng, int order) {
    // x + random higher terms
    Series<Rational> s = Series<Rational>::identity(order);
    for (int k = 2; k <= order; ++k)
        s.set_coeff(k, Rational(rng.range(-6, 6), rng.range(1, 6)));
    return s;
}

}  // namespace

TEST_CASE("series_mul basics") {
    auto one_plus = from_coeffs({1, 1}, 4);
    auto one_minus = from_coeffs({1, -1}, 4);
    auto prod = series_mul(one_plus, one_minus);
    CHECK(prod == from_coeffs({1, 0, -1}, 4));

    auto t = builtin_series(BuiltinSeries::tanh, 7);
    auto f = f_from_e(t);  // order 6
    CHECK(series_mul(f, t.truncated(6)) == Series<Rational>::identity(6));

    Series<Rational> a(3, 0), b(4, 0);
    CHECK_THROWS_AS(series_mul(a, b), usage_error);
}

TEST_CASE("series_mul truncates q arithmetic") {
    // (1+q)x * (1-q)x at q_order 1: coefficient of x^2 is 1 + 0q
    Series<QPoly> a(2, 1), b(2, 1);
    QPoly ca(1, Rational(1)); ca.set_coeff(1, Rational(1));
    QPoly cb(1, Rational(1)); cb.set_coeff(1, Rational(-1));
    a.set_coeff(1, ca);
    b.set_coeff(1, cb);
    auto prod = series_mul(a, b);
    CHECK(prod.coeff(2) == QPoly::one(1));
    CHECK(prod.coeff(0).is_zero());
}

TEST_CASE("series_div geometric and L-series") {
    auto one = Series<Rational>::constant(1, 3);
    auto denom = from_coeffs({1, -1}, 3);
    CHECK(series_div(one, denom) == from_coeffs({1, 1, 1, 1}, 3));

    auto tanh7 = builtin_series(BuiltinSeries::tanh, 7);
    auto L = series_div(Series<Rational>::identity(7), tanh7);  // order 6
    CHECK(L.coeff(0) == Rational(1));
    CHECK(L.coeff(2) == Rational(1, 3));
    CHECK(L.coeff(4) == Rational(-1, 45));
    CHECK(L.coeff(6) == Rational(2, 945));
    CHECK(series_mul(L, tanh7.truncated(6)) == Series<Rational>::identity(6));

    auto sinh5 = builtin_series(BuiltinSeries::two_sinh_half, 5);
    auto ahat = series_div(Series<Rational>::identity(5), sinh5);  // order 4
    CHECK(ahat.coeff(2) == Rational(-1, 24));
    CHECK(ahat.coeff(4) == Rational(7, 5760));
    CHECK(series_mul(ahat, sinh5.truncated(4)) == Series<Rational>::identity(4));

    CHECK_THROWS_AS(series_div(one, Series<Rational>::zero(3)), domain_error);
    // divisor vanishing deeper than the dividend
    auto x2 = from_coeffs({0, 0, 1}, 3);
    auto x1 = from_coeffs({0, 1}, 3);
    CHECK_THROWS_AS(series_div(x1, x2), domain_error);
}

TEST_CASE("series_compose") {
    auto a = from_coeffs({0, 0, 1}, 4);      // x^2
    auto b = from_coeffs({0, 1, 1}, 4);      // x + x^2
    CHECK(series_compose(a, b) == from_coeffs({0, 0, 1, 2, 1}, 4));

    auto arct = builtin_series(BuiltinSeries::arctanh, 7);
    auto tanh7 = builtin_series(BuiltinSeries::tanh, 7);
    CHECK(series_compose(arct, tanh7) == Series<Rational>::identity(7));

    auto ident = Series<Rational>::identity(4);
    CHECK(series_compose(ident, b) == b);

    auto bad = Series<Rational>::constant(1, 4);
    CHECK_THROWS_AS(series_compose(a, bad), domain_error);
}

TEST_CASE("series_reverse examples") {
    CHECK(series_reverse(Series<Rational>::identity(5)) == Series<Rational>::identity(5));

    // arctanh truncated -> tanh
    auto arct = from_coeffs({0, 1, 0, Rational(1, 3), 0, Rational(1, 5)}, 5);
    CHECK(series_reverse(arct) == from_coeffs({0, 1, 0, Rational(-1, 3), 0, Rational(2, 15)}, 5));

    auto a = from_coeffs({0, 1, -1}, 3);  // x - x^2
    CHECK(series_reverse(a) == from_coeffs({0, 1, 1, 2}, 3));

    CHECK_THROWS_AS(series_reverse(from_coeffs({1, 1}, 3)), domain_error);
    CHECK_THROWS_AS(series_reverse(from_coeffs({0, 2}, 3)), domain_error);
}

TEST_CASE("reversion round-trips on random series") {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int order = 3 + static_cast<int>(rng.below(18));  // up to 20
        auto a = random_unit_composable(rng, order);
        auto b = series_reverse(a);
        CHECK(series_compose(a, b) == Series<Rational>::identity(order));
        CHECK(series_compose(b, a) == Series<Rational>::identity(order));
    }
}

TEST_CASE("builtin series values") {
    auto tanh5 = builtin_series(BuiltinSeries::tanh, 5);
    CHECK(tanh5 == from_coeffs({0, 1, 0, Rational(-1, 3), 0, Rational(2, 15)}, 5));

    auto sh = builtin_series(BuiltinSeries::two_sinh_half, 5);
    CHECK(sh == from_coeffs({0, 1, 0, Rational(1, 24), 0, Rational(1, 1920)}, 5));

    auto todd = builtin_series(BuiltinSeries::todd_q, 6);
    CHECK(todd.coeff(0) == Rational(1));
    CHECK(todd.coeff(1) == Rational(1, 2));
    CHECK(todd.coeff(2) == Rational(1, 12));
    CHECK(todd.coeff(3) == Rational(0));
    CHECK(todd.coeff(4) == Rational(-1, 720));
    CHECK(todd.coeff(6) == Rational(1, 30240));

    CHECK_THROWS_AS(builtin_series(BuiltinSeries::witten_e, 5), usage_error);
    CHECK_THROWS_AS(parse_builtin_series("nope"), usage_error);
}

TEST_CASE("builtin e-series are odd") {
    for (auto which : {BuiltinSeries::tanh, BuiltinSeries::two_sinh_half}) {
        auto e = builtin_series(which, 13);
        for (int k = 0; k <= 13; k += 2) CHECK(e.coeff(k).is_zero());
    }
    for (int qo = 0; qo <= 3; ++qo) {
        auto e = witten_e_series(9, qo);
        for (int k = 0; k <= 9; k += 2) CHECK(e.coeff(k).is_zero());
    }
}

TEST_CASE("f_from_e") {
    auto x = Series<Rational>::identity(5);
    CHECK(f_from_e(x) == Series<Rational>::constant(1, 4));

    auto f = f_from_e(builtin_series(BuiltinSeries::tanh, 7));
    CHECK(f.coeff(2) == Rational(1, 3));
    CHECK(f.coeff(4) == Rational(-1, 45));

    // non-odd e rejected in oriented mode, accepted for Chern-variable genera
    auto e_bad = from_coeffs({0, 1, 1}, 4);
    CHECK_THROWS_AS(f_from_e(e_bad), domain_error);
    CHECK_NOTHROW(f_from_e(e_bad, Variables::chern));
}

TEST_CASE("f_from_e times e is x for random odd e") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int order = 5 + 2 * static_cast<int>(rng.below(4));
        Series<Rational> e = Series<Rational>::identity(order);
        for (int k = 3; k <= order; k += 2)
            e.set_coeff(k, Rational(rng.range(-9, 9), rng.range(1, 9)));
        auto f = f_from_e(e);
        CHECK(series_mul(f, e.truncated(order - 1)) ==
              Series<Rational>::identity(order - 1));
    }
}

TEST_CASE("log_from_cp_values") {
    CHECK(log_from_cp_values({}) == Series<Rational>::identity(1));

    auto l = log_from_cp_values({1, 1, 1, 1, 1});
    CHECK(l == builtin_series(BuiltinSeries::arctanh, 11));

    auto la = log_from_cp_values({Rational(-1, 8), Rational(3, 128)});
    CHECK(la.coeff(3) == Rational(-1, 24));
    CHECK(la.coeff(5) == Rational(3, 640));
    CHECK(e_from_log(la) == builtin_series(BuiltinSeries::two_sinh_half, 5));
}

TEST_CASE("witten_e at q = 0 equals 2 sinh(x/2)") {
    for (int qo = 0; qo <= 4; ++qo) {
        auto we = witten_e_series(12, qo);
        auto sh = builtin_series(BuiltinSeries::two_sinh_half, 12);
        for (int k = 0; k <= 12; ++k) {
            CHECK(we.coeff(k).constant() == sh.coeff(k));
            if (qo == 0) CHECK(we.coeff(k) == QPoly(0, sh.coeff(k)));
        }
    }
}

TEST_CASE("witten_e division by the unit leading coefficient") {
    auto we = witten_e_series(7, 2);
    auto f = f_from_e(we);
    CHECK(f.coeff(0) == we.coeff(1).inverse());
    CHECK(series_mul(f, we.truncated(6)) ==
          Series<QPoly>::identity(6, 2));
}
