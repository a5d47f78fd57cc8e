#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "genera/multiseq.hpp"

using namespace genera;

// The OpenMP kappa kernel must produce exactly the serial reference tables,
// monomial by monomial, whatever the thread count.

namespace {

Series<Rational> genus_g(BuiltinGenus which, int order) {
    GenusSpec spec;
    spec.builtin = which;
    return resolve_genus<Rational>(spec, 2 * order + 2, order).g.truncated(order);
}

}  // namespace

TEST_CASE("parallel kappa equals the serial reference") {
    for (auto which : {BuiltinGenus::signature, BuiltinGenus::a_hat, BuiltinGenus::todd}) {
        auto g = genus_g(which, 8);
        auto serial = kappa_polynomials_serial(g, 8);
        auto parallel = kappa_polynomials(g, 8);
        REQUIRE(serial.k.size() == parallel.k.size());
        for (size_t m = 0; m < serial.k.size(); ++m) CHECK(serial.k[m] == parallel.k[m]);
    }
}

TEST_CASE("parallel kappa is deterministic across repeated runs") {
    auto g = genus_g(BuiltinGenus::signature, 7);
    auto first = kappa_polynomials(g, 7);
    for (int run = 0; run < 3; ++run) {
        auto again = kappa_polynomials(g, 7);
        CHECK(first.k == again.k);
    }
}

TEST_CASE("parallel kappa with q-polynomial scalars") {
    GenusSpec ws;
    ws.builtin = BuiltinGenus::witten;
    ws.q_order = 2;
    auto g = resolve_genus<QPoly>(ws, 14, 6).g.truncated(6);
    auto serial = kappa_polynomials_serial(g, 6);
    auto parallel = kappa_polynomials(g, 6);
    CHECK(serial.k == parallel.k);
}

TEST_CASE("thread count does not change results") {
    auto g = genus_g(BuiltinGenus::a_hat, 7);
    auto reference = kappa_polynomials_serial(g, 7);
    int saved = omp_get_max_threads();
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        CHECK(kappa_polynomials(g, 7).k == reference.k);
    }
    omp_set_num_threads(saved);
}
