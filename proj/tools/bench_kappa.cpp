// Benchmark: serial vs OpenMP construction of K-polynomial tables, checked
// for exact agreement. Weights beyond ~12 are where the per-weight
// parallelism starts to pay.

#include <omp.h>

#include <CLI11.hpp>

#include <cstdio>

#include "genera/multiseq.hpp"

using namespace genera;

int main(int argc, char** argv) {
    CLI::App app{"benchmark the K-table kernel: serial reference vs OpenMP"};
    int max_weight = 12;
    std::string genus = "signature";
    app.add_option("--max-weight", max_weight, "deepest K_m to build");
    app.add_option("--genus", genus, "builtin genus to expand");
    CLI11_PARSE(app, argc, argv);

    GenusSpec spec;
    try {
        spec.builtin = parse_builtin_genus(genus);
    } catch (const usage_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    if (*spec.builtin == BuiltinGenus::witten) {
        std::fprintf(stderr, "error: bench uses rational genera\n");
        return 2;
    }

    const int order = 2 * max_weight + 2;
    auto resolved = resolve_genus<Rational>(spec, order, 0);
    Series<Rational> g = resolved.g.truncated(max_weight);

    std::printf("K-tables for %s to weight %d, %d OpenMP threads\n", genus.c_str(), max_weight,
                omp_get_max_threads());

    const double t0 = omp_get_wtime();
    MultSeq<Rational> serial = kappa_polynomials_serial(g, max_weight);
    const double t1 = omp_get_wtime();
    MultSeq<Rational> parallel = kappa_polynomials(g, max_weight);
    const double t2 = omp_get_wtime();

    if (serial.k != parallel.k) {
        std::printf("MISMATCH between serial and parallel tables\n");
        return 1;
    }
    size_t terms = 0;
    for (const auto& table : serial.k) terms += table.size();
    const double ts = t1 - t0, tp = t2 - t1;
    std::printf("serial   %.3fs\n", ts);
    std::printf("parallel %.3fs\n", tp);
    std::printf("speedup  %.2fx, tables agree (%zu terms)\n", tp > 0 ? ts / tp : 0.0, terms);
    return 0;
}
