#include "genera/verify.hpp"

#include <omp.h>

#include <sstream>

#include "genera/bordism.hpp"
#include "genera/io.hpp"
#include "genera/rng.hpp"
#include "genera/symfunc_oracle.hpp"
#include "genera/vertical.hpp"

namespace genera {

namespace {

struct Suite {
    explicit Suite(const VerifyOptions& options) : opt(options) {}

    const VerifyOptions& opt;
    std::vector<CheckResult> results;

    void record(int number, const std::string& name, bool pass, const std::string& detail) {
        results.push_back({number, name, pass, detail});
    }

    ResolvedGenus<Rational> rational_genus(BuiltinGenus which, int order, int weight) {
        GenusSpec spec;
        spec.builtin = which;
        return resolve_genus<Rational>(spec, order, weight);
    }
    ResolvedGenus<QPoly> witten_genus(int order, int weight, int q_order) {
        GenusSpec spec;
        spec.builtin = BuiltinGenus::witten;
        spec.q_order = q_order;
        return resolve_genus<QPoly>(spec, order, weight);
    }

    BordismElement random_element(Rng& rng, int weight) {
        BordismElement e = BordismElement::zero(4 * weight);
        for (const Partition& p : partitions_of(weight)) {
            std::vector<int> doubled;
            for (int part : p.parts()) doubled.push_back(2 * part);
            e.add_term(Partition(doubled), Rational(rng.range(-9, 9), rng.range(1, 9)));
        }
        return e;
    }

    // 1. compose(a, reverse(a)) = x on random series; f_from_e(e) * e = x
    void series_round_trips() {
        Rng rng(opt.seed ^ 0x01);
        bool ok = true;
        for (int trial = 0; trial < 50 && ok; ++trial) {
            Series<Rational> a = Series<Rational>::identity(20);
            for (int k = 2; k <= 20; ++k) a.set_coeff(k, Rational(rng.range(-9, 9), rng.range(1, 9)));
            Series<Rational> b = series_reverse(a);
            ok = ok && series_compose(a, b) == Series<Rational>::identity(20) &&
                 series_compose(b, a) == Series<Rational>::identity(20);
        }
        for (auto which : {BuiltinSeries::tanh, BuiltinSeries::arctanh, BuiltinSeries::two_sinh_half}) {
            Series<Rational> e = builtin_series(which, 13);
            ok = ok && series_mul(f_from_e(e), e.truncated(12)) == Series<Rational>::identity(12);
        }
        for (int qo = 0; qo <= 2; ++qo) {
            Series<QPoly> e = witten_e_series(11, qo);
            ok = ok && series_mul(f_from_e(e), e.truncated(10)) == Series<QPoly>::identity(10, qo);
        }
        record(1, "series round-trips", ok,
               "50 random reversions at order 20; f*e = x for tanh, arctanh, two_sinh_half, witten_e");
    }

    // 2. cp-values -> logarithm -> e -> f chain for the signature
    void logarithm_triad() {
        const std::vector<Rational> ones(5, Rational(1));
        Series<Rational> l = log_from_cp_values(ones);
        bool ok = l == builtin_series(BuiltinSeries::arctanh, 11);
        Series<Rational> e = e_from_log(l);
        ok = ok && e == builtin_series(BuiltinSeries::tanh, 11);
        Series<Rational> f = f_from_e(e);  // order 10
        ok = ok && f == series_div(Series<Rational>::identity(11),
                                   builtin_series(BuiltinSeries::tanh, 11));
        std::vector<Rational> back = cp_values_from_f(f, 10);
        for (int n = 1; n <= 10; ++n)
            ok = ok && back[static_cast<size_t>(n - 1)] == Rational(n % 2 == 0 ? 1 : 0);
        record(2, "logarithm triad", ok,
               "cp-values [1,1,1,1,1] -> arctanh -> tanh -> x/tanh at order 11; values recovered to n = 10");
    }

    // 3. frozen K-tables plus the brute-force symmetric-function oracle
    void k_tables() {
        auto A = rational_genus(BuiltinGenus::a_hat, 12, 4);
        auto L = rational_genus(BuiltinGenus::signature, 12, 4);
        auto T = rational_genus(BuiltinGenus::todd, 12, 4);
        if (opt.corrupt_ktable) {
            // negative-control hook: perturb one coefficient
            Partition p11(std::vector<int>{1, 1});
            A.ms.k[2][p11] += Rational(1);
        }
        auto P = [](std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); };
        bool frozen = A.ms.coeff(1, P({1})) == Rational(-1, 24) &&
                      A.ms.coeff(2, P({1, 1})) == Rational(7, 5760) &&
                      A.ms.coeff(2, P({2})) == Rational(-4, 5760) &&
                      L.ms.coeff(1, P({1})) == Rational(1, 3) &&
                      L.ms.coeff(2, P({2})) == Rational(7, 45) &&
                      L.ms.coeff(2, P({1, 1})) == Rational(-1, 45) &&
                      T.ms.coeff(1, P({1})) == Rational(1, 2) &&
                      T.ms.coeff(2, P({2})) == Rational(1, 12) &&
                      T.ms.coeff(2, P({1, 1})) == Rational(1, 12);
        bool oracle_ok = true;
        for (const auto* r : {&A, &L, &T})
            for (int m = 1; m <= 4 && oracle_ok; ++m) {
                auto brute = oracle::kappa_weight_bruteforce(r->g, m, m);
                auto brute_more = oracle::kappa_weight_bruteforce(r->g, m, m + 2);
                oracle_ok = r->ms.k[static_cast<size_t>(m)] == brute && brute == brute_more;
            }
        record(3, "K-tables", frozen && oracle_ok,
               "a_hat, L, todd match frozen K_1/K_2 and the brute-force oracle at m and m+2 roots (m <= 4)");
    }

    // 4. genus_eval on CP^n characters against [x^n] f^{n+1}
    void hirzebruch_two_oracle() {
        bool ok = true;
        std::string particulars;
        for (auto which : {BuiltinGenus::signature, BuiltinGenus::a_hat, BuiltinGenus::todd,
                           BuiltinGenus::trivial}) {
            auto r = rational_genus(which, 18, 8);
            auto values = cp_values_from_f(r.f, 8);
            for (int n = 1; n <= 8; ++n) {
                Character c = cpn_character(n, r.variables);
                ok = ok && genus_eval(r.ms, c) == values[static_cast<size_t>(n - 1)];
            }
        }
        {
            auto w = witten_genus(18, 8, 2);
            auto values = cp_values_from_f(w.f, 8);
            for (int n = 1; n <= 8; ++n)
                ok = ok && genus_eval(w.ms, cpn_character(n, Variables::pontryagin)) ==
                               values[static_cast<size_t>(n - 1)];
        }
        auto sig = rational_genus(BuiltinGenus::signature, 18, 4);
        for (int n = 1; n <= 4; ++n)
            ok = ok && genus_eval(sig.ms, cpn_character(2 * n, Variables::pontryagin)) == Rational(1);
        auto todd = rational_genus(BuiltinGenus::todd, 18, 8);
        for (int n = 1; n <= 8; ++n)
            ok = ok && genus_eval(todd.ms, cpn_character(n, Variables::chern)) == Rational(1);
        auto ahat = rational_genus(BuiltinGenus::a_hat, 18, 2);
        ok = ok && genus_eval(ahat.ms, cpn_character(2, Variables::pontryagin)) == Rational(-1, 8) &&
             genus_eval(ahat.ms, cpn_character(4, Variables::pontryagin)) == Rational(3, 128);
        record(4, "Hirzebruch two-oracle agreement", ok,
               "K-pairing equals [x^n] f^{n+1} for n <= 8, all builtins; sigma(CP^2n) = 1, Td(CP^n) = 1, "
               "Ahat(CP^2) = -1/8, Ahat(CP^4) = 3/128");
    }

    // 5. phi(a*b) = phi(a)phi(b), phi(a+b) = phi(a)+phi(b) on random elements
    void ring_homomorphism() {
        Rng rng(opt.seed ^ 0x05);
        auto sig = rational_genus(BuiltinGenus::signature, 18, 8);
        auto ahat = rational_genus(BuiltinGenus::a_hat, 18, 8);
        auto triv = rational_genus(BuiltinGenus::trivial, 18, 8);
        auto todd = rational_genus(BuiltinGenus::todd, 34, 16);
        auto witten = witten_genus(18, 8, 1);
        bool ok = true;
        for (int trial = 0; trial < 50 && ok; ++trial) {
            const int wa = 1 + static_cast<int>(rng.below(4));
            const int wb = 1 + static_cast<int>(rng.below(4));
            BordismElement a = random_element(rng, wa);
            BordismElement b = random_element(rng, wb);
            BordismElement a2 = random_element(rng, wa);
            BordismElement ab = element_mul(a, b);
            BordismElement sum = element_add(a, a2);
            for (const auto* r : {&sig, &ahat, &triv}) {
                ok = ok && genus_eval(r->ms, ab) == genus_eval(r->ms, a) * genus_eval(r->ms, b);
                ok = ok && genus_eval(r->ms, sum) == genus_eval(r->ms, a) + genus_eval(r->ms, a2);
            }
            ok = ok && genus_eval(todd.ms, ab, Variables::chern) ==
                           genus_eval(todd.ms, a, Variables::chern) *
                               genus_eval(todd.ms, b, Variables::chern);
            ok = ok && genus_eval(todd.ms, sum, Variables::chern) ==
                           genus_eval(todd.ms, a, Variables::chern) +
                               genus_eval(todd.ms, a2, Variables::chern);
            ok = ok && genus_eval(witten.ms, ab) ==
                           genus_eval(witten.ms, a) * genus_eval(witten.ms, b);
            ok = ok && genus_eval(witten.ms, sum) ==
                           genus_eval(witten.ms, a) + genus_eval(witten.ms, a2);
        }
        record(5, "ring homomorphism", ok,
               "products and sums of 50 random element pairs of degree <= 16, all builtin genera");
    }

    // 6. generator characters determine elements
    void characterization() {
        bool ok = matrix_determinant(generator_character_matrix(8)) == Rational(-45);
        for (int d = 4; d <= 16; d += 4)
            ok = ok && !matrix_determinant(generator_character_matrix(d)).is_zero();
        Rng rng(opt.seed ^ 0x06);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            const int w = 1 + static_cast<int>(rng.below(4));
            BordismElement a = random_element(rng, w);
            BordismElement b = rng.below(2) ? a : random_element(rng, w);
            ok = ok && elements_equal(a, b) == (a.terms == b.terms);
        }
        for (int trial = 0; trial < 50 && ok; ++trial) {
            const int w = 1 + static_cast<int>(rng.below(4));
            BordismElement e = random_element(rng, w);
            ok = ok && express_in_generator_basis(element_character(e)) == e.terms;
        }
        record(6, "Pontryagin numbers characterize elements", ok,
               "generator matrices invertible in degrees 4..16, degree-8 determinant -45; "
               "elements_equal tracks normal forms (100 pairs); basis expression inverts characters (50)");
    }

    // 7. the worked fibre-product example at q = 2, q' = 3
    void vertical_flagship() {
        auto A = rational_genus(BuiltinGenus::a_hat, 18, 2);
        Fibration pi{"pi1", 2, 1}, rho{"pi2", 3, 1};
        const Fibration both[] = {pi, rho};
        BaseClass<Rational> product_genus =
            vertical_genus(A.ms, std::span<const Fibration>(both, 2), 8);
        BaseClass<Rational> expected(0);
        expected.add_term(BaseMonomial{{{BaseSymbol{"pi1", Partition(std::vector<int>{1}), 2}, 1},
                                        {BaseSymbol{"pi2", Partition(std::vector<int>{1}), 1}, 1}}},
                          Rational(1, 576));
        bool ok = product_genus.component(3) == expected;
        BaseClass<Rational> cup = vertical_genus(A.ms, pi, 8) * vertical_genus(A.ms, rho, 8);
        ok = ok && cup.component(3) == expected;
        record(7, "vertical flagship (1/576)", ok,
               "degree-3 component of Ahat(pi x pi') at q=2, q'=3 equals (1/576) p[1](pi1) p[1](pi2), "
               "both as a push-forward and as a cup product");
    }

    // 8. multiplicativity of vertical genera over fibre products
    void vertical_multiplicativity() {
        auto sig = rational_genus(BuiltinGenus::signature, 18, 4);
        auto ahat = rational_genus(BuiltinGenus::a_hat, 18, 4);
        auto triv = rational_genus(BuiltinGenus::trivial, 18, 4);
        auto todd = rational_genus(BuiltinGenus::todd, 18, 8);
        auto witten = witten_genus(18, 4, 2);

        struct Job {
            int q1, q2;
            int genus;  // index into the table below
        };
        std::vector<Job> jobs;
        for (int g = 0; g < 5; ++g)
            for (int q1 = 1; q1 <= 4; ++q1)
                for (int q2 = 1; q2 <= 4; ++q2) jobs.push_back({q1, q2, g});
        std::vector<char> equal(jobs.size(), 0);
        // independent (genus, q, q') cells; deterministic merged verdict
#pragma omp parallel for schedule(dynamic)
        for (size_t i = 0; i < jobs.size(); ++i) {
            const Job& job = jobs[i];
            Fibration a{"a", job.q1, 1}, b{"b", job.q2, 1};
            bool cell = false;
            switch (job.genus) {
                case 0: cell = check_multiplicativity(sig.ms, a, b, 16).all_equal; break;
                case 1: cell = check_multiplicativity(ahat.ms, a, b, 16).all_equal; break;
                case 2: cell = check_multiplicativity(triv.ms, a, b, 16).all_equal; break;
                case 3:
                    cell = check_multiplicativity(todd.ms, a, b, 16, Variables::chern).all_equal;
                    break;
                case 4: cell = check_multiplicativity(witten.ms, a, b, 16).all_equal; break;
            }
            equal[i] = cell ? 1 : 0;
        }
        bool ok = true;
        for (char c : equal) ok = ok && c;
        record(8, "vertical multiplicativity", ok,
               "genus(pi x pi') = genus(pi) * genus(pi') for all builtins, q, q' in {1..4}, degree <= 16");
    }

    // 9. orientation reversal negates, double reversal restores
    void orientation_sign() {
        auto A = rational_genus(BuiltinGenus::a_hat, 18, 3);
        Fibration pi{"pi", 2, 1};
        Fibration rev = reverse_orientation(pi);
        bool ok = rev.sign == -1 && reverse_orientation(rev).sign == 1;
        Partition j(std::vector<int>{1});
        ok = ok && vertical_class(rev, j) == -vertical_class(pi, j);
        ok = ok && vertical_genus(A.ms, rev, 12) == -vertical_genus(A.ms, pi, 12);
        Fibration rho{"rho", 3, 1};
        const Fibration ab[] = {pi, rho};
        const Fibration ab_rev[] = {pi, reverse_orientation(rho)};
        ok = ok && vertical_genus(A.ms, std::span<const Fibration>(ab_rev, 2), 12) ==
                       -vertical_genus(A.ms, std::span<const Fibration>(ab, 2), 12);
        record(9, "orientation sign", ok,
               "vertical classes and genera negate under reversal; double reversal is the identity");
    }

    // 10. projection formula on random inputs
    void projection_formula() {
        Rng rng(opt.seed ^ 0x0a);
        Fibration pi{"pi", 2, 1};
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            FibreClass<Rational> v(0);
            for (int t = 0; t < 3; ++t) {
                FibreMonomial m;
                const int k = 1 + static_cast<int>(rng.below(3));
                m.gens.push_back({FibreGen{"pi", k, 4 * k}, 1 + static_cast<int>(rng.below(2))});
                v.add_term(m, Rational(rng.range(-9, 9), rng.range(1, 9)));
            }
            BaseClass<Rational> base(0);
            for (int t = 0; t < 2; ++t) {
                std::vector<int> parts{1 + static_cast<int>(rng.below(3))};
                Partition j(std::move(parts));
                base.add_term(
                    BaseMonomial{{{BaseSymbol{"sigma", j, 4 * j.weight() - 1}, 1}}},
                    Rational(rng.range(-9, 9), rng.range(1, 9)));
            }
            FibreClass<Rational> bv(0);
            for (const auto& [bm, bc] : base.terms())
                for (const auto& [vm, vc] : v.terms()) {
                    FibreMonomial m = vm;
                    m.base = detail::merge_powers(m.base, bm.syms);
                    bv.add_term(m, bc * vc);
                }
            ok = ok && umkehr(pi, bv) == base * umkehr(pi, v);
        }
        record(10, "projection formula", ok,
               "umkehr(B * v) = B * umkehr(v) on 100 random base/fibre pairs");
    }

    // 11. the Witten genus reduces to a_hat at q = 0 and its two oracles agree
    void witten_q_expansion() {
        auto w = witten_genus(12, 2, 2);
        auto a = rational_genus(BuiltinGenus::a_hat, 12, 2);
        bool ok = true;
        for (int k = 0; k <= 10; ++k) ok = ok && w.f.coeff(k).constant() == a.f.coeff(k);
        QPoly by_table = genus_eval(w.ms, cpn_character(2, Variables::pontryagin));
        QPoly by_series = cp_values_from_f(w.f, 2)[1];
        ok = ok && by_table == by_series;
        ok = ok && by_table.constant() == Rational(-1, 8);
        record(11, "witten genus q-expansion", ok,
               "witten f mod q equals the a_hat f to order 10; Witten(CP^2) at q_order 2 agrees "
               "between coefficient oracle and K-table pairing (" + by_table.str() + ")");
    }

    // 12. the seeded randomized checks reproduce byte-identically; the full
    // CLI-level byte identity (run `verify` twice, diff stdout) lives in the
    // acceptance harness, which spawns the real binary
    void report_determinism() {
        VerifyOptions sub = opt;
        sub.corrupt_ktable = false;
        auto slice = [&sub] {
            Suite s(sub);
            s.series_round_trips();
            s.characterization();
            s.projection_formula();
            return render_verify_report(s.results, sub);
        };
        record(12, "report determinism", slice() == slice(),
               "re-running the seeded randomized checks at seed " + std::to_string(sub.seed) +
                   " renders byte-identical results");
    }

    void run_all_but_determinism() {
        series_round_trips();
        logarithm_triad();
        k_tables();
        hirzebruch_two_oracle();
        ring_homomorphism();
        characterization();
        vertical_flagship();
        vertical_multiplicativity();
        orientation_sign();
        projection_formula();
        witten_q_expansion();
    }
};

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& options) {
    Suite suite(options);
    suite.run_all_but_determinism();
    suite.report_determinism();
    return suite.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

std::string render_verify_report(const std::vector<CheckResult>& results,
                                 const VerifyOptions& options) {
    std::ostringstream out;
    out << "verification suite (seed " << options.seed << ")\n";
    for (const CheckResult& r : results)
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.number << ". " << r.name << ": " << r.detail
            << "\n";
    out << (all_passed(results) ? "all checks passed\n" : "CHECKS FAILED\n");
    return out.str();
}

nlohmann::json verify_report_to_json(const std::vector<CheckResult>& results,
                                     const VerifyOptions& options) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& r : results)
        checks.push_back(nlohmann::json{
            {"number", r.number}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    return nlohmann::json{
        {"seed", options.seed}, {"checks", checks}, {"all_pass", all_passed(results)}};
}

}  // namespace genera
