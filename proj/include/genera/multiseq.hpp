#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genera/partition.hpp"
#include "genera/series.hpp"

namespace genera {

// K-polynomial table of a multiplicative sequence: for each weight m the
// exact polynomial K_m = sum_J coeff(J) b_J over partitions J of m.
// K_0 = 1 always.
template <class S>
struct MultSeq {
    using Table = std::map<Partition, S, PartitionOrder>;

    int max_weight = 0;
    int q_order = 0;
    std::vector<Table> k;  // k[m] holds K_m; k[0] = { (): 1 }

    S coeff(int m, const Partition& j) const {
        const Table& t = k.at(static_cast<size_t>(m));
        auto it = t.find(j);
        return it != t.end() ? it->second : ScalarRing<S>::zero(q_order);
    }
};

namespace symfn {

// Symmetric polynomials in n_roots variables, stored in the
// monomial-symmetric basis: key = exponent multiset as a partition,
// value = coefficient of any single representative monomial. Elementary
// expansions have rational (in fact integer) coefficients whatever the
// scalar ring of the series being reduced.
template <class S>
using SymPoly = std::map<std::vector<int>, S>;

// P * e_k pulled onto each candidate gamma: decrement choices are counted
// per value class of gamma (positions holding equal exponents are
// interchangeable), so the multiplicity is a product of binomials instead
// of a subset enumeration.
inline SymPoly<Rational> mul_elementary(const SymPoly<Rational>& p, int k, int degree,
                                        int n_roots) {
    SymPoly<Rational> out;
    for (const Partition& cand : partitions_of(degree + k)) {
        if (cand.length() > n_roots) continue;
        const std::vector<int>& g = cand.parts();
        // value classes, descending values; zero positions cannot be decremented
        std::vector<std::pair<int, int>> classes;  // (value, count)
        for (int v : g) {
            if (!classes.empty() && classes.back().first == v) ++classes.back().second;
            else classes.emplace_back(v, 1);
        }
        Rational acc;
        std::vector<int> decrements(classes.size(), 0);
        std::function<void(size_t, int, long)> rec = [&](size_t ci, int left, long ways) {
            if (ci == classes.size()) {
                if (left != 0) return;
                std::vector<int> alpha;
                for (size_t i = 0; i < classes.size(); ++i) {
                    const auto [v, count] = classes[i];
                    for (int r = 0; r < count - decrements[i]; ++r) alpha.push_back(v);
                    for (int r = 0; r < decrements[i]; ++r)
                        if (v - 1 > 0) alpha.push_back(v - 1);
                }
                std::sort(alpha.begin(), alpha.end(), std::greater<int>());
                auto it = p.find(alpha);
                if (it != p.end()) acc += it->second * Rational(ways);
                return;
            }
            const auto [v, count] = classes[ci];
            long choose = 1;  // C(count, y), built incrementally
            for (int y = 0; y <= std::min(count, left); ++y) {
                decrements[ci] = y;
                rec(ci + 1, left - y, ways * choose);
                choose = choose * (count - y) / (y + 1);
            }
            decrements[ci] = 0;
        };
        rec(0, k, 1);
        if (!acc.is_zero()) out.emplace(g, std::move(acc));
    }
    return out;
}

// Memoized expansions of e_mu = e_{mu_1} e_{mu_2} ... in the monomial
// basis; partial products are shared across the pivots of one reduction.
class ElementaryExpansions {
public:
    explicit ElementaryExpansions(int n_roots) : n_roots_(n_roots) {
        cache_.emplace(std::vector<int>{}, SymPoly<Rational>{{{}, Rational(1)}});
    }

    const SymPoly<Rational>& expansion(const Partition& mu) {
        auto it = cache_.find(mu.parts());
        if (it != cache_.end()) return it->second;
        std::vector<int> prefix = mu.parts();
        const int last = prefix.back();  // smallest part
        prefix.pop_back();
        const SymPoly<Rational>& base = expansion(Partition(std::vector<int>(prefix)));
        SymPoly<Rational> grown = mul_elementary(base, last, mu.weight() - last, n_roots_);
        return cache_.emplace(mu.parts(), std::move(grown)).first->second;
    }

private:
    int n_roots_;
    std::map<std::vector<int>, SymPoly<Rational>> cache_;
};

}  // namespace symfn

// K_m for one weight: expand the degree-m part of prod_{i=1}^{n_roots}
// g(beta_i) in the monomial-symmetric basis, then eliminate against
// elementary-symmetric products by lex-leading pivot. The leading monomial
// of e_mu is the conjugate partition with coefficient 1, so the reduction
// is unitriangular and needs no division.
template <class S>
typename MultSeq<S>::Table kappa_weight(const Series<S>& g, int m, int n_roots) {
    if (g.order() < m) throw usage_error("kappa: g-series order " + std::to_string(g.order()) +
                                         " below requested weight " + std::to_string(m));
    if (n_roots < m) throw usage_error("kappa: fewer roots than the weight");
    typename MultSeq<S>::Table out;
    if (m == 0) {
        out.emplace(Partition(), ScalarRing<S>::one(g.q_order()));
        return out;
    }
    symfn::SymPoly<S> p;
    for (const Partition& lam : partitions_of(m)) {
        if (lam.length() > n_roots) continue;
        S c = ScalarRing<S>::one(g.q_order());
        for (int part : lam.parts()) c *= g.coeff(part);
        if (!c.is_zero()) p.emplace(lam.parts(), std::move(c));
    }
    symfn::ElementaryExpansions expansions(n_roots);
    while (!p.empty()) {
        auto lead = std::prev(p.end());  // lex-greatest exponent vector
        const Partition lead_part{std::vector<int>(lead->first)};
        const S c = lead->second;
        const Partition mu = lead_part.conjugate();
        for (const auto& [key, val] : expansions.expansion(mu)) {
            const S delta = scalar_mul(c, val);
            auto it = p.find(key);
            if (it == p.end())
                p.emplace(key, -delta);
            else {
                it->second -= delta;
                if (it->second.is_zero()) p.erase(it);
            }
        }
        if (p.count(lead_part.parts()))
            throw std::logic_error("kappa reduction failed to clear its pivot");
        out.emplace(mu, c);
    }
    return out;
}

// Serial reference: kept alongside the parallel version and compared
// against it in the tests.
template <class S>
MultSeq<S> kappa_polynomials_serial(const Series<S>& g, int max_weight) {
    if (!ScalarRing<S>::is_unit(g.coeff(0)) ||
        g.coeff(0) != ScalarRing<S>::one(g.q_order()))
        throw domain_error("kappa: g(0) must be 1");
    if (g.order() < max_weight) throw usage_error("kappa: g order below max_weight");
    MultSeq<S> ms;
    ms.max_weight = max_weight;
    ms.q_order = g.q_order();
    ms.k.resize(static_cast<size_t>(max_weight) + 1);
    for (int m = 0; m <= max_weight; ++m) ms.k[static_cast<size_t>(m)] = kappa_weight(g, m, m);
    return ms;
}

// Per-weight tables are independent; OpenMP fills the slots out of order
// and the merged result is identical to the serial one.
template <class S>
MultSeq<S> kappa_polynomials(const Series<S>& g, int max_weight) {
    if (!ScalarRing<S>::is_unit(g.coeff(0)) ||
        g.coeff(0) != ScalarRing<S>::one(g.q_order()))
        throw domain_error("kappa: g(0) must be 1");
    if (g.order() < max_weight) throw usage_error("kappa: g order below max_weight");
    MultSeq<S> ms;
    ms.max_weight = max_weight;
    ms.q_order = g.q_order();
    ms.k.resize(static_cast<size_t>(max_weight) + 1);
#pragma omp parallel for schedule(dynamic)
    for (int m = 0; m <= max_weight; ++m) ms.k[static_cast<size_t>(m)] = kappa_weight(g, m, m);
    return ms;
}

// Reindex the even series f(x) = sum a_k x^{2k} as g(z) = sum a_k z^k
// (Pontryagin variables); Chern-variable genera use g = f unchanged.
template <class S>
Series<S> g_from_f(const Series<S>& f, Variables vars) {
    if (f.coeff(0) != ScalarRing<S>::one(f.q_order()))
        throw domain_error("g_from_f: f must have constant term 1");
    if (vars == Variables::chern) return f;
    for (int k = 1; k <= f.order(); k += 2)
        if (!f.coeff(k).is_zero())
            throw domain_error("g_from_f: Pontryagin-variable f-series has odd coefficient at x^" +
                               std::to_string(k));
    Series<S> g(f.order() / 2, f.q_order());
    for (int k = 0; 2 * k <= f.order(); ++k) g.set_coeff(k, f.coeff(2 * k));
    return g;
}

// phi(CP^n) = [x^n] f(x)^{n+1}, the coefficient-extraction oracle.
// Entry n-1 of the result is phi(CP^n).
template <class S>
std::vector<S> cp_values_from_f(const Series<S>& f, int n_max) {
    if (f.coeff(0) != ScalarRing<S>::one(f.q_order()))
        throw usage_error("cp_values_from_f: f must have constant term 1");
    if (n_max > f.order()) throw usage_error("cp_values_from_f: n_max exceeds the series order");
    std::vector<S> out;
    Series<S> pw = f;  // f^{n+1} built incrementally
    for (int n = 1; n <= n_max; ++n) {
        pw = series_mul(pw, f);
        out.push_back(pw.coeff(n));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Genus specifications: any one of a builtin name, an e-series, an f-series,
// CP-values, or a g-series determines the genus.

enum class BuiltinGenus { signature, a_hat, todd, witten, trivial };

inline BuiltinGenus parse_builtin_genus(const std::string& name) {
    if (name == "signature") return BuiltinGenus::signature;
    if (name == "a_hat") return BuiltinGenus::a_hat;
    if (name == "todd") return BuiltinGenus::todd;
    if (name == "witten") return BuiltinGenus::witten;
    if (name == "trivial") return BuiltinGenus::trivial;
    throw usage_error("unknown builtin genus '" + name + "'");
}

inline std::string builtin_genus_name(BuiltinGenus g) {
    switch (g) {
        case BuiltinGenus::signature: return "signature";
        case BuiltinGenus::a_hat: return "a_hat";
        case BuiltinGenus::todd: return "todd";
        case BuiltinGenus::witten: return "witten";
        case BuiltinGenus::trivial: return "trivial";
    }
    return "?";
}

struct GenusSpec {
    std::optional<Variables> variables;  // defaulted from the definition form
    std::optional<BuiltinGenus> builtin;
    std::optional<std::vector<Rational>> e_coeffs;   // from x^0 upward
    std::optional<std::vector<Rational>> f_coeffs;
    std::optional<std::vector<Rational>> cp_values;  // phi(CP^2), phi(CP^4), ...
    std::optional<std::vector<Rational>> g_coeffs;
    int q_order = 0;

    int definition_count() const {
        return (builtin ? 1 : 0) + (e_coeffs ? 1 : 0) + (f_coeffs ? 1 : 0) +
               (cp_values ? 1 : 0) + (g_coeffs ? 1 : 0);
    }
};

template <class S>
struct ResolvedGenus {
    Variables variables = Variables::pontryagin;
    Series<S> f;
    Series<S> g;
    MultSeq<S> ms;
};

// variable family implied by a spec before resolution
inline Variables genus_variables(const GenusSpec& spec) {
    if (spec.variables) return *spec.variables;
    if (spec.builtin && *spec.builtin == BuiltinGenus::todd) return Variables::chern;
    return Variables::pontryagin;
}

namespace detail {

template <class S>
Series<S> lift_coeff_list(const std::vector<Rational>& coeffs, int order, int q_order) {
    Series<S> s(order, q_order);
    if (static_cast<int>(coeffs.size()) - 1 > order)
        throw usage_error("coefficient list longer than the series order");
    for (size_t k = 0; k < coeffs.size(); ++k)
        s.set_coeff(static_cast<int>(k), ScalarRing<S>::lift(coeffs[k], q_order));
    return s;
}

}  // namespace detail

// Resolve a genus spec to its f-series and K-table. series_order is the
// truncation order for the f-series; max_weight the deepest K_m built.
// S must be QPoly when the spec genuinely involves q (witten, q_order > 0).
template <class S>
ResolvedGenus<S> resolve_genus(const GenusSpec& spec, int series_order, int max_weight) {
    if (spec.definition_count() != 1)
        throw usage_error("genus spec must carry exactly one definition form");
    if (spec.q_order < 0) throw usage_error("negative q_order");
    if (!ScalarRing<S>::has_q && spec.q_order > 0)
        throw usage_error("q_order > 0 requires the q-polynomial scalar ring");

    ResolvedGenus<S> out{Variables::pontryagin, Series<S>(0, 0), Series<S>(0, 0), {}};
    const int qo = ScalarRing<S>::has_q ? spec.q_order : 0;
    Variables vars = spec.variables.value_or(Variables::pontryagin);

    if (spec.builtin) {
        switch (*spec.builtin) {
            case BuiltinGenus::signature:
            case BuiltinGenus::a_hat: {
                if (spec.variables && *spec.variables != Variables::pontryagin)
                    throw usage_error("builtin genus is Pontryagin-variable");
                vars = Variables::pontryagin;
                BuiltinSeries which = *spec.builtin == BuiltinGenus::signature
                                          ? BuiltinSeries::tanh
                                          : BuiltinSeries::two_sinh_half;
                Series<S> e = [&] {
                    if constexpr (ScalarRing<S>::has_q)
                        return builtin_series_q(which, series_order + 1, qo);
                    else
                        return builtin_series(which, series_order + 1);
                }();
                out.f = f_from_e(e, vars);
                break;
            }
            case BuiltinGenus::witten: {
                if constexpr (!ScalarRing<S>::has_q) {
                    throw usage_error("witten genus requires the q-polynomial scalar ring");
                } else {
                    if (spec.variables && *spec.variables != Variables::pontryagin)
                        throw usage_error("builtin genus is Pontryagin-variable");
                    vars = Variables::pontryagin;
                    // the infinite product scales x by a unit q-series; divide
                    // it out so e keeps leading term x and f(0) = 1
                    Series<QPoly> e = witten_e_series(series_order + 1, qo);
                    const QPoly lead = e.coeff(1);
                    if (lead != QPoly::one(qo)) e = scalar_mul(e, lead.inverse());
                    out.f = f_from_e(e, vars);
                }
                break;
            }
            case BuiltinGenus::todd: {
                if (spec.variables && *spec.variables != Variables::chern)
                    throw usage_error("todd genus is Chern-variable");
                vars = Variables::chern;
                if constexpr (ScalarRing<S>::has_q)
                    out.f = builtin_series_q(BuiltinSeries::todd_q, series_order, qo);
                else
                    out.f = builtin_series(BuiltinSeries::todd_q, series_order);
                break;
            }
            case BuiltinGenus::trivial:
                out.f = Series<S>::constant(Rational(1), series_order, qo);
                break;
        }
    } else if (spec.e_coeffs) {
        Series<S> e = detail::lift_coeff_list<S>(*spec.e_coeffs, series_order + 1, qo);
        out.f = f_from_e(e, vars);
    } else if (spec.f_coeffs) {
        out.f = detail::lift_coeff_list<S>(*spec.f_coeffs, series_order, qo);
    } else if (spec.cp_values) {
        if (vars == Variables::chern)
            throw usage_error("cp-value genus definitions use the oriented logarithm; variables must be pontryagin");
        if constexpr (ScalarRing<S>::has_q) {
            throw usage_error("cp-value genus definitions are rational");
        } else {
            Series<Rational> l = log_from_cp_values(*spec.cp_values);
            if (l.order() < series_order + 1)
                throw usage_error("cp-value list too short for the requested series order");
            Series<Rational> e = e_from_log(l.truncated(series_order + 1));
            out.f = f_from_e(e, vars);
        }
    } else {
        Series<S> g = detail::lift_coeff_list<S>(*spec.g_coeffs, series_order, qo);
        // reverse of the Pontryagin reindexing: f(x) = g(x^2), or f = g for Chern
        if (vars == Variables::chern) {
            out.f = g;
        } else {
            Series<S> f(series_order, qo);
            for (int k = 0; 2 * k <= series_order; ++k)
                if (k <= g.order()) f.set_coeff(2 * k, g.coeff(k));
            out.f = f;
        }
    }

    out.variables = vars;
    out.g = g_from_f(out.f, vars);  // validates evenness for Pontryagin variables
    if (out.g.order() < max_weight)
        throw usage_error("series_order too small for max_weight " + std::to_string(max_weight));
    out.ms = kappa_polynomials(out.g.truncated(max_weight), max_weight);
    return out;
}

}  // namespace genera
