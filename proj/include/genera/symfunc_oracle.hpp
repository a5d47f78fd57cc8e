#pragma once

// Brute-force symmetric-function oracle, independent of the partition-keyed
// engine: dense multivariate polynomials over explicit exponent vectors.
// Expands prod g(beta_i) literally, expands elementary symmetric products
// literally, and reduces by lex-leading pivot. Slow and obvious on purpose.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "genera/multiseq.hpp"

namespace oracle {

using genera::Partition;
using genera::Rational;

using Exponents = std::vector<int>;            // length = number of variables
using DensePoly = std::map<Exponents, Rational>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

inline DensePoly mul(const DensePoly& a, const DensePoly& b, int max_degree) {
    DensePoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            if (total_degree(e) > max_degree) continue;
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// g(beta_i) truncated at degree m, in n variables
inline DensePoly g_at_variable(const genera::Series<Rational>& g, int var, int n, int m) {
    DensePoly p;
    for (int k = 0; k <= std::min(g.order(), m); ++k) {
        if (g.coeff(k).is_zero()) continue;
        Exponents e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(var)] = k;
        p[e] = g.coeff(k);
    }
    return p;
}

// e_k(beta_1..beta_n) by literal subset sums
inline DensePoly elementary(int k, int n) {
    DensePoly p;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == k) {
            Exponents e(static_cast<size_t>(n), 0);
            for (int i : pick) e[static_cast<size_t>(i)] = 1;
            p[e] = Rational(1);
            return;
        }
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return p;
}

// K_m coefficients by expansion in n_roots explicit variables
inline std::map<Partition, Rational, genera::PartitionOrder> kappa_weight_bruteforce(
    const genera::Series<Rational>& g, int m, int n_roots) {
    std::map<Partition, Rational, genera::PartitionOrder> out;
    if (m == 0) {
        out.emplace(Partition(), Rational(1));
        return out;
    }
    DensePoly prod;
    prod[Exponents(static_cast<size_t>(n_roots), 0)] = Rational(1);
    for (int i = 0; i < n_roots; ++i) prod = mul(prod, g_at_variable(g, i, n_roots, m), m);

    DensePoly top;
    for (const auto& [e, c] : prod)
        if (total_degree(e) == m) top[e] = c;

    while (!top.empty()) {
        auto lead = std::prev(top.end());  // lex-greatest exponent vector
        Exponents sorted_lead = lead->first;
        std::sort(sorted_lead.begin(), sorted_lead.end(), std::greater<int>());
        while (!sorted_lead.empty() && sorted_lead.back() == 0) sorted_lead.pop_back();
        const Partition mu = Partition(sorted_lead).conjugate();
        const Rational c = lead->second;

        DensePoly e_mu;
        e_mu[Exponents(static_cast<size_t>(n_roots), 0)] = Rational(1);
        for (int part : mu.parts()) e_mu = mul(e_mu, elementary(part, n_roots), m);
        for (const auto& [e, v] : e_mu) {
            top[e] -= c * v;
            if (top[e].is_zero()) top.erase(e);
        }
        out.emplace(mu, c);
    }
    return out;
}

}  // namespace oracle
