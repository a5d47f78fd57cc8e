#pragma once

#include <algorithm>
#include <optional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genera/bordism.hpp"
#include "genera/multiseq.hpp"

namespace genera {

// A formal fibration: fibre dimension q >= 1 and a vertical orientation
// sign. q = 0 is rejected: the push-forward of 1 would need a fibre-count
// symbol that the calculus does not carry, and q >= 1 is what makes
// pi_!(1) = 0 on degree grounds.
struct Fibration {
    std::string id;
    int fibre_dim = 1;
    int sign = 1;
};

inline void validate_fibration(const Fibration& f) {
    if (f.id.empty()) throw usage_error("fibration id must be nonempty");
    if (f.fibre_dim < 1) throw usage_error("fibration '" + f.id + "': fibre_dim must be at least 1");
    if (f.sign != 1 && f.sign != -1) throw usage_error("fibration '" + f.id + "': sign must be +1 or -1");
}

inline Fibration reverse_orientation(Fibration f) {
    f.sign = -f.sign;
    return f;
}

// generator degree scale: p_k sits in degree 4k, c_k in degree 2k
inline int class_degree_scale(Variables vars) { return vars == Variables::pontryagin ? 4 : 2; }

// Push-forward symbol p_J(pi) in the base algebra; the degree
// scale*|J| - q is frozen at construction. Symbols are free generators:
// p_(1,1)(pi) is not p_(1)(pi)^2, because the Umkehr is not a ring map.
struct BaseSymbol {
    std::string fib;
    Partition j;
    int degree = 0;

    std::string str() const {
        std::string s = "p[";
        const auto& parts = j.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + "](" + fib + ")";
    }

    friend bool operator==(const BaseSymbol& a, const BaseSymbol& b) {
        return a.fib == b.fib && a.j == b.j;
    }
    friend bool operator<(const BaseSymbol& a, const BaseSymbol& b) {
        if (a.fib != b.fib) return a.fib < b.fib;
        return PartitionOrder{}(a.j, b.j);
    }
};

// fibre-algebra generator p_k^pi (or c_k^pi), degree frozen at construction
struct FibreGen {
    std::string fib;
    int k = 1;
    int degree = 4;

    friend bool operator==(const FibreGen& a, const FibreGen& b) {
        return a.fib == b.fib && a.k == b.k;
    }
    friend bool operator<(const FibreGen& a, const FibreGen& b) {
        if (a.fib != b.fib) return a.fib < b.fib;
        return a.k < b.k;
    }
};

namespace detail {

// sorted-unique (key, exponent) list; merging adds exponents
template <class K>
std::vector<std::pair<K, int>> merge_powers(const std::vector<std::pair<K, int>>& a,
                                            const std::vector<std::pair<K, int>>& b) {
    std::vector<std::pair<K, int>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i; ++j;
        }
    }
    return out;
}

template <class K>
bool powers_less(const std::vector<std::pair<K, int>>& a, const std::vector<std::pair<K, int>>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const auto& x, const auto& y) {
                                            if (!(x.first == y.first)) return x.first < y.first;
                                            return x.second < y.second;
                                        });
}

}  // namespace detail

// Monomial of the fibre algebra: fibre generators times base symbols that
// ride along. Everything is in even degree, so the algebra is plainly
// commutative.
struct FibreMonomial {
    std::vector<std::pair<FibreGen, int>> gens;
    std::vector<std::pair<BaseSymbol, int>> base;

    int degree() const {
        int d = 0;
        for (const auto& [g, e] : gens) d += g.degree * e;
        for (const auto& [s, e] : base) d += s.degree * e;
        return d;
    }
    bool empty() const { return gens.empty() && base.empty(); }

    FibreMonomial operator*(const FibreMonomial& o) const {
        return FibreMonomial{detail::merge_powers(gens, o.gens), detail::merge_powers(base, o.base)};
    }
    friend bool operator==(const FibreMonomial& a, const FibreMonomial& b) {
        return a.gens == b.gens && a.base == b.base;
    }
    friend bool operator<(const FibreMonomial& a, const FibreMonomial& b) {
        if (!(a.gens == b.gens)) return detail::powers_less(a.gens, b.gens);
        return detail::powers_less(a.base, b.base);
    }
};

struct BaseMonomial {
    std::vector<std::pair<BaseSymbol, int>> syms;

    int degree() const {
        int d = 0;
        for (const auto& [s, e] : syms) d += s.degree * e;
        return d;
    }
    bool empty() const { return syms.empty(); }

    BaseMonomial operator*(const BaseMonomial& o) const {
        return BaseMonomial{detail::merge_powers(syms, o.syms)};
    }
    friend bool operator==(const BaseMonomial& a, const BaseMonomial& b) { return a.syms == b.syms; }
    friend bool operator<(const BaseMonomial& a, const BaseMonomial& b) {
        return detail::powers_less(a.syms, b.syms);
    }
};

// Sparse polynomial over one of the monomial types: normal form keeps
// monomials sorted and never stores zero coefficients.
template <class Mono, class S>
class GradedPoly {
public:
    explicit GradedPoly(int q_order = 0) : q_order_(q_order) {}

    static GradedPoly one(int q_order = 0) {
        GradedPoly p(q_order);
        p.add_term(Mono{}, ScalarRing<S>::one(q_order));
        return p;
    }

    int q_order() const { return q_order_; }
    const std::map<Mono, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Mono& m, const S& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    S constant_term() const {
        auto it = terms_.find(Mono{});
        return it != terms_.end() ? it->second : ScalarRing<S>::zero(q_order_);
    }

    GradedPoly component(int degree) const {
        GradedPoly out(q_order_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == degree) out.terms_.emplace(m, c);
        return out;
    }

    // all degrees carrying a nonzero term, ascending
    std::vector<int> support_degrees() const {
        std::vector<int> ds;
        for (const auto& [m, c] : terms_) ds.push_back(m.degree());
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        return ds;
    }

    GradedPoly truncated_above(int max_degree) const {
        GradedPoly out(q_order_);
        for (const auto& [m, c] : terms_)
            if (m.degree() <= max_degree) out.terms_.emplace(m, c);
        return out;
    }

    GradedPoly operator-() const {
        GradedPoly out(q_order_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    GradedPoly& operator+=(const GradedPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GradedPoly& operator-=(const GradedPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { a += b; return a; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { a -= b; return a; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        GradedPoly out(a.q_order_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    GradedPoly scaled(const S& c) const {
        GradedPoly out(q_order_);
        if (c.is_zero()) return out;
        for (const auto& [m, v] : terms_) out.add_term(m, v * c);
        return out;
    }

    friend bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

private:
    int q_order_;
    std::map<Mono, S> terms_;
};

template <class S>
using FibreClass = GradedPoly<FibreMonomial, S>;
template <class S>
using BaseClass = GradedPoly<BaseMonomial, S>;

template <class S>
FibreClass<S> fibre_generator(const Fibration& f, int k, int q_order = 0,
                              Variables vars = Variables::pontryagin) {
    FibreClass<S> out(q_order);
    out.add_term(FibreMonomial{{{FibreGen{f.id, k, class_degree_scale(vars) * k}, 1}}, {}},
                 ScalarRing<S>::one(q_order));
    return out;
}

// total characteristic class of the vertical tangent bundle:
// 1 + p_1 + p_2 + ... (or 1 + c_1 + ... with degree-2k generators)
template <class S>
FibreClass<S> total_vertical_pontryagin(const Fibration& f, int max_degree, int q_order = 0,
                                        Variables vars = Variables::pontryagin) {
    validate_fibration(f);
    const int scale = class_degree_scale(vars);
    FibreClass<S> out = FibreClass<S>::one(q_order);
    for (int k = 1; scale * k <= max_degree; ++k)
        out.add_term(FibreMonomial{{{FibreGen{f.id, k, scale * k}, 1}}, {}},
                     ScalarRing<S>::one(q_order));
    return out;
}

// p(-V^st) of a fibre product is the product of the factors' total classes.
template <class S>
FibreClass<S> fibre_product_total(std::span<const Fibration> fibs, int max_degree, int q_order = 0,
                                  Variables vars = Variables::pontryagin) {
    for (size_t i = 0; i < fibs.size(); ++i)
        for (size_t j = i + 1; j < fibs.size(); ++j)
            if (fibs[i].id == fibs[j].id)
                throw usage_error("fibre product with duplicate fibration id '" + fibs[i].id + "'");
    FibreClass<S> out = FibreClass<S>::one(q_order);
    for (const Fibration& f : fibs)
        out = (out * total_vertical_pontryagin<S>(f, max_degree, q_order, vars))
                  .truncated_above(max_degree);
    return out;
}

template <class S>
FibreClass<S> fibre_product_total(const Fibration& a, const Fibration& b, int max_degree,
                                  int q_order = 0, Variables vars = Variables::pontryagin) {
    const Fibration fs[] = {a, b};
    return fibre_product_total<S>(std::span<const Fibration>(fs, 2), max_degree, q_order, vars);
}

// Integration over the fibre, monomial by monomial. The base part passes
// through (projection formula); the fibre part of each fibration in S maps
// to sign * p_J with J its exponent partition; a fibration contributing the
// empty partition kills the monomial, since pi_!(1) lands in H^{-q} = 0.
template <class S>
BaseClass<S> umkehr(std::span<const Fibration> fibs, const FibreClass<S>& v,
                    Variables vars = Variables::pontryagin) {
    for (const Fibration& f : fibs) validate_fibration(f);
    const int scale = class_degree_scale(vars);
    BaseClass<S> out(v.q_order());
    for (const auto& [mono, coeff] : v.terms()) {
        for (const auto& [g, e] : mono.gens) {
            bool known = false;
            for (const Fibration& f : fibs) known = known || f.id == g.fib;
            if (!known)
                throw usage_error("umkehr: fibre generator of undeclared fibration '" + g.fib + "'");
        }
        BaseMonomial target{mono.base};
        int sign = 1;
        bool dead = false;
        for (const Fibration& f : fibs) {
            std::vector<int> parts;
            for (const auto& [g, e] : mono.gens)
                if (g.fib == f.id)
                    for (int r = 0; r < e; ++r) parts.push_back(g.k);
            Partition j(std::move(parts));
            if (j.empty()) { dead = true; break; }  // pi_!(1) = 0
            const int deg = scale * j.weight() - f.fibre_dim;
            if (deg < 0) { dead = true; break; }    // negative-degree symbol is 0
            sign *= f.sign;
            target = target * BaseMonomial{{{BaseSymbol{f.id, j, deg}, 1}}};
        }
        if (dead) continue;
        out.add_term(target, sign < 0 ? -coeff : coeff);
    }
    return out;
}

template <class S>
BaseClass<S> umkehr(const Fibration& f, const FibreClass<S>& v,
                    Variables vars = Variables::pontryagin) {
    return umkehr(std::span<const Fibration>(&f, 1), v, vars);
}

// sign(pi) * p_J(pi); zero when the symbol degree is negative.
template <class S = Rational>
BaseClass<S> vertical_class(const Fibration& f, const Partition& j, int q_order = 0,
                            Variables vars = Variables::pontryagin) {
    validate_fibration(f);
    BaseClass<S> out(q_order);
    const int deg = class_degree_scale(vars) * j.weight() - f.fibre_dim;
    if (deg < 0) return out;
    S c = ScalarRing<S>::one(q_order);
    out.add_term(BaseMonomial{{{BaseSymbol{f.id, j, deg}, 1}}}, f.sign < 0 ? -c : c);
    return out;
}

// kappa applied to a total class with constant term 1: sum over weights m
// of K_m evaluated at the homogeneous components of t.
template <class S>
FibreClass<S> kappa_of_total(const MultSeq<S>& ms, const FibreClass<S>& t, int max_degree,
                             Variables vars = Variables::pontryagin) {
    if (t.constant_term() != ScalarRing<S>::one(t.q_order()))
        throw domain_error("kappa_of_total: total class must have constant term 1");
    const int scale = class_degree_scale(vars);
    if (ms.max_weight < max_degree / scale)
        throw usage_error("kappa_of_total: K-table too shallow for degree " + std::to_string(max_degree));
    std::vector<FibreClass<S>> comp;
    for (int k = 0; scale * k <= max_degree; ++k) comp.push_back(t.component(scale * k));
    FibreClass<S> out = FibreClass<S>::one(t.q_order());
    for (int m = 1; scale * m <= max_degree; ++m) {
        for (const auto& [j, c] : ms.k[static_cast<size_t>(m)]) {
            FibreClass<S> term = FibreClass<S>::one(t.q_order());
            for (int part : j.parts()) term = term * comp[static_cast<size_t>(part)];
            out += term.scaled(c);
        }
    }
    return out;
}

// Theorem: omega |-> f_!(kappa(p(-V^st))) is a vertical genus. max_degree
// bounds the fibre-side degree, so base terms appear in degrees
// scale*m - sum(q_i) for scale*m <= max_degree.
template <class S>
BaseClass<S> vertical_genus(const MultSeq<S>& ms, std::span<const Fibration> fibs, int max_degree,
                            std::optional<int> base_dim = std::nullopt,
                            Variables vars = Variables::pontryagin) {
    FibreClass<S> total = fibre_product_total<S>(fibs, max_degree, ms.q_order, vars);
    BaseClass<S> out = umkehr(fibs, kappa_of_total(ms, total, max_degree, vars), vars);
    if (base_dim) out = out.truncated_above(*base_dim);
    return out;
}

template <class S>
BaseClass<S> vertical_genus(const MultSeq<S>& ms, const Fibration& f, int max_degree,
                            std::optional<int> base_dim = std::nullopt,
                            Variables vars = Variables::pontryagin) {
    return vertical_genus(ms, std::span<const Fibration>(&f, 1), max_degree, base_dim, vars);
}

template <class S>
struct MultiplicativityLine {
    int degree;
    BaseClass<S> lhs;  // component of the fibre-product genus
    BaseClass<S> rhs;  // component of the cup product of the two genera
    bool equal;
};

template <class S>
struct MultiplicativityReport {
    bool all_equal = true;
    std::vector<MultiplicativityLine<S>> lines;
};

// Degree-by-degree comparison of genus(pi x pi') against
// genus(pi) * genus(pi'), on the degrees both sides compute completely.
// Inequality signals an engine bug, not bad input.
template <class S>
MultiplicativityReport<S> check_multiplicativity(const MultSeq<S>& ms, const Fibration& a,
                                                 const Fibration& b, int max_degree,
                                                 Variables vars = Variables::pontryagin) {
    if (a.id == b.id) throw usage_error("check_multiplicativity: fibration ids must differ");
    const Fibration pair[] = {a, b};
    BaseClass<S> lhs =
        vertical_genus(ms, std::span<const Fibration>(pair, 2), max_degree, std::nullopt, vars);
    BaseClass<S> rhs = vertical_genus(ms, a, max_degree, std::nullopt, vars) *
                       vertical_genus(ms, b, max_degree, std::nullopt, vars);
    MultiplicativityReport<S> rep;
    const int top = max_degree - a.fibre_dim - b.fibre_dim;
    for (int d = 0; d <= top; ++d) {
        BaseClass<S> l = lhs.component(d);
        BaseClass<S> r = rhs.component(d);
        if (l.is_zero() && r.is_zero()) continue;
        const bool eq = l == r;
        rep.all_equal = rep.all_equal && eq;
        rep.lines.push_back({d, std::move(l), std::move(r), eq});
    }
    // anything the lhs carries beyond the complete range would also be a bug
    for (int d : lhs.support_degrees())
        if (d > top) {
            rep.all_equal = false;
            rep.lines.push_back({d, lhs.component(d), BaseClass<S>(ms.q_order), false});
        }
    return rep;
}

}  // namespace genera
