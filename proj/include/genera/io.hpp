#pragma once

// Text renderers and JSON serialization for every value kind the CLI emits,
// plus the workspace configuration. JSON round-trips exactly: rationals are
// "num/den" strings, q-polynomials arrays of such strings.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genera/multiseq.hpp"
#include "genera/vertical.hpp"

namespace genera {

using nlohmann::json;

// ---------------------------------------------------------------- scalars

inline json scalar_to_json(const Rational& r) { return json(r.str()); }
inline json scalar_to_json(const QPoly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.q_order(); ++k) arr.push_back(p.coeff(k).str());
    return arr;
}

Rational rational_from_json(const json& j);
QPoly qpoly_from_json(const json& j, int q_order);

template <class S>
S scalar_from_json(const json& j, int q_order);
template <>
inline Rational scalar_from_json<Rational>(const json& j, int) { return rational_from_json(j); }
template <>
inline QPoly scalar_from_json<QPoly>(const json& j, int q_order) { return qpoly_from_json(j, q_order); }

// ----------------------------------------------------------------- series

template <class S>
json series_to_json(const Series<S>& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(scalar_to_json(s.coeff(k)));
    return json{{"order", s.order()}, {"q_order", s.q_order()}, {"coeffs", coeffs}};
}

template <class S>
Series<S> series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw usage_error("series JSON needs 'order' and 'coeffs'");
    const int order = j.at("order").get<int>();
    const int q_order = j.value("q_order", 0);
    Series<S> s(order, q_order);
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        throw usage_error("series JSON: coeffs length must be order + 1");
    for (int k = 0; k <= order; ++k) s.set_coeff(k, scalar_from_json<S>(coeffs[static_cast<size_t>(k)], q_order));
    return s;
}

// --------------------------------------------------------------- K-tables

std::string render_partition_monomial(const Partition& j, Variables vars);

// "K_2 = (7*b1^2 - 4*b2)/5760" style line for one weight
std::string render_kpoly_line(int m, const std::map<Partition, Rational, PartitionOrder>& table,
                              Variables vars);
std::string render_kpoly_line(int m, const std::map<Partition, QPoly, PartitionOrder>& table,
                              Variables vars);

template <class S>
json ktable_weight_to_json(int m, const std::map<Partition, S, PartitionOrder>& table) {
    json terms = json::array();
    for (const auto& [j, c] : table)
        terms.push_back(json{{"partition", j.parts()}, {"coeff", scalar_to_json(c)}});
    return json{{"weight", m}, {"terms", terms}};
}

template <class S>
json multseq_to_json(const MultSeq<S>& ms) {
    json tables = json::array();
    for (int m = 0; m <= ms.max_weight; ++m)
        tables.push_back(ktable_weight_to_json(m, ms.k[static_cast<size_t>(m)]));
    return json{{"max_weight", ms.max_weight}, {"q_order", ms.q_order}, {"tables", tables}};
}

template <class S>
MultSeq<S> multseq_from_json(const json& j) {
    MultSeq<S> ms;
    ms.max_weight = j.at("max_weight").get<int>();
    ms.q_order = j.value("q_order", 0);
    ms.k.resize(static_cast<size_t>(ms.max_weight) + 1);
    for (const json& tbl : j.at("tables")) {
        const int m = tbl.at("weight").get<int>();
        if (m < 0 || m > ms.max_weight) throw usage_error("K-table JSON: weight out of range");
        for (const json& term : tbl.at("terms")) {
            Partition p(term.at("partition").get<std::vector<int>>());
            ms.k[static_cast<size_t>(m)].emplace(p, scalar_from_json<S>(term.at("coeff"), ms.q_order));
        }
    }
    return ms;
}

// ------------------------------------------------------------ base classes

std::string render_base_monomial(const BaseMonomial& m);

std::string render_base_class(const BaseClass<Rational>& b);
std::string render_base_class(const BaseClass<QPoly>& b);

BaseSymbol parse_base_symbol(const std::string& text, const std::vector<Fibration>& fibs,
                             Variables vars);

template <class S>
json base_class_to_json(const BaseClass<S>& b) {
    json arr = json::array();
    for (const auto& [mono, c] : b.terms()) {
        json ms = json::array();
        for (const auto& [sym, e] : mono.syms) ms.push_back(json::array({sym.str(), e}));
        arr.push_back(json{{"monomial", ms}, {"coeff", scalar_to_json(c)}});
    }
    return arr;
}

template <class S>
BaseClass<S> base_class_from_json(const json& j, const std::vector<Fibration>& fibs, int q_order,
                                  Variables vars = Variables::pontryagin) {
    BaseClass<S> out(q_order);
    for (const json& term : j) {
        BaseMonomial mono;
        for (const json& sym : term.at("monomial")) {
            BaseSymbol s = parse_base_symbol(sym.at(0).get<std::string>(), fibs, vars);
            mono = mono * BaseMonomial{{{s, sym.at(1).get<int>()}}};
        }
        out.add_term(mono, scalar_from_json<S>(term.at("coeff"), q_order));
    }
    return out;
}

// -------------------------------------------------------------- fibrations

json fibration_to_json(const Fibration& f);
Fibration fibration_from_json(const json& j);
// flag syntax: id=<s>,q=<n>,sign=<+1|-1|1|-1>
Fibration fibration_from_flag(const std::string& text);

// ------------------------------------------------------------- workspace

struct WorkspaceConfig {
    GenusSpec genus;
    int series_order = -1;  // -1: pick max(12, max_degree)
    int max_degree = 16;
    std::vector<Fibration> fibrations;
    std::optional<int> base_dim;
    std::uint64_t seed = 12345;

    int effective_series_order() const {
        return series_order >= 0 ? series_order : std::max(12, max_degree);
    }
    bool needs_q() const {
        return genus.q_order > 0 || (genus.builtin && *genus.builtin == BuiltinGenus::witten);
    }
};

GenusSpec genus_spec_from_json(const json& j);
// name of a builtin genus, or a path to a genus-spec JSON file
GenusSpec genus_spec_from_flag(const std::string& text);

WorkspaceConfig workspace_from_json(const json& j);
WorkspaceConfig workspace_from_file(const std::string& path);

// validates the spec invariants; throws usage_error naming the field
void validate_workspace(const WorkspaceConfig& config);

}  // namespace genera
