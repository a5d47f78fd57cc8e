#include "genera/io.hpp"

#include <fstream>
#include <set>

namespace genera {

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw usage_error("expected a rational as a \"num/den\" string");
    return Rational::parse(j.get<std::string>());
}

QPoly qpoly_from_json(const json& j, int q_order) {
    if (j.is_string()) return QPoly(q_order, Rational::parse(j.get<std::string>()));
    if (!j.is_array() || static_cast<int>(j.size()) != q_order + 1)
        throw usage_error("expected a q-polynomial as an array of q_order + 1 strings");
    QPoly p(q_order);
    for (int k = 0; k <= q_order; ++k)
        p.set_coeff(k, Rational::parse(j[static_cast<size_t>(k)].get<std::string>()));
    return p;
}

// --------------------------------------------------------------- K-tables

std::string render_partition_monomial(const Partition& j, Variables vars) {
    const char letter = vars == Variables::chern ? 'c' : 'b';
    std::string out;
    int run_val = 0, run_len = 0;
    auto flush = [&] {
        if (!run_len) return;
        if (!out.empty()) out += "*";
        out += letter + std::to_string(run_val);
        if (run_len > 1) out += "^" + std::to_string(run_len);
        run_len = 0;
    };
    for (int part : j.parts()) {
        if (run_len && part == run_val) { ++run_len; continue; }
        flush();
        run_val = part;
        run_len = 1;
    }
    flush();
    return out;
}

namespace {

// positive terms first, then negative, canonical partition order inside each
// group; mirrors how the classical tables are printed
template <class S>
std::vector<std::pair<Partition, S>> display_order(const std::map<Partition, S, PartitionOrder>& t,
                                                   bool negatives_last) {
    std::vector<std::pair<Partition, S>> terms(t.begin(), t.end());
    if (negatives_last)
        std::stable_partition(terms.begin(), terms.end(),
                              [](const auto& kv) { return !(kv.second < Rational(0)); });
    return terms;
}

}  // namespace

std::string render_kpoly_line(int m, const std::map<Partition, Rational, PartitionOrder>& table,
                              Variables vars) {
    const std::string head = "K_" + std::to_string(m) + " = ";
    if (m == 0) return head + "1";
    if (table.empty()) return head + "0";

    if (table.size() == 1) {
        const auto& [j, c] = *table.begin();
        Rational a = c;
        std::string sign;
        if (a.sign() < 0) { sign = "-"; a = -a; }
        std::string mono = render_partition_monomial(j, vars);
        if (a.is_one()) return head + sign + mono;
        if (a.den_str() == "1") return head + sign + a.str() + "*" + mono;
        return head + sign + "(" + a.str() + ")*" + mono;
    }

    // common denominator: K_m = (integer polynomial)/L
    mpz_class lcm(1);
    for (const auto& [j, c] : table) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den().get_mpz_t());
    auto terms = display_order(table, true);
    std::string poly;
    for (const auto& [j, c] : terms) {
        mpz_class n = c.raw().get_num() * (lcm / c.raw().get_den());
        std::string mag = mpz_class(abs(n)).get_str();
        if (poly.empty()) {
            if (sgn(n) < 0) poly += "-";
        } else {
            poly += sgn(n) < 0 ? " - " : " + ";
        }
        if (mag != "1") poly += mag + "*";
        poly += render_partition_monomial(j, vars);
    }
    if (lcm == 1) return head + poly;
    return head + "(" + poly + ")/" + lcm.get_str();
}

std::string render_kpoly_line(int m, const std::map<Partition, QPoly, PartitionOrder>& table,
                              Variables vars) {
    const std::string head = "K_" + std::to_string(m) + " = ";
    if (m == 0) return head + "1";
    if (table.empty()) return head + "0";
    std::string out;
    for (const auto& [j, c] : table) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + render_partition_monomial(j, vars);
    }
    return head + out;
}

// ------------------------------------------------------------ base classes

std::string render_base_monomial(const BaseMonomial& m) {
    if (m.syms.empty()) return "1";
    std::string out;
    for (const auto& [sym, e] : m.syms) {
        if (!out.empty()) out += "·";
        out += sym.str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string render_base_class(const BaseClass<Rational>& b) {
    if (b.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, c] : b.terms()) {
        Rational a = c;
        bool neg = a.sign() < 0;
        if (neg) a = -a;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string monostr = render_base_monomial(mono);
        if (mono.syms.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += monostr;
        } else if (a.den_str() == "1") {
            out += a.str() + "·" + monostr;
        } else {
            out += "(" + a.str() + ")·" + monostr;
        }
    }
    return out;
}

std::string render_base_class(const BaseClass<QPoly>& b) {
    if (b.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, c] : b.terms()) {
        if (!out.empty()) out += " + ";
        if (mono.syms.empty()) out += "(" + c.str() + ")";
        else out += "(" + c.str() + ")·" + render_base_monomial(mono);
    }
    return out;
}

BaseSymbol parse_base_symbol(const std::string& text, const std::vector<Fibration>& fibs,
                             Variables vars) {
    // grammar: p[<j1>,<j2>,...](<id>)
    if (text.size() < 5 || text.substr(0, 2) != "p[")
        throw usage_error("malformed base symbol '" + text + "'");
    const size_t close = text.find(']');
    if (close == std::string::npos) throw usage_error("malformed base symbol '" + text + "'");
    std::vector<int> parts;
    size_t cursor = 2;
    while (cursor < close) {
        size_t comma = text.find(',', cursor);
        if (comma == std::string::npos || comma > close) comma = close;
        parts.push_back(std::stoi(text.substr(cursor, comma - cursor)));
        cursor = comma + 1;
    }
    if (text[close + 1] != '(' || text.back() != ')')
        throw usage_error("malformed base symbol '" + text + "'");
    const std::string id = text.substr(close + 2, text.size() - close - 3);
    for (const Fibration& f : fibs)
        if (f.id == id) {
            Partition j(std::move(parts));
            return BaseSymbol{id, j, class_degree_scale(vars) * j.weight() - f.fibre_dim};
        }
    throw usage_error("base symbol references undeclared fibration '" + id + "'");
}

// -------------------------------------------------------------- fibrations

json fibration_to_json(const Fibration& f) {
    return json{{"id", f.id}, {"fibre_dim", f.fibre_dim}, {"sign", f.sign}};
}

Fibration fibration_from_json(const json& j) {
    Fibration f;
    f.id = j.at("id").get<std::string>();
    f.fibre_dim = j.at("fibre_dim").get<int>();
    f.sign = j.value("sign", 1);
    validate_fibration(f);
    return f;
}

Fibration fibration_from_flag(const std::string& text) {
    Fibration f;
    f.sign = 1;
    bool has_id = false, has_q = false;
    size_t cursor = 0;
    while (cursor < text.size()) {
        size_t comma = text.find(',', cursor);
        if (comma == std::string::npos) comma = text.size();
        const std::string piece = text.substr(cursor, comma - cursor);
        const size_t eq = piece.find('=');
        if (eq == std::string::npos)
            throw usage_error("fibration flag piece '" + piece + "' is not key=value");
        const std::string key = piece.substr(0, eq);
        const std::string value = piece.substr(eq + 1);
        try {
            if (key == "id") { f.id = value; has_id = true; }
            else if (key == "q") { f.fibre_dim = std::stoi(value); has_q = true; }
            else if (key == "sign") { f.sign = std::stoi(value); }
            else throw usage_error("unknown fibration key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw usage_error("fibration flag: bad value for '" + key + "'");
        }
        cursor = comma + 1;
    }
    if (!has_id || !has_q) throw usage_error("fibration flag needs id=<s>,q=<n>");
    validate_fibration(f);
    return f;
}

// ------------------------------------------------------------- workspace

GenusSpec genus_spec_from_json(const json& j) {
    GenusSpec spec;
    if (j.contains("variables")) {
        const std::string v = j.at("variables").get<std::string>();
        if (v == "pontryagin") spec.variables = Variables::pontryagin;
        else if (v == "chern") spec.variables = Variables::chern;
        else throw usage_error("genus spec: variables must be 'pontryagin' or 'chern'");
    }
    auto coeff_list = [](const json& arr) {
        std::vector<Rational> out;
        for (const json& x : arr) out.push_back(Rational::parse(x.get<std::string>()));
        return out;
    };
    if (j.contains("builtin")) spec.builtin = parse_builtin_genus(j.at("builtin").get<std::string>());
    if (j.contains("e_coeffs")) spec.e_coeffs = coeff_list(j.at("e_coeffs"));
    if (j.contains("f_coeffs")) spec.f_coeffs = coeff_list(j.at("f_coeffs"));
    if (j.contains("cp_values")) spec.cp_values = coeff_list(j.at("cp_values"));
    if (j.contains("g_coeffs")) spec.g_coeffs = coeff_list(j.at("g_coeffs"));
    spec.q_order = j.value("q_order", 0);
    if (spec.definition_count() != 1)
        throw usage_error("genus spec must carry exactly one of builtin/e_coeffs/f_coeffs/cp_values/g_coeffs");
    return spec;
}

GenusSpec genus_spec_from_flag(const std::string& text) {
    const bool looks_like_file =
        text.find('.') != std::string::npos || text.find('/') != std::string::npos;
    if (!looks_like_file) {
        GenusSpec spec;
        spec.builtin = parse_builtin_genus(text);
        return spec;
    }
    std::ifstream in(text);
    if (!in) throw usage_error("cannot open genus spec file '" + text + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw usage_error("genus spec file '" + text + "': " + e.what());
    }
    return genus_spec_from_json(j);
}

WorkspaceConfig workspace_from_json(const json& j) {
    WorkspaceConfig config;
    if (j.contains("genus")) config.genus = genus_spec_from_json(j.at("genus"));
    if (j.contains("series_order")) config.series_order = j.at("series_order").get<int>();
    if (j.contains("max_degree")) config.max_degree = j.at("max_degree").get<int>();
    if (j.contains("q_order")) config.genus.q_order = j.at("q_order").get<int>();
    if (j.contains("fibrations"))
        for (const json& f : j.at("fibrations")) config.fibrations.push_back(fibration_from_json(f));
    if (j.contains("base_dim")) config.base_dim = j.at("base_dim").get<int>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    return config;
}

WorkspaceConfig workspace_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open spec file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw usage_error(std::string("spec file: ") + e.what());
    }
    return workspace_from_json(j);
}

void validate_workspace(const WorkspaceConfig& config) {
    if (config.max_degree < 0) throw usage_error("max_degree must be nonnegative");
    if (config.series_order >= 0 && config.series_order < config.max_degree)
        throw usage_error("series_order (" + std::to_string(config.series_order) +
                          ") must be at least max_degree (" + std::to_string(config.max_degree) + ")");
    if (config.genus.q_order < 0) throw usage_error("q_order must be nonnegative");
    std::set<std::string> ids;
    for (const Fibration& f : config.fibrations) {
        validate_fibration(f);
        if (!ids.insert(f.id).second)
            throw usage_error("duplicate fibration id '" + f.id + "'");
    }
    if (config.base_dim && *config.base_dim < 0) throw usage_error("base_dim must be nonnegative");
}

}  // namespace genera
