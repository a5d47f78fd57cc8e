// Command-line front end: K-coefficient tables, genus evaluation on bordism
// elements, vertical genera of formal fibrations, and the verification
// suite. Exit codes: 0 success, 1 verification failure, 2 usage/spec error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "genera/bordism.hpp"
#include "genera/io.hpp"
#include "genera/verify.hpp"
#include "genera/vertical.hpp"

using namespace genera;

namespace {

struct Flags {
    std::string spec_file;
    std::string genus;
    int order = -1;
    int max_degree = -1;
    int q_order = -1;
    std::string manifold_expr;
    std::vector<std::string> fibrations;
    int base_dim = -1;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool corrupt_ktable = false;
};

WorkspaceConfig build_config(const Flags& flags) {
    WorkspaceConfig config;
    if (!flags.spec_file.empty()) config = workspace_from_file(flags.spec_file);
    if (!flags.genus.empty()) {
        const int keep_q = config.genus.q_order;
        config.genus = genus_spec_from_flag(flags.genus);
        if (config.genus.q_order == 0) config.genus.q_order = keep_q;
    }
    if (flags.order >= 0) config.series_order = flags.order;
    if (flags.max_degree >= 0) config.max_degree = flags.max_degree;
    if (flags.q_order >= 0) config.genus.q_order = flags.q_order;
    for (const std::string& text : flags.fibrations)
        config.fibrations.push_back(fibration_from_flag(text));
    if (flags.base_dim >= 0) config.base_dim = flags.base_dim;
    if (flags.seed_set) config.seed = flags.seed;
    validate_workspace(config);
    if (flags.format != "text" && flags.format != "json")
        throw usage_error("format must be 'text' or 'json'");
    return config;
}

void require_genus(const WorkspaceConfig& config) {
    if (config.genus.definition_count() != 1)
        throw usage_error("a genus is required: pass --genus <name|file> or a spec file");
}

// ------------------------------------------------------------------ coeffs

template <class S>
int cmd_coeffs(const WorkspaceConfig& config, const std::string& format) {
    const Variables vars = genus_variables(config.genus);
    const int max_weight = config.max_degree / class_degree_scale(vars);
    auto resolved = resolve_genus<S>(config.genus, config.effective_series_order(), max_weight);
    if (format == "json") {
        json out = multseq_to_json(resolved.ms);
        out["variables"] = resolved.variables == Variables::chern ? "chern" : "pontryagin";
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << render_kpoly_line(0, resolved.ms.k[0], resolved.variables) << "\n";
    for (int m = 1; m <= resolved.ms.max_weight; ++m)
        if (!resolved.ms.k[static_cast<size_t>(m)].empty())
            std::cout << render_kpoly_line(m, resolved.ms.k[static_cast<size_t>(m)],
                                           resolved.variables)
                      << "\n";
    return 0;
}

// -------------------------------------------------------------------- eval

template <class S>
int cmd_eval(const WorkspaceConfig& config, const std::string& expr, const std::string& format) {
    BordismElement element = parse_element_expr(expr);
    const Variables vars = genus_variables(config.genus);
    const int scale = class_degree_scale(vars);
    if (element.degree % scale != 0) {
        // dimensions away from the grading carry the zero map
        S zero = ScalarRing<S>::zero(config.genus.q_order);
        if (format == "json")
            std::cout << json{{"expression", expr},
                              {"element", render_element(element)},
                              {"value", scalar_to_json(zero)}}
                             .dump(2)
                      << "\n";
        else
            std::cout << ScalarRing<S>::str(zero) << "\n";
        return 0;
    }
    const int weight = element.degree / scale;
    const int needed_order = vars == Variables::pontryagin ? 2 * weight + 2 : weight + 2;
    if (config.series_order >= 0 && config.series_order < needed_order)
        throw usage_error("series_order " + std::to_string(config.series_order) +
                          " too small for a degree-" + std::to_string(element.degree) +
                          " element (need " + std::to_string(needed_order) + ")");
    const int order = std::max(config.effective_series_order(), needed_order);
    auto resolved = resolve_genus<S>(config.genus, order, weight);
    S value = genus_eval(resolved.ms, element, resolved.variables);
    if (format == "json") {
        std::cout << json{{"expression", expr},
                          {"element", render_element(element)},
                          {"value", scalar_to_json(value)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << ScalarRing<S>::str(value) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- vertical

template <class S>
int cmd_vertical(const WorkspaceConfig& config, const std::string& format) {
    if (config.fibrations.empty())
        throw usage_error("vertical requires at least one --fibration id=<s>,q=<n>[,sign=<1|-1>]");
    const Variables vars = genus_variables(config.genus);
    const int scale = class_degree_scale(vars);
    const int max_weight = config.max_degree / scale;
    auto resolved = resolve_genus<S>(config.genus, config.effective_series_order(), max_weight);

    const std::span<const Fibration> fibs(config.fibrations.data(), config.fibrations.size());
    std::vector<std::pair<std::string, BaseClass<S>>> singles;
    for (const Fibration& f : config.fibrations)
        singles.emplace_back(f.id, vertical_genus(resolved.ms, f, config.max_degree,
                                                  config.base_dim, vars));

    BaseClass<S> product_genus(resolved.ms.q_order);
    BaseClass<S> cup(resolved.ms.q_order);
    int top = config.max_degree;
    bool all_equal = true;
    std::vector<std::tuple<int, BaseClass<S>, BaseClass<S>, bool>> mult_lines;
    if (config.fibrations.size() >= 2) {
        product_genus = vertical_genus(resolved.ms, fibs, config.max_degree, config.base_dim, vars);
        cup = BaseClass<S>::one(resolved.ms.q_order);
        for (const auto& [id, g] : singles) cup = cup * g;
        for (const Fibration& f : config.fibrations) top -= f.fibre_dim;
        if (config.base_dim) top = std::min(top, *config.base_dim);
        for (int d = 0; d <= top; ++d) {
            BaseClass<S> l = product_genus.component(d);
            BaseClass<S> r = cup.component(d);
            if (l.is_zero() && r.is_zero()) continue;
            const bool eq = l == r;
            all_equal = all_equal && eq;
            mult_lines.emplace_back(d, std::move(l), std::move(r), eq);
        }
    }

    if (format == "json") {
        json genera_json = json::object();
        for (const auto& [id, g] : singles) genera_json[id] = base_class_to_json(g);
        json fj = json::array();
        for (const Fibration& f : config.fibrations) fj.push_back(fibration_to_json(f));
        json mult = json::array();
        for (const auto& [d, l, r, eq] : mult_lines)
            mult.push_back(json{{"degree", d},
                            {"lhs", base_class_to_json(l)},
                            {"rhs", base_class_to_json(r)},
                            {"equal", eq}});
        json out{{"fibrations", fj},
                 {"genera", genera_json},
                 {"multiplicativity", mult},
                 {"all_equal", all_equal}};
        if (config.fibrations.size() >= 2) out["product"] = base_class_to_json(product_genus);
        std::cout << out.dump(2) << "\n";
        return all_equal ? 0 : 1;
    }

    for (const auto& [id, g] : singles) {
        std::cout << "genus of " << id << ":\n";
        for (int d : g.support_degrees())
            std::cout << "deg " << d << ": " << render_base_class(g.component(d)) << "\n";
    }
    if (config.fibrations.size() >= 2) {
        std::cout << "genus of the fibre product:\n";
        for (int d : product_genus.support_degrees())
            std::cout << "deg " << d << ": " << render_base_class(product_genus.component(d))
                      << "\n";
        std::cout << "multiplicativity:\n";
        for (const auto& [d, l, r, eq] : mult_lines) {
            std::cout << "deg " << d << ": " << render_base_class(l)
                      << (eq ? "  [OK]" : "  [MISMATCH]") << "\n";
            if (!eq) std::cout << "  cup product gives: " << render_base_class(r) << "\n";
        }
    }
    return all_equal ? 0 : 1;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const WorkspaceConfig& config, bool corrupt, const std::string& format) {
    VerifyOptions options;
    options.seed = config.seed;
    options.corrupt_ktable = corrupt;
    const std::vector<CheckResult> results = run_acceptance_checks(options);
    if (format == "json")
        std::cout << verify_report_to_json(results, options).dump(2) << "\n";
    else
        std::cout << render_verify_report(results, options);
    return all_passed(results) ? 0 : 1;
}

void add_common_flags(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--spec", flags.spec_file, "workspace spec file (JSON); flags override it");
    cmd->add_option("--genus", flags.genus,
                    "builtin genus (signature|a_hat|todd|witten|trivial) or genus spec file");
    cmd->add_option("--order", flags.order, "series truncation order");
    cmd->add_option("--max-degree", flags.max_degree, "top cohomological degree");
    cmd->add_option("--q-order", flags.q_order, "q-truncation order for the witten genus");
    cmd->add_option("--base-dim", flags.base_dim, "dimension bound for the base: higher degrees vanish");
    cmd->add_option("--format", flags.format, "output format: text|json");
    auto* seed = cmd->add_option("--seed", flags.seed, "seed for randomized checks");
    seed->each([&flags](const std::string&) { flags.seed_set = true; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classical and vertical Hirzebruch genera"};
    app.require_subcommand(1);
    Flags flags;

    CLI::App* coeffs = app.add_subcommand("coeffs", "print the K-polynomial table of a genus");
    add_common_flags(coeffs, flags);

    CLI::App* eval = app.add_subcommand("eval", "evaluate a genus on a bordism element");
    add_common_flags(eval, flags);
    std::string positional_expr;
    eval->add_option("--manifold-expr", flags.manifold_expr, "element, e.g. \"3*CP2^2 - 2*CP4\"");
    eval->add_option("expr", positional_expr, "element expression (positional form)");

    CLI::App* vertical = app.add_subcommand("vertical", "vertical genera of formal fibrations");
    add_common_flags(vertical, flags);
    vertical->add_option("--fibration", flags.fibrations,
                         "fibration as id=<s>,q=<n>[,sign=<1|-1>] (repeatable)");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common_flags(verify, flags);
    verify->add_flag("--corrupt-ktable", flags.corrupt_ktable,
                     "negative-control hook: corrupt a K-table so the suite must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        WorkspaceConfig config = build_config(flags);
        if (coeffs->parsed()) {
            require_genus(config);
            return config.needs_q() ? cmd_coeffs<QPoly>(config, flags.format)
                                    : cmd_coeffs<Rational>(config, flags.format);
        }
        if (eval->parsed()) {
            require_genus(config);
            std::string expr = !flags.manifold_expr.empty() ? flags.manifold_expr : positional_expr;
            if (expr.empty()) throw usage_error("eval needs an element expression");
            return config.needs_q() ? cmd_eval<QPoly>(config, expr, flags.format)
                                    : cmd_eval<Rational>(config, expr, flags.format);
        }
        if (vertical->parsed()) {
            require_genus(config);
            return config.needs_q() ? cmd_vertical<QPoly>(config, flags.format)
                                    : cmd_vertical<Rational>(config, flags.format);
        }
        return cmd_verify(config, flags.corrupt_ktable, flags.format);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
