#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "epg/graph.hpp"
#include "epg/group.hpp"
#include "epg/kappa.hpp"
#include "epg/power_graphs.hpp"
#include "epg/serialize.hpp"
#include "epg/spec_parse.hpp"
#include "epg/verify.hpp"

namespace {

// Exit codes: 0 success/agree, 1 domain error, 2 parse error,
// 3 formula-oracle disagreement, 4 oracle budget exceeded.
enum ExitCode { kOk = 0, kError = 1, kParseError = 2, kDisagree = 3, kBudget = 4 };

std::string subset_text(const std::vector<int>& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + "}";
}

epg::SimpleGraph build_kind(const epg::FiniteGroup& G, const std::string& kind) {
    if (kind == "enhanced") return epg::enhanced_power_graph(G);
    if (kind == "power") return epg::power_graph(G);
    if (kind == "commuting") return epg::commuting_graph(G);
    if (kind == "deleted") return epg::deleted_enhanced(G);
    return epg::proper_enhanced(G);
}

void print_kappa_report(const epg::ConnectivityReport& rep) {
    std::cout << "spec: " << rep.spec_text << "\n";
    std::cout << "order: " << rep.order << "\n";
    if (rep.complete_graph)
        std::cout << "enhanced power graph is complete (cyclic group)\n";
    if (rep.kappa_formula) {
        std::cout << "kappa[formula] = " << *rep.kappa_formula;
        if (rep.formula)
            std::cout << "  (T = " << subset_text(rep.formula->minimizing_subset)
                      << ", witness size = " << rep.witness_set->size() << ")";
        std::cout << "\n";
    }
    if (rep.variant_printed)
        std::cout << "abelian closed form: printed = " << *rep.variant_printed
                  << ", mr-corrected = " << *rep.variant_mr_corrected << "\n";
    if (rep.kappa_oracle) std::cout << "kappa[oracle] = " << *rep.kappa_oracle << "\n";
    std::cout << "verdict: " << epg::to_string(rep.verdict) << "\n";
}

int run_kappa(const std::string& spec_text, const std::string& method, bool as_json, epg::u64 budget) {
    epg::GroupSpec spec = epg::parse_group_spec(spec_text);
    epg::ConnectivityReport rep;
    if (method == "oracle") {
        epg::FiniteGroup G = epg::build_group(spec);
        rep.spec_text = spec.text();
        rep.order = static_cast<epg::u64>(G.order());
        if (rep.order > budget) {
            std::cerr << "error: order " << rep.order << " exceeds the oracle budget " << budget << "\n";
            return kBudget;
        }
        auto oracle = epg::vertex_connectivity(epg::enhanced_power_graph(G));
        rep.kappa_oracle = static_cast<epg::u64>(oracle.kappa);
        rep.oracle_witness = std::move(oracle.witness);
        rep.verdict = epg::Verdict::formula_skipped;
    } else {
        epg::OracleOptions opts;
        opts.run = method == "both";
        opts.budget = budget;
        rep = epg::kappa_enhanced(spec, opts);
    }
    if (as_json)
        std::cout << epg::report_json(rep).dump() << "\n";
    else
        print_kappa_report(rep);
    return rep.verdict == epg::Verdict::disagree ? kDisagree : kOk;
}

int run_graph(const std::string& spec_text, const std::string& kind, const std::string& format) {
    epg::GroupSpec spec = epg::parse_group_spec(spec_text);
    epg::SimpleGraph g = build_kind(epg::build_group(spec), kind);
    if (format == "dot")
        std::cout << epg::to_dot(g, kind);
    else
        std::cout << epg::to_json(g) << "\n";
    return kOk;
}

int run_mr(const std::string& spec_text, bool as_json) {
    epg::GroupSpec spec = epg::parse_group_spec(spec_text);
    epg::FiniteGroup G = epg::build_group(spec);
    auto primes = epg::factorize(static_cast<epg::u64>(G.order()));
    if (G.order() < 2 || primes.size() != 1) {
        std::cerr << "error: mr is defined for nontrivial p-groups; |" << spec.text()
                  << "| = " << G.order() << " is not a prime power\n";
        return kError;
    }
    epg::u64 p = primes[0].first;
    epg::u64 value = epg::mr(G, p);

    // Closed form when the spec describes an abelian p-group with k >= 2.
    std::optional<epg::u64> closed;
    std::vector<unsigned> exponents;
    bool abelian_shape = true;
    for (const auto& atom : spec.factors) {
        if (atom.kind == epg::GroupAtom::Kind::AbelianP && atom.prime == p) {
            exponents.insert(exponents.end(), atom.exponents.begin(), atom.exponents.end());
        } else if (atom.kind == epg::GroupAtom::Kind::Cyclic) {
            epg::u64 m = atom.n;
            unsigned t = 0;
            while (m % p == 0) m /= p, ++t;
            if (m != 1) abelian_shape = false;
            if (t > 0) exponents.push_back(t);
        } else {
            abelian_shape = false;
        }
    }
    std::sort(exponents.begin(), exponents.end());
    if (abelian_shape && exponents.size() >= 2) closed = epg::mr_abelian_closed_form(p, exponents);

    if (as_json) {
        nlohmann::ordered_json j;
        j["spec"] = spec.text();
        j["prime"] = p;
        j["mr"] = value;
        j["closed_form"] = closed ? nlohmann::ordered_json(*closed) : nlohmann::ordered_json(nullptr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "spec: " << spec.text() << "\nprime: " << p << "\nmr = " << value << "\n";
        if (closed) std::cout << "closed form = " << *closed << "\n";
    }
    if (closed && *closed != value) {
        std::cerr << "error: closed form " << *closed << " does not match mr " << value << "\n";
        return kDisagree;
    }
    return kOk;
}

int run_witness(const std::string& spec_text, const std::string& subset_arg, bool as_json) {
    epg::GroupSpec spec = epg::parse_group_spec(spec_text);
    epg::FiniteGroup G = epg::build_group(spec);
    if (!epg::is_nilpotent(G)) {
        std::cerr << "error: " << spec.text() << " is not nilpotent\n";
        return kError;
    }
    auto decomposition = epg::sylow_decomposition(G);

    std::vector<int> subset;
    if (subset_arg.empty()) {
        auto rep = epg::kappa_enhanced(spec, {false, 0});
        if (!rep.formula) {
            std::cerr << "error: " << spec.text()
                      << " is cyclic; its enhanced power graph is complete and has no separating set\n";
            return kError;
        }
        subset = rep.formula->minimizing_subset;
    } else {
        for (std::size_t i = 0; i < subset_arg.size();) {
            std::size_t next = subset_arg.find(',', i);
            if (next == std::string::npos) next = subset_arg.size();
            subset.push_back(std::stoi(subset_arg.substr(i, next - i)));
            i = next + 1;
        }
    }

    auto witness = epg::witness_separating_set(G, decomposition, subset);
    auto graph = epg::enhanced_power_graph(G);
    bool separates = epg::connected_components(epg::remove_vertices(graph, witness)).size() > 1;

    if (as_json) {
        nlohmann::ordered_json j;
        j["spec"] = spec.text();
        j["T"] = subset;
        j["size"] = witness.size();
        auto elements = nlohmann::ordered_json::array();
        for (int v : witness) elements.push_back(G.label(v));
        j["elements"] = std::move(elements);
        j["separates"] = separates;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "spec: " << spec.text() << "\nT = " << subset_text(subset)
                  << "\nwitness size = " << witness.size() << "\nelements:";
        for (int v : witness) std::cout << " " << G.label(v);
        std::cout << "\nseparates: " << (separates ? "yes" : "NO") << "\n";
    }
    return separates ? kOk : kError;
}

int run_verify(const std::string& catalog_path, epg::u64 budget, bool as_json) {
    std::vector<epg::GroupSpec> specs =
        catalog_path.empty() ? epg::builtin_catalog() : epg::load_catalog_file(catalog_path);
    epg::OracleOptions opts;
    opts.budget = budget;
    auto summary = epg::run_verify(specs, opts);
    if (as_json) {
        nlohmann::ordered_json j;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& r : summary.rows) rows.push_back(epg::report_json(r));
        j["rows"] = std::move(rows);
        j["summary"] = {{"groups", summary.rows.size()},
                        {"oracled", summary.oracled},
                        {"disagreements", summary.disagreements},
                        {"printed_mismatches", summary.printed_mismatches}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << epg::format_verify_table(summary);
    }
    return summary.disagreements > 0 ? kDisagree : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enhanced power graphs of finite nilpotent groups: "
                 "closed-form vertex connectivity vs a minimum-cut oracle"};
    app.require_subcommand(1);

    std::string spec_text, method = "both", kind = "enhanced", format = "json";
    std::string subset_arg, catalog_path;
    epg::u64 budget = 600;
    bool as_json = false;

    auto* kappa = app.add_subcommand("kappa", "vertex connectivity of the enhanced power graph");
    kappa->add_option("spec", spec_text, "group spec, e.g. \"Z5 x Ab(3;1,2)\"")->required();
    kappa->add_option("--method", method, "formula, oracle, or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    kappa->add_option("--budget", budget, "max order for the brute-force oracle")->capture_default_str();
    kappa->add_flag("--json", as_json, "emit a JSON report");

    auto* graph = app.add_subcommand("graph", "emit a group graph");
    graph->add_option("spec", spec_text)->required();
    graph->add_option("--kind", kind)->check(CLI::IsMember({"enhanced", "power", "commuting", "deleted", "proper"}));
    graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* mr_cmd = app.add_subcommand("mr", "minimum root count of a p-group");
    mr_cmd->add_option("spec", spec_text)->required();
    mr_cmd->add_flag("--json", as_json);

    auto* witness = app.add_subcommand("witness", "constructive separating set for a subset T");
    witness->add_option("spec", spec_text)->required();
    witness->add_option("--T", subset_arg, "comma-separated factor indices (default: minimizing subset)");
    witness->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "formula-vs-oracle sweep over a catalog");
    verify->add_option("--catalog", catalog_path, "file with one spec per line (default: built-in catalog)");
    verify->add_option("--budget", budget, "max order for the brute-force oracle")->capture_default_str();
    verify->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(kappa)) return run_kappa(spec_text, method, as_json, budget);
        if (app.got_subcommand(graph)) return run_graph(spec_text, kind, format);
        if (app.got_subcommand(mr_cmd)) return run_mr(spec_text, as_json);
        if (app.got_subcommand(witness)) return run_witness(spec_text, subset_arg, as_json);
        if (app.got_subcommand(verify)) return run_verify(catalog_path, budget, as_json);
    } catch (const epg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kOk;
}
