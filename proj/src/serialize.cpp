#include "epg/serialize.hpp"

#include <sstream>

namespace epg {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_dot(const SimpleGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.size(); ++v) os << "  " << v << " [label=" << quoted(g.label(v)) << "];\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const SimpleGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.size();
    j["labels"] = g.labels();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

nlohmann::ordered_json report_json(const ConnectivityReport& rep) {
    using json = nlohmann::ordered_json;
    json j;
    j["spec"] = rep.spec_text;
    j["order"] = rep.order;
    j["kappa_formula"] = rep.kappa_formula ? json(*rep.kappa_formula) : json(nullptr);
    j["kappa_oracle"] = rep.kappa_oracle ? json(*rep.kappa_oracle) : json(nullptr);
    j["minimizing_T"] = rep.formula ? json(rep.formula->minimizing_subset) : json::array();
    j["witness_size"] = rep.witness_set ? json(rep.witness_set->size()) : json(nullptr);
    j["variants"] = {
        {"printed", rep.variant_printed ? json(*rep.variant_printed) : json(nullptr)},
        {"mr_corrected", rep.variant_mr_corrected ? json(*rep.variant_mr_corrected) : json(nullptr)},
    };
    j["verdict"] = to_string(rep.verdict);
    return j;
}

}  // namespace epg
