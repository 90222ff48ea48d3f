#pragma once

#include <string>

#include "json.hpp"

#include "epg/graph.hpp"
#include "epg/kappa.hpp"

namespace epg {

// Undirected DOT with quoted vertex labels, deterministic order.
std::string to_dot(const SimpleGraph& g, const std::string& name = "G");

// {"n": int, "labels": [...], "edges": [[i, j], ...]} with i < j, ascending.
std::string to_json(const SimpleGraph& g);

// The CLI report schema; absent values serialize as null.
nlohmann::ordered_json report_json(const ConnectivityReport& rep);

}  // namespace epg
