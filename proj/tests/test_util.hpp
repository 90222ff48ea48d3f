#pragma once

// Shared helpers for the unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "epg/graph.hpp"
#include "epg/group.hpp"
#include "epg/numtheory.hpp"
#include "epg/power_graphs.hpp"
#include "epg/spec_parse.hpp"

namespace epg::test {

inline FiniteGroup group_of(const std::string& text) { return build_group(parse_group_spec(text)); }

inline GroupElement index_of(const FiniteGroup& G, const std::string& label) {
    for (int v = 0; v < G.order(); ++v)
        if (G.label(v) == label) return v;
    throw std::runtime_error("no element labeled " + label);
}

inline SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline SimpleGraph cycle_graph(int n) {
    SimpleGraph g = path_graph(n);
    if (n > 2) g.add_edge(0, n - 1);
    return g;
}

inline SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

inline bool disconnects(const SimpleGraph& g, const std::vector<int>& cut) {
    return connected_components(remove_vertices(g, cut)).size() > 1;
}

// Random connected graph on n vertices: a random spanning tree plus extra
// edges with the given probability.
inline SimpleGraph random_connected_graph(int n, std::mt19937& rng, double extra_edge_prob) {
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && coin(rng) < extra_edge_prob) g.add_edge(u, v);
    return g;
}

// One term of the subset-minimization formula, evaluated independently of
// the library's minimizer: prod_{i in T} size_i * (prod_{i notin T}
// (mr_i + inc_i) - prod_{i notin T} mr_i).
inline u64 formula_term(const std::vector<u64>& sizes, const std::vector<u64>& mrs,
                        const std::vector<u64>& incs, const std::vector<int>& subset) {
    std::vector<char> in(sizes.size(), 0);
    for (int i : subset) in[i] = 1;
    u64 prod_subset = 1, prod_plus = 1, prod_mr = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (in[i]) {
            prod_subset *= sizes[i];
        } else {
            prod_plus *= mrs[i] + incs[i];
            prod_mr *= mrs[i];
        }
    }
    return prod_subset * (prod_plus - prod_mr);
}

// The strong product of the enhanced power graphs of the Sylow subgroups,
// relabeled through the product bijection (tuple -> product of parts in G).
inline SimpleGraph sylow_factor_product(const FiniteGroup& G, const std::vector<SylowPart>& parts) {
    std::vector<SimpleGraph> factor_graphs;
    factor_graphs.reserve(parts.size());
    for (const auto& part : parts) factor_graphs.push_back(enhanced_power_graph(part.group));
    SimpleGraph product = strong_product(factor_graphs);

    std::vector<std::string> labels(product.size());
    for (int v = 0; v < product.size(); ++v) {
        int rest = v;
        GroupElement g = G.identity();
        std::vector<int> digits(parts.size());
        for (std::size_t i = parts.size(); i-- > 0;) {
            digits[i] = rest % parts[i].group.order();
            rest /= parts[i].group.order();
        }
        for (std::size_t i = 0; i < parts.size(); ++i) g = G.mul(g, parts[i].members[digits[i]]);
        labels[v] = G.label(g);
    }
    return relabeled(product, labels);
}

// Nondecreasing exponent vectors with k >= 2 parts and bounded sum.
inline std::vector<std::vector<unsigned>> exponent_vectors(unsigned max_sum) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned remaining, unsigned min_part) -> void {
        if (cur.size() >= 2) out.push_back(cur);
        for (unsigned t = min_part; t <= remaining; ++t) {
            cur.push_back(t);
            self(self, remaining - t, t);
            cur.pop_back();
        }
    };
    rec(rec, max_sum, 1);
    return out;
}

}  // namespace epg::test
