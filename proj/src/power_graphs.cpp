#include "epg/power_graphs.hpp"

#include <algorithm>

namespace epg {

SimpleGraph enhanced_power_graph(const FiniteGroup& G) {
    const int n = G.order();
    SimpleGraph g(n, G.labels());
    // Every cyclic subgroup spans a clique.
    std::vector<Bitset> rows(n, Bitset(n));
    for (int gen = 0; gen < n; ++gen) {
        auto members = cyclic_subgroup(G, gen);
        Bitset mask(n);
        for (int m : members) mask.set(m);
        for (int m : members) rows[m] |= mask;
    }
    for (int u = 0; u < n; ++u) {
        rows[u].reset(u);
        rows[u].for_each([&](int v) {
            if (u < v) g.add_edge(u, v);
        });
    }
    return g;
}

SimpleGraph power_graph(const FiniteGroup& G) {
    const int n = G.order();
    SimpleGraph g(n, G.labels());
    for (int gen = 0; gen < n; ++gen)
        for (int m : cyclic_subgroup(G, gen))
            if (m != gen) g.add_edge(gen, m);
    return g;
}

SimpleGraph commuting_graph(const FiniteGroup& G) {
    auto central = center(G);
    std::vector<int> vertices;
    for (int v = 0; v < G.order(); ++v)
        if (!std::binary_search(central.begin(), central.end(), v)) vertices.push_back(v);

    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (int v : vertices) labels.push_back(G.label(v));
    SimpleGraph g(static_cast<int>(vertices.size()), std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (G.mul(vertices[i], vertices[j]) == G.mul(vertices[j], vertices[i]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

SimpleGraph deleted_enhanced(const FiniteGroup& G) {
    return remove_vertices(enhanced_power_graph(G), {G.identity()});
}

SimpleGraph proper_enhanced(const FiniteGroup& G) {
    SimpleGraph g = enhanced_power_graph(G);
    return remove_vertices(g, dominating_vertices(g));
}

}  // namespace epg
