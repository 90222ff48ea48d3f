#pragma once

#include "epg/graph.hpp"
#include "epg/group.hpp"

namespace epg {

// All graph builders use the group's element order as the vertex order, so a
// direct product group and the strong product of its factor graphs agree on
// vertex indices, not merely up to isomorphism.

// u ~ v iff both lie in a common cyclic subgroup.
SimpleGraph enhanced_power_graph(const FiniteGroup& G);

// u ~ v iff one is a power of the other.
SimpleGraph power_graph(const FiniteGroup& G);

// Vertices are the non-central elements; u ~ v iff uv = vu.
SimpleGraph commuting_graph(const FiniteGroup& G);

// Enhanced power graph minus the identity vertex.
SimpleGraph deleted_enhanced(const FiniteGroup& G);

// Enhanced power graph minus all dominating vertices.
SimpleGraph proper_enhanced(const FiniteGroup& G);

}  // namespace epg
