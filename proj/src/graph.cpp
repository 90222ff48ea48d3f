#include "epg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace epg {

namespace {

constexpr int kMaxVertices = 50000;

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : SimpleGraph(n, default_labels(n)) {}

SimpleGraph::SimpleGraph(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (n > kMaxVertices) throw std::invalid_argument("too many vertices");
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");
    adj_.assign(n, Bitset(n));
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& row : adj_) deg_sum += row.count();
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    int n = g.size();
    Bitset visited(n);
    std::vector<std::vector<int>> comps;
    for (int start = 0; start < n; ++start) {
        if (visited.test(start)) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        visited.set(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            Bitset next = g.neighbors(v);
            next.and_not(visited);
            next.for_each([&](int w) {
                visited.set(w);
                stack.push_back(w);
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> dominating_vertices(const SimpleGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) == g.size() - 1) out.push_back(v);
    return out;
}

bool is_complete(const SimpleGraph& g) {
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != g.size() - 1) return false;
    return true;
}

SimpleGraph remove_vertices(const SimpleGraph& g, const std::vector<int>& drop) {
    std::vector<int> removed = sorted_unique(drop);
    for (int v : removed)
        if (v < 0 || v >= g.size()) throw std::out_of_range("vertex index out of range");

    std::vector<int> new_index(g.size(), -1);
    std::vector<std::string> labels;
    labels.reserve(g.size() - removed.size());
    std::size_t r = 0;
    for (int v = 0; v < g.size(); ++v) {
        if (r < removed.size() && removed[r] == v) {
            ++r;
            continue;
        }
        new_index[v] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
    }
    const int kept = static_cast<int>(labels.size());
    SimpleGraph out(kept, std::move(labels));
    for (int v = 0; v < g.size(); ++v) {
        if (new_index[v] < 0) continue;
        g.neighbors(v).for_each([&](int w) {
            if (w > v && new_index[w] >= 0) out.add_edge(new_index[v], new_index[w]);
        });
    }
    return out;
}

SimpleGraph relabeled(const SimpleGraph& g, std::vector<std::string> labels) {
    SimpleGraph out(g.size(), std::move(labels));
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    return out;
}

bool graphs_equal(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.size() != b.size()) return false;
    std::unordered_map<std::string, int> where;
    where.reserve(b.size());
    for (int v = 0; v < b.size(); ++v)
        if (!where.emplace(b.label(v), v).second)
            throw std::invalid_argument("graphs_equal requires unique labels");
    std::vector<int> to_b(a.size());
    for (int v = 0; v < a.size(); ++v) {
        auto it = where.find(a.label(v));
        if (it == where.end()) return false;
        to_b[v] = it->second;
    }
    if (a.edge_count() != b.edge_count()) return false;
    for (int u = 0; u < a.size(); ++u) {
        bool ok = true;
        a.neighbors(u).for_each([&](int v) {
            if (u < v && !b.adjacent(to_b[u], to_b[v])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Vertex connectivity via unit-capacity max-flow on the split digraph.

namespace {

// Node 2v is v_in, 2v+1 is v_out. Arc pairs (i, i^1) are mutual reverses;
// caps act as residual capacities while a flow is being built.
class VertexCutSolver {
public:
    explicit VertexCutSolver(const SimpleGraph& g) : n_(g.size()), removed_(g.size(), 0) {
        out_.resize(2 * n_);
        const int inf = n_ + 1;
        for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
        for (int u = 0; u < n_; ++u)
            g.neighbors(u).for_each([&](int v) {
                if (u < v) {
                    add_arc(2 * u + 1, 2 * v, inf);
                    add_arc(2 * v + 1, 2 * u, inf);
                }
            });
        base_cap_.assign(cap_.begin(), cap_.end());
        parent_arc_.resize(2 * n_);
    }

    void remove(int v) { removed_[v] = 1; }
    void restore(int v) { removed_[v] = 0; }

    // Max-flow from s to t (non-adjacent), stopping once the flow reaches
    // `limit`; a return value of `limit` means "at least limit".
    int max_flow(int s, int t, int limit) {
        cap_ = base_cap_;
        int flow = 0;
        const int source = 2 * s + 1, sink = 2 * t;
        while (flow < limit) {
            int pushed = augment(source, sink, limit - flow);
            if (pushed == 0) break;
            flow += pushed;
        }
        return flow;
    }

private:
    void add_arc(int from, int to, int cap) {
        out_[from].push_back(static_cast<int>(to_.size()));
        to_.push_back(to);
        cap_.push_back(cap);
        out_[to].push_back(static_cast<int>(to_.size()));
        to_.push_back(from);
        cap_.push_back(0);
    }

    // One BFS augmentation; returns the amount pushed (0 if t unreachable).
    int augment(int source, int sink, int room) {
        std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
        std::vector<int> queue{source};
        parent_arc_[source] = -2;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (u == sink) break;
            for (int a : out_[u]) {
                int w = to_[a];
                if (cap_[a] > 0 && parent_arc_[w] == -1 && !removed_[w / 2]) {
                    parent_arc_[w] = a;
                    queue.push_back(w);
                }
            }
        }
        if (parent_arc_[sink] == -1) return 0;
        int bottleneck = room;
        for (int u = sink; u != source;) {
            int a = parent_arc_[u];
            bottleneck = std::min(bottleneck, cap_[a]);
            u = to_[a ^ 1];
        }
        for (int u = sink; u != source;) {
            int a = parent_arc_[u];
            cap_[a] -= bottleneck;
            cap_[a ^ 1] += bottleneck;
            u = to_[a ^ 1];
        }
        return bottleneck;
    }

    int n_;
    std::vector<int> to_;
    std::vector<int> cap_;
    std::vector<int> base_cap_;
    std::vector<std::vector<int>> out_;
    std::vector<char> removed_;
    std::vector<int> parent_arc_;
};

// Smallest s-t cut of size k in lexicographic set order, grown greedily:
// v joins the cut iff some minimum cut extends the current prefix with v.
std::vector<int> lex_min_cut(VertexCutSolver& solver, int n, int s, int t, int k) {
    std::vector<int> cut;
    for (int v = 0; v < n && static_cast<int>(cut.size()) < k; ++v) {
        if (v == s || v == t) continue;
        solver.remove(v);
        int need = k - static_cast<int>(cut.size());
        int f = solver.max_flow(s, t, need);
        if (f < need - 1) throw std::logic_error("minimum cut dropped by more than one vertex");
        if (f == need - 1) {
            cut.push_back(v);
        } else {
            solver.restore(v);
        }
    }
    if (static_cast<int>(cut.size()) != k) throw std::logic_error("failed to assemble a minimum cut");
    for (int v : cut) solver.restore(v);
    return cut;
}

std::vector<int> component_of(const SimpleGraph& g, int start, const std::vector<int>& blocked) {
    Bitset dead(g.size());
    for (int v : blocked) dead.set(v);
    std::vector<int> comp{start};
    Bitset visited(g.size());
    visited.set(start);
    for (std::size_t i = 0; i < comp.size(); ++i) {
        Bitset next = g.neighbors(comp[i]);
        next.and_not(visited);
        next.and_not(dead);
        next.for_each([&](int w) {
            visited.set(w);
            comp.push_back(w);
        });
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

}  // namespace

ConnectivityResult vertex_connectivity(const SimpleGraph& g) {
    const int n = g.size();
    if (n == 0) throw std::invalid_argument("vertex connectivity is undefined for the empty graph");

    auto comps = connected_components(g);
    if (comps.size() > 1) {
        CutWitness w;
        w.side_a = comps[0];
        for (std::size_t i = 1; i < comps.size(); ++i)
            w.side_b.insert(w.side_b.end(), comps[i].begin(), comps[i].end());
        std::sort(w.side_b.begin(), w.side_b.end());
        return {0, std::move(w)};
    }
    if (is_complete(g)) return {n - 1, std::nullopt};

    int min_deg = n;
    for (int v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));

    VertexCutSolver solver(g);
    int best = min_deg + 1;  // kappa <= min degree for non-complete graphs
    int bs = -1, bt = -1;
    for (int s = 0; s < n && best > 1; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            int f = solver.max_flow(s, t, best);
            if (f < best) {
                best = f;
                bs = s;
                bt = t;
                if (best == 1) break;  // a cut of size 1 is already minimum
            }
        }
    }
    if (bs < 0) throw std::logic_error("no connectivity-defining pair found");

    CutWitness w;
    w.cut = lex_min_cut(solver, n, bs, bt, best);
    w.side_a = component_of(g, bs, w.cut);
    w.side_b = component_of(g, bt, w.cut);
    return {best, std::move(w)};
}

// ---------------------------------------------------------------------------
// Strong products and Spacapan separating sets

SimpleGraph strong_product(const std::vector<SimpleGraph>& factors) {
    if (factors.empty()) throw std::invalid_argument("strong product needs at least one factor");
    const int r = static_cast<int>(factors.size());
    long long total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > kMaxVertices) throw std::invalid_argument("strong product has too many vertices");
    }
    const int n = static_cast<int>(total);

    std::vector<std::vector<int>> digits(n, std::vector<int>(r));
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) {
        int rest = v;
        for (int i = r - 1; i >= 0; --i) {
            digits[v][i] = rest % factors[i].size();
            rest /= factors[i].size();
        }
        std::string lab = "(";
        for (int i = 0; i < r; ++i) {
            if (i) lab += ",";
            lab += factors[i].label(digits[v][i]);
        }
        lab += ")";
        labels[v] = std::move(lab);
    }

    SimpleGraph out(n, std::move(labels));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool adj = true;
            for (int i = 0; i < r && adj; ++i) {
                int du = digits[u][i], dv = digits[v][i];
                adj = du == dv || factors[i].adjacent(du, dv);
            }
            if (adj) out.add_edge(u, v);
        }
    return out;
}

std::vector<int> build_spacapan_set(const std::vector<SimpleGraph>& factors, const SpacapanSpec& spec) {
    if (factors.empty()) throw std::invalid_argument("at least one factor required");
    if (spec.chosen.empty()) throw std::invalid_argument("F must be nonempty");
    const int r = static_cast<int>(factors.size());

    std::vector<std::vector<int>> big(r), small(r);  // U_i and W_i
    for (int i = 0; i < r; ++i) {
        big[i].resize(factors[i].size());
        for (int v = 0; v < factors[i].size(); ++v) big[i][v] = v;
        small[i] = big[i];
    }
    for (const auto& [i, choice] : spec.chosen) {
        if (i < 0 || i >= r) throw std::out_of_range("factor index out of range");
        const SimpleGraph& f = factors[i];
        std::vector<int> sep = sorted_unique(choice.separator);
        std::vector<int> comp = sorted_unique(choice.component);
        for (int v : comp)
            if (v < 0 || v >= f.size()) throw std::out_of_range("component vertex out of range");
        auto remaining = remove_vertices(f, sep);
        if (connected_components(remaining).size() < 2)
            throw std::invalid_argument("factor " + std::to_string(i) +
                                        ": separator does not disconnect the graph");
        // Components of f - sep, mapped back to original vertex indices.
        std::vector<int> kept;
        for (int v = 0; v < f.size(); ++v)
            if (!std::binary_search(sep.begin(), sep.end(), v)) kept.push_back(v);
        bool found = false;
        for (auto& c : connected_components(remaining)) {
            for (int& v : c) v = kept[v];
            if (c == comp) found = true;
        }
        if (!found)
            throw std::invalid_argument("factor " + std::to_string(i) +
                                        ": chosen set is not a connected component after removal");
        std::vector<int> u = sep;
        u.insert(u.end(), comp.begin(), comp.end());
        big[i] = sorted_unique(u);
        small[i] = comp;
    }

    // Enumerate prod U_i, skipping tuples that lie entirely in prod W_i.
    std::vector<std::vector<char>> in_small(r);
    for (int i = 0; i < r; ++i) {
        in_small[i].assign(factors[i].size(), 0);
        for (int v : small[i]) in_small[i][v] = 1;
    }
    std::vector<long long> place(r, 1);
    for (int i = r - 2; i >= 0; --i) place[i] = place[i + 1] * factors[i + 1].size();

    std::vector<int> result;
    std::vector<std::size_t> at(r, 0);
    while (true) {
        long long index = 0;
        bool all_small = true;
        for (int i = 0; i < r; ++i) {
            int v = big[i][at[i]];
            index += place[i] * v;
            all_small = all_small && in_small[i][v];
        }
        if (!all_small) result.push_back(static_cast<int>(index));
        int i = r - 1;
        while (i >= 0 && ++at[i] == big[i].size()) at[i--] = 0;
        if (i < 0) break;
    }
    return result;
}

}  // namespace epg
