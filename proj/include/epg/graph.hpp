#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace epg {

// Fixed-size bitset sized at construction; adjacency rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    bool operator==(const Bitset&) const = default;

    // Visits set bits in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(static_cast<int>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Undirected simple graph with labeled vertices and bitset adjacency rows.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, std::vector<std::string> labels);

    int size() const { return n_; }
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // (i, j) with i < j, ascending

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

std::vector<std::vector<int>> connected_components(const SimpleGraph& g);
std::vector<int> dominating_vertices(const SimpleGraph& g);
bool is_complete(const SimpleGraph& g);
SimpleGraph remove_vertices(const SimpleGraph& g, const std::vector<int>& drop);
SimpleGraph relabeled(const SimpleGraph& g, std::vector<std::string> labels);

// Exact labeled equality: same label set and the same edges under the
// bijection matching labels. Requires unique labels on both sides.
bool graphs_equal(const SimpleGraph& a, const SimpleGraph& b);

struct CutWitness {
    std::vector<int> cut;
    std::vector<int> side_a;
    std::vector<int> side_b;
};

struct ConnectivityResult {
    int kappa = 0;
    std::optional<CutWitness> witness;  // absent exactly for complete graphs
};

// Minimum vertex cut over all non-adjacent pairs via unit-vertex-capacity
// max-flow; complete graphs yield n-1 with no witness, disconnected graphs 0
// with an empty cut. Deterministic: the winning pair is the smallest (s, t)
// in vertex order and its cut is the lexicographically smallest minimum cut.
ConnectivityResult vertex_connectivity(const SimpleGraph& g);

// Strong product: tuples are adjacent iff every coordinate is equal or
// adjacent. Vertex (i_1, ..., i_r) gets the flat index with factor 0 as the
// most significant digit and the label "(l_1,...,l_r)".
SimpleGraph strong_product(const std::vector<SimpleGraph>& factors);

// Per-factor choice for a Spacapan separating set: a separating set of the
// factor and one connected component of factor minus separator.
struct SpacapanFactorChoice {
    std::vector<int> separator;
    std::vector<int> component;
};

// Keys are the factor indices in F; an I-set has |F| = 1, an L-set |F| > 1.
struct SpacapanSpec {
    std::map<int, SpacapanFactorChoice> chosen;
};

// S_F = prod U_i - prod W_i with U_i = S_i ∪ A_i, W_i = A_i on F and
// U_i = W_i = V_i elsewhere; returns product vertex indices, ascending.
std::vector<int> build_spacapan_set(const std::vector<SimpleGraph>& factors, const SpacapanSpec& spec);

}  // namespace epg
