#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lklab/bitset.hpp"
#include "lklab/setkit.hpp"

namespace lklab {

// Vertex label: an ordered pair of disjoint subsets of the ground set.
// Kneser vertices keep B empty; local complete vertices (a, A) are stored
// with A-field = {a} and B-field = A, so one adjacency rule serves both
// local families.
struct VertexLabel {
    Subset a;
    Subset b;
    bool operator==(const VertexLabel&) const = default;
};

// (A lex, then B lex); the canonical vertex order.
bool label_less(const VertexLabel& x, const VertexLabel& y);
std::string to_string(const VertexLabel& v);

// Immutable labeled graph with a packed symmetric adjacency matrix.
// Desk-scale by design: O(V^2) bits, O(1) adjacency tests.
class Graph {
public:
    enum class Family { kneser, local_complete, local_kneser, custom };

    Family family() const { return family_; }
    std::string family_name() const;
    int ground_size() const { return ground_; }
    // Family parameters; meaningful fields depend on the family:
    //   kneser(m, n):        ground = m, subset_size = n
    //   local_complete(n,r): ground = n, r
    //   local_kneser(n,r,t): ground = n, r, t
    int subset_size() const { return subset_size_; }
    int r() const { return r_; }
    int t() const { return t_; }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    long long edge_count() const { return edge_count_; }

    const VertexLabel& label(int v) const { return labels_[static_cast<size_t>(v)]; }
    const std::vector<VertexLabel>& labels() const { return labels_; }
    int index_of(const VertexLabel& l) const; // -1 when absent

    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
    const Bitset& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

    template <class F> void for_each_edge(F&& f) const
    {
        const int n = vertex_count();
        for (int u = 0; u < n; ++u)
            neighbors(u).for_each([&](int v) {
                if (u < v)
                    f(u, v);
            });
    }

    bool is_local_family() const
    {
        return family_ == Family::local_complete || family_ == Family::local_kneser;
    }
    // r = 2t instances are legal but every block is a perfect matching and
    // the star characterization does not apply; callers check this flag.
    bool degenerate_matching() const { return is_local_family() && r_ == 2 * t_; }

    std::string describe() const;

    friend Graph build_kneser(int m, int n);
    friend Graph build_local_complete(int n, int r);
    friend Graph build_local_kneser(int n, int r, int t);
    friend Graph graph_from_edges(int vertices, const std::vector<std::pair<int, int>>& edges);
    friend class GraphAssembler;

private:
    Graph() = default;
    void finish(); // sort labels, fill adjacency from the family rule

    Family family_ = Family::custom;
    int ground_ = 0;
    int subset_size_ = 0;
    int r_ = 0;
    int t_ = 0;
    std::vector<VertexLabel> labels_;
    std::vector<Bitset> adj_;
    long long edge_count_ = 0;
};

// KG(m, n): n-subsets of {1..m}, adjacent iff disjoint. Requires m >= 2n >= 2.
Graph build_kneser(int m, int n);

// U(n, r): pairs (a, A) with |A| = r-1, a not in A, adjacent iff a in B and
// b in A. Requires n >= r >= 1.
Graph build_local_complete(int n, int r);

// U_t(n, r): disjoint pairs (A, B), |A| = t, |B| = r-t, adjacent iff
// A subset of D and C subset of B. Requires n >= r >= 2t >= 2.
Graph build_local_kneser(int n, int r, int t);

// Plain labeled graph for tests and custom instances; vertex i gets the
// label ({i}, {}). Edges are 0-based pairs.
Graph graph_from_edges(int vertices, const std::vector<std::pair<int, int>>& edges);

// Induced subgraph on the block V_R = {(A,B) : A u B = R} of a local Kneser
// graph, together with the Kneser graph on R's ranks and the vertex
// bijection onto it (verified edge-preserving in both directions).
struct InducedBlock {
    Graph block;
    Graph kneser;
    std::vector<int> to_kneser; // block index -> kneser index
};
InducedBlock induced_block(const Graph& g, const Subset& r_set);

// Index permutation induced by relabeling the ground set, (A,B) ->
// (sigma(A), sigma(B)). Verified to be an automorphism.
std::vector<int> apply_ground_permutation(const Graph& g, const Permutation& sigma);

} // namespace lklab
