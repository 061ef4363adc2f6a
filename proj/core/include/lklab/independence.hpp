#pragma once

#include <utility>
#include <vector>

#include "lklab/bitset.hpp"
#include "lklab/budgets.hpp"
#include "lklab/graphs.hpp"
#include "lklab/rational.hpp"
#include "lklab/setkit.hpp"

namespace lklab {

// A set of pairwise non-adjacent vertices; independence is certified at
// construction time.
class IndependentSet {
public:
    IndependentSet(const Graph& g, Bitset members);

    const Graph& graph() const { return *graph_; }
    const Bitset& members() const { return members_; }
    int size() const { return members_.count(); }
    bool contains(int v) const { return members_.test(v); }
    std::vector<int> sorted_members() const { return members_.to_vector(); }

    bool operator==(const IndependentSet& o) const { return members_ == o.members_; }

private:
    const Graph* graph_;
    Bitset members_;
};

// Closed form C(r-1, t-1) * C(n, r) for the independence number of U_t(n, r).
unsigned long long alpha_formula(int n, int r, int t);

// Exact maximum independent set size: branch and bound with degree
// reductions and a greedy clique-cover upper bound. Independent of the
// closed form above (it is the oracle for it).
int alpha_exact(const Graph& g, const Budgets& budgets = {});

// The canonical maximum independent set of a ground-set ordering: all
// vertices (A, B) whose sigma-first element of A u B lies in A. Size and
// independence are certified.
IndependentSet canonical_independent_set(const Graph& g, const Permutation& sigma);

// Map from each r-subset R to the common element of all A-parts of the
// set's vertices in the block V_R (the star center).
struct CenterTable {
    int ground = 0;
    int r = 0;
    std::vector<std::pair<Subset, int>> centers; // R (lex order) -> center
    int center_of(const Subset& r_set) const;    // -1 when absent
};

// Computes the star center of every block; NotAStar when some block is not
// a full star (the set is not maximum, or r = 2t), InternalInconsistency
// when a block is empty.
CenterTable extract_centers(const IndependentSet& s);

// Pairwise center-consistency check: whenever x(R) lies in R n R', the
// center of R' is either x(R) or outside R n R'. Reports every violation.
struct ConsistencyReport {
    struct Violation {
        Subset r1, r2;
        int x1 = 0, x2 = 0;
    };
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
};
ConsistencyReport check_center_consistency(const CenterTable& table);

// Simple digraph on {1..n} without self-arcs.
class Digraph {
public:
    explicit Digraph(int n);
    int size() const { return n_; }
    void add_arc(int i, int j); // InvalidParameters on self-arc
    bool has_arc(int i, int j) const;
    int out_degree(int i) const;
    std::vector<int> out_neighbors(int i) const;
    long long arc_count() const;
    bool has_two_cycle() const;

private:
    int n_;
    std::vector<Bitset> out_;
};

// Digraph of block centers: arc (i, j) when some r-subset contains both
// and has center i. Two-cycles contradict center consistency and raise
// InternalInconsistency.
Digraph center_digraph(const IndependentSet& s);
Digraph center_digraph(const CenterTable& table);

// The independent set read back off a digraph: all (A, B) packed inside
// some closed out-neighborhood N+(i) u {i} with i in A.
IndependentSet independent_set_from_digraph(const Digraph& d, const Graph& g);

// All independent sets of maximum size, each once, in canonical order.
// Local Kneser graphs with r > 2t use block-star branching with center
// consistency pruning; other graphs use the generic branch and bound.
std::vector<IndependentSet> enumerate_maximum_independent_sets(const Graph& g,
                                                               const Budgets& budgets = {});
// The generic enumerator, exposed for cross-checks.
std::vector<IndependentSet> enumerate_maximum_independent_sets_generic(const Graph& g,
                                                                       const Budgets& budgets = {});

// Recovers a ground-set ordering whose canonical independent set equals s,
// by sorting center-digraph out-degrees (descending, ties by ascending
// label) and verifying. CharacterizationViolation when verification fails.
Permutation match_defining_order(const IndependentSet& s);

// Exact nu(G, K) (maximum vertices of a subgraph of g admitting a
// homomorphism to k) and mu = |V(g)| / nu as an exact rational. When k is
// the single loopless vertex, nu equals the independence number and only
// the alpha budget applies.
struct NuMu {
    long long nu = 0;
    Rational mu;
};
NuMu nu_mu_bruteforce(const Graph& g, const Graph& k, const Budgets& budgets = {});

} // namespace lklab
