#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lklab/budgets.hpp"
#include "lklab/graphs.hpp"
#include "lklab/rng.hpp"

namespace lklab {

// Vertex coloring; color 0 means "not yet colored", proper colorings use
// 1..palette. Color identifiers produced by the solvers are consecutive in
// order of first use.
struct Coloring {
    const Graph* graph = nullptr;
    std::vector<int> colors;
    int palette = 0;

    bool total() const
    {
        for (int c : colors)
            if (c == 0)
                return false;
        return true;
    }
    int distinct_used() const;
};

// Per-vertex count of distinct colors within distance one (the closed
// neighborhood), and the maximum over vertices.
struct LocalProfile {
    std::vector<int> counts;
    int max_count = 0;
};

// True iff no edge joins two equal colors. InvalidInput on partial input.
bool is_proper(const Graph& g, const Coloring& c);

// The explicit proper coloring of KG(m, n) with exactly m - 2n + 2 colors:
// c(A) = min(min A, m - 2n + 2).
Coloring kneser_coloring(const Graph& kg);

// Pulls the Kneser coloring back through (A, B) -> A; proper on U_t(n, r)
// with at most n - 2t + 2 colors.
Coloring projection_coloring(const Graph& ut);

// ceil((r^2 / t) * (ln n + 1)): enough random orderings for the expected
// number of uncovered vertices to drop below one. A one-ulp guard is
// applied before the ceiling so borderline values do not round up.
int default_round_count(int n, int r, int t);

// Draw `rounds` uniform ground orderings and color every vertex by the
// first ordering whose canonical independent set contains it. Uncovered
// vertices stay color 0; they are an outcome, not an error.
struct RandomColoringOutcome {
    Coloring partial;
    int uncovered = 0;
};
RandomColoringOutcome random_order_coloring(const Graph& ut, int rounds, Rng& rng);

// Retry random_order_coloring until every vertex is covered; the result is
// proper, total, uses at most default_round_count colors (renumbered in
// order of first use), and records the attempts taken. RetriesExhausted
// after retry_cap failed attempts.
struct LasVegasResult {
    Coloring coloring;
    int attempts = 0;
    int first_uncovered = 0; // uncovered count of the first attempt
};
LasVegasResult las_vegas_coloring(const Graph& ut, Rng& rng, int retry_cap = 50);

// Exact chromatic number: DSATUR upper bound, greedy clique lower bound,
// then branch and bound on k-colorability.
int chi_exact(const Graph& g, const Budgets& budgets = {});
struct ChiResult {
    int chi = 0;
    Coloring witness;
};
ChiResult chi_exact_with_witness(const Graph& g, const Budgets& budgets = {});

// Exact local chromatic number: minimum over proper colorings (any palette
// up to |V|) of the maximum closed-neighborhood color count. Search runs
// over colorings canonical up to color-class order with profile pruning.
int psi_exact(const Graph& g, const Budgets& budgets = {});

// Closed-neighborhood color counts of a proper total coloring.
LocalProfile local_profile(const Graph& g, const Coloring& c);

// The three chromatic upper bounds for one parameter triple. The last one
// only applies to t = 1 and needs n >= 3 to be defined.
struct BoundReport {
    int n = 0, r = 0, t = 0;
    int projection_bound = 0;           // n - 2t + 2
    int random_bound = 0;               // ceil((r^2/t)(ln n + 1))
    std::optional<double> doubling_bound; // r * 2^r * log2 log2 n, t = 1 only
    std::string note;
};
BoundReport bound_report(int n, int r, int t);

// CSV export: vertex_index, A, B, color (set fields quoted).
void write_coloring_csv(std::ostream& os, const Graph& g, const Coloring& c);

// Same coloring with colors renamed 1..k in order of first use.
Coloring renumber_by_first_use(const Coloring& c);

} // namespace lklab
