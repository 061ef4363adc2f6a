#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "lklab/budgets.hpp"
#include "lklab/coloring.hpp"
#include "lklab/graphs.hpp"

namespace lklab {

// Total vertex map between two graphs; `verified` is set only after an
// exhaustive edge check.
struct HomomorphismMap {
    const Graph* domain = nullptr;
    const Graph* codomain = nullptr;
    std::vector<int> map;
    bool verified = false;
};

// Exhaustive edge scan: every domain edge must land on a codomain edge
// (identified endpoints fail, codomains are loopless). Sets h.verified.
bool verify_hom(HomomorphismMap& h);

// KG(r, t) -> U_t(n, r) via A -> (A, [r] \ A). Both graphs are supplied by
// the caller and checked for compatible parameters; the map is verified.
HomomorphismMap inclusion_kg_to_local(const Graph& kg_rt, const Graph& ut_nr);

// U_t(n, r) -> KG(n, t) via (A, B) -> A; verified.
HomomorphismMap projection_to_kneser(const Graph& ut_nr, const Graph& kg_nt);

// U_t(m, r) -> U(m-t+1, r-2t+2) via (A, B) -> (min A, the r-2t+1 smallest
// elements of B). Image vertex constraints are asserted at construction
// and the map is verified.
HomomorphismMap min_star_map(const Graph& ut_mr, const Graph& u_codomain);
// Codomain parameters (n', r') for min_star_map on U_t(m, r).
std::pair<int, int> min_star_codomain_params(int m, int r, int t);

// Reads a coloring off a verified map into a local complete graph U(n, r):
// c(v) = first coordinate of the image. Proper, palette n, profile max <= r.
std::pair<Coloring, LocalProfile> coloring_from_hom(const HomomorphismMap& h);

// The converse: a proper coloring with palette n and closed-neighborhood
// profile max <= r yields a verified map into U(n, r); v maps to (c(v), the
// neighborhood colors padded with the smallest unused ones up to r - 1).
HomomorphismMap hom_from_coloring(const Graph& g, const Coloring& c, int r, const Graph& u_nr);

// Backtracking homomorphism existence search. Vertices are processed in
// descending degree order (ties prefer vertices with more already-placed
// neighbors); candidates are pruned against assigned neighbors. Returns a
// verified map or a definitive nullopt.
std::optional<HomomorphismMap> hom_search(const Graph& g, const Graph& h, const Budgets& budgets = {});

// CSV export: domain_index, domain_label, codomain_index, codomain_label.
void write_hom_csv(std::ostream& os, const HomomorphismMap& h);

} // namespace lklab
