#include "lklab/homkit.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>

#include "lklab/errors.hpp"

namespace lklab {

bool verify_hom(HomomorphismMap& h)
{
    if (!h.domain || !h.codomain)
        throw InvalidInput("verify_hom: unbound map");
    if (static_cast<int>(h.map.size()) != h.domain->vertex_count())
        throw InvalidInput("verify_hom: assignment is not total");
    for (int image : h.map)
        if (image < 0 || image >= h.codomain->vertex_count())
            throw InvalidInput("verify_hom: image vertex out of range");
    bool ok = true;
    h.domain->for_each_edge([&](int u, int v) {
        const int fu = h.map[static_cast<size_t>(u)];
        const int fv = h.map[static_cast<size_t>(v)];
        if (fu == fv || !h.codomain->adjacent(fu, fv))
            ok = false;
    });
    h.verified = ok;
    return ok;
}

HomomorphismMap inclusion_kg_to_local(const Graph& kg_rt, const Graph& ut_nr)
{
    if (kg_rt.family() != Graph::Family::kneser)
        throw InvalidParameters("inclusion_kg_to_local: domain is not a Kneser graph");
    if (ut_nr.family() != Graph::Family::local_kneser)
        throw InvalidParameters("inclusion_kg_to_local: codomain is not a local Kneser graph");
    const int r = kg_rt.ground_size();
    const int t = kg_rt.subset_size();
    if (ut_nr.r() != r || ut_nr.t() != t || ut_nr.ground_size() < r)
        throw InvalidParameters("inclusion_kg_to_local: KG(r,t) does not embed in " + ut_nr.describe());

    const int n = ut_nr.ground_size();
    HomomorphismMap h { &kg_rt, &ut_nr, std::vector<int>(static_cast<size_t>(kg_rt.vertex_count()), -1), false };
    Subset base = Subset::empty(n);
    for (int x = 1; x <= r; ++x)
        base = base.with(x);
    for (int v = 0; v < kg_rt.vertex_count(); ++v) {
        Subset a = Subset::from_bits(n, kg_rt.label(v).a.bits());
        const int idx = ut_nr.index_of(VertexLabel { a, base.minus(a) });
        if (idx < 0)
            throw InternalInconsistency("inclusion_kg_to_local: image vertex missing");
        h.map[static_cast<size_t>(v)] = idx;
    }
    if (!verify_hom(h))
        throw InternalInconsistency("inclusion_kg_to_local: edge check failed");
    return h;
}

HomomorphismMap projection_to_kneser(const Graph& ut_nr, const Graph& kg_nt)
{
    if (!ut_nr.is_local_family())
        throw InvalidParameters("projection_to_kneser: domain is not a local family");
    if (kg_nt.family() != Graph::Family::kneser)
        throw InvalidParameters("projection_to_kneser: codomain is not a Kneser graph");
    if (kg_nt.ground_size() != ut_nr.ground_size() || kg_nt.subset_size() != ut_nr.t())
        throw InvalidParameters("projection_to_kneser: codomain must be KG(n, t)");

    HomomorphismMap h { &ut_nr, &kg_nt, std::vector<int>(static_cast<size_t>(ut_nr.vertex_count()), -1), false };
    const int n = ut_nr.ground_size();
    for (int v = 0; v < ut_nr.vertex_count(); ++v) {
        const int idx = kg_nt.index_of(VertexLabel { ut_nr.label(v).a, Subset::empty(n) });
        if (idx < 0)
            throw InternalInconsistency("projection_to_kneser: image vertex missing");
        h.map[static_cast<size_t>(v)] = idx;
    }
    if (!verify_hom(h))
        throw InternalInconsistency("projection_to_kneser: edge check failed");
    return h;
}

std::pair<int, int> min_star_codomain_params(int m, int r, int t)
{
    if (t < 1 || r < 2 * t || m < r)
        throw InvalidParameters("min_star_codomain_params: need m >= r >= 2t >= 2");
    return { m - t + 1, r - 2 * t + 2 };
}

HomomorphismMap min_star_map(const Graph& ut_mr, const Graph& u_codomain)
{
    if (!ut_mr.is_local_family())
        throw InvalidParameters("min_star_map: domain is not a local family");
    if (u_codomain.family() != Graph::Family::local_complete)
        throw InvalidParameters("min_star_map: codomain is not a local complete graph");
    const int m = ut_mr.ground_size();
    const int r = ut_mr.r();
    const int t = ut_mr.t();
    const auto [cn, cr] = min_star_codomain_params(m, r, t);
    if (u_codomain.ground_size() != cn || u_codomain.r() != cr)
        throw InvalidParameters("min_star_map: codomain must be U(" + std::to_string(cn) + ","
                                + std::to_string(cr) + ")");

    HomomorphismMap h { &ut_mr, &u_codomain, std::vector<int>(static_cast<size_t>(ut_mr.vertex_count()), -1),
                        false };
    for (int v = 0; v < ut_mr.vertex_count(); ++v) {
        const VertexLabel& l = ut_mr.label(v);
        const int head = l.a.min_element();
        Subset tail = Subset::empty(m);
        const std::vector<int> b = l.b.members();
        for (int i = 0; i < r - 2 * t + 1; ++i)
            tail = tail.with(b[static_cast<size_t>(i)]);
        // image vertex constraints: every coordinate fits inside [m-t+1]
        if (head > cn || tail.max_element() > cn || tail.contains(head))
            throw InternalInconsistency("min_star_map: image outside the codomain vertex set");
        const int idx = u_codomain.index_of(VertexLabel { Subset::empty(cn).with(head),
                                                          Subset::from_bits(cn, tail.bits()) });
        if (idx < 0)
            throw InternalInconsistency("min_star_map: image vertex missing");
        h.map[static_cast<size_t>(v)] = idx;
    }
    if (!verify_hom(h))
        throw InternalInconsistency("min_star_map: edge check failed");
    return h;
}

std::pair<Coloring, LocalProfile> coloring_from_hom(const HomomorphismMap& h)
{
    if (!h.verified)
        throw InvalidInput("coloring_from_hom: map is not verified");
    if (h.codomain->family() != Graph::Family::local_complete)
        throw InvalidInput("coloring_from_hom: codomain is not a local complete graph");
    const Graph& g = *h.domain;
    Coloring c { &g, std::vector<int>(static_cast<size_t>(g.vertex_count()), 0), h.codomain->ground_size() };
    for (int v = 0; v < g.vertex_count(); ++v)
        c.colors[static_cast<size_t>(v)] = h.codomain->label(h.map[static_cast<size_t>(v)]).a.min_element();
    LocalProfile profile = local_profile(g, c); // raises on improper
    return { std::move(c), std::move(profile) };
}

HomomorphismMap hom_from_coloring(const Graph& g, const Coloring& c, int r, const Graph& u_nr)
{
    if (!is_proper(g, c))
        throw InvalidInput("hom_from_coloring: coloring is not proper");
    const int n = c.palette;
    if (n < r)
        throw InvalidParameters("hom_from_coloring: palette smaller than the profile target");
    const LocalProfile profile = local_profile(g, c);
    if (profile.max_count > r)
        throw InvalidInput("hom_from_coloring: profile max exceeds r");
    if (u_nr.family() != Graph::Family::local_complete || u_nr.ground_size() != n || u_nr.r() != r)
        throw InvalidParameters("hom_from_coloring: codomain must be U(" + std::to_string(n) + ","
                                + std::to_string(r) + ")");

    HomomorphismMap h { &g, &u_nr, std::vector<int>(static_cast<size_t>(g.vertex_count()), -1), false };
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int own = c.colors[static_cast<size_t>(v)];
        Subset around = Subset::empty(n);
        g.neighbors(v).for_each([&](int u) {
            const int cu = c.colors[static_cast<size_t>(u)];
            if (cu != own)
                around = around.with(cu);
        });
        // pad with the smallest colors not equal to c(v) and not yet present
        for (int pad = 1; around.size() < r - 1; ++pad) {
            if (pad > n)
                throw InternalInconsistency("hom_from_coloring: padding ran out of colors");
            if (pad != own && !around.contains(pad))
                around = around.with(pad);
        }
        const int idx = u_nr.index_of(VertexLabel { Subset::empty(n).with(own), around });
        if (idx < 0)
            throw InternalInconsistency("hom_from_coloring: image vertex missing");
        h.map[static_cast<size_t>(v)] = idx;
    }
    if (!verify_hom(h))
        throw InternalInconsistency("hom_from_coloring: edge check failed");
    return h;
}

namespace {

// order: descending degree; ties prefer vertices with more already-ordered
// neighbors so constraints bind early
std::vector<int> search_order(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(static_cast<size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_deg = -1, best_ties = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<size_t>(v)])
                continue;
            const int d = g.degree(v);
            int ties = 0;
            g.neighbors(v).for_each([&](int u) {
                if (placed[static_cast<size_t>(u)])
                    ++ties;
            });
            if (d > best_deg || (d == best_deg && ties > best_ties)) {
                best = v;
                best_deg = d;
                best_ties = ties;
            }
        }
        placed[static_cast<size_t>(best)] = true;
        order.push_back(best);
    }
    return order;
}

} // namespace

std::optional<HomomorphismMap> hom_search(const Graph& g, const Graph& h, const Budgets& budgets)
{
    if (g.vertex_count() > budgets.hom_domain_vertices)
        throw BudgetExceeded("hom_search: domain of " + std::to_string(g.vertex_count())
                             + " vertices exceeds the budget of " + std::to_string(budgets.hom_domain_vertices));
    if (h.vertex_count() > budgets.hom_codomain_vertices)
        throw BudgetExceeded("hom_search: codomain of " + std::to_string(h.vertex_count())
                             + " vertices exceeds the budget of "
                             + std::to_string(budgets.hom_codomain_vertices));
    if (g.vertex_count() == 0)
        return HomomorphismMap { &g, &h, {}, true };
    if (h.vertex_count() == 0)
        return std::nullopt;

    const std::vector<int> order = search_order(g);
    std::vector<int> assignment(static_cast<size_t>(g.vertex_count()), -1);

    // positive-degree vertices can never map onto isolated codomain vertices
    std::vector<int> cod_degree(static_cast<size_t>(h.vertex_count()));
    for (int u = 0; u < h.vertex_count(); ++u)
        cod_degree[static_cast<size_t>(u)] = h.degree(u);

    auto dfs = [&](auto&& self, size_t depth) -> bool {
        if (depth == order.size())
            return true;
        const int v = order[depth];
        for (int u = 0; u < h.vertex_count(); ++u) {
            if (g.degree(v) > 0 && cod_degree[static_cast<size_t>(u)] == 0)
                continue;
            bool ok = true;
            g.neighbors(v).for_each([&](int w) {
                const int fw = assignment[static_cast<size_t>(w)];
                if (fw >= 0 && (fw == u || !h.adjacent(u, fw)))
                    ok = false;
            });
            if (!ok)
                continue;
            assignment[static_cast<size_t>(v)] = u;
            if (self(self, depth + 1))
                return true;
            assignment[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0))
        return std::nullopt;

    HomomorphismMap result { &g, &h, std::move(assignment), false };
    if (!verify_hom(result))
        throw InternalInconsistency("hom_search: produced map failed verification");
    return result;
}

void write_hom_csv(std::ostream& os, const HomomorphismMap& h)
{
    os << "domain_index,domain_label,codomain_index,codomain_label\n";
    for (int v = 0; v < h.domain->vertex_count(); ++v) {
        const int u = h.map[static_cast<size_t>(v)];
        os << (v + 1) << ",\"" << to_string(h.domain->label(v)) << "\"," << (u + 1) << ",\""
           << to_string(h.codomain->label(u)) << "\"\n";
    }
}

} // namespace lklab
