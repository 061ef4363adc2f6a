#include "lklab/independence.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>

#include "lklab/errors.hpp"
#include "lklab/homkit.hpp"

namespace lklab {

IndependentSet::IndependentSet(const Graph& g, Bitset members)
    : graph_(&g), members_(std::move(members))
{
    if (members_.size() != g.vertex_count())
        throw InvalidInput("IndependentSet: member set sized for a different graph");
    bool clash = false;
    members_.for_each([&](int v) {
        if (g.neighbors(v).intersects(members_))
            clash = true;
    });
    if (clash)
        throw InvalidInput("IndependentSet: members are not pairwise non-adjacent");
}

unsigned long long alpha_formula(int n, int r, int t)
{
    if (t < 1 || r < 2 * t || n < r || n > kMaxGround)
        throw InvalidParameters("alpha_formula: need 64 >= n >= r >= 2t >= 2");
    return binom(r - 1, t - 1) * binom(n, r);
}

namespace {

// Greedy clique cover of the candidate set; the number of cliques bounds
// the independent set size from above.
int clique_cover_bound(const Graph& g, const Bitset& p)
{
    std::vector<Bitset> can_join; // per clique: candidates adjacent to all members
    int cliques = 0;
    p.for_each([&](int w) {
        for (auto& mask : can_join)
            if (mask.test(w)) {
                mask &= g.neighbors(w);
                return;
            }
        can_join.push_back(g.neighbors(w));
        ++cliques;
    });
    return cliques;
}

class MisSolver {
public:
    explicit MisSolver(const Graph& g) : g_(g) {}

    int solve()
    {
        const int n = g_.vertex_count();
        Bitset all(n);
        for (int v = 0; v < n; ++v)
            all.set(v);
        best_ = 0;
        expand(all, 0);
        return best_;
    }

private:
    void expand(Bitset p, int base)
    {
        // degree-0 and degree-1 reductions; both preserve some maximum set
        bool changed = true;
        while (changed) {
            changed = false;
            int pick = -1, pick_partner = -1;
            p.for_each([&](int v) {
                if (pick >= 0)
                    return;
                Bitset nb = g_.neighbors(v) & p;
                int d = nb.count();
                if (d == 0) {
                    pick = v;
                    pick_partner = -1;
                } else if (d == 1) {
                    pick = v;
                    pick_partner = nb.first();
                }
            });
            if (pick >= 0) {
                ++base;
                p.reset(pick);
                if (pick_partner >= 0)
                    p.reset(pick_partner);
                changed = true;
            }
        }
        if (p.none()) {
            best_ = std::max(best_, base);
            return;
        }
        if (base + clique_cover_bound(g_, p) <= best_)
            return;

        // branch over the closed neighborhood of a max-degree vertex; every
        // maximal set meets it
        int v = -1, vd = -1;
        p.for_each([&](int u) {
            int d = (g_.neighbors(u) & p).count();
            if (d > vd) {
                vd = d;
                v = u;
            }
        });
        std::vector<int> branch;
        branch.push_back(v);
        (g_.neighbors(v) & p).for_each([&](int u) { branch.push_back(u); });
        for (int u : branch) {
            Bitset np = p;
            np.subtract(g_.neighbors(u));
            np.reset(u);
            expand(std::move(np), base + 1);
            p.reset(u); // u is excluded in the remaining branches
            if (base + clique_cover_bound(g_, p) <= best_)
                return;
        }
    }

    const Graph& g_;
    int best_ = 0;
};

} // namespace

int alpha_exact(const Graph& g, const Budgets& budgets)
{
    if (g.vertex_count() > budgets.alpha_vertices)
        throw BudgetExceeded("alpha_exact: " + std::to_string(g.vertex_count()) + " vertices exceed the budget of "
                             + std::to_string(budgets.alpha_vertices));
    if (g.vertex_count() == 0)
        return 0;
    return MisSolver(g).solve();
}

IndependentSet canonical_independent_set(const Graph& g, const Permutation& sigma)
{
    if (!g.is_local_family())
        throw InvalidParameters("canonical_independent_set: graph is not a local family");
    if (sigma.size() != g.ground_size())
        throw InvalidParameters("canonical_independent_set: ordering has the wrong ground size");
    Bitset members(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexLabel& l = g.label(v);
        if (l.a.contains(min_under_order(sigma, l.a.union_with(l.b))))
            members.set(v);
    }
    IndependentSet s(g, std::move(members));
    const unsigned long long expected
        = binom(g.r() - 1, g.t() - 1) * binom(g.ground_size(), g.r());
    if (static_cast<unsigned long long>(s.size()) != expected)
        throw InternalInconsistency("canonical_independent_set: unexpected size");
    return s;
}

int CenterTable::center_of(const Subset& r_set) const
{
    for (const auto& [rs, x] : centers)
        if (rs == r_set)
            return x;
    return -1;
}

CenterTable extract_centers(const IndependentSet& s)
{
    const Graph& g = s.graph();
    if (!g.is_local_family())
        throw InvalidParameters("extract_centers: graph is not a local family");
    const int n = g.ground_size();
    const int r = g.r();
    const int t = g.t();
    const unsigned long long star_size = binom(r - 1, t - 1);

    struct BlockAcc {
        unsigned long long count = 0;
        uint64_t common_a = ~uint64_t{0};
    };
    std::map<uint64_t, BlockAcc> acc;
    s.members().for_each([&](int v) {
        const VertexLabel& l = g.label(v);
        auto& b = acc[l.a.union_with(l.b).bits()];
        ++b.count;
        b.common_a &= l.a.bits();
    });

    CenterTable table;
    table.ground = n;
    table.r = r;
    for (const Subset& rs : enumerate_subsets(n, r)) {
        auto it = acc.find(rs.bits());
        if (it == acc.end())
            throw InternalInconsistency("extract_centers: block " + to_braced_string(rs)
                                        + " is empty; impossible for a maximum set");
        const BlockAcc& b = it->second;
        if (b.count != star_size)
            throw NotAStar("extract_centers: block " + to_braced_string(rs)
                           + " is not a maximum star (set is not maximum, or r = 2t)");
        uint64_t common = b.common_a & rs.bits();
        if (std::popcount(common) != 1)
            throw NotAStar("extract_centers: block " + to_braced_string(rs)
                           + " has no unique common element");
        table.centers.emplace_back(rs, std::countr_zero(common) + 1);
    }
    return table;
}

ConsistencyReport check_center_consistency(const CenterTable& table)
{
    ConsistencyReport report;
    const auto& c = table.centers;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) {
            const Subset inter = c[i].first.intersect(c[j].first);
            const int x1 = c[i].second;
            const int x2 = c[j].second;
            if (x1 != x2 && inter.contains(x1) && inter.contains(x2))
                report.violations.push_back({ c[i].first, c[j].first, x1, x2 });
        }
    return report;
}

Digraph::Digraph(int n) : n_(n)
{
    if (n < 1 || n > kMaxGround)
        throw InvalidParameters("Digraph: size must be in [1, 64]");
    out_.assign(static_cast<size_t>(n), Bitset(n));
}

void Digraph::add_arc(int i, int j)
{
    if (i == j)
        throw InvalidParameters("Digraph: self-arcs are not allowed");
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw InvalidParameters("Digraph: arc endpoint out of range");
    out_[static_cast<size_t>(i - 1)].set(j - 1);
}

bool Digraph::has_arc(int i, int j) const
{
    return i >= 1 && j >= 1 && i <= n_ && j <= n_ && out_[static_cast<size_t>(i - 1)].test(j - 1);
}

int Digraph::out_degree(int i) const { return out_[static_cast<size_t>(i - 1)].count(); }

std::vector<int> Digraph::out_neighbors(int i) const
{
    std::vector<int> out;
    out_[static_cast<size_t>(i - 1)].for_each([&](int j) { out.push_back(j + 1); });
    return out;
}

long long Digraph::arc_count() const
{
    long long c = 0;
    for (const auto& row : out_)
        c += row.count();
    return c;
}

bool Digraph::has_two_cycle() const
{
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (has_arc(i, j) && has_arc(j, i))
                return true;
    return false;
}

Digraph center_digraph(const CenterTable& table)
{
    Digraph d(table.ground);
    for (const auto& [rs, x] : table.centers)
        for (int j : rs.members())
            if (j != x)
                d.add_arc(x, j);
    if (d.has_two_cycle())
        throw InternalInconsistency("center_digraph: a two-cycle contradicts center consistency");
    return d;
}

Digraph center_digraph(const IndependentSet& s) { return center_digraph(extract_centers(s)); }

IndependentSet independent_set_from_digraph(const Digraph& d, const Graph& g)
{
    if (!g.is_local_family())
        throw InvalidParameters("independent_set_from_digraph: graph is not a local family");
    if (d.size() != g.ground_size())
        throw InvalidParameters("independent_set_from_digraph: ground sizes differ");
    const int n = g.ground_size();
    std::vector<Subset> closed; // {i} u N+(i)
    closed.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Subset c = Subset::empty(n).with(i);
        for (int j : d.out_neighbors(i))
            c = c.with(j);
        closed.push_back(c);
    }
    Bitset members(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexLabel& l = g.label(v);
        const Subset support = l.a.union_with(l.b);
        for (int i : l.a.members())
            if (support.is_subset_of(closed[static_cast<size_t>(i - 1)])) {
                members.set(v);
                break;
            }
    }
    return IndependentSet(g, std::move(members));
}

namespace {

// Generic enumeration of all independent sets of size exactly alpha.
class MisEnumerator {
public:
    MisEnumerator(const Graph& g, int alpha) : g_(g), alpha_(alpha) {}

    std::vector<Bitset> run()
    {
        const int n = g_.vertex_count();
        Bitset all(n);
        for (int v = 0; v < n; ++v)
            all.set(v);
        chosen_ = Bitset(n);
        chosen_count_ = 0;
        expand(all);
        return std::move(found_);
    }

private:
    void expand(Bitset p)
    {
        if (chosen_count_ == alpha_) {
            found_.push_back(chosen_);
            return;
        }
        if (chosen_count_ + p.count() < alpha_)
            return;
        if (chosen_count_ + clique_cover_bound(g_, p) < alpha_)
            return;
        int v = p.first();
        // include v
        Bitset inc = p;
        inc.subtract(g_.neighbors(v));
        inc.reset(v);
        chosen_.set(v);
        ++chosen_count_;
        expand(std::move(inc));
        chosen_.reset(v);
        --chosen_count_;
        // exclude v
        p.reset(v);
        expand(std::move(p));
    }

    const Graph& g_;
    int alpha_;
    Bitset chosen_;
    int chosen_count_ = 0;
    std::vector<Bitset> found_;
};

// Block-star enumeration for local Kneser graphs with r > 2t: a maximum set
// meets every block V_R in a full star, so branch over the center of each
// block and prune with the pairwise center-consistency constraint.
std::vector<Bitset> enumerate_block_stars(const Graph& g)
{
    const int n = g.ground_size();
    const int r = g.r();
    const int t = g.t();
    const std::vector<Subset> blocks = enumerate_subsets(n, r);
    const int nb = static_cast<int>(blocks.size());

    // star member lists per (block, center)
    std::vector<std::map<int, std::vector<int>>> star(static_cast<size_t>(nb));
    std::map<uint64_t, int> block_index;
    for (int i = 0; i < nb; ++i)
        block_index[blocks[static_cast<size_t>(i)].bits()] = i;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexLabel& l = g.label(v);
        const int bi = block_index.at(l.a.union_with(l.b).bits());
        for (int x : l.a.members())
            star[static_cast<size_t>(bi)][x].push_back(v);
    }

    // pairwise constraints only bind when |R n R'| >= 2t (otherwise the two
    // stars can never carry a cross edge)
    struct Constraint {
        int other;
        uint64_t inter;
    };
    std::vector<std::vector<Constraint>> later(static_cast<size_t>(nb));
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
            uint64_t inter = blocks[static_cast<size_t>(i)].bits() & blocks[static_cast<size_t>(j)].bits();
            if (std::popcount(inter) >= 2 * t)
                later[static_cast<size_t>(i)].push_back({ j, inter });
        }

    std::vector<uint64_t> domain(static_cast<size_t>(nb));
    for (int i = 0; i < nb; ++i)
        domain[static_cast<size_t>(i)] = blocks[static_cast<size_t>(i)].bits();

    std::vector<int> centers(static_cast<size_t>(nb), 0);
    std::vector<Bitset> found;
    std::vector<std::pair<int, uint64_t>> trail;

    auto assemble = [&]() {
        Bitset members(g.vertex_count());
        for (int i = 0; i < nb; ++i)
            for (int v : star[static_cast<size_t>(i)].at(centers[static_cast<size_t>(i)]))
                members.set(v);
        found.push_back(std::move(members));
    };

    auto dfs = [&](auto&& self, int i) -> void {
        if (i == nb) {
            assemble();
            return;
        }
        uint64_t dom = domain[static_cast<size_t>(i)];
        while (dom) {
            const int x = std::countr_zero(dom) + 1;
            dom &= dom - 1;
            const uint64_t xbit = uint64_t{1} << (x - 1);
            const size_t trail_mark = trail.size();
            bool ok = true;
            for (const Constraint& c : later[static_cast<size_t>(i)]) {
                if (!(c.inter & xbit))
                    continue; // x outside R n R', no restriction
                uint64_t& dj = domain[static_cast<size_t>(c.other)];
                const uint64_t nd = dj & (xbit | ~c.inter);
                if (nd != dj) {
                    trail.emplace_back(c.other, dj);
                    dj = nd;
                    if (nd == 0) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                centers[static_cast<size_t>(i)] = x;
                self(self, i + 1);
            }
            while (trail.size() > trail_mark) {
                domain[static_cast<size_t>(trail.back().first)] = trail.back().second;
                trail.pop_back();
            }
        }
    };
    dfs(dfs, 0);
    return found;
}

std::vector<IndependentSet> finalize_enumeration(const Graph& g, std::vector<Bitset> raw)
{
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<IndependentSet> out;
    out.reserve(raw.size());
    for (auto& m : raw)
        out.emplace_back(g, std::move(m)); // certifies independence
    return out;
}

} // namespace

std::vector<IndependentSet> enumerate_maximum_independent_sets_generic(const Graph& g,
                                                                       const Budgets& budgets)
{
    if (g.vertex_count() > budgets.enum_vertices)
        throw BudgetExceeded("enumerate_maximum_independent_sets: " + std::to_string(g.vertex_count())
                             + " vertices exceed the budget of " + std::to_string(budgets.enum_vertices));
    const int alpha = alpha_exact(g, budgets);
    if (alpha == 0)
        return {};
    return finalize_enumeration(g, MisEnumerator(g, alpha).run());
}

std::vector<IndependentSet> enumerate_maximum_independent_sets(const Graph& g, const Budgets& budgets)
{
    if (g.vertex_count() > budgets.enum_vertices)
        throw BudgetExceeded("enumerate_maximum_independent_sets: " + std::to_string(g.vertex_count())
                             + " vertices exceed the budget of " + std::to_string(budgets.enum_vertices));
    if (g.family() == Graph::Family::local_kneser && !g.degenerate_matching())
        return finalize_enumeration(g, enumerate_block_stars(g));
    return enumerate_maximum_independent_sets_generic(g, budgets);
}

Permutation match_defining_order(const IndependentSet& s)
{
    const Graph& g = s.graph();
    if (!g.is_local_family())
        throw InvalidParameters("match_defining_order: graph is not a local family");
    if (g.degenerate_matching())
        throw InvalidParameters("match_defining_order: r = 2t is outside the characterization");

    const Digraph d = center_digraph(s);
    const int n = g.ground_size();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const int dx = d.out_degree(x);
        const int dy = d.out_degree(y);
        if (dx != dy)
            return dx > dy;
        return x < y;
    });
    Permutation sigma = Permutation::from_seq(order);
    const IndependentSet expected = canonical_independent_set(g, sigma);
    if (!(expected.members() == s.members()))
        throw CharacterizationViolation(
            "match_defining_order: out-degree ordering does not reproduce the set on " + g.describe(),
            sigma.seq());
    return sigma;
}

NuMu nu_mu_bruteforce(const Graph& g, const Graph& k, const Budgets& budgets)
{
    if (g.vertex_count() < 1 || k.vertex_count() < 1)
        throw InvalidParameters("nu_mu_bruteforce: graphs must be non-empty");

    long long nu = 0;
    if (k.vertex_count() == 1) {
        // a homomorphism to the one-vertex loopless graph collapses an
        // edgeless subgraph, so nu is the independence number
        nu = alpha_exact(g, budgets);
    } else {
        const int vg = g.vertex_count();
        if (vg > budgets.nu_domain_vertices)
            throw BudgetExceeded("nu_mu_bruteforce: " + std::to_string(vg) + " vertices exceed the budget of "
                                 + std::to_string(budgets.nu_domain_vertices));
        Budgets inner = budgets;
        inner.hom_domain_vertices = std::max(inner.hom_domain_vertices, vg);
        for (int size = vg; size >= 1 && nu == 0; --size) {
            for (const Subset& pick : enumerate_subsets(vg, size)) {
                const std::vector<int> verts = pick.members(); // 1-based
                std::vector<std::pair<int, int>> edges;
                for (int i = 0; i < size; ++i)
                    for (int j = i + 1; j < size; ++j)
                        if (g.adjacent(verts[static_cast<size_t>(i)] - 1, verts[static_cast<size_t>(j)] - 1))
                            edges.emplace_back(i, j);
                const Graph sub = graph_from_edges(size, edges);
                if (hom_search(sub, k, inner)) {
                    nu = size;
                    break;
                }
            }
        }
    }
    return NuMu { nu, Rational(g.vertex_count(), nu) };
}

} // namespace lklab
