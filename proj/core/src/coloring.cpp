#include "lklab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <set>

#include "lklab/errors.hpp"
#include "lklab/independence.hpp"

namespace lklab {

int Coloring::distinct_used() const
{
    std::set<int> used;
    for (int c : colors)
        if (c != 0)
            used.insert(c);
    return static_cast<int>(used.size());
}

bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.graph != &g || static_cast<int>(c.colors.size()) != g.vertex_count())
        throw InvalidInput("is_proper: coloring belongs to a different graph");
    if (!c.total())
        throw InvalidInput("is_proper: coloring is partial");
    bool ok = true;
    g.for_each_edge([&](int u, int v) {
        if (c.colors[static_cast<size_t>(u)] == c.colors[static_cast<size_t>(v)])
            ok = false;
    });
    return ok;
}

Coloring kneser_coloring(const Graph& kg)
{
    if (kg.family() != Graph::Family::kneser)
        throw InvalidParameters("kneser_coloring: graph is not a Kneser graph");
    const int cap = kg.ground_size() - 2 * kg.subset_size() + 2;
    Coloring c { &kg, std::vector<int>(static_cast<size_t>(kg.vertex_count()), 0), cap };
    for (int v = 0; v < kg.vertex_count(); ++v)
        c.colors[static_cast<size_t>(v)] = std::min(kg.label(v).a.min_element(), cap);
    return c;
}

Coloring projection_coloring(const Graph& ut)
{
    if (!ut.is_local_family())
        throw InvalidParameters("projection_coloring: graph is not a local family");
    const int cap = ut.ground_size() - 2 * ut.t() + 2;
    Coloring c { &ut, std::vector<int>(static_cast<size_t>(ut.vertex_count()), 0), cap };
    for (int v = 0; v < ut.vertex_count(); ++v)
        c.colors[static_cast<size_t>(v)] = std::min(ut.label(v).a.min_element(), cap);
    return c;
}

int default_round_count(int n, int r, int t)
{
    if (t < 1 || r < 2 * t || n < r)
        throw InvalidParameters("default_round_count: need n >= r >= 2t >= 1");
    const double x = (static_cast<double>(r) * r / t) * (std::log(static_cast<double>(n)) + 1.0);
    const double guarded = x - 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(x);
    return static_cast<int>(std::ceil(guarded));
}

RandomColoringOutcome random_order_coloring(const Graph& ut, int rounds, Rng& rng)
{
    if (!ut.is_local_family())
        throw InvalidParameters("random_order_coloring: graph is not a local family");
    if (rounds < 1)
        throw InvalidParameters("random_order_coloring: need at least one round");
    const int n = ut.ground_size();
    Coloring c { &ut, std::vector<int>(static_cast<size_t>(ut.vertex_count()), 0), rounds };
    int uncovered = ut.vertex_count();
    for (int i = 1; i <= rounds && uncovered > 0; ++i) {
        const Permutation sigma = random_permutation(n, rng);
        for (int v = 0; v < ut.vertex_count(); ++v) {
            if (c.colors[static_cast<size_t>(v)] != 0)
                continue;
            const VertexLabel& l = ut.label(v);
            if (l.a.contains(min_under_order(sigma, l.a.union_with(l.b)))) {
                c.colors[static_cast<size_t>(v)] = i;
                --uncovered;
            }
        }
    }
    return RandomColoringOutcome { std::move(c), uncovered };
}

LasVegasResult las_vegas_coloring(const Graph& ut, Rng& rng, int retry_cap)
{
    if (retry_cap < 1)
        throw InvalidParameters("las_vegas_coloring: retry_cap must be >= 1");
    const int rounds = default_round_count(ut.ground_size(), ut.r(), ut.t());
    int first_uncovered = -1;
    for (int attempt = 1; attempt <= retry_cap; ++attempt) {
        RandomColoringOutcome out = random_order_coloring(ut, rounds, rng);
        if (attempt == 1)
            first_uncovered = out.uncovered;
        if (out.uncovered == 0)
            return LasVegasResult { renumber_by_first_use(out.partial), attempt, first_uncovered };
    }
    throw RetriesExhausted("las_vegas_coloring: no total coloring in " + std::to_string(retry_cap)
                           + " attempts");
}

namespace {

// greedy max clique: seed at each vertex, grow by max residual degree
int greedy_clique_bound(const Graph& g)
{
    const int n = g.vertex_count();
    int best = n > 0 ? 1 : 0;
    for (int s = 0; s < n; ++s) {
        Bitset cand = g.neighbors(s);
        int size = 1;
        while (cand.any()) {
            int pick = -1, pick_deg = -1;
            cand.for_each([&](int u) {
                const int d = (g.neighbors(u) & cand).count();
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = u;
                }
            });
            ++size;
            cand &= g.neighbors(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

struct Dsatur {
    const Graph& g;
    std::vector<int> colors;
    int used = 0;

    explicit Dsatur(const Graph& graph)
        : g(graph), colors(static_cast<size_t>(graph.vertex_count()), 0)
    {
        const int n = g.vertex_count();
        std::vector<std::set<int>> sat(static_cast<size_t>(n));
        for (int step = 0; step < n; ++step) {
            int v = -1;
            size_t v_sat = 0;
            int v_deg = -1;
            for (int u = 0; u < n; ++u) {
                if (colors[static_cast<size_t>(u)] != 0)
                    continue;
                const size_t s = sat[static_cast<size_t>(u)].size();
                const int d = g.degree(u);
                if (v < 0 || s > v_sat || (s == v_sat && d > v_deg)) {
                    v = u;
                    v_sat = s;
                    v_deg = d;
                }
            }
            int c = 1;
            while (sat[static_cast<size_t>(v)].count(c))
                ++c;
            colors[static_cast<size_t>(v)] = c;
            used = std::max(used, c);
            g.neighbors(v).for_each([&](int u) { sat[static_cast<size_t>(u)].insert(c); });
        }
    }
};

// backtracking k-colorability with first-use color symmetry breaking
class KColorSearch {
public:
    KColorSearch(const Graph& g, int k) : g_(g), k_(k), colors_(static_cast<size_t>(g.vertex_count()), 0) {}

    bool run()
    {
        if (g_.vertex_count() == 0)
            return true;
        return extend(0, 0);
    }

    const std::vector<int>& colors() const { return colors_; }

private:
    // picks the uncolored vertex with the most distinctly-colored
    // neighbors, then tries colors up to one past the current maximum
    bool extend(int assigned, int max_used)
    {
        const int n = g_.vertex_count();
        if (assigned == n)
            return true;
        int v = -1;
        int v_sat = -1, v_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (colors_[static_cast<size_t>(u)] != 0)
                continue;
            uint64_t mask = 0;
            g_.neighbors(u).for_each([&](int w) {
                const int c = colors_[static_cast<size_t>(w)];
                if (c != 0)
                    mask |= uint64_t{1} << c;
            });
            const int s = std::popcount(mask);
            const int d = g_.degree(u);
            if (s > v_sat || (s == v_sat && d > v_deg)) {
                v = u;
                v_sat = s;
                v_deg = d;
            }
        }
        uint64_t forbidden = 0;
        g_.neighbors(v).for_each([&](int w) {
            const int c = colors_[static_cast<size_t>(w)];
            if (c != 0)
                forbidden |= uint64_t{1} << c;
        });
        const int limit = std::min(k_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (forbidden & (uint64_t{1} << c))
                continue;
            colors_[static_cast<size_t>(v)] = c;
            if (extend(assigned + 1, std::max(max_used, c)))
                return true;
            colors_[static_cast<size_t>(v)] = 0;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> colors_;
};

} // namespace

ChiResult chi_exact_with_witness(const Graph& g, const Budgets& budgets)
{
    if (g.vertex_count() > budgets.chi_vertices)
        throw BudgetExceeded("chi_exact: " + std::to_string(g.vertex_count()) + " vertices exceed the budget of "
                             + std::to_string(budgets.chi_vertices));
    if (g.vertex_count() == 0)
        return ChiResult { 0, Coloring { &g, {}, 0 } };

    const Dsatur greedy(g);
    int ub = greedy.used;
    Coloring witness { &g, greedy.colors, ub };
    if (g.edge_count() == 0)
        return ChiResult { 1, Coloring { &g, std::vector<int>(static_cast<size_t>(g.vertex_count()), 1), 1 } };

    const int lb = std::max(2, greedy_clique_bound(g));
    for (int k = lb; k < ub; ++k) {
        KColorSearch search(g, k);
        if (search.run()) {
            witness = Coloring { &g, search.colors(), k };
            ub = k;
            break;
        }
    }
    witness.palette = ub;
    return ChiResult { ub, std::move(witness) };
}

int chi_exact(const Graph& g, const Budgets& budgets) { return chi_exact_with_witness(g, budgets).chi; }

namespace {

// exact local chromatic number search: canonical colorings, pruned on the
// running closed-neighborhood color counts
class PsiSearch {
public:
    explicit PsiSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    int run(int upper_bound_start)
    {
        best_ = upper_bound_start;
        lower_ = g_.edge_count() > 0 ? 2 : 1;
        if (n_ == 0)
            return 0;
        if (best_ <= lower_)
            return best_;
        colors_.assign(static_cast<size_t>(n_), 0);
        nbhd_count_.assign(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_ + 2), 0));
        distinct_.assign(static_cast<size_t>(n_), 0);
        extend(0, 0, 0);
        return best_;
    }

private:
    // current max distinct count is tracked globally; assignments that push
    // any closed neighborhood to best_ colors cannot improve and are cut
    void extend(int assigned, int max_used, int profile)
    {
        if (best_ <= lower_)
            return;
        if (assigned == n_) {
            best_ = std::min(best_, std::max(profile, 1));
            return;
        }
        // most-constrained next vertex: most distinctly-colored closed
        // neighborhood, ties by degree
        int v = -1, v_key = -1, v_deg = -1;
        for (int u = 0; u < n_; ++u) {
            if (colors_[static_cast<size_t>(u)] != 0)
                continue;
            const int key = distinct_[static_cast<size_t>(u)];
            const int d = g_.degree(u);
            if (key > v_key || (key == v_key && d > v_deg)) {
                v = u;
                v_key = key;
                v_deg = d;
            }
        }
        uint64_t forbidden = 0;
        g_.neighbors(v).for_each([&](int w) {
            const int c = colors_[static_cast<size_t>(w)];
            if (c != 0)
                forbidden |= uint64_t{1} << c;
        });
        const int limit = std::min(n_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (forbidden & (uint64_t{1} << c))
                continue;
            if (try_assign(v, c, assigned, max_used, profile))
                ; // recursion happens inside
            if (best_ <= lower_)
                return;
        }
    }

    bool try_assign(int v, int c, int assigned, int max_used, int profile)
    {
        // bump closed-neighborhood counters; abort if any reaches best_
        std::vector<int> bumped;
        bool ok = true;
        auto bump = [&](int u) {
            auto& cnt = nbhd_count_[static_cast<size_t>(u)][static_cast<size_t>(c)];
            ++cnt;
            bumped.push_back(u);
            if (cnt == 1) {
                if (++distinct_[static_cast<size_t>(u)] >= best_)
                    ok = false;
            }
        };
        bump(v);
        g_.neighbors(v).for_each([&](int u) {
            if (ok)
                bump(u);
        });
        if (ok) {
            colors_[static_cast<size_t>(v)] = c;
            int new_profile = profile;
            for (int u : bumped)
                new_profile = std::max(new_profile, distinct_[static_cast<size_t>(u)]);
            extend(assigned + 1, std::max(max_used, c), new_profile);
            colors_[static_cast<size_t>(v)] = 0;
        }
        for (int u : bumped) {
            auto& cnt = nbhd_count_[static_cast<size_t>(u)][static_cast<size_t>(c)];
            if (--cnt == 0)
                --distinct_[static_cast<size_t>(u)];
        }
        return ok;
    }

    const Graph& g_;
    int n_;
    int best_ = 0;
    int lower_ = 1;
    std::vector<int> colors_;
    std::vector<std::vector<int>> nbhd_count_;
    std::vector<int> distinct_;
};

} // namespace

int psi_exact(const Graph& g, const Budgets& budgets)
{
    if (g.vertex_count() > budgets.psi_vertices)
        throw BudgetExceeded("psi_exact: " + std::to_string(g.vertex_count()) + " vertices exceed the budget of "
                             + std::to_string(budgets.psi_vertices));
    if (g.vertex_count() == 0)
        return 0;
    const ChiResult start = chi_exact_with_witness(g, Budgets { .chi_vertices = budgets.psi_vertices });
    const int start_profile = local_profile(g, start.witness).max_count;
    return PsiSearch(g).run(start_profile);
}

LocalProfile local_profile(const Graph& g, const Coloring& c)
{
    if (!is_proper(g, c))
        throw InvalidInput("local_profile: coloring is not proper");
    LocalProfile p;
    p.counts.resize(static_cast<size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        seen.insert(c.colors[static_cast<size_t>(v)]);
        g.neighbors(v).for_each([&](int u) { seen.insert(c.colors[static_cast<size_t>(u)]); });
        p.counts[static_cast<size_t>(v)] = static_cast<int>(seen.size());
        p.max_count = std::max(p.max_count, p.counts[static_cast<size_t>(v)]);
    }
    return p;
}

BoundReport bound_report(int n, int r, int t)
{
    if (t < 1 || r < 2 * t || n < r)
        throw InvalidParameters("bound_report: need n >= r >= 2t >= 1");
    BoundReport rep;
    rep.n = n;
    rep.r = r;
    rep.t = t;
    rep.projection_bound = n - 2 * t + 2;
    rep.random_bound = default_round_count(n, r, t);
    if (t == 1) {
        if (n > 2)
            rep.doubling_bound = static_cast<double>(r) * std::pow(2.0, r)
                * std::log2(std::log2(static_cast<double>(n)));
        else
            rep.note = "log2 log2 n undefined for n <= 2; doubling bound omitted";
    }
    return rep;
}

void write_coloring_csv(std::ostream& os, const Graph& g, const Coloring& c)
{
    os << "vertex_index,A,B,color\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexLabel& l = g.label(v);
        os << (v + 1) << ",\"" << to_braced_string(l.a) << "\",\"" << to_braced_string(l.b) << "\","
           << c.colors[static_cast<size_t>(v)] << "\n";
    }
}

Coloring renumber_by_first_use(const Coloring& c)
{
    Coloring out { c.graph, std::vector<int>(c.colors.size(), 0), 0 };
    std::map<int, int> rename;
    int next = 0;
    for (size_t v = 0; v < c.colors.size(); ++v) {
        const int old = c.colors[v];
        if (old == 0)
            continue;
        auto [it, fresh] = rename.emplace(old, next + 1);
        if (fresh)
            ++next;
        out.colors[v] = it->second;
    }
    out.palette = next;
    return out;
}

} // namespace lklab
