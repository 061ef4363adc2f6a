#include "lklab/graphs.hpp"

#include <algorithm>
#include <cassert>

#include "lklab/errors.hpp"

namespace lklab {

bool label_less(const VertexLabel& x, const VertexLabel& y)
{
    if (x.a != y.a)
        return x.a.lex_less(y.a);
    return x.b.lex_less(y.b);
}

std::string to_string(const VertexLabel& v)
{
    return "(" + to_braced_string(v.a) + "," + to_braced_string(v.b) + ")";
}

namespace {

// One adjacency rule per family, evaluated on labels.
bool adjacent_labels(Graph::Family family, const VertexLabel& x, const VertexLabel& y)
{
    switch (family) {
    case Graph::Family::kneser:
        return x.a.disjoint_with(y.a);
    case Graph::Family::local_complete:
    case Graph::Family::local_kneser:
        return x.a.is_subset_of(y.b) && y.a.is_subset_of(x.b);
    case Graph::Family::custom:
        return false;
    }
    return false;
}

} // namespace

void Graph::finish()
{
    std::sort(labels_.begin(), labels_.end(), label_less);
    const int n = vertex_count();
    adj_.assign(static_cast<size_t>(n), Bitset(n));
    edge_count_ = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adjacent_labels(family_, labels_[static_cast<size_t>(u)], labels_[static_cast<size_t>(v)])) {
                adj_[static_cast<size_t>(u)].set(v);
                adj_[static_cast<size_t>(v)].set(u);
                ++edge_count_;
            }
}

int Graph::index_of(const VertexLabel& l) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l, label_less);
    if (it == labels_.end() || !(*it == l))
        return -1;
    return static_cast<int>(it - labels_.begin());
}

std::string Graph::family_name() const
{
    switch (family_) {
    case Family::kneser:
        return "kneser";
    case Family::local_complete:
        return "local-complete";
    case Family::local_kneser:
        return "local-kneser";
    case Family::custom:
        return "custom";
    }
    return "custom";
}

std::string Graph::describe() const
{
    switch (family_) {
    case Family::kneser:
        return "KG(" + std::to_string(ground_) + "," + std::to_string(subset_size_) + ")";
    case Family::local_complete:
        return "U(" + std::to_string(ground_) + "," + std::to_string(r_) + ")";
    case Family::local_kneser:
        return "U_" + std::to_string(t_) + "(" + std::to_string(ground_) + "," + std::to_string(r_) + ")";
    case Family::custom:
        return "custom(" + std::to_string(vertex_count()) + ")";
    }
    return "?";
}

Graph build_kneser(int m, int n)
{
    if (n < 1 || m < 2 * n)
        throw InvalidParameters("build_kneser: need m >= 2n >= 2");
    if (m > kMaxGround)
        throw InvalidParameters("build_kneser: ground set capped at 64");
    Graph g;
    g.family_ = Graph::Family::kneser;
    g.ground_ = m;
    g.subset_size_ = n;
    for (const Subset& a : enumerate_subsets(m, n))
        g.labels_.push_back(VertexLabel { a, Subset::empty(m) });
    g.finish();
    return g;
}

Graph build_local_complete(int n, int r)
{
    if (r < 1 || n < r)
        throw InvalidParameters("build_local_complete: need n >= r >= 1");
    if (n > kMaxGround)
        throw InvalidParameters("build_local_complete: ground set capped at 64");
    Graph g;
    g.family_ = Graph::Family::local_complete;
    g.ground_ = n;
    g.r_ = r;
    g.t_ = 1;
    for (int a = 1; a <= n; ++a) {
        const Subset rest = Subset::full(n).without(a);
        for (const Subset& b : enumerate_subsets(n, r - 1))
            if (b.is_subset_of(rest))
                g.labels_.push_back(VertexLabel { Subset::empty(n).with(a), b });
    }
    g.finish();
    return g;
}

Graph build_local_kneser(int n, int r, int t)
{
    if (t < 1 || r < 2 * t || n < r)
        throw InvalidParameters("build_local_kneser: need n >= r >= 2t >= 2");
    if (n > kMaxGround)
        throw InvalidParameters("build_local_kneser: ground set capped at 64");
    Graph g;
    g.family_ = Graph::Family::local_kneser;
    g.ground_ = n;
    g.r_ = r;
    g.t_ = t;
    for (const Subset& a : enumerate_subsets(n, t)) {
        for (const Subset& b : enumerate_subsets(n, r - t))
            if (a.disjoint_with(b))
                g.labels_.push_back(VertexLabel { a, b });
    }
    g.finish();
    return g;
}

Graph graph_from_edges(int vertices, const std::vector<std::pair<int, int>>& edges)
{
    if (vertices < 0 || vertices > kMaxGround)
        throw InvalidParameters("graph_from_edges: vertex count must be in [0, 64]");
    Graph g;
    g.family_ = Graph::Family::custom;
    g.ground_ = vertices;
    for (int i = 1; i <= vertices; ++i)
        g.labels_.push_back(VertexLabel { Subset::empty(vertices).with(i), Subset::empty(vertices) });
    g.adj_.assign(static_cast<size_t>(vertices), Bitset(vertices));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertices || v >= vertices || u == v)
            throw InvalidParameters("graph_from_edges: bad edge");
        if (!g.adj_[static_cast<size_t>(u)].test(v)) {
            g.adj_[static_cast<size_t>(u)].set(v);
            g.adj_[static_cast<size_t>(v)].set(u);
            ++g.edge_count_;
        }
    }
    return g;
}

InducedBlock induced_block(const Graph& g, const Subset& r_set)
{
    if (g.family() != Graph::Family::local_kneser && g.family() != Graph::Family::local_complete)
        throw InvalidParameters("induced_block: graph is not a local Kneser graph");
    if (r_set.size() != g.r())
        throw InvalidParameters("induced_block: |R| must equal r");
    if (r_set.ground_size() != g.ground_size())
        throw InvalidParameters("induced_block: R lives on the wrong ground set");

    // Ranks of R's members give the relabeling onto {1..r}.
    const std::vector<int> sorted_r = r_set.members();
    const int r = g.r();
    const int t = g.t();

    std::vector<int> block_vertices;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexLabel& l = g.label(v);
        if (l.a.union_with(l.b) == r_set)
            block_vertices.push_back(v);
    }

    Graph block;
    block.family_ = Graph::Family::custom;
    block.ground_ = g.ground_size();
    for (int v : block_vertices)
        block.labels_.push_back(g.label(v));
    // labels arrive already sorted (subsequence of g's canonical order)
    const int bn = static_cast<int>(block_vertices.size());
    block.adj_.assign(static_cast<size_t>(bn), Bitset(bn));
    for (int i = 0; i < bn; ++i)
        for (int j = i + 1; j < bn; ++j)
            if (g.adjacent(block_vertices[static_cast<size_t>(i)], block_vertices[static_cast<size_t>(j)])) {
                block.adj_[static_cast<size_t>(i)].set(j);
                block.adj_[static_cast<size_t>(j)].set(i);
                ++block.edge_count_;
            }

    if (r < 2 * t)
        throw InvalidParameters("induced_block: the block Kneser graph needs r >= 2t");
    Graph kneser = build_kneser(r, t);

    std::vector<int> to_kneser(static_cast<size_t>(bn), -1);
    std::vector<bool> hit(static_cast<size_t>(kneser.vertex_count()), false);
    for (int i = 0; i < bn; ++i) {
        Subset image = Subset::empty(r);
        for (int x : block.labels_[static_cast<size_t>(i)].a.members()) {
            int rank = static_cast<int>(std::lower_bound(sorted_r.begin(), sorted_r.end(), x) - sorted_r.begin()) + 1;
            image = image.with(rank);
        }
        int idx = kneser.index_of(VertexLabel { image, Subset::empty(r) });
        if (idx < 0 || hit[static_cast<size_t>(idx)])
            throw InternalInconsistency("induced_block: rank relabeling is not a bijection");
        hit[static_cast<size_t>(idx)] = true;
        to_kneser[static_cast<size_t>(i)] = idx;
    }
    if (bn != kneser.vertex_count())
        throw InternalInconsistency("induced_block: block size differs from C(r,t)");

    // isomorphism check, both directions at once
    for (int i = 0; i < bn; ++i)
        for (int j = i + 1; j < bn; ++j)
            if (block.adjacent(i, j)
                != kneser.adjacent(to_kneser[static_cast<size_t>(i)], to_kneser[static_cast<size_t>(j)]))
                throw InternalInconsistency("induced_block: relabeling is not an isomorphism");

    return InducedBlock { std::move(block), std::move(kneser), std::move(to_kneser) };
}

std::vector<int> apply_ground_permutation(const Graph& g, const Permutation& sigma)
{
    if (g.family() == Graph::Family::custom)
        throw InvalidParameters("apply_ground_permutation: graph has no ground-set structure");
    if (sigma.size() != g.ground_size())
        throw InvalidParameters("apply_ground_permutation: permutation size differs from ground size");

    const int n = g.vertex_count();
    std::vector<int> perm(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const VertexLabel& l = g.label(v);
        VertexLabel image { sigma.apply(l.a), sigma.apply(l.b) };
        int w = g.index_of(image);
        if (w < 0)
            throw InternalInconsistency("apply_ground_permutation: image vertex missing");
        perm[static_cast<size_t>(v)] = w;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
                throw InternalInconsistency("apply_ground_permutation: not an automorphism");
    return perm;
}

} // namespace lklab
