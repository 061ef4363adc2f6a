#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lklab/dimacs.hpp"
#include "lklab/errors.hpp"
#include "lklab/graphs.hpp"

using namespace lklab;

namespace {

// oracle: re-derive adjacency from the labels with the family definition,
// independently of the stored matrix
long long count_edges_by_definition(const Graph& g)
{
    long long edges = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            const VertexLabel& x = g.label(u);
            const VertexLabel& y = g.label(v);
            bool want = false;
            if (g.family() == Graph::Family::kneser)
                want = x.a.intersect(y.a).is_empty();
            else
                want = x.a.is_subset_of(y.b) && y.a.is_subset_of(x.b);
            CHECK(g.adjacent(u, v) == want);
            if (want)
                ++edges;
        }
    return edges;
}

} // namespace

TEST_CASE("[graphs] Kneser constructors")
{
    SUBCASE("KG(2,1) is a single edge")
    {
        Graph g = build_kneser(2, 1);
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 1);
        CHECK(g.adjacent(0, 1));
    }
    SUBCASE("KG(4,2): 6 vertices, 3 edges, exhaustive pair scan")
    {
        Graph g = build_kneser(4, 2);
        CHECK(g.vertex_count() == 6);
        CHECK(count_edges_by_definition(g) == 3);
        CHECK(g.edge_count() == 3);
        for (int v = 0; v < 6; ++v)
            CHECK(g.degree(v) == 1); // complementary-pair matching
    }
    SUBCASE("KG(5,2) is the Petersen graph")
    {
        Graph g = build_kneser(5, 2);
        CHECK(g.vertex_count() == 10);
        CHECK(g.edge_count() == 15);
        // independent counting: C(5,2) * C(3,2) / 2
        CHECK(g.edge_count() == static_cast<long long>(binom(5, 2) * binom(3, 2) / 2));
        CHECK(count_edges_by_definition(g) == 15);
    }
    CHECK_THROWS_AS(build_kneser(3, 2), InvalidParameters);
    CHECK_THROWS_AS(build_kneser(2, 0), InvalidParameters);
}

TEST_CASE("[graphs] local complete constructors")
{
    SUBCASE("U(n,1) is edgeless")
    {
        Graph g = build_local_complete(4, 1);
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("U(3,2): 6 vertices, 3 edges, only (a,{b}) ~ (b,{a})")
    {
        Graph g = build_local_complete(3, 2);
        CHECK(g.vertex_count() == 6);
        CHECK(count_edges_by_definition(g) == 3);
        const int u = g.index_of({ Subset::of(3, { 1 }), Subset::of(3, { 2 }) });
        const int v = g.index_of({ Subset::of(3, { 2 }), Subset::of(3, { 1 }) });
        REQUIRE(u >= 0);
        REQUIRE(v >= 0);
        CHECK(g.adjacent(u, v));
    }
    SUBCASE("U(4,3) has 4 * C(3,2) = 12 vertices")
    {
        Graph g = build_local_complete(4, 3);
        CHECK(g.vertex_count() == 12);
        CHECK(g.vertex_count() == static_cast<int>(4 * binom(3, 2)));
    }
    CHECK_THROWS_AS(build_local_complete(2, 3), InvalidParameters);
}

TEST_CASE("[graphs] local Kneser constructors")
{
    SUBCASE("U_2(4,4) matches KG(4,2)")
    {
        Graph u = build_local_kneser(4, 4, 2);
        Graph kg = build_kneser(4, 2);
        REQUIRE(u.vertex_count() == kg.vertex_count());
        CHECK(u.edge_count() == 3);
        // A-parts agree in canonical order and adjacency transfers
        for (int i = 0; i < u.vertex_count(); ++i)
            CHECK(u.label(i).a == kg.label(i).a);
        for (int i = 0; i < u.vertex_count(); ++i)
            for (int j = i + 1; j < u.vertex_count(); ++j)
                CHECK(u.adjacent(i, j) == kg.adjacent(i, j));
        CHECK(u.degenerate_matching());
    }
    SUBCASE("U_1(n,r) equals U(n,r) under the singleton identification")
    {
        for (auto [n, r] : { std::pair { 3, 2 }, std::pair { 4, 3 }, std::pair { 5, 4 } }) {
            Graph u1 = build_local_kneser(n, r, 1);
            Graph uc = build_local_complete(n, r);
            REQUIRE(u1.vertex_count() == uc.vertex_count());
            for (int i = 0; i < u1.vertex_count(); ++i) {
                CHECK(u1.label(i) == uc.label(i));
            }
            for (int i = 0; i < u1.vertex_count(); ++i)
                for (int j = i + 1; j < u1.vertex_count(); ++j)
                    CHECK(u1.adjacent(i, j) == uc.adjacent(i, j));
        }
    }
    SUBCASE("U_2(5,4): 30 vertices, definition scan")
    {
        Graph g = build_local_kneser(5, 4, 2);
        CHECK(g.vertex_count() == 30);
        CHECK(g.vertex_count() == static_cast<int>(binom(5, 2) * binom(3, 2)));
        count_edges_by_definition(g);
        CHECK(g.degenerate_matching()); // r = 2t
    }
    SUBCASE("vertex count identity across a small grid")
    {
        for (int t = 1; t <= 3; ++t)
            for (int r = 2 * t; r <= 6; ++r)
                for (int n = r; n <= 6; ++n) {
                    Graph g = build_local_kneser(n, r, t);
                    CHECK(g.vertex_count()
                          == static_cast<int>(binom(n, r) * binom(r, t)));
                }
    }
    CHECK_THROWS_AS(build_local_kneser(4, 5, 2), InvalidParameters);
    CHECK_THROWS_AS(build_local_kneser(5, 3, 2), InvalidParameters);
}

TEST_CASE("[graphs] induced blocks are Kneser blocks")
{
    SUBCASE("U_2(5,4), R = {1,2,3,4}")
    {
        Graph g = build_local_kneser(5, 4, 2);
        InducedBlock blk = induced_block(g, Subset::of(5, { 1, 2, 3, 4 }));
        CHECK(blk.block.vertex_count() == 6);
        CHECK(blk.kneser.vertex_count() == 6);
        CHECK(blk.to_kneser.size() == 6);
    }
    SUBCASE("U_1(3,2), R = {1,2} is a single edge")
    {
        Graph g = build_local_kneser(3, 2, 1);
        InducedBlock blk = induced_block(g, Subset::of(3, { 1, 2 }));
        CHECK(blk.block.vertex_count() == 2);
        CHECK(blk.block.edge_count() == 1);
    }
    SUBCASE("U_2(5,5) whole-graph block equals KG(5,2)")
    {
        Graph g = build_local_kneser(5, 5, 2);
        InducedBlock blk = induced_block(g, Subset::full(5));
        CHECK(blk.block.vertex_count() == g.vertex_count());
        CHECK(blk.block.edge_count() == 15);
        CHECK(blk.kneser.edge_count() == 15);
    }
    SUBCASE("every r-subset of a few instances")
    {
        for (auto [n, r, t] : { std::tuple { 5, 4, 2 }, std::tuple { 5, 3, 1 }, std::tuple { 6, 4, 2 } }) {
            Graph g = build_local_kneser(n, r, t);
            for (const Subset& rs : enumerate_subsets(n, r))
                CHECK(induced_block(g, rs).block.vertex_count() == static_cast<int>(binom(r, t)));
        }
    }
    Graph g = build_local_kneser(5, 4, 2);
    CHECK_THROWS_AS(induced_block(g, Subset::of(5, { 1, 2 })), InvalidParameters);
    CHECK_THROWS_AS(induced_block(build_kneser(4, 2), Subset::of(4, { 1, 2 })), InvalidParameters);
}

TEST_CASE("[graphs] ground permutations act as automorphisms")
{
    SUBCASE("identity")
    {
        Graph g = build_local_kneser(4, 3, 1);
        auto perm = apply_ground_permutation(g, Permutation::identity(4));
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(perm[static_cast<size_t>(v)] == v);
    }
    SUBCASE("U_1(3,2) swap")
    {
        Graph g = build_local_kneser(3, 2, 1);
        auto perm = apply_ground_permutation(g, Permutation::from_seq({ 2, 1, 3 }));
        const int u = g.index_of({ Subset::of(3, { 1 }), Subset::of(3, { 2 }) });
        const int v = g.index_of({ Subset::of(3, { 2 }), Subset::of(3, { 1 }) });
        CHECK(perm[static_cast<size_t>(u)] == v);
        CHECK(perm[static_cast<size_t>(v)] == u);
    }
    SUBCASE("KG(5,2): all 120 orderings, transitive action")
    {
        Graph g = build_kneser(5, 2);
        std::vector<bool> reached(static_cast<size_t>(g.vertex_count()), false);
        for (const Permutation& sigma : all_permutations(5)) {
            auto perm = apply_ground_permutation(g, sigma); // throws if not an automorphism
            reached[static_cast<size_t>(perm[0])] = true;
        }
        for (bool r : reached)
            CHECK(r); // vertex-transitivity on the orbit of vertex 0
    }
    SUBCASE("local families are vertex-transitive for n <= 5")
    {
        for (auto [n, r, t] : { std::tuple { 4, 3, 1 }, std::tuple { 5, 4, 2 }, std::tuple { 4, 4, 2 } }) {
            Graph g = build_local_kneser(n, r, t);
            std::vector<bool> reached(static_cast<size_t>(g.vertex_count()), false);
            for (const Permutation& sigma : all_permutations(n))
                reached[static_cast<size_t>(apply_ground_permutation(g, sigma)[0])] = true;
            bool all = true;
            for (bool x : reached)
                all = all && x;
            CHECK(all);
        }
    }
    Graph g = build_local_kneser(4, 3, 1);
    CHECK_THROWS_AS(apply_ground_permutation(g, Permutation::identity(5)), InvalidParameters);
}

TEST_CASE("[graphs] DIMACS export is bit-exact and reads back")
{
    Graph g = build_local_kneser(3, 2, 1);
    std::ostringstream dim, side;
    write_dimacs(dim, g);
    write_label_sidecar(side, g);

    CHECK(dim.str() == "c lklab family=local-kneser n=3 r=2 t=1\n"
                       "p edge 6 3\n"
                       "e 1 3\n"
                       "e 2 5\n"
                       "e 4 6\n");
    CHECK(side.str() == "1\t{1}\t{2}\n"
                        "2\t{1}\t{3}\n"
                        "3\t{2}\t{1}\n"
                        "4\t{2}\t{3}\n"
                        "5\t{3}\t{1}\n"
                        "6\t{3}\t{2}\n");

    std::istringstream din(dim.str()), sin(side.str());
    LabeledGraphFile file = read_dimacs(din);
    attach_labels(file, sin);
    CHECK(file.family == "local-kneser");
    CHECK(file.vertices == 6);
    CHECK(file.edges.size() == 3);
    CHECK(check_file_against_family(file).empty());
}

TEST_CASE("[graphs] corrupted files raise schema errors")
{
    Graph g = build_kneser(4, 2);
    std::ostringstream dim, side;
    write_dimacs(dim, g);
    write_label_sidecar(side, g);

    SUBCASE("bad edge endpoint")
    {
        std::istringstream in("p edge 2 1\ne 1 3\n");
        CHECK_THROWS_AS(read_dimacs(in), SchemaError);
    }
    SUBCASE("edge count mismatch")
    {
        std::istringstream in("p edge 3 2\ne 1 2\n");
        CHECK_THROWS_AS(read_dimacs(in), SchemaError);
    }
    SUBCASE("sidecar with overlapping A and B")
    {
        std::istringstream din(dim.str());
        LabeledGraphFile file = read_dimacs(din);
        std::istringstream bad("1\t{1,2}\t{2,3}\n");
        CHECK_THROWS_AS(attach_labels(file, bad), SchemaError);
    }
    SUBCASE("sidecar with wrong count")
    {
        std::istringstream din(dim.str());
        LabeledGraphFile file = read_dimacs(din);
        std::istringstream bad("1\t{1,2}\t{}\n");
        CHECK_THROWS_AS(attach_labels(file, bad), SchemaError);
    }
    SUBCASE("adjacency that contradicts the family rule is reported")
    {
        std::istringstream din(dim.str());
        LabeledGraphFile file = read_dimacs(din);
        std::istringstream labels(side.str());
        attach_labels(file, labels);
        file.edges.pop_back(); // drop a required edge
        CHECK_FALSE(check_file_against_family(file).empty());
    }
}

TEST_CASE("[graphs] custom graphs from edge lists")
{
    Graph c5 = graph_from_edges(5, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 } });
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.adjacent(0, 4));
    CHECK_FALSE(c5.adjacent(0, 2));
    CHECK_THROWS_AS(graph_from_edges(2, { { 0, 0 } }), InvalidParameters);
    CHECK_THROWS_AS(graph_from_edges(2, { { 0, 5 } }), InvalidParameters);
}
