#include "doctest.h"

#include "opcyl/tree.hpp"

#include <random>

using opcyl::PlanarTree;

// the 5-vertex tree from the running example: v1(v2(-,v3,v4(-,-,-)),v5(-))
static PlanarTree running_example_tree()
{
    std::vector<int16_t> toks = {2, 3, PlanarTree::kLeaf, 0, 3, PlanarTree::kLeaf, PlanarTree::kLeaf, PlanarTree::kLeaf, 1, PlanarTree::kLeaf};
    return PlanarTree(toks);
}

TEST_CASE("tree basics")
{
    PlanarTree e = PlanarTree::edge();
    CHECK(e.is_edge());
    CHECK(e.leaf_count() == 1);
    CHECK(e.vertex_count() == 0);
    CHECK(e.vertex_levels().empty());

    PlanarTree c3 = PlanarTree::corolla(3);
    CHECK(c3.leaf_count() == 3);
    CHECK(c3.vertex_count() == 1);
    CHECK(c3.vertex_arity(0) == 3);
    CHECK(c3.vertex_levels() == std::vector<int>{1});

    PlanarTree c0 = PlanarTree::corolla(0);
    CHECK(c0.leaf_count() == 0);
    CHECK(c0.vertex_count() == 1);
}

TEST_CASE("running example: path order, arities, levels")
{
    PlanarTree t = running_example_tree();
    CHECK(t.vertex_count() == 5);
    CHECK(t.leaf_count() == 5);
    // arities as in the running example
    CHECK(t.vertex_arity(0) == 2);
    CHECK(t.vertex_arity(1) == 3);
    CHECK(t.vertex_arity(2) == 0);
    CHECK(t.vertex_arity(3) == 3);
    CHECK(t.vertex_arity(4) == 1);
    // v1 level 1; v2, v5 level 2; v3, v4 level 3
    CHECK(t.vertex_levels() == std::vector<int>{1, 2, 3, 3, 2});
    CHECK(t.parents() == std::vector<int>{-1, 0, 1, 1, 0});
    CHECK(t.child_vertices(0) == std::vector<int>{1, 4});
    CHECK(t.child_vertices(1) == std::vector<int>{-1, 2, 3});
    CHECK(t.slot_in_parent(4) == 2);
    CHECK(t.slot_in_parent(2) == 2);
}

TEST_CASE("grafting")
{
    PlanarTree c2 = PlanarTree::corolla(2);
    PlanarTree c3 = PlanarTree::corolla(3);
    PlanarTree g = c2.graft(1, c3);
    CHECK(g.leaf_count() == 4);
    CHECK(g.vertex_count() == 2);
    CHECK(g == PlanarTree({2, 3, -1, -1, -1, -1}));

    CHECK(c2.graft(2, PlanarTree::edge()) == c2);
    CHECK(PlanarTree::edge().graft(1, c3) == c3);
    CHECK(g.vertices_before_leaf(4) == 2);
    CHECK(g.vertices_before_leaf(1) == 2);
    CHECK_THROWS(c2.graft(3, c3));
}

TEST_CASE("graft associativity and disjoint commutation on shapes")
{
    std::mt19937 rng(7);
    auto rand_tree = [&](int max_v) {
        PlanarTree t = PlanarTree::corolla(1 + int(rng() % 3));
        int extra = int(rng() % max_v);
        for (int i = 0; i < extra; ++i) {
            int lc = t.leaf_count();
            if (lc == 0)
                break;
            t = t.graft(1 + int(rng() % lc), PlanarTree::corolla(int(rng() % 4)));
        }
        return t;
    };
    for (int it = 0; it < 200; ++it) {
        PlanarTree t = rand_tree(3), s = rand_tree(3), u = rand_tree(3);
        if (t.leaf_count() == 0 || s.leaf_count() == 0)
            continue;
        int i = 1 + int(rng() % t.leaf_count());
        int j = 1 + int(rng() % s.leaf_count());
        // nested: graft(graft(t,i,s), i+j-1, u) == graft(t, i, graft(s,j,u))
        CHECK(t.graft(i, s).graft(i + j - 1, u) == t.graft(i, s.graft(j, u)));
        // disjoint: for j2 < i2
        if (t.leaf_count() >= 2) {
            int i2 = 2 + int(rng() % (t.leaf_count() - 1));
            int j2 = 1 + int(rng() % (i2 - 1));
            CHECK(t.graft(i2, s).graft(j2, u) == t.graft(j2, u).graft(i2 + u.leaf_count() - 1, s));
        }
    }
}

TEST_CASE("token spans")
{
    PlanarTree t = running_example_tree();
    CHECK(t.vertex_token(0) == 0);
    CHECK(t.vertex_token(4) == 8);
    CHECK(t.subtree_end(0) == 10);
    CHECK(t.subtree_end(1) == 8);
    CHECK(t.subtree_end(8) == 10);
}
