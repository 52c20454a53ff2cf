#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace opcyl {

// Planted planar tree with implicit, left-to-right numbered leaves.
// Stored as the preorder token sequence: arity of each inner vertex,
// kLeaf for a leaf. Preorder of inner vertices coincides with the path
// order, so vertex handles are 0-based positions in that order.
// The bare edge "|" is the sequence [kLeaf].
class PlanarTree {
public:
    static constexpr int16_t kLeaf = -1;

    PlanarTree() : toks_{kLeaf} {}
    explicit PlanarTree(std::vector<int16_t> toks) : toks_(std::move(toks)) {}

    static PlanarTree edge() { return PlanarTree(); }
    static PlanarTree corolla(int arity);

    bool is_edge() const { return toks_.size() == 1 && toks_[0] == kLeaf; }
    int leaf_count() const;
    int vertex_count() const;
    int vertex_arity(int v) const { return toks_[vertex_token(v)]; }
    const std::vector<int16_t>& tokens() const { return toks_; }

    // grafts s into the i-th leaf (1-based); vertices of s land at
    // positions [k, k+s.vertex_count()) where k = vertices before the leaf
    PlanarTree graft(int leaf, const PlanarTree& s) const;
    int vertices_before_leaf(int leaf) const;

    // where each vertex of the two operands lands in the grafted tree
    struct GraftInjections {
        int offset; // vertices of s land at [offset, offset + s count)
        int host_count;
        int guest_count;
        int host(int v) const { return v < offset ? v : v + guest_count; }
        int guest(int v) const { return offset + v; }
    };
    GraftInjections graft_injections(int leaf, const PlanarTree& s) const
    {
        return {vertices_before_leaf(leaf), vertex_count(), s.vertex_count()};
    }

    // level of each vertex; root vertex has level 1
    std::vector<int> vertex_levels() const;
    // parent vertex of each vertex, -1 for the root vertex
    std::vector<int> parents() const;
    // child descriptor: vertex id of the child subtree root, or -1 if the
    // child is a leaf; one entry per slot of v
    std::vector<int> child_vertices(int v) const;
    // slot index (1-based) of vertex v among its parent's children
    int slot_in_parent(int v) const;

    // token position of the v-th vertex (v in path order)
    int vertex_token(int v) const;
    // [pos, end) token span of the subtree starting at token pos
    int subtree_end(int pos) const;

    bool operator==(const PlanarTree& o) const { return toks_ == o.toks_; }
    bool operator!=(const PlanarTree& o) const { return toks_ != o.toks_; }
    bool operator<(const PlanarTree& o) const { return toks_ < o.toks_; }

    size_t hash() const;
    std::string str() const; // compact debug form, e.g. (2 (3 . . .) .)

private:
    std::vector<int16_t> toks_;
};

} // namespace opcyl

template <>
struct std::hash<opcyl::PlanarTree> {
    size_t operator()(const opcyl::PlanarTree& t) const { return t.hash(); }
};
