#pragma once

#include "opcyl/element.hpp"

#include <functional>

namespace opcyl {

// All signs in the term algebra are Koszul shuffle signs: when a list of
// graded symbols is reordered, each transposition of two odd-degree
// symbols contributes -1. Positions/parities come in as parallel arrays.
// `src_pos[k]` is the source position of the symbol now at position k.
int koszul_reorder_sign(const std::vector<int>& src_pos, const std::vector<int>& deg_parity);

// Contracts adjacent base-labeled vertices (rightmost pair first) until
// the monomial is in coproduct normal form; identity labels produced by
// the base are spliced out. Returns the accumulated integer coefficient
// (a sign for the built-in bases; custom structure constants multiply in,
// and 0 kills the monomial).
int canonicalize(const World& w, PlanarTree& tree, std::vector<int32_t>& labels);

// x o_i y, bilinear, Koszul grafting sign, result canonical.
Element compose_at(const World& w, const Element& x, int i, const Element& y);

// x0(args...), iterated compose_at from the last slot to the first.
Element compose_full(const World& w, const Element& x0, const std::vector<Element>& args);

// x0{args...}: sum over order-preserving slot assignments; empty sum
// (more arguments than slots) is zero.
Element brace(const World& w, const Element& x0, const std::vector<Element>& args);

// Replaces the v-th vertex of m by each monomial of repl (same arity),
// with the reordering sign relative to the block-at-v orientation.
// The caller supplies any operator-passing sign prefix.
Element substitute_vertex(const World& w, const Monomial& m, int v, const Element& repl);

// Multiplicative (operad-map) extension of a generator map: evaluates the
// nested composition of m with every label replaced by its image.
// Images must preserve arity; base labels map to themselves when fn
// returns nullptr for them.
Element apply_operad_map(const World& w, const Element& e,
                         const std::function<Element(int gen)>& fn);

// Derivation extension of a partial generator rule: signed sum over
// labeled vertices, sign of moving a degree -1 operator past the labels
// before the vertex in path order. Vertices whose label has no rule are
// skipped (the rule maps them to zero).
Element derive(const World& w, const Element& e,
               const std::function<const Element*(int gen)>& rule);

} // namespace opcyl
