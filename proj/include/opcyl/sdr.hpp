#pragma once

#include "opcyl/presentation.hpp"

#include <mutex>
#include <unordered_map>

namespace opcyl {

struct MonomialHash {
    size_t operator()(const Monomial& m) const
    {
        size_t h = m.tree.hash();
        for (int32_t g : m.labels)
            h = (h * 0x9e3779b97f4a7c15ULL) ^ size_t(uint32_t(g));
        return h;
    }
};

// The canonical strong pseudo-cylinder of a pseudo-cellular presentation:
// structure maps i0, i1, p, the recursive chain homotopy h built through
// the basic perturbation lemma, and the induced differential. Marked
// symbols are interned into the source presentation's world.
//
// homotopy_at(k, -) evaluates the chain homotopy of the cylinder of the
// sub-presentation on stages < k; stage coherence makes the value agree
// with the minimal-stage evaluation.
class CylinderEngine {
public:
    explicit CylinderEngine(Presentation source);

    const Presentation& source() const { return source_; }
    const World& world() const { return *world_; }

    int marked(Marker m, int gen) const { return world_->marked(m, gen); }

    // operad maps between the operad and its cylinder (label-wise)
    Element i0(const Element& e) const { return mark_all(e, Marker::I0); }
    Element i1(const Element& e) const { return mark_all(e, Marker::I1); }
    Element p(const Element& e) const;

    // chain homotopy; minimal-stage evaluation with memoization
    Element homotopy(const Element& e) const;
    Element homotopy_at(int stage, const Element& e) const;
    Element homotopy_at(int stage, const Monomial& m) const;

    // tensor-product-SDR homotopy of the unperturbed coproduct whose free
    // part is the given top stage
    Element tensor_homotopy(int top_stage, const Monomial& m) const;

    // the perturbation: derivation vanishing off the given stage, sending
    // i_j(x) to i_j(dx) and sigma(x) to -h i_1(dx)
    Element perturbation(int top_stage, const Element& e) const;

    // differential of the cylinder
    Element cyl_boundary(int marked_gen) const; // twisting part
    Element cyl_internal(int marked_gen) const; // i0 x - i1 x part of d(sigma x)
    Element cyl_d(int marked_gen) const;
    Element differential(const Element& e) const;

    // the cylinder as a pseudo-cellular presentation ("cyl:<name>")
    Presentation as_presentation() const;

    // standard labeled trees
    bool is_standard(const Monomial& m) const;
    bool has_forbidden_edge(const Monomial& m) const;
    Marker bottom_marker(const Monomial& m) const;

    // minimal evaluation stage of a cylinder monomial
    int min_stage(const Monomial& m) const;

    size_t memo_size() const;

private:
    struct Memo {
        std::mutex mu;
        std::unordered_map<Monomial, Element, MonomialHash> map;
    };

    Presentation source_;
    WorldPtr world_;
    size_t memo_budget_;
    int src_depth_ = 0; // marker nesting of the source's cells (> 0 for iterated cylinders)
    std::shared_ptr<Memo> memo_; // shared across copies of the engine

    int marker_depth(int gen) const;
    Element mark_all(const Element& e, Marker mk) const;
    Element h_label(int gen) const;   // h_I on one marked label
    Element i0p_label(int gen) const; // i0 p on one marked label
    Element compute_h(int stage, const Monomial& m) const;
};

} // namespace opcyl
