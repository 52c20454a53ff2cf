#pragma once

#include "opcyl/sdr.hpp"

namespace opcyl {

// Suspension of the module spanned by the cells: relabels the unique
// cell vertex of every monomial through `fn` (which raises degree by 1)
// with the sign of moving sigma past the labels before it.
Element sigma_module_map(const World& w, const Element& e,
                         const std::function<int(int gen)>& fn);

// Closed differential d(sigma x) = i0 x - i1 x - sigma d^1(x) of the
// cylinder of a linear presentation.
Element linear_sigma_differential(const Presentation& p, const CylinderEngine& cyl, int gen);

// The pasting of two cylinders along i1/i0, as a presentation with five
// generator families per cell, for linear presentations.
class DoubleCylinder {
public:
    DoubleCylinder(Presentation source, CylinderEngine cyl);

    const Presentation& presentation() const { return pres_; }
    const World& world() const { return *world_; }

    int bot(int gen) const;
    int mid(int gen) const;
    int top(int gen) const;
    int s0(int gen) const;
    int s1(int gen) const;

    Element j0(const Element& e) const; // first cylinder copy
    Element j1(const Element& e) const; // second cylinder copy
    Element doubling(const Element& e) const;   // nu: IO -> IO u IO
    Element project(const Element& e) const;    // glued projection onto O

private:
    Presentation source_;
    CylinderEngine cyl_;
    WorldPtr world_;
    Presentation pres_;

    int named(const char* prefix, int gen, int degree_shift) const;
};

// reversing map: i0 <-> i1, sigma -> -sigma
Element reversing(const CylinderEngine& cyl, const Element& e);

} // namespace opcyl
