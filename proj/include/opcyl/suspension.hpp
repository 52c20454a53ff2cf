#pragma once

#include "opcyl/presentation.hpp"

namespace opcyl {

// Operadic suspension: same underlying modules with ||x|| = |x|+1-arity,
// compositions corrected by the suspension signs. Implemented as a
// relabeling with sign on monomials; the sign is accumulated by deriving
// the monomial as an iterated composition in the nested (path) order.

// A new presentation over a fresh world with shifted degrees and
// transported boundaries. Base: initial stays initial, assoc becomes
// lambda-assoc (and back on desuspension).
Presentation suspend_presentation(const Presentation& p, const std::string& name = "");
Presentation desuspend_presentation(const Presentation& p, const std::string& name = "");

// Transport an element across the suspension. `from`/`to` are matching
// presentations (suspend_element: to = suspension of from). Works for
// cylinder alphabets too: markers are carried over symbol-wise.
Element suspend_element(const Presentation& from, const Presentation& to, const Element& e);
Element desuspend_element(const Presentation& from, const Presentation& to, const Element& e);

} // namespace opcyl
