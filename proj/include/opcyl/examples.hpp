#pragma once

#include "opcyl/presentation.hpp"

namespace opcyl {

class CylinderEngine;

// Built-in presentations. Recognized names: "ainf", "lambda-ainf",
// "ainf-d", "lambda-ainf-d", "assoc-der", "unital-nu:m=<k>".
Presentation build_presentation(const std::string& name);

Presentation build_ainf();
Presentation build_lambda_ainf();
Presentation build_ainf_d();
Presentation build_lambda_ainf_d();
Presentation build_assoc_der();
Presentation build_unital_nu(int m);

// Closed cylinder formulas, constructed directly from their summations
// (independent of the perturbation engine). They intern marked symbols
// through the given cylinder engine's world.

// d(sigma mu_n) in the cylinder of "ainf", all four summation blocks
Element ainf_dsigma_formula(const CylinderEngine& cyl, int n);

// h i_1 d(mu_{n+1}) in the cylinder of "lambda-ainf"
Element tech_h_formula(const CylinderEngine& cyl, int n);

// h i_1 d(D_n) in the cylinder of "lambda-ainf-d"
Element conder_h_formula(const CylinderEngine& cyl, int n);

// case split for h on a shallow standard labeled tree
// i0 mu_r(..., sigma mu_{t_1}, ..., i1 mu_q at block position j, ...);
// returns the predicted value (a signed monomial or zero)
Element tech_first_series_expected(const CylinderEngine& cyl, int r,
                                   const std::vector<int>& slots_sigma_t,
                                   int slot_i1, int q);

// the retraction homotopy H: I O -> O of the arity-0/1 example family;
// defined on cylinder generators, extended as an operad map
Element unital_H(const Presentation& p, const CylinderEngine& cyl, const Element& e, int m);

} // namespace opcyl
