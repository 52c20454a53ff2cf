#include "doctest.h"

#include "test_util.hpp"

#include "opcyl/examples.hpp"
#include "opcyl/sdr.hpp"
#include "opcyl/suspension.hpp"

using namespace opcyl;

TEST_CASE("closed formula for d(sigma mu_n)")
{
    Presentation p = build_ainf();
    CylinderEngine cyl(p);
    const World& w = cyl.world();

    // n = 2: both index sets empty
    int mu2 = *p.find_gen("mu_2");
    CHECK(ainf_dsigma_formula(cyl, 2) ==
          Element::generator(w, w.marked(Marker::I0, mu2)) -
              Element::generator(w, w.marked(Marker::I1, mu2)));

    for (int n = 2; n <= 4; ++n) {
        int mun = *p.find_gen("mu_" + std::to_string(n));
        CHECK(ainf_dsigma_formula(cyl, n) == cyl.cyl_d(w.marked(Marker::Sigma, mun)));
    }
}

TEST_CASE("closed formula for h i1 d(mu_{n+1})")
{
    Presentation p = build_lambda_ainf();
    CylinderEngine cyl(p);

    for (int n = 2; n <= 3; ++n) {
        int mun1 = *p.find_gen("mu_" + std::to_string(n + 1));
        Element engine = cyl.homotopy(cyl.i1(p.boundary(mun1)));
        CHECK(tech_h_formula(cyl, n) == engine);
    }
}

TEST_CASE("derivation example formula for h i1 d(D_n)")
{
    Presentation p = build_lambda_ainf_d();
    CylinderEngine cyl(p);

    // n = 1: both sides vanish
    int d1 = *p.find_gen("D_1");
    CHECK(p.boundary(d1).is_zero());
    CHECK(conder_h_formula(cyl, 1).is_zero());

    for (int n = 2; n <= 3; ++n) {
        int dn = *p.find_gen("D_" + std::to_string(n));
        Element engine = cyl.homotopy(cyl.i1(p.boundary(dn)));
        CHECK(conder_h_formula(cyl, n) == engine);
    }
}

TEST_CASE("case split for h on shallow standard trees")
{
    Presentation p = build_lambda_ainf();
    CylinderEngine cyl(p);
    const World& w = cyl.world();
    auto mu = [&](int k) { return *p.find_gen("mu_" + std::to_string(k)); };

    // enumerate i0 mu_r(..., i1 mu_q, ...) with at most one sigma argument
    for (int r = 2; r <= 4; ++r) {
        for (int q = 2; q <= 3; ++q) {
            for (int slot_i1 = 1; slot_i1 <= r; ++slot_i1) {
                {
                    // no sigma arguments: j = 1, conditions reduce to r >= q or q > r
                    Element in = Element::monomial(w, Monomial::vertex(w, w.marked(Marker::I0, mu(r))));
                    in = compose_at(w, in, slot_i1, Element::generator(w, w.marked(Marker::I1, mu(q))));
                    Element expect = tech_first_series_expected(cyl, r, {}, slot_i1, q);
                    CHECK(cyl.homotopy(in) == expect);
                }
                for (int t = 2; t <= 3; ++t) {
                    for (int slot_s = 1; slot_s <= r; ++slot_s) {
                        if (slot_s == slot_i1)
                            continue;
                        Element in = Element::generator(w, w.marked(Marker::I0, mu(r)));
                        // graft right to left so slots stay valid
                        int a = std::max(slot_i1, slot_s), b = std::min(slot_i1, slot_s);
                        Element ga = a == slot_i1 ? Element::generator(w, w.marked(Marker::I1, mu(q)))
                                                  : Element::generator(w, w.marked(Marker::Sigma, mu(t)));
                        Element gb = b == slot_i1 ? Element::generator(w, w.marked(Marker::I1, mu(q)))
                                                  : Element::generator(w, w.marked(Marker::Sigma, mu(t)));
                        in = compose_at(w, in, a, ga);
                        in = compose_at(w, in, b, gb);
                        Element expect = tech_first_series_expected(cyl, r, {slot_s, t}, slot_i1, q);
                        CHECK(cyl.homotopy(in) == expect);
                    }
                }
            }
        }
    }
}

TEST_CASE("unital retraction homotopy is a chain map")
{
    for (int m : {1, 2}) {
        Presentation p = build_unital_nu(m);
        CylinderEngine cyl(p);
        const World& w = cyl.world();
        for (int g : p.gens_for_arity(4)) {
            for (Marker mk : {Marker::I0, Marker::I1, Marker::Sigma}) {
                Element gen = Element::generator(w, w.marked(mk, g));
                Element lhs = unital_H(p, cyl, cyl.cyl_d(w.marked(mk, g)), m);
                Element rhs = p.differential(unital_H(p, cyl, gen, m));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("unital retraction homotopy values")
{
    Presentation p = build_unital_nu(2);
    CylinderEngine cyl(p);
    const World& w = cyl.world();

    // H(i1 nu) = 0 away from (n, m) = (1, 1)
    int nu2 = *p.find_gen("nu_2^{1,2}");
    CHECK(unital_H(p, cyl, Element::generator(w, w.marked(Marker::I1, nu2)), 2).is_zero());
    CHECK(unital_H(p, cyl, Element::generator(w, w.marked(Marker::I0, nu2)), 2) ==
          Element::generator(w, nu2));

    // H(sigma nu_2^{1,2}) = +nu_3^{2,3} o_1 u (sign (-1)^{l_1+1} with l_1 = 1)
    Element got = unital_H(p, cyl, Element::generator(w, w.marked(Marker::Sigma, nu2)), 2);
    Element expect = compose_at(w, Element::generator(w, *p.find_gen("nu_3^{2,3}")), 1,
                                Element::generator(w, w.base.unit_gen(w)));
    CHECK(got == expect);

    // m = 1: H(i1 nu_1^{1}) = u
    Presentation p1 = build_unital_nu(1);
    CylinderEngine cyl1(p1);
    const World& w1 = cyl1.world();
    int nu11 = *p1.find_gen("nu_1^{1}");
    CHECK(unital_H(p1, cyl1, Element::generator(w1, w1.marked(Marker::I1, nu11)), 1) ==
          Element::generator(w1, w1.base.unit_gen(w1)));
}

TEST_CASE("the two closed routes agree through desuspension")
{
    Presentation p = build_ainf();
    Presentation lp = suspend_presentation(p);
    CylinderEngine cyl(p);
    CylinderEngine lcyl(lp);
    const World& wl = lcyl.world();

    for (int n = 3; n <= 4; ++n) {
        int lmu = *lp.find_gen("mu_" + std::to_string(n));
        Element via_suspension = desuspend_element(lp, p, lcyl.cyl_d(wl.marked(Marker::Sigma, lmu)));
        CHECK(via_suspension == ainf_dsigma_formula(cyl, n));
    }
}
