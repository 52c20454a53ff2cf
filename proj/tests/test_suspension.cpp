#include "doctest.h"

#include "test_util.hpp"

#include "opcyl/examples.hpp"
#include "opcyl/sdr.hpp"
#include "opcyl/suspension.hpp"

#include <random>

using namespace opcyl;
using testutil::random_element;

TEST_CASE("suspension degrees and boundaries match the suspended family")
{
    Presentation p = build_ainf();
    Presentation lp = suspend_presentation(p);
    const World& w = lp.world();

    for (int n = 2; n <= 6; ++n) {
        int mu = *lp.find_gen("mu_" + std::to_string(n));
        CHECK(w.degree(mu) == -1);
    }
    // d(mu_n) = sum mu_p{mu_q} after suspension
    for (int n = 3; n <= 6; ++n) {
        Element expect = Element::zero(n, -2);
        for (int q = 2; q <= n - 1; ++q) {
            int pp = n + 1 - q;
            expect += brace(w, Element::generator(w, *lp.find_gen("mu_" + std::to_string(pp))),
                            {Element::generator(w, *lp.find_gen("mu_" + std::to_string(q)))});
        }
        CHECK(lp.boundary(*lp.find_gen("mu_" + std::to_string(n))) == expect);
    }
}

TEST_CASE("suspension of the derivation family")
{
    Presentation p = build_ainf_d();
    Presentation lp = suspend_presentation(p);
    const World& w = lp.world();
    // d(D_n) = sum (mu_p{D_q} - D_p{mu_q})
    for (int n = 2; n <= 5; ++n) {
        Element expect = Element::zero(n, -1);
        for (int pp = 1; pp <= n; ++pp) {
            int q = n + 1 - pp;
            if (pp >= 2 && q >= 1)
                expect += brace(w, Element::generator(w, *lp.find_gen("mu_" + std::to_string(pp))),
                                {Element::generator(w, *lp.find_gen("D_" + std::to_string(q)))});
            if (pp >= 1 && q >= 2)
                expect -= brace(w, Element::generator(w, *lp.find_gen("D_" + std::to_string(pp))),
                                {Element::generator(w, *lp.find_gen("mu_" + std::to_string(q)))});
        }
        CHECK(lp.boundary(*lp.find_gen("D_" + std::to_string(n))) == expect);
    }
    CHECK(lp.check_d_squared(4).ok);
}

TEST_CASE("suspension round trip and defining identity")
{
    std::mt19937 rng(13);
    Presentation p = build_ainf_d();
    Presentation lp = suspend_presentation(p);
    const World& w = p.world();
    const World& wl = lp.world();
    std::vector<int> gens = p.gens_up_to_stage(3);

    for (int it = 0; it < 200; ++it) {
        Element x = random_element(w, gens, rng, 1 + rng() % 3);
        if (x.is_zero())
            continue;
        Element sx = suspend_element(p, lp, x);
        CHECK(desuspend_element(lp, p, sx) == x);

        // Lambda(x o_i y) = (-1)^{||y||(p-i)+|y|(i-1)} Lambda x o_i Lambda y
        Element y = random_element(w, gens, rng, 1 + rng() % 2);
        if (y.is_zero() || x.arity() < 1)
            continue;
        int i = 1 + int(rng() % x.arity());
        Element sy = suspend_element(p, lp, y);
        int norm_y = y.degree() + 1 - y.arity();
        int eps = norm_y * (x.arity() - i) + y.degree() * (i - 1);
        Element lhs = suspend_element(p, lp, compose_at(w, x, i, y));
        Element rhs = compose_at(wl, sx, i, sy);
        if (eps % 2)
            rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("suspension commutes with the differential")
{
    std::mt19937 rng(29);
    Presentation p = build_ainf();
    Presentation lp = suspend_presentation(p);
    const World& w = p.world();
    std::vector<int> gens = p.gens_up_to_stage(4);

    for (int it = 0; it < 150; ++it) {
        Element x = random_element(w, gens, rng, 1 + rng() % 3);
        if (x.is_zero())
            continue;
        CHECK(suspend_element(p, lp, p.differential(x)) == lp.differential(suspend_element(p, lp, x)));
    }
}

TEST_CASE("suspension commutes with cylinders")
{
    Presentation p = build_ainf();
    Presentation lp = suspend_presentation(p);
    CylinderEngine cyl(p);
    CylinderEngine lcyl(lp);
    const World& w = cyl.world();
    const World& wl = lcyl.world();

    for (int n = 2; n <= 4; ++n) {
        int mu = *p.find_gen("mu_" + std::to_string(n));
        int lmu = *lp.find_gen("mu_" + std::to_string(n));
        for (Marker mk : {Marker::I0, Marker::I1, Marker::Sigma}) {
            Element lhs = suspend_element(p, lp, cyl.cyl_d(w.marked(mk, mu)));
            Element rhs = lcyl.cyl_d(wl.marked(mk, lmu));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("suspending the relative base")
{
    Presentation ad = build_assoc_der();           // lambda-assoc base
    Presentation plain = desuspend_presentation(ad); // assoc base, degree-0 m_n
    const World& w = plain.world();
    CHECK(w.base.kind() == BaseKind::Assoc);
    int d2 = *plain.find_gen("D_2");
    CHECK(w.degree(d2) == 1); // |D_n| = n-1 unsuspended
    CHECK(plain.check_d_squared(4).ok);

    // the unsuspended boundary at n = 3:
    // d(D_3) = mu o_1 D_2 - mu o_2 D_2 + D_2 o_1 mu - D_2 o_2 mu
    int d3 = *plain.find_gen("D_3");
    Element mu = Element::generator(w, w.base.mul_gen(w, 2));
    Element D2 = Element::generator(w, d2);
    Element expect = compose_at(w, mu, 1, D2) - compose_at(w, mu, 2, D2);
    expect += compose_at(w, D2, 1, mu) - compose_at(w, D2, 2, mu);
    CHECK(plain.boundary(d3) == expect);
}
