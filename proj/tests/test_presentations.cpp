#include "doctest.h"

#include "test_util.hpp"

#include "opcyl/examples.hpp"

#include <random>

using namespace opcyl;
using testutil::random_element;

TEST_CASE("ainf boundaries")
{
    Presentation p = build_ainf();
    const World& w = p.world();
    int mu2 = *p.find_gen("mu_2");
    int mu3 = *p.find_gen("mu_3");

    CHECK(p.boundary(mu2).is_zero());
    CHECK(p.differential(Element::identity()).is_zero());

    Element m2 = Element::generator(w, mu2);
    Element expect = compose_at(w, m2, 2, m2) - compose_at(w, m2, 1, m2);
    CHECK(p.boundary(mu3) == expect);
    CHECK(w.degree(mu2) == 0);
    CHECK(w.degree(mu3) == 1);
    CHECK(w.stage(mu3) == 1);

    // d on a composite: d(mu_2 o_1 mu_2) = 0 by Leibniz and d(mu_2) = 0
    CHECK(p.differential(compose_at(w, m2, 1, m2)).is_zero());
}

TEST_CASE("d squared vanishes on the built-ins")
{
    CHECK(build_ainf().check_d_squared(5).ok); // mu_2..mu_7
    CHECK(build_lambda_ainf().check_d_squared(5).ok);
    CHECK(build_ainf_d().check_d_squared(4).ok);
    CHECK(build_lambda_ainf_d().check_d_squared(4).ok);
    CHECK(build_assoc_der().check_d_squared(5).ok);
    CHECK(build_unital_nu(1).check_d_squared(5).ok);
    CHECK(build_unital_nu(2).check_d_squared(5).ok);
}

TEST_CASE("a corrupted boundary fails d squared")
{
    Presentation good = build_ainf();
    auto world = good.world_ptr();
    Presentation::Schema sch;
    sch.stage_gens = [](const World& w, int stage) {
        return std::vector<int>{w.intern_cell("mu_" + std::to_string(stage + 2), stage + 2, stage, stage)};
    };
    // flip the sign of one term of d(mu_4)
    sch.boundary = [good](const World& w, int g) {
        Element b = good.boundary(*good.find_gen(w.rec(g).name));
        if (w.arity(g) == 4 && !b.is_zero()) {
            auto it = b.terms().begin();
            b -= Element::monomial(w, it->first, it->second).scaled(BigInt(2));
        }
        return b;
    };
    sch.last_stage_for_arity = [](int a) { return a - 2; };
    Presentation bad("bad", world, std::move(sch));
    Presentation::D2Report rep = bad.check_d_squared(3);
    CHECK(!rep.ok);
    CHECK(!rep.residue.is_zero());
}

static void leibniz_roundtrips(const Presentation& p, unsigned seed, int iters)
{
    std::mt19937 rng(seed);
    const World& w = p.world();
    std::vector<int> gens = p.gens_up_to_stage(3);
    if (w.base.kind() == BaseKind::UnitalAssoc) {
        gens.push_back(w.base.mul_gen(w, 2));
        gens.push_back(w.base.unit_gen(w));
    } else if (w.base.kind() != BaseKind::Initial) {
        gens.push_back(w.base.mul_gen(w, 2));
    }

    for (int it = 0; it < iters; ++it) {
        Element x = random_element(w, gens, rng, 1 + rng() % 3);
        Element y = random_element(w, gens, rng, 1 + rng() % 2);
        if (x.is_zero() || y.is_zero() || x.arity() < 1)
            continue;
        int i = 1 + int(rng() % x.arity());
        Element lhs = p.differential(compose_at(w, x, i, y));
        Element rhs = compose_at(w, p.differential(x), i, y);
        Element xy = compose_at(w, x, i, p.differential(y));
        rhs += (x.degree() % 2) ? -xy : xy;
        CHECK(lhs == rhs);
        CHECK(p.differential(p.differential(compose_at(w, x, i, y))).is_zero());
    }
}

TEST_CASE("leibniz and d^2 on random composites over relative bases")
{
    leibniz_roundtrips(build_assoc_der(), 3, 200);
    leibniz_roundtrips(build_unital_nu(1), 5, 200);
    leibniz_roundtrips(build_unital_nu(2), 7, 150);
}

TEST_CASE("leibniz rule for the derivation differential")
{
    std::mt19937 rng(17);
    Presentation p = build_ainf_d();
    const World& w = p.world();
    std::vector<int> gens = p.gens_up_to_stage(3);

    for (int it = 0; it < 300; ++it) {
        Element x = random_element(w, gens, rng, 1 + rng() % 3);
        Element y = random_element(w, gens, rng, 1 + rng() % 2);
        if (x.is_zero() || y.is_zero() || x.arity() < 1)
            continue;
        int i = 1 + int(rng() % x.arity());
        Element lhs = p.differential(compose_at(w, x, i, y));
        Element rhs = compose_at(w, p.differential(x), i, y);
        Element xy = compose_at(w, x, i, p.differential(y));
        rhs += (x.degree() % 2) ? -xy : xy;
        CHECK(lhs == rhs);
        // d^2 = 0 on composites too
        CHECK(p.differential(p.differential(compose_at(w, x, i, y))).is_zero());
    }
}

TEST_CASE("linear parts")
{
    Presentation ad = build_assoc_der();
    const World& w = ad.world();
    int d3 = *ad.find_gen("D_3");
    Presentation::LinearParts parts = ad.linear_parts(d3);
    CHECK(parts.d0.is_zero());
    CHECK(parts.rest.is_zero());
    Element m2 = Element::generator(w, w.base.mul_gen(w, 2));
    Element d2 = Element::generator(w, *ad.find_gen("D_2"));
    CHECK(parts.d1 == brace(w, m2, {d2}) - brace(w, d2, {m2}));
    CHECK(ad.is_linear(5));
    CHECK(ad.is_strictly_linear(5));

    // the d0 = -id part of the unital example at m = 1
    Presentation un = build_unital_nu(1);
    const World& wu = un.world();
    int nu21 = *un.find_gen("nu_2^{1}");
    Presentation::LinearParts lp = un.linear_parts(nu21);
    CHECK(lp.d0 == -Element::identity());
    Element mu = Element::generator(wu, wu.base.mul_gen(wu, 2));
    Element nu11 = Element::generator(wu, *un.find_gen("nu_1^{1}"));
    CHECK(lp.d1 == compose_at(wu, mu, 1, nu11));
    CHECK(lp.rest.is_zero());
    CHECK(un.is_linear(4));
    CHECK(!un.is_strictly_linear(4));
    CHECK(build_unital_nu(2).is_strictly_linear(4));

    // ainf is not linear from mu_4 on
    Presentation ai = build_ainf();
    CHECK(!ai.linear_parts(*ai.find_gen("mu_4")).rest.is_zero());
    CHECK(!ai.is_linear(3));

    // decomposition reassembles the boundary
    for (int g : ad.gens_up_to_stage(4)) {
        Presentation::LinearParts q = ad.linear_parts(g);
        CHECK(q.d0 + q.d1 + q.rest == ad.boundary(g));
    }
}

TEST_CASE("unital family small values")
{
    Presentation un = build_unital_nu(1);
    const World& w = un.world();
    CHECK(un.boundary(*un.find_gen("nu_1^{1}")).is_zero());

    Element mu = Element::generator(w, w.base.mul_gen(w, 2));
    Element nu11 = Element::generator(w, *un.find_gen("nu_1^{1}"));
    CHECK(un.boundary(*un.find_gen("nu_2^{1}")) == compose_at(w, mu, 1, nu11) - Element::identity());
    CHECK(un.boundary(*un.find_gen("nu_2^{2}")) == compose_at(w, mu, 2, nu11) - Element::identity());

    // generator counts per stage: C(n, m) subsets
    CHECK(un.stage_gens(0).size() == 1);
    CHECK(un.stage_gens(1).size() == 2);
    CHECK(un.stage_gens(2).size() == 3);
    Presentation un2 = build_unital_nu(2);
    CHECK(un2.stage_gens(0).size() == 1);
    CHECK(un2.stage_gens(1).size() == 3);
    CHECK(un2.stage_gens(2).size() == 6);
}

TEST_CASE("lambda ainf boundary via braces")
{
    Presentation p = build_lambda_ainf();
    const World& w = p.world();
    int mu2 = *p.find_gen("mu_2");
    int mu4 = *p.find_gen("mu_4");
    int mu3 = *p.find_gen("mu_3");
    CHECK(w.degree(mu4) == -1);
    Element m2 = Element::generator(w, mu2);
    Element m3 = Element::generator(w, mu3);
    CHECK(p.boundary(mu4) == brace(w, m2, {m3}) + brace(w, m3, {m2}));
}
