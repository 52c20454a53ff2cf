#include "opcyl/verify.hpp"

#include "opcyl/examples.hpp"
#include "opcyl/io.hpp"
#include "opcyl/linear.hpp"
#include "opcyl/sdr.hpp"
#include "opcyl/suspension.hpp"

#include <random>
#include <set>
#include <sstream>

namespace opcyl {

namespace {

Element gen_elem(const World& w, int g) { return Element::generator(w, g); }

std::string describe(const World& w, const Element& e)
{
    std::string s = e.str(w);
    if (s.size() > 160)
        s = s.substr(0, 157) + "...";
    return s;
}

Check pass(std::string name, std::string detail = "")
{
    return {std::move(name), true, std::move(detail)};
}

Check fail(std::string name, std::string detail)
{
    return {std::move(name), false, std::move(detail)};
}

// every standard labeled tree over the cylinder alphabet within bounds
std::vector<Monomial> standard_basis(const CylinderEngine& cyl, int max_arity, int max_vertices)
{
    const World& w = cyl.world();
    std::vector<int> marked;
    for (int g : cyl.source().gens_for_arity(max_arity))
        for (Marker mk : {Marker::I0, Marker::I1, Marker::Sigma})
            marked.push_back(w.marked(mk, g));

    std::set<Monomial> out;
    std::vector<Monomial> frontier;
    for (int g : marked) {
        Monomial m = Monomial::vertex(w, g);
        if (m.arity() <= max_arity) {
            out.insert(m);
            frontier.push_back(m);
        }
    }
    for (int step = 1; step < max_vertices; ++step) {
        std::vector<Monomial> next;
        for (const Monomial& m : frontier) {
            for (int leaf = 1; leaf <= m.arity(); ++leaf) {
                int k = m.tree.vertices_before_leaf(leaf);
                for (int g : marked) {
                    if (m.arity() + w.arity(g) - 1 > max_arity)
                        continue;
                    Monomial m2(m.tree.graft(leaf, PlanarTree::corolla(w.arity(g))), m.labels);
                    m2.labels.insert(m2.labels.begin() + k, g);
                    if (out.insert(m2).second)
                        next.push_back(m2);
                }
            }
        }
        frontier = std::move(next);
    }
    return {out.begin(), out.end()};
}

Element random_element(const World& w, const std::vector<int>& gens,
                       std::mt19937_64& rng, int vertices)
{
    Element e = gen_elem(w, gens[rng() % gens.size()]);
    for (int i = 1; i < vertices; ++i) {
        if (e.is_zero() || e.arity() == 0)
            break;
        int slot = 1 + int(rng() % e.arity());
        e = compose_at(w, e, slot, gen_elem(w, gens[rng() % gens.size()]));
    }
    return e;
}

// ------------------------------------------------------------------
// 1: d^2 = 0 on the built-in presentations up to arity 7

Check check_d2_presentations()
{
    for (const char* name : {"ainf", "lambda-ainf", "ainf-d", "lambda-ainf-d",
                             "assoc-der", "unital-nu:m=1", "unital-nu:m=2"}) {
        Presentation p = build_presentation(name);
        Presentation::D2Report rep = p.check_d_squared_arity(7);
        if (!rep.ok)
            return fail("1 d^2 = 0 (generators, arity <= 7)",
                        std::string(name) + " fails at " + p.world().rec(rep.gen).name +
                            ": " + describe(p.world(), rep.residue));
    }
    return pass("1 d^2 = 0 (generators, arity <= 7)",
                "ainf lambda-ainf ainf-d lambda-ainf-d assoc-der unital-nu:m=1,2");
}

// 2: cylinder d^2 = 0 for sigma mu_n, n <= 7

Check check_d2_cylinder()
{
    for (const char* name : {"ainf", "lambda-ainf"}) {
        Presentation p = build_presentation(name);
        CylinderEngine cyl(p);
        Presentation ip = cyl.as_presentation();
        const World& w = cyl.world();
        for (int n = 2; n <= 7; ++n) {
            int mu = *p.find_gen("mu_" + std::to_string(n));
            Element res = ip.differential(ip.d_of_gen(w.marked(Marker::Sigma, mu)));
            if (!res.is_zero())
                return fail("2 cylinder d^2 = 0 (sigma mu_n, n <= 7)",
                            std::string("cyl:") + name + " fails at sigma mu_" + std::to_string(n));
        }
    }
    return pass("2 cylinder d^2 = 0 (sigma mu_n, n <= 7)", "cyl:ainf cyl:lambda-ainf");
}

// 3: the closed cylinder formula of the A-infinity family

Check check_ainf_formula(int nmax)
{
    Presentation p = build_ainf();
    CylinderEngine cyl(p);
    const World& w = cyl.world();
    for (int n = 2; n <= nmax; ++n) {
        int mu = *p.find_gen("mu_" + std::to_string(n));
        Element engine = cyl.cyl_d(w.marked(Marker::Sigma, mu));
        Element formula = ainf_dsigma_formula(cyl, n);
        if (engine != formula)
            return fail("3 closed formula for d(sigma mu_n), n <= " + std::to_string(nmax),
                        "n = " + std::to_string(n) + ": engine " + describe(w, engine) +
                            " vs formula " + describe(w, formula));
    }
    return pass("3 closed formula for d(sigma mu_n), n <= " + std::to_string(nmax));
}

// 4: the closed formula for h i1 d(mu_{n+1}) in suspended conventions

Check check_tech_formula(int nmax)
{
    Presentation p = build_lambda_ainf();
    CylinderEngine cyl(p);
    for (int n = 2; n <= nmax; ++n) {
        int mu = *p.find_gen("mu_" + std::to_string(n + 1));
        Element engine = cyl.homotopy(cyl.i1(p.boundary(mu)));
        Element formula = tech_h_formula(cyl, n);
        if (engine != formula)
            return fail("4 h i1 d(mu_{n+1}) closed formula, n <= " + std::to_string(nmax),
                        "n = " + std::to_string(n));
    }
    return pass("4 h i1 d(mu_{n+1}) closed formula, n <= " + std::to_string(nmax));
}

// 5: h on shallow standard trees i0 mu_r(..., i1 mu_q, ...)

Check check_tech_first_series()
{
    Presentation p = build_lambda_ainf();
    CylinderEngine cyl(p);
    const World& w = cyl.world();
    auto mu = [&](int k) { return *p.find_gen("mu_" + std::to_string(k)); };
    int tested = 0;

    for (int r = 2; r <= 8; ++r) {
        // argument multiset: one i1 mu_q plus up to two sigma mu_t
        for (int extra = 0; extra <= 2; ++extra) {
            std::vector<int> slots(extra + 1);
            std::function<Check(int, int)> place = [&](int k, int from) -> Check {
                if (k == extra + 1) {
                    // slots[0] carries i1 mu_q, the rest sigma mu_t
                    for (int which = 0; which <= extra; ++which) {
                        std::vector<int> ts(extra);
                        std::function<Check(int)> pick = [&](int j) -> Check {
                            if (j == extra) {
                                for (int q = 2; q <= 8; ++q) {
                                    int arity = r + q - 1;
                                    for (int t : ts)
                                        arity += t - 1;
                                    if (arity > 8)
                                        continue;
                                    // assemble input monomial and flattened (slot, t) list
                                    std::vector<std::pair<int, int>> args;
                                    std::vector<int> flat;
                                    int slot_i1 = slots[which];
                                    int ti = 0;
                                    for (int a = 0; a <= extra; ++a) {
                                        if (a == which) {
                                            args.emplace_back(slots[a], w.marked(Marker::I1, mu(q)));
                                        } else {
                                            args.emplace_back(slots[a], w.marked(Marker::Sigma, mu(ts[ti])));
                                            flat.push_back(slots[a]);
                                            flat.push_back(ts[ti]);
                                            ++ti;
                                        }
                                    }
                                    Element in = gen_elem(w, w.marked(Marker::I0, mu(r)));
                                    std::sort(args.begin(), args.end());
                                    for (auto it = args.rbegin(); it != args.rend(); ++it)
                                        in = compose_at(w, in, it->first, gen_elem(w, it->second));
                                    Element expect = tech_first_series_expected(cyl, r, flat, slot_i1, q);
                                    Element got = cyl.homotopy(in);
                                    ++tested;
                                    if (got != expect)
                                        return fail("5 h on shallow trees i0 mu_r(..., i1 mu_q, ...)",
                                                    "r=" + std::to_string(r) + " q=" + std::to_string(q) +
                                                        ": got " + describe(w, got) + " expected " + describe(w, expect));
                                }
                                return pass("");
                            }
                            for (int t = 2; t <= 8; ++t) {
                                ts[j] = t;
                                Check c = pick(j + 1);
                                if (!c.pass)
                                    return c;
                            }
                            return pass("");
                        };
                        Check c = pick(0);
                        if (!c.pass)
                            return c;
                    }
                    return pass("");
                }
                for (int s = from; s <= r; ++s) {
                    slots[k] = s;
                    Check c = place(k + 1, s + 1);
                    if (!c.pass)
                        return c;
                }
                return pass("");
            };
            Check c = place(0, 1);
            if (!c.pass)
                return c;
        }
    }
    return pass("5 h on shallow trees i0 mu_r(..., i1 mu_q, ...)",
                std::to_string(tested) + " labeled trees, arity <= 8, <= 4 vertices");
}

// 6: the SDR identities on the standard basis

Check check_sdr(int max_arity, int max_vertices)
{
    Presentation p = build_ainf();
    CylinderEngine cyl(p);
    const World& w = cyl.world();
    std::string name = "6 SDR axioms (arity <= " + std::to_string(max_arity) +
                       ", <= " + std::to_string(max_vertices) + " vertices)";

    std::vector<Monomial> basis = standard_basis(cyl, max_arity, max_vertices);
    for (const Monomial& m : basis) {
        Element t = Element::monomial(w, m);
        Element ht = cyl.homotopy(t);
        if (!cyl.homotopy(ht).is_zero())
            return fail(name, "h^2 != 0 at " + m.str(w));
        if (!cyl.p(ht).is_zero())
            return fail(name, "p h != 0 at " + m.str(w));
        Element lhs = cyl.i0(cyl.p(t)) - t;
        Element rhs = cyl.differential(ht) + cyl.homotopy(cyl.differential(t));
        if (lhs != rhs)
            return fail(name, "i0 p - 1 != dh + hd at " + m.str(w));
        Element pt = cyl.p(t);
        if (!pt.is_zero()) {
            if (cyl.p(cyl.i0(pt)) != pt || cyl.p(cyl.i1(pt)) != pt)
                return fail(name, "p i_j != 1 at " + m.str(w));
            if (!cyl.homotopy(cyl.i0(pt)).is_zero())
                return fail(name, "h i0 != 0 at " + m.str(w));
        }
    }
    return pass(name, std::to_string(basis.size()) + " standard monomials");
}

// 7: vanishing of h on random standard monomials

Check check_vanishing(int max_arity, int max_vertices, uint64_t seed, int count)
{
    Presentation p = build_ainf();
    CylinderEngine cyl(p);
    const World& w = cyl.world();
    std::mt19937_64 rng(seed);
    std::string name = "7 vanishing of h (" + std::to_string(count) + " random standard monomials)";

    // parent vertex of the given leaf, -1 for the bare edge
    auto leaf_owner = [](const PlanarTree& t, int leaf) {
        std::vector<std::pair<int, int>> stk;
        int v = 0, seen = 0;
        for (int16_t tk : t.tokens()) {
            int parent = stk.empty() ? -1 : stk.back().first;
            if (!stk.empty() && --stk.back().second == 0)
                stk.pop_back();
            if (tk == PlanarTree::kLeaf) {
                if (++seen == leaf)
                    return parent;
            } else {
                if (tk > 0)
                    stk.emplace_back(v, tk);
                ++v;
            }
        }
        return -1;
    };

    int made = 0;
    while (made < count) {
        bool bottom_sigma = rng() % 2 == 0;
        int root_ar = 2 + int(rng() % (max_arity - 1));
        int root = w.marked(bottom_sigma ? Marker::Sigma : Marker::I0,
                            *p.find_gen("mu_" + std::to_string(root_ar)));
        Monomial m = Monomial::vertex(w, root);
        int target = 1 + int(rng() % max_vertices);
        for (int v = 1; v < target; ++v) {
            if (m.arity() == 0)
                break;
            int leaf = 1 + int(rng() % m.arity());
            int k = m.tree.vertices_before_leaf(leaf);
            int owner = leaf_owner(m.tree, leaf);
            int parent_label = owner < 0 ? -1 : m.labels[owner];

            int roll = int(rng() % 3);
            Marker child_mk = roll == 0 ? Marker::I0 : roll == 1 ? Marker::I1 : Marker::Sigma;
            // in the no-forbidden-edge case never hang i1 under i0
            if (!bottom_sigma && parent_label >= 0 && w.marker(parent_label) == Marker::I0 &&
                child_mk == Marker::I1)
                child_mk = Marker::Sigma;
            int car = 2 + int(rng() % 3);
            if (m.arity() + car - 1 > max_arity)
                continue;
            int cg = w.marked(child_mk, *p.find_gen("mu_" + std::to_string(car)));
            Monomial m2(m.tree.graft(leaf, PlanarTree::corolla(car)), m.labels);
            m2.labels.insert(m2.labels.begin() + k, cg);
            m = std::move(m2);
        }
        if (!bottom_sigma && cyl.has_forbidden_edge(m))
            continue;
        ++made;
        if (!cyl.homotopy(Element::monomial(w, m)).is_zero())
            return fail(name, "h != 0 at standard monomial " + m.str(w));
    }
    return pass(name);
}

// 8: the closed formula for h i1 d(D_n) in the derivation family

Check check_conder_formula(int nmax)
{
    Presentation p = build_lambda_ainf_d();
    CylinderEngine cyl(p);
    for (int n = 2; n <= nmax; ++n) {
        int dn = *p.find_gen("D_" + std::to_string(n));
        Element engine = cyl.homotopy(cyl.i1(p.boundary(dn)));
        Element formula = conder_h_formula(cyl, n);
        if (engine != formula)
            return fail("8 h i1 d(D_n) closed formula, n <= " + std::to_string(nmax),
                        "n = " + std::to_string(n));
    }
    return pass("8 h i1 d(D_n) closed formula, n <= " + std::to_string(nmax));
}

// 9: the linear fast path agrees with the engine

Check check_linear_fast_path(int max_arity)
{
    for (const char* name : {"assoc-der", "unital-nu:m=1"}) {
        Presentation p = build_presentation(name);
        CylinderEngine cyl(p);
        const World& w = cyl.world();
        for (int g : p.gens_for_arity(max_arity)) {
            Element fast = linear_sigma_differential(p, cyl, g);
            Element engine = cyl.cyl_d(w.marked(Marker::Sigma, g));
            if (fast != engine)
                return fail("9 linear d(sigma x) = engine value (arity <= " + std::to_string(max_arity) + ")",
                            std::string(name) + " at " + w.rec(g).name);
        }
    }
    return pass("9 linear d(sigma x) = engine value (arity <= " + std::to_string(max_arity) + ")",
                "assoc-der unital-nu:m=1");
}

// 10: doubling and reversing maps

Check check_doubling_reversing(int max_arity)
{
    std::string name = "10 doubling/reversing chain maps (arity <= " + std::to_string(max_arity) + ")";
    for (const char* pname : {"assoc-der", "unital-nu:m=1"}) {
        Presentation p = build_presentation(pname);
        CylinderEngine cyl(p);
        const World& w = cyl.world();
        DoubleCylinder dc(p, cyl);
        for (int g : p.gens_for_arity(max_arity)) {
            for (Marker mk : {Marker::I0, Marker::I1, Marker::Sigma}) {
                Element gen = gen_elem(w, w.marked(mk, g));
                Element dg = cyl.cyl_d(w.marked(mk, g));
                if (dc.doubling(dg) != dc.presentation().differential(dc.doubling(gen)))
                    return fail(name, std::string(pname) + ": d nu != nu d at " + w.rec(w.marked(mk, g)).name);
                if (reversing(cyl, dg) != cyl.differential(reversing(cyl, gen)))
                    return fail(name, std::string(pname) + ": d iota != iota d at " + w.rec(w.marked(mk, g)).name);
                if (reversing(cyl, reversing(cyl, gen)) != gen)
                    return fail(name, std::string(pname) + ": iota^2 != id");
                if (dc.project(dc.doubling(gen)) != cyl.p(gen))
                    return fail(name, std::string(pname) + ": P nu != p");
                if (cyl.p(reversing(cyl, gen)) != cyl.p(gen))
                    return fail(name, std::string(pname) + ": p iota != p");
            }
            if (dc.j0(gen_elem(w, w.marked(Marker::I1, g))) != dc.j1(gen_elem(w, w.marked(Marker::I0, g))))
                return fail(name, "j0 i1 != j1 i0");
        }
    }
    return pass(name, "assoc-der unital-nu:m=1");
}

// 11: the retraction homotopy of the unital example

Check check_unital_H()
{
    for (int m : {1, 2}) {
        Presentation p = build_unital_nu(m);
        CylinderEngine cyl(p);
        const World& w = cyl.world();
        for (int stage = 0; stage <= 3; ++stage) { // n = m..m+3
            for (int g : p.stage_gens(stage)) {
                for (Marker mk : {Marker::I0, Marker::I1, Marker::Sigma}) {
                    Element gen = gen_elem(w, w.marked(mk, g));
                    Element lhs = unital_H(p, cyl, cyl.cyl_d(w.marked(mk, g)), m);
                    Element rhs = p.differential(unital_H(p, cyl, gen, m));
                    if (lhs != rhs)
                        return fail("11 unital H is a chain map (m = 1,2; n <= m+3)",
                                    "m=" + std::to_string(m) + " at " + w.rec(w.marked(mk, g)).name);
                }
            }
        }
    }
    return pass("11 unital H is a chain map (m = 1,2; n <= m+3)");
}

// 12: randomized algebra laws

Check check_algebra_laws(uint64_t seed, int count)
{
    std::string name = "12 algebra laws (" + std::to_string(count) + " random checks each)";
    Presentation p = build_ainf_d();
    Presentation lp = suspend_presentation(p);
    const World& w = p.world();
    std::mt19937_64 rng(seed);
    std::vector<int> gens = p.gens_up_to_stage(3);

    int done_ops = 0, done_leibniz = 0, done_braces = 0, done_susp = 0;
    while (done_ops < count || done_leibniz < count || done_braces < count || done_susp < count) {
        Element x = random_element(w, gens, rng, 1 + rng() % 3);
        Element y = random_element(w, gens, rng, 1 + rng() % 2);
        Element z = random_element(w, gens, rng, 1 + rng() % 2);
        if (x.is_zero() || y.is_zero() || z.is_zero() || x.arity() < 1 || y.arity() < 1)
            continue;

        if (done_ops < count) {
            int i = 1 + int(rng() % x.arity());
            int j = 1 + int(rng() % y.arity());
            if (compose_at(w, x, i, compose_at(w, y, j, z)) !=
                compose_at(w, compose_at(w, x, i, y), i + j - 1, z))
                return fail(name, "nested associativity");
            if (x.arity() >= 2) {
                int i2 = 2 + int(rng() % (x.arity() - 1));
                int j2 = 1 + int(rng() % (i2 - 1));
                Element lhs = compose_at(w, compose_at(w, x, i2, y), j2, z);
                Element rhs = compose_at(w, compose_at(w, x, j2, z), i2 + z.arity() - 1, y);
                if ((y.degree() * z.degree()) % 2)
                    rhs = -rhs;
                if (lhs != rhs)
                    return fail(name, "disjoint commutation");
            }
            ++done_ops;
        }
        if (done_leibniz < count) {
            int i = 1 + int(rng() % x.arity());
            Element xy = compose_at(w, x, i, y);
            Element lhs = p.differential(xy);
            Element rhs = compose_at(w, p.differential(x), i, y);
            Element x_dy = compose_at(w, x, i, p.differential(y));
            rhs += (x.degree() % 2) ? -x_dy : x_dy;
            if (lhs != rhs)
                return fail(name, "Leibniz rule");
            ++done_leibniz;
        }
        if (done_braces < count) {
            int P = 1 + int(rng() % 2);
            int Q = 1 + int(rng() % 2);
            std::vector<Element> ys, zs;
            for (int i = 0; i < P; ++i)
                ys.push_back(random_element(w, gens, rng, 1));
            for (int i = 0; i < Q; ++i)
                zs.push_back(random_element(w, gens, rng, 1));
            Element lhs = brace(w, brace(w, x, ys), zs);
            Element rhs = Element::zero();
            std::vector<int> ij(2 * P);
            std::function<void(int, int)> rec = [&](int k, int from) {
                if (k == 2 * P) {
                    int eps = 0;
                    for (int a2 = 0; a2 < P; ++a2)
                        for (int l = 0; l < ij[2 * a2]; ++l)
                            eps += ys[a2].degree() * zs[l].degree();
                    std::vector<Element> args;
                    int pos = 0;
                    for (int a2 = 0; a2 < P; ++a2) {
                        int i = ij[2 * a2], j = ij[2 * a2 + 1];
                        for (; pos < i; ++pos)
                            args.push_back(zs[pos]);
                        std::vector<Element> blk(zs.begin() + i, zs.begin() + j);
                        args.push_back(brace(w, ys[a2], blk));
                        pos = j;
                    }
                    for (; pos < Q; ++pos)
                        args.push_back(zs[pos]);
                    Element term = brace(w, x, args);
                    rhs += (eps % 2) ? -term : term;
                    return;
                }
                for (int v = from; v <= Q; ++v) {
                    ij[k] = v;
                    rec(k + 1, v);
                }
            };
            rec(0, 0);
            if (lhs != rhs)
                return fail(name, "brace relation");
            ++done_braces;
        }
        if (done_susp < count) {
            if (suspend_element(p, lp, p.differential(x)) != lp.differential(suspend_element(p, lp, x)))
                return fail(name, "suspension does not commute with d");
            ++done_susp;
        }
    }
    return pass(name, "operad laws, Leibniz, braces, suspension");
}

// 13: the arity-0/1 derivation formula for h i1

Check check_arity01(uint64_t seed)
{
    std::string name = "13 arity-0/1 homotopy derivation formula";
    std::mt19937_64 rng(seed);

    for (int family = 0; family < 6; ++family) {
        auto world = std::make_shared<World>(BaseKind::Initial);
        const World& w = *world;
        bool with_zero = family % 2 == 1;
        auto coeff = [&] { return int(rng() % 5) - 2; };

        // alphabet: a, e closed in degree 1; then two generators with
        // boundaries drawn from closed chains of earlier letters
        int a = w.intern_cell("a", 1, 1, 0);
        int e = w.intern_cell("e", 1, 1, 1);
        int b, c;
        std::vector<Element> bnd;
        bnd.resize(4);
        bnd[0] = Element::zero(1, 0);
        bnd[1] = Element::zero(1, 0);
        auto chain = [&](std::vector<int> gs) {
            Element r = gen_elem(w, gs[0]);
            for (size_t i = 1; i < gs.size(); ++i)
                r = compose_at(w, r, 1, gen_elem(w, gs[i]));
            return r;
        };
        if (!with_zero) {
            b = w.intern_cell("b", 1, 3, 2);
            c = w.intern_cell("c", 1, 4, 3);
            bnd[2] = chain({a, a}).scaled(BigInt(coeff())) + chain({a, e}).scaled(BigInt(coeff())) +
                     chain({e, a}).scaled(BigInt(coeff())) + chain({e, e}).scaled(BigInt(coeff()));
            bnd[3] = Element::zero(1, 3);
            std::vector<std::vector<int>> words;
            for (int i0 = 0; i0 < 2; ++i0)
                for (int i1 = 0; i1 < 2; ++i1)
                    for (int i2 = 0; i2 < 2; ++i2)
                        words.push_back({i0 ? e : a, i1 ? e : a, i2 ? e : a});
            for (const auto& ww : words)
                bnd[3] += chain(ww).scaled(BigInt(coeff()));
        } else {
            b = w.intern_cell("g0", 0, 0, 2); // closed arity-0 generator
            c = w.intern_cell("f", 0, 2, 3);  // arity-0 with boundary a.g0 etc.
            bnd[2] = Element::zero(0, -1);
            bnd[3] = compose_at(w, gen_elem(w, a), 1, gen_elem(w, b)).scaled(BigInt(coeff())) +
                     compose_at(w, gen_elem(w, e), 1, gen_elem(w, b)).scaled(BigInt(coeff()));
        }
        std::vector<int> cells = {a, e, b, c};

        Presentation::Schema sch;
        sch.stage_count = 4;
        sch.stage_gens = [cells](const World&, int s) { return std::vector<int>{cells[s]}; };
        sch.boundary = [cells, bnd](const World&, int g) {
            for (size_t i = 0; i < cells.size(); ++i)
                if (cells[i] == g)
                    return bnd[i];
            throw std::logic_error("unknown generator");
        };
        sch.last_stage_for_arity = [](int) { return 3; };
        Presentation p("arity01", world, std::move(sch));
        Presentation::D2Report rep = p.check_d_squared(3);
        if (!rep.ok)
            return fail(name, "constructed family fails d^2 = 0");

        CylinderEngine cyl(p);
        // all linear monomials of length <= 5 split as x o_1 y: words in
        // the arity-1 letters, optionally capped by an arity-0 letter
        std::vector<int> unary = {a, e};
        if (!with_zero) {
            unary.push_back(b);
            unary.push_back(c);
        }
        std::vector<std::vector<Element>> by_len(5);
        by_len[0].push_back(Element::identity());
        for (int len = 1; len <= 4; ++len) {
            for (const Element& prev : by_len[len - 1])
                for (int g : unary)
                    by_len[len].push_back(compose_at(w, prev, 1, gen_elem(w, g)));
        }
        std::vector<Element> xs, ys;
        for (int len = 1; len <= 4; ++len)
            for (const Element& el : by_len[len])
                xs.push_back(el);
        ys = xs;
        if (with_zero) {
            for (int len = 0; len <= 3; ++len)
                for (const Element& el : by_len[len]) {
                    ys.push_back(compose_at(w, el, 1, gen_elem(w, b)));
                    ys.push_back(compose_at(w, el, 1, gen_elem(w, c)));
                }
        }

        for (const Element& x : xs) {
            for (const Element& y : ys) {
                int xv = int(x.terms().begin()->first.labels.size());
                int yv = int(y.terms().begin()->first.labels.size());
                if (xv + yv > 5)
                    continue;
                Element xy = compose_at(w, x, 1, y);
                Element lhs = cyl.homotopy(cyl.i1(xy));
                Element rhs = compose_at(w, cyl.homotopy(cyl.i1(x)), 1, cyl.i1(y));
                Element second = compose_at(w, cyl.i0(x), 1, cyl.homotopy(cyl.i1(y)));
                rhs += (x.degree() % 2) ? -second : second;
                if (lhs != rhs)
                    return fail(name, "family " + std::to_string(family) + " at x = " + x.str(w) +
                                          ", y = " + y.str(w));
            }
        }
    }
    return pass(name, "6 seeded families, linear monomials of length <= 5");
}

} // namespace

namespace {

// accepts built-in names, presentation files, and cyl:<name> wrappers
Presentation resolve_presentation(std::string name)
{
    int cylinders = 0;
    while (name.rfind("cyl:", 0) == 0) {
        ++cylinders;
        name = name.substr(4);
    }
    Presentation p = name.size() > 5 && name.substr(name.size() - 5) == ".json"
                         ? load_presentation_file(name)
                         : build_presentation(name);
    for (int i = 0; i < cylinders; ++i)
        p = CylinderEngine(p).as_presentation();
    return p;
}

} // namespace

std::vector<Check> verify_suite(const std::string& suite, const VerifyOptions& opt)
{
    std::vector<Check> out;
    if (suite == "d2") {
        Presentation p = resolve_presentation(opt.presentation);
        Presentation::D2Report rep = p.check_d_squared_arity(opt.max_arity);
        out.push_back(rep.ok ? pass("d^2 = 0 on " + opt.presentation)
                             : fail("d^2 = 0 on " + opt.presentation,
                                    "fails at " + p.world().rec(rep.gen).name + ": " +
                                        describe(p.world(), rep.residue)));
    } else if (suite == "sdr") {
        out.push_back(check_sdr(opt.max_arity, opt.max_vertices));
    } else if (suite == "vanishing") {
        out.push_back(check_vanishing(opt.max_arity, opt.max_vertices, opt.seed, opt.count));
    } else if (suite == "ainf-formula") {
        out.push_back(check_ainf_formula(6));
    } else if (suite == "tech") {
        out.push_back(check_tech_formula(5));
        out.push_back(check_tech_first_series());
    } else if (suite == "conder") {
        out.push_back(check_conder_formula(5));
    } else if (suite == "linear") {
        out.push_back(check_linear_fast_path(opt.max_arity));
        out.push_back(check_doubling_reversing(opt.max_arity));
    } else if (suite == "unital-H") {
        out.push_back(check_unital_H());
    } else if (suite == "braces" || suite == "suspension") {
        out.push_back(check_algebra_laws(opt.seed, opt.count));
    } else {
        throw std::invalid_argument("unknown verify suite: " + suite);
    }
    return out;
}

std::vector<Check> acceptance_checks()
{
    std::vector<Check> out;
    out.push_back(check_d2_presentations());
    out.push_back(check_d2_cylinder());
    out.push_back(check_ainf_formula(6));
    out.push_back(check_tech_formula(5));
    out.push_back(check_tech_first_series());
    out.push_back(check_sdr(5, 3));
    out.push_back(check_vanishing(6, 4, 20240501, 1000));
    out.push_back(check_conder_formula(5));
    out.push_back(check_linear_fast_path(6));
    out.push_back(check_doubling_reversing(6));
    out.push_back(check_unital_H());
    out.push_back(check_algebra_laws(715, 10000));
    out.push_back(check_arity01(99));
    return out;
}

} // namespace opcyl
