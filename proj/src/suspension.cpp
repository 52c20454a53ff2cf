#include "opcyl/suspension.hpp"

namespace opcyl {

namespace {

BaseKind suspended_base(BaseKind k, bool desuspend)
{
    switch (k) {
    case BaseKind::Initial: return BaseKind::Initial;
    case BaseKind::Assoc: return desuspend ? BaseKind::Assoc : BaseKind::LambdaAssoc;
    case BaseKind::LambdaAssoc: return desuspend ? BaseKind::Assoc : BaseKind::LambdaAssoc;
    case BaseKind::UnitalAssoc:
    case BaseKind::Custom:
        throw std::invalid_argument("suspension of the " + base_kind_name(k) + " base is not supported");
    }
    throw std::logic_error("unreachable");
}

// translate a symbol of `from` into the matching symbol of `to`,
// peeling cylinder markers
int translate_gen(const Presentation& from, const Presentation& to, int g)
{
    const World& wf = from.world();
    const World& wt = to.world();
    const GenRecord& r = wf.rec(g);
    if (r.is_base) {
        if (r.arity == 0)
            return wt.base.unit_gen(wt);
        return wt.base.mul_gen(wt, r.arity);
    }
    if (r.marker != Marker::Plain)
        return wt.marked(r.marker, translate_gen(from, to, r.src));
    auto t = to.find_gen(r.name);
    if (!t)
        throw std::invalid_argument("suspension target lacks generator " + r.name);
    return *t;
}

// Lambda(x o_i y) = (-1)^{||y||(p-i) + |y|(i-1)} Lambda(x) o_i Lambda(y),
// applied along the left-to-right nested derivation of the monomial.
// `to_suspended` says which of the two worlds carries the ||.||-grading.
Element map_monomial(const Presentation& from, const Presentation& to, bool to_suspended,
                     const Monomial& m)
{
    const World& wf = from.world();
    const World& wt = to.world();
    if (m.is_identity())
        return Element::identity();

    std::function<int(int)> sub_arity = [&](int v) {
        int a = m.tree.vertex_arity(v);
        for (int c : m.tree.child_vertices(v))
            if (c >= 0)
                a += sub_arity(c) - 1;
        return a;
    };
    std::function<int(int)> sub_deg_from = [&](int v) {
        int d = wf.degree(m.labels[v]);
        for (int c : m.tree.child_vertices(v))
            if (c >= 0)
                d += sub_deg_from(c);
        return d;
    };
    std::function<Element(int)> eval = [&](int v) -> Element {
        Element acc = Element::generator(wt, translate_gen(from, to, m.labels[v]));
        int p = m.tree.vertex_arity(v);
        int slot = 1;
        for (int c : m.tree.child_vertices(v)) {
            if (c < 0) {
                ++slot;
                continue;
            }
            Element sub = eval(c);
            int a = sub_arity(c);
            int deg_from = sub_deg_from(c);
            int deg_to = sub.degree();
            int norm = to_suspended ? deg_to : deg_from;  // ||y||
            int plain = to_suspended ? deg_from : deg_to; // |y|
            int eps = norm * (p - slot) + plain * (slot - 1);
            acc = compose_at(wt, acc, slot, sub);
            if (eps % 2)
                acc = -acc;
            p += a - 1;
            slot += a;
        }
        return acc;
    };
    return eval(0);
}

Element map_element(const Presentation& from, const Presentation& to, bool to_suspended, const Element& e)
{
    Element out = Element::zero();
    for (const auto& [m, c] : e.terms())
        out += map_monomial(from, to, to_suspended, m).scaled(c);
    if (out.is_zero() && e.has_meta()) {
        int shift = to_suspended ? 1 - e.arity() : e.arity() - 1;
        out = Element::zero(e.arity(), e.degree() + shift);
    }
    return out;
}

Presentation make_suspension(const Presentation& p, bool desuspend, std::string name)
{
    auto world = std::make_shared<World>(suspended_base(p.world().base.kind(), desuspend));
    if (name.empty())
        name = (desuspend ? "desusp:" : "lambda:") + p.name();
    int dir = desuspend ? -1 : 1;

    // the target presentation handle, filled in below; the schema lambdas
    // close over a shared slot so boundary transport can reference it
    auto self = std::make_shared<Presentation>();

    Presentation::Schema sch;
    sch.stage_count = p.stage_count();
    sch.stage_gens = [p, dir](const World& w, int stage) {
        std::vector<int> out;
        for (int g : p.stage_gens(stage)) {
            const GenRecord& r = p.world().rec(g);
            out.push_back(w.intern_cell(r.name, r.arity, r.degree + dir * (1 - r.arity), r.stage));
        }
        return out;
    };
    sch.boundary = [p, self, desuspend](const World& w, int g) {
        const GenRecord& r = w.rec(g);
        auto src = p.find_gen(r.name);
        if (!src)
            throw std::logic_error("suspension: source generator vanished");
        return map_element(p, *self, !desuspend, p.boundary(*src));
    };
    sch.resolve = [p, dir](const World& w, const std::string& name2) -> std::optional<int> {
        auto src = p.find_gen(name2);
        if (!src)
            return std::nullopt;
        const GenRecord& r = p.world().rec(*src);
        if (r.is_base || r.marker != Marker::Plain)
            return std::nullopt;
        return w.intern_cell(r.name, r.arity, r.degree + dir * (1 - r.arity), r.stage);
    };
    sch.last_stage_for_arity = [p](int a) {
        int last = -1;
        for (int g : p.gens_for_arity(a))
            last = std::max(last, p.world().stage(g));
        return last;
    };
    Presentation out(std::move(name), std::move(world), std::move(sch));
    *self = out;
    return out;
}

} // namespace

Presentation suspend_presentation(const Presentation& p, const std::string& name)
{
    return make_suspension(p, false, name);
}

Presentation desuspend_presentation(const Presentation& p, const std::string& name)
{
    return make_suspension(p, true, name);
}

Element suspend_element(const Presentation& from, const Presentation& to, const Element& e)
{
    return map_element(from, to, true, e);
}

Element desuspend_element(const Presentation& from, const Presentation& to, const Element& e)
{
    return map_element(from, to, false, e);
}

} // namespace opcyl
