#include "opcyl/linear.hpp"

namespace opcyl {

namespace {

int dc_gen(const World& w, const char* prefix, int gen, int degree_shift)
{
    const GenRecord& r = w.rec(gen);
    if (r.is_base || r.marker != Marker::Plain)
        throw std::invalid_argument("double cylinder symbols are indexed by plain cells");
    return w.intern_cell(std::string(prefix) + r.name, r.arity, r.degree + degree_shift, r.stage);
}

Element relabel_cells(const World& w, const Element& e, const std::function<int(int)>& fn)
{
    Element out = e.has_meta() ? Element::zero(e.arity(), e.degree()) : Element::zero();
    for (const auto& [m, c] : e.terms()) {
        Monomial m2 = m;
        for (int32_t& g : m2.labels)
            if (!w.is_base(g))
                g = fn(g);
        out.add_term(std::move(m2), c);
    }
    return out;
}

} // namespace

Element sigma_module_map(const World& w, const Element& e,
                         const std::function<int(int gen)>& fn)
{
    Element out = e.has_meta() ? Element::zero(e.arity(), e.degree() + 1) : Element::zero();
    for (const auto& [m, c] : e.terms()) {
        int cell = -1;
        for (size_t v = 0; v < m.labels.size(); ++v) {
            if (!w.is_base(m.labels[v])) {
                if (cell >= 0)
                    throw std::invalid_argument("sigma_module_map: more than one cell vertex");
                cell = int(v);
            }
        }
        if (cell < 0)
            throw std::invalid_argument("sigma_module_map: no cell vertex");
        int parity = 0;
        for (int v = 0; v < cell; ++v)
            parity ^= w.degree(m.labels[v]) % 2 != 0;
        Monomial m2 = m;
        m2.labels[cell] = fn(m2.labels[cell]);
        out.add_term(std::move(m2), parity ? -c : c);
    }
    return out;
}

Element linear_sigma_differential(const Presentation& p, const CylinderEngine& cyl, int gen)
{
    const World& w = cyl.world();
    Presentation::LinearParts parts = p.linear_parts(gen);
    if (!parts.rest.is_zero())
        throw std::invalid_argument("presentation is not linear at " + w.rec(gen).name);
    Element out = Element::generator(w, w.marked(Marker::I0, gen)) - Element::generator(w, w.marked(Marker::I1, gen));
    out -= sigma_module_map(w, parts.d1, [&](int g) { return w.marked(Marker::Sigma, g); });
    return out;
}

int DoubleCylinder::bot(int gen) const { return dc_gen(*world_, "b:", gen, 0); }
int DoubleCylinder::mid(int gen) const { return dc_gen(*world_, "m:", gen, 0); }
int DoubleCylinder::top(int gen) const { return dc_gen(*world_, "t:", gen, 0); }
int DoubleCylinder::s0(int gen) const { return dc_gen(*world_, "s0:", gen, 1); }
int DoubleCylinder::s1(int gen) const { return dc_gen(*world_, "s1:", gen, 1); }

DoubleCylinder::DoubleCylinder(Presentation source, CylinderEngine cyl)
    : source_(std::move(source)), cyl_(std::move(cyl)), world_(source_.world_ptr())
{
    Presentation src = source_;
    Presentation::Schema sch;
    sch.stage_count = src.stage_count();
    sch.stage_gens = [src](const World& w, int stage) {
        std::vector<int> out;
        for (int g : src.stage_gens(stage)) {
            out.push_back(dc_gen(w, "b:", g, 0));
            out.push_back(dc_gen(w, "s0:", g, 1));
            out.push_back(dc_gen(w, "m:", g, 0));
            out.push_back(dc_gen(w, "s1:", g, 1));
            out.push_back(dc_gen(w, "t:", g, 0));
        }
        return out;
    };
    sch.boundary = [src](const World& w, int g) -> Element {
        const GenRecord& r = w.rec(g);
        size_t colon = r.name.find(':');
        std::string kind = r.name.substr(0, colon);
        auto x = src.find_gen(r.name.substr(colon + 1));
        if (!x)
            throw std::logic_error("double cylinder: unknown cell " + r.name);
        Element dx = src.boundary(*x);
        if (kind == "b")
            return relabel_cells(w, dx, [&](int y) { return dc_gen(w, "b:", y, 0); });
        if (kind == "m")
            return relabel_cells(w, dx, [&](int y) { return dc_gen(w, "m:", y, 0); });
        if (kind == "t")
            return relabel_cells(w, dx, [&](int y) { return dc_gen(w, "t:", y, 0); });
        Presentation::LinearParts parts = src.linear_parts(*x);
        if (!parts.rest.is_zero())
            throw std::invalid_argument("double cylinder requires a linear presentation");
        bool first = kind == "s0";
        Element out = Element::generator(w, dc_gen(w, first ? "b:" : "m:", *x, 0)) -
                      Element::generator(w, dc_gen(w, first ? "m:" : "t:", *x, 0));
        out -= sigma_module_map(w, parts.d1,
                                [&](int y) { return dc_gen(w, first ? "s0:" : "s1:", y, 1); });
        return out;
    };
    sch.last_stage_for_arity = [src](int a) {
        int last = -1;
        for (int g : src.gens_for_arity(a))
            last = std::max(last, src.world().stage(g));
        return last;
    };
    pres_ = Presentation("double:" + src.name(), world_, std::move(sch));
}

Element DoubleCylinder::j0(const Element& e) const
{
    const World& w = *world_;
    return apply_operad_map(w, e, [&](int g) -> Element {
        const GenRecord& r = w.rec(g);
        if (r.is_base)
            return Element::generator(w, g);
        switch (r.marker) {
        case Marker::I0: return Element::generator(w, bot(r.src));
        case Marker::I1: return Element::generator(w, mid(r.src));
        case Marker::Sigma: return Element::generator(w, s0(r.src));
        default: throw std::invalid_argument("j0 expects a cylinder element");
        }
    });
}

Element DoubleCylinder::j1(const Element& e) const
{
    const World& w = *world_;
    return apply_operad_map(w, e, [&](int g) -> Element {
        const GenRecord& r = w.rec(g);
        if (r.is_base)
            return Element::generator(w, g);
        switch (r.marker) {
        case Marker::I0: return Element::generator(w, mid(r.src));
        case Marker::I1: return Element::generator(w, top(r.src));
        case Marker::Sigma: return Element::generator(w, s1(r.src));
        default: throw std::invalid_argument("j1 expects a cylinder element");
        }
    });
}

Element DoubleCylinder::doubling(const Element& e) const
{
    const World& w = *world_;
    return apply_operad_map(w, e, [&](int g) -> Element {
        const GenRecord& r = w.rec(g);
        if (r.is_base)
            return Element::generator(w, g);
        switch (r.marker) {
        case Marker::I0: return Element::generator(w, bot(r.src));
        case Marker::I1: return Element::generator(w, top(r.src));
        case Marker::Sigma:
            return Element::generator(w, s0(r.src)) + Element::generator(w, s1(r.src));
        default: throw std::invalid_argument("nu expects a cylinder element");
        }
    });
}

Element DoubleCylinder::project(const Element& e) const
{
    const World& w = *world_;
    return apply_operad_map(w, e, [&](int g) -> Element {
        const GenRecord& r = w.rec(g);
        if (r.is_base)
            return Element::generator(w, g);
        size_t colon = r.name.find(':');
        std::string kind = r.name.substr(0, colon);
        auto x = source_.find_gen(r.name.substr(colon + 1));
        if (!x)
            throw std::invalid_argument("project expects double-cylinder elements");
        if (kind == "b" || kind == "m" || kind == "t")
            return Element::generator(w, *x);
        if (kind == "s0" || kind == "s1")
            return Element::zero(r.arity, r.degree);
        throw std::invalid_argument("project expects double-cylinder elements");
    });
}

Element reversing(const CylinderEngine& cyl, const Element& e)
{
    const World& w = cyl.world();
    return apply_operad_map(w, e, [&](int g) -> Element {
        const GenRecord& r = w.rec(g);
        if (r.is_base)
            return Element::generator(w, g);
        switch (r.marker) {
        case Marker::I0: return Element::generator(w, w.marked(Marker::I1, r.src));
        case Marker::I1: return Element::generator(w, w.marked(Marker::I0, r.src));
        case Marker::Sigma: return -Element::generator(w, g);
        default: throw std::invalid_argument("reversing expects a cylinder element");
        }
    });
}

} // namespace opcyl
