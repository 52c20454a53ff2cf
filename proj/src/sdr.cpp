#include "opcyl/sdr.hpp"

#include <cstdlib>

namespace opcyl {

CylinderEngine::CylinderEngine(Presentation source)
    : source_(std::move(source)), world_(source_.world_ptr()), memo_(std::make_shared<Memo>())
{
    memo_budget_ = 1u << 22;
    if (const char* env = std::getenv("OPCYL_CACHE")) {
        long v = std::atol(env);
        if (v > 0)
            memo_budget_ = size_t(v);
    }
    // iterated cylinders: the source's own cells may already carry markers
    for (int s = 0; s < 4 && (source_.stage_count() < 0 || s < source_.stage_count()); ++s) {
        const std::vector<int>& gens = source_.stage_gens(s);
        if (!gens.empty()) {
            src_depth_ = marker_depth(gens.front());
            break;
        }
    }
}

int CylinderEngine::marker_depth(int gen) const
{
    int d = 0;
    while (world_->rec(gen).marker != Marker::Plain) {
        gen = world_->rec(gen).src;
        ++d;
    }
    return d;
}

Element CylinderEngine::mark_all(const Element& e, Marker mk) const
{
    Element out = e.has_meta() ? Element::zero(e.arity(), e.degree()) : Element::zero();
    const World& w = *world_;
    for (const auto& [m, c] : e.terms()) {
        Monomial m2 = m;
        for (int32_t& g : m2.labels)
            if (!w.is_base(g)) {
                if (marker_depth(g) != src_depth_)
                    throw std::invalid_argument("i_j applied outside the source alphabet: " + w.rec(g).name);
                g = world_->marked(mk, g);
            }
        out.add_term(std::move(m2), c);
    }
    return out;
}

Element CylinderEngine::p(const Element& e) const
{
    Element out = e.has_meta() ? Element::zero(e.arity(), e.degree()) : Element::zero();
    const World& w = *world_;
    for (const auto& [m, c] : e.terms()) {
        Monomial m2 = m;
        bool dead = false;
        for (int32_t& g : m2.labels) {
            if (w.is_base(g))
                continue;
            if (marker_depth(g) != src_depth_ + 1)
                throw std::invalid_argument("p applied outside the cylinder alphabet: " + w.rec(g).name);
            if (w.marker(g) == Marker::Sigma) {
                dead = true;
                break;
            }
            g = w.rec(g).src;
        }
        if (!dead)
            out.add_term(std::move(m2), c);
    }
    return out;
}

Element CylinderEngine::h_label(int gen) const
{
    const GenRecord& r = world_->rec(gen);
    if (r.marker == Marker::I1)
        return Element::generator(*world_, world_->marked(Marker::Sigma, r.src));
    return Element::zero(r.arity, r.degree + 1);
}

Element CylinderEngine::i0p_label(int gen) const
{
    const GenRecord& r = world_->rec(gen);
    if (r.marker == Marker::Sigma)
        return Element::zero(r.arity, r.degree);
    return Element::generator(*world_, world_->marked(Marker::I0, r.src));
}

int CylinderEngine::min_stage(const Monomial& m) const
{
    const World& w = *world_;
    int top = -1;
    for (int32_t g : m.labels) {
        const GenRecord& r = w.rec(g);
        if (r.is_base)
            continue;
        if (marker_depth(g) != src_depth_ + 1)
            throw std::invalid_argument("not a label of this cylinder: " + r.name);
        top = std::max(top, r.stage);
    }
    return top + 1;
}

Element CylinderEngine::homotopy(const Element& e) const
{
    Element out = e.has_meta() ? Element::zero(e.arity(), e.degree() + 1) : Element::zero();
    for (const auto& [m, c] : e.terms())
        out += homotopy_at(min_stage(m), m).scaled(c);
    return out;
}

Element CylinderEngine::homotopy_at(int stage, const Element& e) const
{
    Element out = e.has_meta() ? Element::zero(e.arity(), e.degree() + 1) : Element::zero();
    for (const auto& [m, c] : e.terms())
        out += homotopy_at(stage, m).scaled(c);
    return out;
}

Element CylinderEngine::homotopy_at(int stage, const Monomial& m) const
{
    const World& w = *world_;
    int kmin = min_stage(m);
    if (stage <= 0 || kmin == 0)
        return Element::zero(m.arity(), m.degree(w) + 1); // base material: h = 0
    if (stage > kmin)
        stage = kmin; // stage coherence: deeper stages restrict to h_{O_kmin}
    {
        std::lock_guard<std::mutex> lk(memo_->mu);
        auto it = memo_->map.find(m);
        if (it != memo_->map.end())
            return it->second;
    }
    Element r = compute_h(stage, m);
    std::lock_guard<std::mutex> lk(memo_->mu);
    if (memo_->map.size() < memo_budget_)
        memo_->map.emplace(m, r);
    return r;
}

// h' = h0 + h' dI h0, recursion certified by the drop in the number of
// top-stage labels
Element CylinderEngine::compute_h(int stage, const Monomial& m) const
{
    const World& w = *world_;
    int top = stage - 1;
    auto filt = [&](const Monomial& x) {
        int f = 0;
        for (int32_t g : x.labels) {
            const GenRecord& r = w.rec(g);
            f += !r.is_base && r.stage == top;
        }
        return f;
    };
    int f0 = filt(m);
    Element h0 = tensor_homotopy(top, m);
    Element out = h0;
    Element pert = perturbation(top, h0);
    for (const auto& [m2, c2] : pert.terms()) {
        if (filt(m2) >= f0)
            throw std::logic_error("perturbation failed to lower the filtration");
        out += homotopy_at(stage, m2).scaled(c2);
    }
    return out;
}

Element CylinderEngine::tensor_homotopy(int top_stage, const Monomial& m) const
{
    const World& w = *world_;
    int deg_m = m.degree(w);
    Element out = Element::zero(m.arity(), deg_m + 1);
    if (m.is_identity())
        return out;

    int n = int(m.labels.size());
    auto is_top = [&](int v) {
        const GenRecord& r = w.rec(m.labels[v]);
        if (!r.is_base && r.stage > top_stage)
            throw std::invalid_argument("label above the evaluation stage: " + r.name);
        return !r.is_base && r.stage == top_stage;
    };

    // group the low vertices into connected clusters
    std::vector<int> par = m.tree.parents();
    std::vector<int> factor_of(n, -1);
    struct Factor {
        bool top = false;
        int root = 0;
        std::vector<int> verts; // for clusters, in path order
        Monomial sub;           // for clusters
        int deg = 0;
    };
    std::vector<Factor> factors;
    for (int v = 0; v < n; ++v) {
        if (is_top(v)) {
            Factor f;
            f.top = true;
            f.root = v;
            f.deg = w.degree(m.labels[v]);
            factor_of[v] = int(factors.size());
            factors.push_back(std::move(f));
        } else if (par[v] >= 0 && !is_top(par[v])) {
            int c = factor_of[par[v]];
            factor_of[v] = c;
            factors[c].verts.push_back(v);
            factors[c].deg += w.degree(m.labels[v]);
        } else {
            Factor f;
            f.root = v;
            f.verts.push_back(v);
            f.deg = w.degree(m.labels[v]);
            factor_of[v] = int(factors.size());
            factors.push_back(std::move(f));
        }
    }
    // factor order follows root vertices, which is how they were created
    // (path order visits a cluster's root before its members)

    // extract cluster sub-monomials: boundary children become leaves
    for (Factor& f : factors) {
        if (f.top)
            continue;
        std::vector<int16_t> toks;
        std::vector<int32_t> ls;
        std::function<void(int)> emit = [&](int v) {
            toks.push_back(int16_t(m.tree.vertex_arity(v)));
            ls.push_back(m.labels[v]);
            for (int c : m.tree.child_vertices(v)) {
                if (c >= 0 && factor_of[c] == factor_of[f.root])
                    emit(c);
                else
                    toks.push_back(PlanarTree::kLeaf);
            }
        };
        emit(f.root);
        f.sub = Monomial(PlanarTree(std::move(toks)), std::move(ls));
    }

    // T-structure: for every factor, the child factor hanging off each of
    // its leaf slots (-1 when the slot is a leaf of m)
    std::vector<std::vector<int>> t_children(factors.size());
    for (size_t fi = 0; fi < factors.size(); ++fi) {
        const Factor& f = factors[fi];
        std::vector<int>& out_ch = t_children[fi];
        if (f.top) {
            for (int c : m.tree.child_vertices(f.root))
                out_ch.push_back(c < 0 ? -1 : factor_of[c]);
        } else {
            std::function<void(int)> walk = [&](int v) {
                for (int c : m.tree.child_vertices(v)) {
                    if (c >= 0 && factor_of[c] == int(fi))
                        walk(c);
                    else
                        out_ch.push_back(c < 0 ? -1 : factor_of[c]);
                }
            };
            walk(f.root);
        }
    }

    // sign from regrouping the stored path order into factor blocks
    std::vector<int> src_pos, parity;
    for (const Factor& f : factors) {
        if (f.top) {
            src_pos.push_back(f.root);
            parity.push_back(w.degree(m.labels[f.root]) % 2 != 0);
        } else {
            for (int v : f.verts) {
                src_pos.push_back(v);
                parity.push_back(w.degree(m.labels[v]) % 2 != 0);
            }
        }
    }
    int group_sign = koszul_reorder_sign(src_pos, parity);

    // tensor-SDR sum: one term per factor carrying h
    int root_factor = factor_of[0];
    for (size_t j = 0; j < factors.size(); ++j) {
        Element hj;
        if (factors[j].top)
            hj = h_label(m.labels[factors[j].root]);
        else
            hj = homotopy_at(top_stage, factors[j].sub);
        if (hj.is_zero())
            continue;
        int presign = 0;
        for (size_t l = 0; l < j; ++l)
            presign += factors[l].deg;
        // replacements: i0 p before j, h at j, unchanged after
        std::vector<Element> repl(factors.size());
        bool dead = false;
        for (size_t l = 0; l < factors.size(); ++l) {
            if (l < j) {
                if (factors[l].top) {
                    repl[l] = i0p_label(m.labels[factors[l].root]);
                } else {
                    // p kills sigma labels; otherwise strip markers, re-mark i0
                    Monomial sub = factors[l].sub;
                    bool killed = false;
                    for (int32_t& g : sub.labels) {
                        if (w.is_base(g))
                            continue;
                        Marker mk = w.marker(g);
                        if (mk == Marker::Sigma) {
                            killed = true;
                            break;
                        }
                        g = world_->marked(Marker::I0, w.rec(g).src);
                    }
                    repl[l] = killed ? Element::zero(sub.arity(), factors[l].deg)
                                     : Element::monomial(w, std::move(sub));
                }
            } else if (l == j) {
                repl[l] = hj;
            } else {
                repl[l] = factors[l].top
                              ? Element::generator(w, m.labels[factors[l].root])
                              : Element::monomial(w, factors[l].sub);
            }
            if (repl[l].is_zero()) {
                dead = true;
                break;
            }
        }
        if (dead)
            continue;
        // evaluate the factor tree left to right
        std::function<Element(int)> eval = [&](int fi) -> Element {
            Element acc = repl[fi];
            int slot = 1;
            for (int ch : t_children[fi]) {
                if (ch < 0) {
                    ++slot;
                    continue;
                }
                Element sub = eval(ch);
                int adv = sub.arity();
                acc = compose_at(w, acc, slot, sub);
                slot += adv;
            }
            return acc;
        };
        Element term = eval(root_factor);
        int s = group_sign * ((presign % 2) ? -1 : 1);
        out += s < 0 ? -term : term;
    }
    return out;
}

Element CylinderEngine::perturbation(int top_stage, const Element& e) const
{
    const World& w = *world_;
    std::unordered_map<int, Element> local;
    return derive(w, e, [&](int g) -> const Element* {
        const GenRecord& r = w.rec(g);
        if (r.is_base || r.stage != top_stage)
            return nullptr;
        auto it = local.find(g);
        if (it == local.end()) {
            Element img;
            Element db = source_.boundary(r.src);
            switch (r.marker) {
            case Marker::I0: img = i0(db); break;
            case Marker::I1: img = i1(db); break;
            case Marker::Sigma: img = -homotopy_at(r.stage, i1(db)); break;
            default: throw std::logic_error("unmarked cell in cylinder element");
            }
            it = local.emplace(g, std::move(img)).first;
        }
        return &it->second;
    });
}

Element CylinderEngine::cyl_internal(int marked_gen) const
{
    const World& w = *world_;
    const GenRecord& r = w.rec(marked_gen);
    if (r.marker != Marker::Sigma) {
        Element in = source_.internal(r.src);
        return r.marker == Marker::I0 ? i0(in) : i1(in);
    }
    Element out = Element::generator(w, w.marked(Marker::I0, r.src)) - Element::generator(w, w.marked(Marker::I1, r.src));
    Element in = source_.internal(r.src);
    for (const auto& [m, c] : in.terms()) {
        if (m.labels.size() != 1)
            throw std::logic_error("internal differential is not a combination of generators");
        Monomial m2 = m;
        m2.labels[0] = w.marked(Marker::Sigma, m2.labels[0]);
        out.add_term(std::move(m2), -c);
    }
    return out;
}

Element CylinderEngine::cyl_boundary(int marked_gen) const
{
    const World& w = *world_;
    const GenRecord& r = w.rec(marked_gen);
    Element db = source_.boundary(r.src);
    switch (r.marker) {
    case Marker::I0: return i0(db);
    case Marker::I1: return i1(db);
    case Marker::Sigma: return -homotopy_at(r.stage, i1(db));
    default: throw std::invalid_argument("not a cylinder generator");
    }
}

Element CylinderEngine::cyl_d(int marked_gen) const
{
    return cyl_internal(marked_gen) + cyl_boundary(marked_gen);
}

Element CylinderEngine::differential(const Element& e) const
{
    const World& w = *world_;
    std::unordered_map<int, Element> local;
    return derive(w, e, [&](int g) -> const Element* {
        if (w.is_base(g))
            return nullptr;
        auto it = local.find(g);
        if (it == local.end())
            it = local.emplace(g, cyl_d(g)).first;
        return &it->second;
    });
}

Presentation CylinderEngine::as_presentation() const
{
    // the cylinder is pseudo-cellular of the same length; capture a copy
    // of this engine's wiring inside the schema
    auto self = std::make_shared<CylinderEngine>(*this);
    Presentation::Schema sch;
    const Presentation& src = source_;
    sch.stage_count = src.stage_count();
    sch.stage_gens = [self, src](const World& w, int stage) {
        std::vector<int> out;
        for (int g : src.stage_gens(stage)) {
            out.push_back(w.marked(Marker::I0, g));
            out.push_back(w.marked(Marker::I1, g));
            out.push_back(w.marked(Marker::Sigma, g));
        }
        return out;
    };
    sch.boundary = [self](const World&, int g) { return self->cyl_boundary(g); };
    sch.internal = [self](const World&, int g) { return self->cyl_internal(g); };
    sch.resolve = [self, src](const World& w, const std::string& name) -> std::optional<int> {
        Marker mk;
        std::string rest;
        if (name.rfind("i0:", 0) == 0) {
            mk = Marker::I0;
            rest = name.substr(3);
        } else if (name.rfind("i1:", 0) == 0) {
            mk = Marker::I1;
            rest = name.substr(3);
        } else if (name.rfind("sigma:", 0) == 0) {
            mk = Marker::Sigma;
            rest = name.substr(6);
        } else {
            return std::nullopt;
        }
        auto g = src.find_gen(rest);
        if (!g)
            return std::nullopt;
        return w.marked(mk, *g);
    };
    sch.last_stage_for_arity = [src](int max_arity) {
        std::vector<int> gens = src.gens_for_arity(max_arity);
        int last = -1;
        for (int g : gens)
            last = std::max(last, src.world().stage(g));
        return last;
    };
    return Presentation("cyl:" + src.name(), world_, std::move(sch));
}

bool CylinderEngine::is_standard(const Monomial& m) const
{
    const World& w = *world_;
    for (int32_t g : m.labels)
        if (w.is_base(g) || w.marker(g) == Marker::Plain)
            return false;
    return true;
}

bool CylinderEngine::has_forbidden_edge(const Monomial& m) const
{
    const World& w = *world_;
    std::vector<int> par = m.tree.parents();
    for (size_t v = 1; v < m.labels.size(); ++v)
        if (w.marker(m.labels[v]) == Marker::I1 && w.marker(m.labels[par[v]]) == Marker::I0)
            return true;
    return false;
}

Marker CylinderEngine::bottom_marker(const Monomial& m) const
{
    if (m.is_identity())
        return Marker::Plain;
    return world_->marker(m.labels[0]);
}

size_t CylinderEngine::memo_size() const
{
    std::lock_guard<std::mutex> lk(memo_->mu);
    return memo_->map.size();
}

} // namespace opcyl
