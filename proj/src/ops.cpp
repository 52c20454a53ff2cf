#include "opcyl/ops.hpp"

#include <stdexcept>

namespace opcyl {

int koszul_reorder_sign(const std::vector<int>& src_pos, const std::vector<int>& deg_parity)
{
    int inv = 0;
    for (size_t i = 0; i < src_pos.size(); ++i) {
        if (!deg_parity[i])
            continue;
        for (size_t j = i + 1; j < src_pos.size(); ++j)
            if (deg_parity[j] && src_pos[i] > src_pos[j])
                ++inv;
    }
    return (inv % 2) ? -1 : 1;
}

int canonicalize(const World& w, PlanarTree& tree, std::vector<int32_t>& labels)
{
    int sign = 1;
    for (;;) {
        int n = int(labels.size());
        if (n == 0)
            return sign;
        std::vector<int> par = tree.parents();
        int v = -1;
        for (int u = n - 1; u >= 1; --u) {
            if (w.is_base(labels[u]) && w.is_base(labels[par[u]])) {
                v = u;
                break;
            }
        }
        if (v < 0)
            return sign;
        int p = par[v];
        // move the label of v up to its parent, past everything between
        if (w.degree(labels[v]) % 2 != 0) {
            int between = 0;
            for (int u = p + 1; u < v; ++u)
                between += w.degree(labels[u]) % 2 != 0;
            if (between % 2)
                sign = -sign;
        }
        int slot = tree.slot_in_parent(v);
        BaseCompose bc = w.base.compose(w, labels[p], slot, labels[v]);
        sign *= bc.coeff;
        if (sign == 0)
            return 0;

        std::vector<int16_t> toks = tree.tokens();
        int ptok = tree.vertex_token(p);
        int vtok = tree.vertex_token(v);
        toks[ptok] = int16_t(toks[ptok] + toks[vtok] - 1);
        toks.erase(toks.begin() + vtok);
        labels.erase(labels.begin() + v);
        if (bc.gen < 0) {
            // merged vertex is the operad identity: splice it out
            if (toks[ptok] != 1)
                throw std::logic_error("base identity with arity != 1");
            toks.erase(toks.begin() + ptok);
            labels.erase(labels.begin() + p);
        } else {
            labels[p] = bc.gen;
        }
        tree = PlanarTree(std::move(toks));
    }
}

static Element zero_like_compose(const Element& x, const Element& y)
{
    if (x.has_meta() && y.has_meta())
        return Element::zero(x.arity() + y.arity() - 1, x.degree() + y.degree());
    return Element::zero();
}

Element compose_at(const World& w, const Element& x, int i, const Element& y)
{
    if (x.has_meta() && (i < 1 || i > x.arity()))
        throw std::out_of_range("compose_at: slot " + std::to_string(i) + " out of range for arity " + std::to_string(x.arity()));
    Element out = zero_like_compose(x, y);
    if (x.is_zero() || y.is_zero())
        return out;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            BigInt c = cx * cy;
            if (my.is_identity()) {
                out.add_term(mx, std::move(c));
                continue;
            }
            if (mx.is_identity()) {
                out.add_term(my, std::move(c));
                continue;
            }
            int k = mx.tree.vertices_before_leaf(i);
            // grafted block lands after the first k x-labels; it moves
            // past the x-labels that follow
            int odd_after = 0;
            for (size_t u = k; u < mx.labels.size(); ++u)
                odd_after += w.degree(mx.labels[u]) % 2 != 0;
            int odd_y = 0;
            for (int32_t g : my.labels)
                odd_y += w.degree(g) % 2 != 0;
            int sign = (odd_after * odd_y) % 2 ? -1 : 1;

            PlanarTree t = mx.tree.graft(i, my.tree);
            std::vector<int32_t> ls;
            ls.reserve(mx.labels.size() + my.labels.size());
            ls.insert(ls.end(), mx.labels.begin(), mx.labels.begin() + k);
            ls.insert(ls.end(), my.labels.begin(), my.labels.end());
            ls.insert(ls.end(), mx.labels.begin() + k, mx.labels.end());
            sign *= canonicalize(w, t, ls);
            if (sign != 1)
                c = c * BigInt(sign);
            out.add_term(Monomial(std::move(t), std::move(ls)), std::move(c));
        }
    }
    return out;
}

// Left-to-right grafting with shifted slots realizes the structure map:
// the result is the labeled tree read in path order.
Element compose_full(const World& w, const Element& x0, const std::vector<Element>& args)
{
    if (x0.has_meta() && int(args.size()) != x0.arity())
        throw std::invalid_argument("compose_full: argument count != arity");
    Element acc = x0;
    int slot = 1;
    for (const Element& a : args) {
        int adv = a.has_meta() ? a.arity() : 1;
        acc = compose_at(w, acc, slot, a);
        slot += adv;
    }
    return acc;
}

Element brace(const World& w, const Element& x0, const std::vector<Element>& args)
{
    int n = int(args.size());
    if (n == 0)
        return x0;
    int out_ar = 0, out_deg = 0;
    bool meta = x0.has_meta();
    if (meta) {
        out_ar = x0.arity() - n;
        out_deg = x0.degree();
        for (const Element& a : args) {
            meta = meta && a.has_meta();
            if (a.has_meta()) {
                out_ar += a.arity();
                out_deg += a.degree();
            }
        }
    }
    Element out = meta ? Element::zero(out_ar, out_deg) : Element::zero();
    if (x0.is_zero())
        return out;
    int m = x0.arity();
    if (n > m)
        return out;
    // choose slot positions 1 <= p_1 < ... < p_n <= m; each summand is the
    // full composition with identities in the unchosen slots
    std::vector<int> pos(n);
    std::function<void(int, int)> rec = [&](int k, int from) {
        if (k == n) {
            Element acc = x0;
            int shift = 0;
            for (int j = 0; j < n; ++j) {
                int adv = args[j].has_meta() ? args[j].arity() : 1;
                acc = compose_at(w, acc, pos[j] + shift, args[j]);
                shift += adv - 1;
            }
            out += acc;
            return;
        }
        for (int p = from; p <= m - (n - 1 - k); ++p) {
            pos[k] = p;
            rec(k + 1, p + 1);
        }
    };
    rec(0, 1);
    return out;
}

Element substitute_vertex(const World& w, const Monomial& m, int v, const Element& repl)
{
    int ar_v = m.tree.vertex_arity(v);
    if (repl.has_meta() && repl.arity() != ar_v)
        throw std::invalid_argument("substitute_vertex: arity mismatch");
    Element out = Element::zero();
    if (repl.has_meta()) {
        int deg = 0;
        for (int32_t g : m.labels)
            deg += w.degree(g);
        out = Element::zero(m.arity(), deg - w.degree(m.labels[v]) + repl.degree());
    }
    if (repl.is_zero())
        return out;

    const std::vector<int16_t>& toks = m.tree.tokens();
    int vtok = m.tree.vertex_token(v);
    int vend = m.tree.subtree_end(vtok);
    // spans of the child subtrees of v
    std::vector<std::pair<int, int>> child_span(ar_v);
    {
        int pos = vtok + 1;
        for (int c = 0; c < ar_v; ++c) {
            int end = m.tree.subtree_end(pos);
            child_span[c] = {pos, end};
            pos = end;
        }
    }
    int n = int(m.labels.size());

    for (const auto& [mk, ck] : repl.terms()) {
        int r = int(mk.labels.size());
        std::vector<int16_t> out_toks;
        out_toks.reserve(toks.size() + mk.tree.tokens().size());
        // tags: source position of each emitted vertex label, and parity
        std::vector<int> src_pos, parity;
        std::vector<int32_t> out_labels;
        src_pos.reserve(n - 1 + r);

        auto emit_m_vertex = [&](int idx) {
            out_labels.push_back(m.labels[idx]);
            src_pos.push_back(idx < v ? idx : idx - 1 + r);
            parity.push_back(w.degree(m.labels[idx]) % 2 != 0);
        };

        // prefix tokens [0, vtok)
        int mv = 0;
        for (int t = 0; t < vtok; ++t) {
            out_toks.push_back(toks[t]);
            if (toks[t] != PlanarTree::kLeaf)
                emit_m_vertex(mv++);
        }
        // mv == v here; emit the replacement with children grafted
        int leaf_seen = 0, rk = 0;
        for (int16_t t : mk.tree.tokens()) {
            if (t == PlanarTree::kLeaf) {
                auto [cs, ce] = child_span[leaf_seen++];
                int idx = v + 1;
                // vertex index at token cs: count vertices in [vtok, cs)
                for (int q = vtok + 1; q < cs; ++q)
                    if (toks[q] != PlanarTree::kLeaf)
                        ++idx;
                for (int q = cs; q < ce; ++q) {
                    out_toks.push_back(toks[q]);
                    if (toks[q] != PlanarTree::kLeaf)
                        emit_m_vertex(idx++);
                }
            } else {
                out_toks.push_back(t);
                out_labels.push_back(mk.labels[rk]);
                src_pos.push_back(v + rk);
                parity.push_back(w.degree(mk.labels[rk]) % 2 != 0);
                ++rk;
            }
        }
        // suffix tokens [vend, ...)
        mv = v + 1;
        for (int q = vtok + 1; q < vend; ++q)
            if (toks[q] != PlanarTree::kLeaf)
                ++mv;
        for (size_t t = vend; t < toks.size(); ++t) {
            out_toks.push_back(toks[t]);
            if (toks[t] != PlanarTree::kLeaf)
                emit_m_vertex(mv++);
        }

        int sign = koszul_reorder_sign(src_pos, parity);
        PlanarTree t2(std::move(out_toks));
        sign *= canonicalize(w, t2, out_labels);
        BigInt c = sign == 1 ? ck : ck * BigInt(sign);
        out += Element::monomial(w, Monomial(std::move(t2), std::move(out_labels)), std::move(c));
    }
    return out;
}

Element apply_operad_map(const World& w, const Element& e,
                         const std::function<Element(int gen)>& fn)
{
    Element out = Element::zero();
    for (const auto& [m, c] : e.terms()) {
        if (m.is_identity()) {
            out += Element::identity(c);
            continue;
        }
        std::function<Element(int)> eval = [&](int v) -> Element {
            Element acc = fn(m.labels[v]);
            if (acc.has_meta() && acc.arity() != m.tree.vertex_arity(v))
                throw std::logic_error("operad map image changes arity");
            std::vector<int> ch = m.tree.child_vertices(v);
            int slot = 1;
            for (int c2 : ch) {
                if (c2 < 0) {
                    ++slot;
                    continue;
                }
                Element sub = eval(c2);
                int adv = sub.has_meta() ? sub.arity() : 1;
                acc = compose_at(w, acc, slot, sub);
                slot += adv;
            }
            return acc;
        };
        out += eval(0).scaled(c);
    }
    return out;
}

Element derive(const World& w, const Element& e,
               const std::function<const Element*(int gen)>& rule)
{
    Element out = e.has_meta() ? Element::zero(e.arity(), e.degree() - 1) : Element::zero();
    for (const auto& [m, c] : e.terms()) {
        int prefix_parity = 0;
        for (size_t v = 0; v < m.labels.size(); ++v) {
            int g = m.labels[v];
            if (const Element* r = rule(g)) {
                Element term = substitute_vertex(w, m, int(v), *r);
                out += (prefix_parity ? term.scaled(BigInt(-1) * c) : term.scaled(c));
            }
            prefix_parity ^= (w.degree(g) % 2 != 0);
        }
    }
    return out;
}

} // namespace opcyl
