#include "opcyl/tree.hpp"

#include <stdexcept>

namespace opcyl {

PlanarTree PlanarTree::corolla(int arity)
{
    std::vector<int16_t> t;
    t.reserve(arity + 1);
    t.push_back(int16_t(arity));
    for (int i = 0; i < arity; ++i)
        t.push_back(kLeaf);
    return PlanarTree(std::move(t));
}

int PlanarTree::leaf_count() const
{
    int n = 0;
    for (int16_t t : toks_)
        if (t == kLeaf)
            ++n;
    return n;
}

int PlanarTree::vertex_count() const
{
    return int(toks_.size()) - leaf_count();
}

int PlanarTree::vertices_before_leaf(int leaf) const
{
    int seen = 0, v = 0;
    for (int16_t t : toks_) {
        if (t == kLeaf) {
            if (++seen == leaf)
                return v;
        } else {
            ++v;
        }
    }
    throw std::out_of_range("leaf index out of range");
}

PlanarTree PlanarTree::graft(int leaf, const PlanarTree& s) const
{
    if (leaf < 1 || leaf > leaf_count())
        throw std::out_of_range("graft: leaf index out of range");
    std::vector<int16_t> r;
    r.reserve(toks_.size() + s.toks_.size() - 1);
    int seen = 0;
    for (int16_t t : toks_) {
        if (t == kLeaf && ++seen == leaf)
            r.insert(r.end(), s.toks_.begin(), s.toks_.end());
        else
            r.push_back(t);
    }
    return PlanarTree(std::move(r));
}

int PlanarTree::vertex_token(int v) const
{
    int seen = 0;
    for (size_t i = 0; i < toks_.size(); ++i)
        if (toks_[i] != kLeaf && seen++ == v)
            return int(i);
    throw std::out_of_range("vertex index out of range");
}

int PlanarTree::subtree_end(int pos) const
{
    int need = 1;
    size_t i = pos;
    while (need > 0) {
        need += (toks_[i] == kLeaf ? 0 : toks_[i]) - 1;
        ++i;
    }
    return int(i);
}

std::vector<int> PlanarTree::parents() const
{
    std::vector<int> par(vertex_count(), -1);
    // stack of (vertex id, remaining children)
    std::vector<std::pair<int, int>> stk;
    int v = 0;
    for (int16_t t : toks_) {
        int parent = stk.empty() ? -1 : stk.back().first;
        if (!stk.empty() && --stk.back().second == 0)
            stk.pop_back();
        if (t == kLeaf)
            continue;
        par[v] = parent;
        if (t > 0)
            stk.emplace_back(v, t);
        ++v;
    }
    return par;
}

std::vector<int> PlanarTree::vertex_levels() const
{
    std::vector<int> par = parents();
    std::vector<int> lvl(par.size());
    for (size_t v = 0; v < par.size(); ++v)
        lvl[v] = par[v] < 0 ? 1 : lvl[par[v]] + 1;
    return lvl;
}

std::vector<int> PlanarTree::child_vertices(int v) const
{
    int ar = vertex_arity(v);
    std::vector<int> out;
    out.reserve(ar);
    int pos = vertex_token(v) + 1;
    // count vertices before pos
    int vcount = 0;
    for (int i = 0; i < pos; ++i)
        if (toks_[i] != kLeaf)
            ++vcount;
    for (int c = 0; c < ar; ++c) {
        out.push_back(toks_[pos] == kLeaf ? -1 : vcount);
        int end = subtree_end(pos);
        for (int i = pos; i < end; ++i)
            if (toks_[i] != kLeaf)
                ++vcount;
        pos = end;
    }
    return out;
}

int PlanarTree::slot_in_parent(int v) const
{
    std::vector<int> par = parents();
    if (par[v] < 0)
        throw std::invalid_argument("root vertex has no parent slot");
    std::vector<int> ch = child_vertices(par[v]);
    for (size_t j = 0; j < ch.size(); ++j)
        if (ch[j] == v)
            return int(j) + 1;
    throw std::logic_error("slot_in_parent: inconsistent tree");
}

size_t PlanarTree::hash() const
{
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (int16_t t : toks_)
        h = (h ^ size_t(uint16_t(t))) * 0x100000001b3ULL;
    return h;
}

std::string PlanarTree::str() const
{
    std::string s;
    for (int16_t t : toks_) {
        if (!s.empty())
            s += ' ';
        s += t == kLeaf ? "." : std::to_string(t);
    }
    return "[" + s + "]";
}

} // namespace opcyl
