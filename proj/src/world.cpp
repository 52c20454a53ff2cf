#include "opcyl/world.hpp"

namespace opcyl {

const char* marker_prefix(Marker m)
{
    switch (m) {
    case Marker::Plain: return "";
    case Marker::I0: return "i0:";
    case Marker::I1: return "i1:";
    case Marker::Sigma: return "sigma:";
    }
    return "";
}

int GeneratorTable::intern(const GenRecord& rec) const
{
    std::lock_guard<std::mutex> lk(mu_);
    auto it = by_name_.find(rec.name);
    if (it != by_name_.end())
        return it->second;
    int id = int(recs_.size());
    recs_.push_back(rec);
    by_name_.emplace(rec.name, id);
    return id;
}

std::optional<int> GeneratorTable::find(const std::string& name) const
{
    std::lock_guard<std::mutex> lk(mu_);
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

const GenRecord& GeneratorTable::rec(int id) const
{
    std::lock_guard<std::mutex> lk(mu_);
    return recs_.at(id);
}

int GeneratorTable::size() const
{
    std::lock_guard<std::mutex> lk(mu_);
    return int(recs_.size());
}

BaseKind base_kind_from_name(const std::string& name)
{
    if (name == "initial")
        return BaseKind::Initial;
    if (name == "assoc")
        return BaseKind::Assoc;
    if (name == "lambda-assoc")
        return BaseKind::LambdaAssoc;
    if (name == "uassoc")
        return BaseKind::UnitalAssoc;
    throw std::invalid_argument("unknown base operad: " + name);
}

std::string base_kind_name(BaseKind k)
{
    switch (k) {
    case BaseKind::Initial: return "initial";
    case BaseKind::Assoc: return "assoc";
    case BaseKind::LambdaAssoc: return "lambda-assoc";
    case BaseKind::UnitalAssoc: return "uassoc";
    case BaseKind::Custom: return "custom";
    }
    return "?";
}

int BaseOperad::mul_gen(const World& w, int arity) const
{
    if (kind_ == BaseKind::Initial || kind_ == BaseKind::Custom)
        throw std::logic_error("base '" + name() + "' has no m_n symbols");
    if (arity < 2)
        throw std::invalid_argument("m_n requires n >= 2");
    GenRecord r;
    r.name = "m_" + std::to_string(arity);
    r.arity = arity;
    r.degree = kind_ == BaseKind::LambdaAssoc ? 1 - arity : 0;
    r.is_base = true;
    return w.gens.intern(r);
}

int BaseOperad::unit_gen(const World& w) const
{
    if (kind_ != BaseKind::UnitalAssoc)
        throw std::logic_error("only the unital-associative base has u");
    GenRecord r;
    r.name = "u";
    r.arity = 0;
    r.degree = 0;
    r.is_base = true;
    return w.gens.intern(r);
}

const std::string& BaseOperad::name() const
{
    static const std::string builtin[] = {"initial", "assoc", "lambda-assoc", "uassoc"};
    return kind_ == BaseKind::Custom ? name_ : builtin[int(kind_)];
}

BaseCompose BaseOperad::compose(const World& w, int parent, int slot, int child) const
{
    if (kind_ == BaseKind::Custom)
        return table_(w, parent, slot, child);
    const GenRecord& pr = w.rec(parent);
    const GenRecord& cr = w.rec(child);
    switch (kind_) {
    case BaseKind::Initial:
        throw std::logic_error("initial base composes nothing");
    case BaseKind::Assoc: {
        int n = pr.arity + cr.arity - 1;
        return {1, n == 1 ? -1 : mul_gen(w, n)};
    }
    case BaseKind::LambdaAssoc: {
        // m_p o_j m_q picks up (-1)^{(q-1)(p-j)} in the suspended basis
        int n = pr.arity + cr.arity - 1;
        int e = (cr.arity - 1) * (pr.arity - slot);
        return {(e % 2) ? -1 : 1, n == 1 ? -1 : mul_gen(w, n)};
    }
    case BaseKind::UnitalAssoc: {
        // child is u (m_p o_j u = m_{p-1}, with m_1 = id) or another m_q
        int n = pr.arity + cr.arity - 1;
        return {1, n == 1 ? -1 : mul_gen(w, n)};
    }
    default:
        break;
    }
    return {};
}

int World::intern_cell(const std::string& name, int arity, int degree, int stage) const
{
    GenRecord r;
    r.name = name;
    r.arity = arity;
    r.degree = degree;
    r.stage = stage;
    return gens.intern(r);
}

int World::marked(Marker m, int src) const
{
    const GenRecord& s = gens.rec(src);
    if (s.is_base)
        throw std::invalid_argument("base symbols carry no cylinder markers");
    GenRecord r;
    r.name = std::string(marker_prefix(m)) + s.name;
    r.arity = s.arity;
    r.degree = s.degree + (m == Marker::Sigma ? 1 : 0);
    r.stage = s.stage;
    r.marker = m;
    r.src = src;
    return gens.intern(r);
}

} // namespace opcyl
