#include "opcyl/element.hpp"

#include <stdexcept>

namespace opcyl {

std::string Monomial::str(const World& w) const
{
    if (is_identity())
        return "id";
    // nested composition form, children in brackets
    struct Walk {
        const Monomial& m;
        const World& w;
        std::string go(int v) const
        {
            std::string s = w.rec(m.labels[v]).name;
            std::vector<int> ch = m.tree.child_vertices(v);
            bool any = false;
            for (int c : ch)
                any |= c >= 0;
            if (!any)
                return s;
            s += "(";
            for (size_t j = 0; j < ch.size(); ++j) {
                if (j)
                    s += ",";
                s += ch[j] < 0 ? "-" : go(ch[j]);
            }
            s += ")";
            return s;
        }
    };
    return Walk{*this, w}.go(0);
}

Element Element::zero(int arity, int degree)
{
    Element e;
    e.has_meta_ = true;
    e.arity_ = arity;
    e.degree_ = degree;
    return e;
}

Element Element::monomial(const World& w, Monomial m, BigInt c)
{
    Element e;
    e.has_meta_ = true;
    e.arity_ = m.arity();
    e.degree_ = m.degree(w);
    if (!c.is_zero())
        e.terms_.emplace(std::move(m), std::move(c));
    return e;
}

Element Element::identity(BigInt c)
{
    Element e;
    e.has_meta_ = true;
    e.arity_ = 1;
    e.degree_ = 0;
    if (!c.is_zero())
        e.terms_.emplace(Monomial::identity(), std::move(c));
    return e;
}

BigInt Element::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt() : it->second;
}

void Element::add_term(Monomial m, BigInt c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Element::take_meta(const Element& o)
{
    if (!has_meta_ && o.has_meta_) {
        has_meta_ = true;
        arity_ = o.arity_;
        degree_ = o.degree_;
    }
}

void Element::check_meta(const Element& o) const
{
    if (has_meta_ && o.has_meta_ && (arity_ != o.arity_ || degree_ != o.degree_))
        throw std::invalid_argument("element sum: arity/degree mismatch (" + std::to_string(arity_) + "," + std::to_string(degree_) + ") vs (" + std::to_string(o.arity_) + "," + std::to_string(o.degree_) + ")");
}

Element& Element::operator+=(const Element& o)
{
    check_meta(o);
    take_meta(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    check_meta(o);
    take_meta(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Element Element::operator+(const Element& o) const
{
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const
{
    Element r = *this;
    r -= o;
    return r;
}

Element Element::operator-() const
{
    Element r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Element Element::scaled(const BigInt& c) const
{
    Element r;
    r.has_meta_ = has_meta_;
    r.arity_ = arity_;
    r.degree_ = degree_;
    if (c.is_zero())
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

bool Element::operator==(const Element& o) const
{
    // zero compares equal to zero regardless of metadata
    if (terms_.empty() || o.terms_.empty())
        return terms_.empty() && o.terms_.empty();
    return terms_ == o.terms_;
}

std::string Element::str(const World& w) const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        bool neg = c.sign() < 0;
        std::string mag = (neg ? -c : c).str();
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (mag != "1")
            s += mag + "*";
        s += m.str(w);
    }
    return s;
}

} // namespace opcyl
