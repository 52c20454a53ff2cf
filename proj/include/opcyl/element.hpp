#pragma once

#include "opcyl/bigint.hpp"
#include "opcyl/tree.hpp"
#include "opcyl/world.hpp"

#include <map>
#include <vector>

namespace opcyl {

// A labeled tree in canonical form. The stored coefficient of a monomial
// inside an Element is relative to the tensor of its labels taken in path
// order; no other orientation is ever materialized.
struct Monomial {
    PlanarTree tree;
    std::vector<int32_t> labels; // one per inner vertex, in path order

    Monomial() = default;
    Monomial(PlanarTree t, std::vector<int32_t> ls) : tree(std::move(t)), labels(std::move(ls)) {}

    static Monomial identity() { return Monomial(PlanarTree::edge(), {}); }
    static Monomial vertex(const World& w, int gen)
    {
        return Monomial(PlanarTree::corolla(w.arity(gen)), {gen});
    }

    bool is_identity() const { return labels.empty(); }
    int arity() const { return tree.leaf_count(); }
    int degree(const World& w) const
    {
        int d = 0;
        for (int32_t g : labels)
            d += w.degree(g);
        return d;
    }

    bool operator==(const Monomial& o) const { return tree == o.tree && labels == o.labels; }
    bool operator<(const Monomial& o) const
    {
        if (tree != o.tree)
            return tree < o.tree;
        return labels < o.labels;
    }

    std::string str(const World& w) const;
};

// Finite Z-linear combination of monomials of one arity and degree.
// An empty element with unset metadata is the wildcard zero and adds to
// anything; zero(ar, deg) keeps metadata from context.
class Element {
public:
    Element() = default;
    static Element zero() { return Element(); }
    static Element zero(int arity, int degree);
    static Element monomial(const World& w, Monomial m, BigInt c = BigInt(1));
    static Element generator(const World& w, int gen, BigInt c = BigInt(1))
    {
        return monomial(w, Monomial::vertex(w, gen), std::move(c));
    }
    static Element identity(BigInt c = BigInt(1));

    bool is_zero() const { return terms_.empty(); }
    bool has_meta() const { return has_meta_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }
    int term_count() const { return int(terms_.size()); }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    BigInt coeff(const Monomial& m) const;

    void add_term(Monomial m, BigInt c); // folds in, drops zeros
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const BigInt& c) const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string str(const World& w) const;

private:
    bool has_meta_ = false;
    int arity_ = 0;
    int degree_ = 0;
    std::map<Monomial, BigInt> terms_;

    void take_meta(const Element& o);
    void check_meta(const Element& o) const;
};

} // namespace opcyl
