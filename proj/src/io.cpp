#include "opcyl/io.hpp"
#include "opcyl/ops.hpp"

#include <cctype>
#include <fstream>

namespace opcyl {

using nlohmann::json;
using nlohmann::ordered_json;

Resolver presentation_resolver(const Presentation& p)
{
    return [p](const std::string& name) { return p.find_gen(name); };
}

namespace {

const char* marker_word(Marker m)
{
    switch (m) {
    case Marker::Plain: return "plain";
    case Marker::I0: return "i0";
    case Marker::I1: return "i1";
    case Marker::Sigma: return "sigma";
    }
    return "?";
}

ordered_json tree_to_json(const World& w, const Monomial& m, int v, int& leaf)
{
    const GenRecord& r = w.rec(m.labels[v]);
    ordered_json node;
    std::string base_name = r.marker == Marker::Plain ? r.name : w.rec(r.src).name;
    node["label"] = std::string(marker_word(r.marker)) + ":" + base_name + "/" + std::to_string(r.arity);
    ordered_json ch = ordered_json::array();
    for (int c : m.tree.child_vertices(v)) {
        if (c < 0)
            ch.push_back(ordered_json{{"leaf", ++leaf}});
        else
            ch.push_back(tree_to_json(w, m, c, leaf));
    }
    node["children"] = std::move(ch);
    return node;
}

} // namespace

ordered_json element_to_json(const World& w, const Element& e)
{
    ordered_json out;
    out["arity"] = e.has_meta() ? e.arity() : 0;
    out["degree"] = e.has_meta() ? e.degree() : 0;
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : e.terms()) {
        ordered_json t;
        t["coeff"] = c.str();
        if (m.is_identity()) {
            t["tree"] = ordered_json{{"leaf", 1}};
        } else {
            int leaf = 0;
            t["tree"] = tree_to_json(w, m, 0, leaf);
        }
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

namespace {

void tree_from_json(const World& w, const Resolver& resolve, const json& node,
                    std::vector<int16_t>& toks, std::vector<int32_t>& labels, int& leaf)
{
    if (node.contains("leaf")) {
        int k = node.at("leaf").get<int>();
        if (k != ++leaf)
            throw std::invalid_argument("leaf numbering out of order");
        toks.push_back(PlanarTree::kLeaf);
        return;
    }
    std::string label = node.at("label").get<std::string>();
    size_t slash = label.rfind('/');
    size_t colon = label.find(':');
    if (slash == std::string::npos || colon == std::string::npos || colon > slash)
        throw std::invalid_argument("bad label: " + label);
    std::string marker = label.substr(0, colon);
    std::string name = label.substr(colon + 1, slash - colon - 1);
    int arity = std::stoi(label.substr(slash + 1));
    std::string full = marker == "plain" ? name : marker + ":" + name;
    auto g = resolve(full);
    if (!g)
        throw std::invalid_argument("unknown generator: " + full);
    if (w.arity(*g) != arity)
        throw std::invalid_argument("arity mismatch for " + full);
    const json& ch = node.at("children");
    if (int(ch.size()) != arity)
        throw std::invalid_argument("child count != arity for " + full);
    toks.push_back(int16_t(arity));
    labels.push_back(*g);
    for (const json& c : ch)
        tree_from_json(w, resolve, c, toks, labels, leaf);
}

} // namespace

Element element_from_json(const World& w, const Resolver& resolve, const json& j)
{
    Element out = Element::zero(j.at("arity").get<int>(), j.at("degree").get<int>());
    for (const json& t : j.at("terms")) {
        BigInt c = BigInt::parse(t.at("coeff").get<std::string>());
        const json& tree = t.at("tree");
        if (tree.contains("leaf")) {
            out += Element::identity(c);
            continue;
        }
        std::vector<int16_t> toks;
        std::vector<int32_t> labels;
        int leaf = 0;
        tree_from_json(w, resolve, tree, toks, labels, leaf);
        Monomial m(PlanarTree(std::move(toks)), std::move(labels));
        out += Element::monomial(w, std::move(m), std::move(c));
    }
    return out;
}

namespace {

std::string gen_latex(const World& w, int gen)
{
    const GenRecord& r = w.rec(gen);
    std::string prefix;
    std::string name = r.name;
    if (r.marker != Marker::Plain) {
        name = w.rec(r.src).name;
        switch (r.marker) {
        case Marker::I0: prefix = "i_0"; break;
        case Marker::I1: prefix = "i_1"; break;
        case Marker::Sigma: prefix = "\\sigma"; break;
        default: break;
        }
    }
    std::string body;
    if (name == "u") {
        body = "u";
    } else if (name.rfind("mu_", 0) == 0) {
        body = "\\mu_{" + name.substr(3) + "}";
    } else if (name.rfind("m_", 0) == 0) {
        body = "m_{" + name.substr(2) + "}";
    } else if (name.rfind("D_", 0) == 0) {
        body = "D_{" + name.substr(2) + "}";
    } else if (name.rfind("nu_", 0) == 0) {
        size_t caret = name.find("^{");
        body = "\\nu_{" + name.substr(3, caret - 3) + "}^{\\{" +
               name.substr(caret + 2, name.size() - caret - 3) + "\\}}";
    } else {
        body = "\\mathrm{" + name + "}";
    }
    return prefix + body;
}

std::string mono_latex_expr(const World& w, const Monomial& m, int v)
{
    std::string s = gen_latex(w, m.labels[v]);
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
        s += ch[j] < 0 ? "-" : mono_latex_expr(w, m, ch[j]);
    }
    return s + ")";
}

void mono_latex_tree_node(const World& w, const Monomial& m, int v, std::string& out, int depth)
{
    std::string pad(size_t(depth) * 2, ' ');
    out += pad + "child{[fill] circle (2pt)\n";
    for (int c : m.tree.child_vertices(v)) {
        if (c < 0)
            out += pad + "  child{}\n";
        else
            mono_latex_tree_node(w, m, c, out, depth + 1);
    }
    out += pad + "  node [below right] {$\\scriptstyle " + gen_latex(w, m.labels[v]) + "$}}\n";
}

std::string mono_latex(const World& w, const Monomial& m, bool trees)
{
    if (m.is_identity())
        return "\\mathrm{id}";
    if (!trees || m.tree.vertex_count() > 6)
        return mono_latex_expr(w, m, 0);
    std::string out = "\\begin{tikzpicture}[level distance=7mm, sibling distance=9mm]\n\\node {} [grow'=up]\n";
    mono_latex_tree_node(w, m, 0, out, 0);
    out += ";\n\\end{tikzpicture}";
    return out;
}

} // namespace

std::string element_to_latex(const World& w, const Element& e, bool trees)
{
    if (e.is_zero())
        return "0";
    std::string s;
    for (const auto& [m, c] : e.terms()) {
        std::string cs = c.str();
        bool neg = c.sign() < 0;
        if (neg)
            cs = cs.substr(1);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (cs != "1")
            s += cs + "\\cdot ";
        s += mono_latex(w, m, trees);
    }
    return s;
}

// ---------------------------------------------------------------------
// expression grammar

namespace {

struct Lexer {
    std::string src;
    size_t pos = 0;

    void skip()
    {
        while (pos < src.size() && std::isspace((unsigned char)src[pos]))
            ++pos;
    }
    bool eof()
    {
        skip();
        return pos >= src.size();
    }
    char peek()
    {
        skip();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool eat(char c)
    {
        skip();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // a generator token: idents with ':' and '_', optionally a ^{...} tail
    std::string name()
    {
        skip();
        size_t start = pos;
        while (pos < src.size() && (std::isalnum((unsigned char)src[pos]) || src[pos] == '_' || src[pos] == ':'))
            ++pos;
        if (pos < src.size() && src[pos] == '^') {
            ++pos;
            if (pos >= src.size() || src[pos] != '{')
                throw std::invalid_argument("expected { after ^ in generator name");
            size_t depth = 0;
            do {
                if (src[pos] == '{')
                    ++depth;
                if (src[pos] == '}')
                    --depth;
                ++pos;
            } while (pos < src.size() && depth > 0);
        }
        return src.substr(start, pos - start);
    }
    long integer()
    {
        skip();
        size_t start = pos;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+'))
            ++pos;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
            ++pos;
        if (start == pos)
            throw std::invalid_argument("expected integer at position " + std::to_string(start));
        return std::stol(src.substr(start, pos - start));
    }
};

struct Parser {
    const World& w;
    const Resolver& resolve;
    Lexer lex;

    Element expr()
    {
        Element acc = term(false);
        for (;;) {
            if (lex.eat('+'))
                acc += term(false);
            else if (lex.eat('-'))
                acc -= term(false);
            else
                break;
        }
        return acc;
    }

    Element term(bool)
    {
        BigInt coef(1);
        lex.skip();
        if (std::isdigit((unsigned char)lex.peek())) {
            coef = BigInt(lex.integer());
            lex.eat('*');
        }
        Element e = chain();
        return coef.is_one() ? e : e.scaled(coef);
    }

    Element chain()
    {
        Element acc = factor();
        for (;;) {
            lex.skip();
            size_t save = lex.pos;
            if (lex.peek() == 'o' && lex.pos + 1 < lex.src.size() && std::isdigit((unsigned char)lex.src[lex.pos + 1])) {
                ++lex.pos;
                int slot = int(lex.integer());
                Element rhs = factor();
                acc = compose_at(w, acc, slot, rhs);
                continue;
            }
            lex.pos = save;
            if (lex.peek() == '{') {
                lex.eat('{');
                std::vector<Element> args;
                if (!lex.eat('}')) {
                    args.push_back(expr());
                    while (lex.eat(','))
                        args.push_back(expr());
                    if (!lex.eat('}'))
                        throw std::invalid_argument("expected } in brace arguments");
                }
                acc = brace(w, acc, args);
                continue;
            }
            break;
        }
        return acc;
    }

    Element factor()
    {
        if (lex.eat('(')) {
            Element e = expr();
            if (!lex.eat(')'))
                throw std::invalid_argument("expected )");
            return e;
        }
        lex.skip();
        if (std::isdigit((unsigned char)lex.peek())) {
            BigInt coef(lex.integer());
            lex.eat('*');
            return factor().scaled(coef);
        }
        std::string n = lex.name();
        if (n.empty())
            throw std::invalid_argument("expected generator at position " + std::to_string(lex.pos));
        if (n == "id")
            return Element::identity();
        auto g = resolve(n);
        if (!g)
            throw std::invalid_argument("unknown generator: " + n);
        return Element::generator(w, *g);
    }
};

} // namespace

Element parse_element(const World& w, const Resolver& resolve, const std::string& src)
{
    Parser p{w, resolve, Lexer{src, 0}};
    Element e = p.expr();
    if (!p.lex.eof())
        throw std::invalid_argument("trailing input at position " + std::to_string(p.lex.pos));
    return e;
}

namespace {

// resolves declared generator names plus base symbols (interning those on
// demand, since m_k only exist once composition needs them)
Resolver world_resolver(const World& w)
{
    return [&w](const std::string& n) -> std::optional<int> {
        if (n == "u" && w.base.kind() == BaseKind::UnitalAssoc)
            return w.base.unit_gen(w);
        if (n.rfind("m_", 0) == 0 && w.base.kind() != BaseKind::Initial) {
            try {
                int k = std::stoi(n.substr(2));
                if (k >= 2)
                    return w.base.mul_gen(w, k);
            } catch (...) {
            }
        }
        return w.gens.find(n);
    };
}

} // namespace

Presentation load_presentation(const json& j)
{
    auto world = std::make_shared<World>(base_kind_from_name(j.at("base").get<std::string>()));
    std::string name = j.value("name", std::string("custom"));

    struct GenSpec {
        int id;
        int stage;
        std::string boundary;
    };
    auto specs = std::make_shared<std::vector<GenSpec>>();
    int max_stage = -1;
    for (const json& g : j.at("generators")) {
        GenSpec s;
        s.stage = g.at("stage").get<int>();
        s.boundary = g.value("boundary", std::string());
        s.id = world->intern_cell(g.at("name").get<std::string>(), g.at("arity").get<int>(),
                                  g.at("degree").get<int>(), s.stage);
        max_stage = std::max(max_stage, s.stage);
        specs->push_back(std::move(s));
    }

    Presentation::Schema sch;
    sch.stage_count = max_stage + 1;
    sch.stage_gens = [specs](const World&, int stage) {
        std::vector<int> out;
        for (const GenSpec& s : *specs)
            if (s.stage == stage)
                out.push_back(s.id);
        return out;
    };
    sch.boundary = [specs](const World& w, int g) -> Element {
        for (const GenSpec& s : *specs) {
            if (s.id != g)
                continue;
            const GenRecord& r = w.rec(g);
            if (s.boundary.empty())
                return Element::zero(r.arity, r.degree - 1);
            Element b = parse_element(w, world_resolver(w), s.boundary);
            if (!b.is_zero() && (b.arity() != r.arity || b.degree() != r.degree - 1))
                throw std::invalid_argument("boundary of " + r.name + " has wrong arity or degree");
            for (const auto& [m, c] : b.terms())
                for (int32_t lbl : m.labels)
                    if (!w.is_base(lbl) && w.stage(lbl) >= r.stage)
                        throw std::invalid_argument("boundary of " + r.name +
                                                    " references stage >= its own: " + w.rec(lbl).name);
            return b;
        }
        throw std::invalid_argument("unknown generator id in presentation file");
    };
    sch.resolve = [](const World& w, const std::string& n) { return world_resolver(w)(n); };
    sch.last_stage_for_arity = [max_stage](int) { return max_stage; };
    return Presentation(std::move(name), std::move(world), std::move(sch));
}

Presentation load_presentation_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("cannot read presentation file " + path);
    json j;
    f >> j;
    return load_presentation(j);
}

} // namespace opcyl
