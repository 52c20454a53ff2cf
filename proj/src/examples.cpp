#include "opcyl/examples.hpp"
#include "opcyl/sdr.hpp"

#include <algorithm>
#include <functional>

namespace opcyl {

namespace {

std::string mu_name(int n) { return "mu_" + std::to_string(n); }
std::string d_name(int n) { return "D_" + std::to_string(n); }

std::string nu_name(int n, const std::vector<int>& S)
{
    std::string s = "nu_" + std::to_string(n) + "^{";
    for (size_t i = 0; i < S.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(S[i]);
    }
    return s + "}";
}

bool parse_int(const std::string& s, size_t pos, int& out)
{
    if (pos >= s.size())
        return false;
    int v = 0;
    size_t i = pos;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            break;
        v = v * 10 + (s[i] - '0');
    }
    if (i != s.size() || i == pos)
        return false;
    out = v;
    return true;
}

// "nu_<n>^{a,b,...}"
bool parse_nu_name(const std::string& s, int& n, std::vector<int>& S)
{
    if (s.rfind("nu_", 0) != 0)
        return false;
    size_t caret = s.find("^{");
    if (caret == std::string::npos || s.back() != '}')
        return false;
    try {
        n = std::stoi(s.substr(3, caret - 3));
    } catch (...) {
        return false;
    }
    S.clear();
    std::string body = s.substr(caret + 2, s.size() - caret - 3);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string piece = comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        if (piece.empty())
            return false;
        try {
            S.push_back(std::stoi(piece));
        } catch (...) {
            return false;
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return true;
}

int intern_mu(const World& w, int n, bool suspended)
{
    return w.intern_cell(mu_name(n), n, suspended ? -1 : n - 2, n - 2);
}

int intern_D(const World& w, int n, bool suspended)
{
    return w.intern_cell(d_name(n), n, suspended ? 0 : n - 1, n - 1);
}

Element ainf_boundary(const World& w, int n, bool suspended)
{
    Element out = Element::zero(n, suspended ? -2 : n - 3);
    for (int p = 2; p <= n - 1; ++p) {
        int q = n + 1 - p;
        Element mp = Element::generator(w, intern_mu(w, p, suspended));
        Element mq = Element::generator(w, intern_mu(w, q, suspended));
        if (suspended) {
            out += brace(w, mp, {mq});
        } else {
            for (int i = 1; i <= p; ++i) {
                int e = (p - i) + q * (i - 1);
                Element t = compose_at(w, mp, i, mq);
                out += (e % 2) ? -t : t;
            }
        }
    }
    return out;
}

Element ainf_d_boundary_D(const World& w, int n, bool suspended)
{
    Element out = Element::zero(n, suspended ? -1 : n - 2);
    for (int p = 1; p <= n; ++p) {
        int q = n + 1 - p;
        if (p >= 2 && q >= 1) {
            Element mp = Element::generator(w, intern_mu(w, p, suspended));
            Element dq = Element::generator(w, intern_D(w, q, suspended));
            if (suspended) {
                out += brace(w, mp, {dq});
            } else {
                for (int i = 1; i <= p; ++i) {
                    int e = (q - 1) * (i - 1);
                    Element t = compose_at(w, mp, i, dq);
                    out += (e % 2) ? -t : t;
                }
            }
        }
        if (p >= 1 && q >= 2) {
            Element dp = Element::generator(w, intern_D(w, p, suspended));
            Element mq = Element::generator(w, intern_mu(w, q, suspended));
            if (suspended) {
                out -= brace(w, dp, {mq});
            } else {
                for (int i = 1; i <= p; ++i) {
                    int e = (p - i) + q * (i - 1);
                    Element t = compose_at(w, dp, i, mq);
                    out -= (e % 2) ? -t : t;
                }
            }
        }
    }
    return out;
}

Presentation make_ainf(bool suspended)
{
    auto world = std::make_shared<World>(BaseKind::Initial);
    Presentation::Schema sch;
    sch.stage_gens = [suspended](const World& w, int stage) {
        return std::vector<int>{intern_mu(w, stage + 2, suspended)};
    };
    sch.boundary = [suspended](const World& w, int g) {
        const GenRecord& r = w.rec(g);
        int n;
        if (!(parse_int(r.name, 3, n) && r.name.rfind("mu_", 0) == 0))
            throw std::invalid_argument("not a generator of this family: " + r.name);
        return ainf_boundary(w, n, suspended);
    };
    sch.resolve = [suspended](const World& w, const std::string& name) -> std::optional<int> {
        int n;
        if (name.rfind("mu_", 0) == 0 && parse_int(name, 3, n) && n >= 2)
            return intern_mu(w, n, suspended);
        return std::nullopt;
    };
    sch.last_stage_for_arity = [](int a) { return a - 2; };
    return Presentation(suspended ? "lambda-ainf" : "ainf", std::move(world), std::move(sch));
}

Presentation make_ainf_d(bool suspended)
{
    auto world = std::make_shared<World>(BaseKind::Initial);
    Presentation::Schema sch;
    sch.stage_gens = [suspended](const World& w, int stage) {
        // stage s carries mu_{s+2} and D_{s+1}
        return std::vector<int>{intern_mu(w, stage + 2, suspended), intern_D(w, stage + 1, suspended)};
    };
    sch.boundary = [suspended](const World& w, int g) {
        const GenRecord& r = w.rec(g);
        int n;
        if (r.name.rfind("mu_", 0) == 0 && parse_int(r.name, 3, n))
            return ainf_boundary(w, n, suspended);
        if (r.name.rfind("D_", 0) == 0 && parse_int(r.name, 2, n))
            return ainf_d_boundary_D(w, n, suspended);
        throw std::invalid_argument("not a generator of this family: " + r.name);
    };
    sch.resolve = [suspended](const World& w, const std::string& name) -> std::optional<int> {
        int n;
        if (name.rfind("mu_", 0) == 0 && parse_int(name, 3, n) && n >= 2)
            return intern_mu(w, n, suspended);
        if (name.rfind("D_", 0) == 0 && parse_int(name, 2, n) && n >= 1)
            return intern_D(w, n, suspended);
        return std::nullopt;
    };
    sch.last_stage_for_arity = [](int a) { return a - 1; };
    return Presentation(suspended ? "lambda-ainf-d" : "ainf-d", std::move(world), std::move(sch));
}

Presentation make_assoc_der()
{
    auto world = std::make_shared<World>(BaseKind::LambdaAssoc);
    auto intern = [](const World& w, int n) {
        return w.intern_cell(d_name(n), n, 0, n - 1);
    };
    Presentation::Schema sch;
    sch.stage_gens = [intern](const World& w, int stage) {
        return std::vector<int>{intern(w, stage + 1)};
    };
    sch.boundary = [intern](const World& w, int g) -> Element {
        const GenRecord& r = w.rec(g);
        int n;
        if (!(r.name.rfind("D_", 0) == 0 && parse_int(r.name, 2, n)))
            throw std::invalid_argument("not a generator of this family: " + r.name);
        if (n == 1)
            return Element::zero(1, -1);
        Element m2 = Element::generator(w, w.base.mul_gen(w, 2));
        Element dn1 = Element::generator(w, intern(w, n - 1));
        return brace(w, m2, {dn1}) - brace(w, dn1, {m2});
    };
    sch.resolve = [intern](const World& w, const std::string& name) -> std::optional<int> {
        int n;
        if (name.rfind("D_", 0) == 0 && parse_int(name, 2, n) && n >= 1)
            return intern(w, n);
        if (name == "m_2" || name == "mu_2")
            return w.base.mul_gen(w, 2);
        return std::nullopt;
    };
    sch.last_stage_for_arity = [](int a) { return a - 1; };
    return Presentation("assoc-der", std::move(world), std::move(sch));
}

std::vector<std::vector<int>> subsets_of_size(int n, int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (int(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= n - (m - int(cur.size())) + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

int intern_nu(const World& w, int m, int n, const std::vector<int>& S)
{
    return w.intern_cell(nu_name(n, S), n - m, n - 2 + m, n - m);
}

Element unital_boundary(const World& w, int m, int n, const std::vector<int>& S)
{
    Element out = Element::zero(n - m, n - 3 + m);
    if (m == 1 && n == 1)
        return out;
    Element mu = Element::generator(w, w.base.mul_gen(w, 2));
    if (m == 1 && n == 2) {
        Element nu1 = Element::generator(w, intern_nu(w, 1, 1, {1}));
        return compose_at(w, mu, S[0], nu1) - Element::identity();
    }
    // generic case; S = {l_1 < ... < l_m}, l_0 = 0, l_{m+1} = n+1
    if (S.back() != n) {
        Element t = compose_at(w, mu, 1, Element::generator(w, intern_nu(w, m, n - 1, S)));
        out += (n % 2) ? -t : t;
    }
    if (S.front() != 1) {
        std::vector<int> Sm1 = S;
        for (int& v : Sm1)
            --v;
        out += compose_at(w, mu, 2, Element::generator(w, intern_nu(w, m, n - 1, Sm1)));
    }
    for (int v = 1; v <= m + 1; ++v) {
        int lo = v - 1 == 0 ? 0 : S[v - 2];
        int hi = v == m + 1 ? n + 1 : S[v - 1];
        std::vector<int> Sv; // S_v u (S'_v - 1)
        for (int k = 0; k < v - 1; ++k)
            Sv.push_back(S[k]);
        for (int k = v - 1; k < m; ++k)
            Sv.push_back(S[k] - 1);
        for (int i = 1; i <= n - 1 - m; ++i) {
            if (!(lo < i + v - 1 && i + v - 1 < hi - 1))
                continue;
            Element t = compose_at(w, Element::generator(w, intern_nu(w, m, n - 1, Sv)), i, mu);
            out += ((i + v - 1) % 2) ? -t : t;
        }
    }
    return out;
}

Presentation make_unital_nu(int m)
{
    if (m < 1)
        throw std::invalid_argument("unital-nu requires m >= 1");
    auto world = std::make_shared<World>(BaseKind::UnitalAssoc);
    Presentation::Schema sch;
    sch.stage_gens = [m](const World& w, int stage) {
        int n = m + stage;
        std::vector<int> out;
        for (const auto& S : subsets_of_size(n, m))
            out.push_back(intern_nu(w, m, n, S));
        return out;
    };
    sch.boundary = [m](const World& w, int g) {
        int n;
        std::vector<int> S;
        if (!parse_nu_name(w.rec(g).name, n, S))
            throw std::logic_error("bad nu generator name");
        return unital_boundary(w, m, n, S);
    };
    sch.resolve = [m](const World& w, const std::string& name) -> std::optional<int> {
        int n;
        std::vector<int> S;
        if (parse_nu_name(name, n, S) && int(S.size()) == m && n >= m)
            return intern_nu(w, m, n, S);
        if (name == "u")
            return w.base.unit_gen(w);
        if (name == "mu" || name == "m_2")
            return w.base.mul_gen(w, 2);
        return std::nullopt;
    };
    sch.last_stage_for_arity = [](int a) { return a; };
    return Presentation("unital-nu:m=" + std::to_string(m), std::move(world), std::move(sch));
}

} // namespace

Presentation build_ainf() { return make_ainf(false); }
Presentation build_lambda_ainf() { return make_ainf(true); }
Presentation build_ainf_d() { return make_ainf_d(false); }
Presentation build_lambda_ainf_d() { return make_ainf_d(true); }
Presentation build_assoc_der() { return make_assoc_der(); }
Presentation build_unital_nu(int m) { return make_unital_nu(m); }

Presentation build_presentation(const std::string& name)
{
    if (name == "ainf")
        return build_ainf();
    if (name == "lambda-ainf")
        return build_lambda_ainf();
    if (name == "ainf-d")
        return build_ainf_d();
    if (name == "lambda-ainf-d")
        return build_lambda_ainf_d();
    if (name == "assoc-der")
        return build_assoc_der();
    if (name.rfind("unital-nu:m=", 0) == 0) {
        int m = std::stoi(name.substr(12));
        return build_unital_nu(m);
    }
    throw std::invalid_argument("unknown presentation: " + name);
}

// ---------------------------------------------------------------------
// closed formulas

namespace {

// the labeled tree root(args...) with single-generator arguments placed
// at the given slots, stored coefficient +1
Monomial shallow_monomial(const World& w, int root, const std::vector<std::pair<int, int>>& slot_gens)
{
    PlanarTree t = PlanarTree::corolla(w.arity(root));
    std::vector<int32_t> labels{root};
    // graft right to left so slots stay valid
    std::vector<std::pair<int, int>> sg = slot_gens;
    std::sort(sg.begin(), sg.end());
    for (auto it = sg.rbegin(); it != sg.rend(); ++it)
        t = t.graft(it->first, PlanarTree::corolla(w.arity(it->second)));
    for (const auto& [slot, gen] : sg)
        labels.push_back(gen);
    return Monomial(std::move(t), std::move(labels));
}

void for_each_composition(int total, int parts, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& fn)
{
    if (parts == 1) {
        cur.push_back(total);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        for_each_composition(total - v, parts - 1, cur, fn);
        cur.pop_back();
    }
}

} // namespace

Element ainf_dsigma_formula(const CylinderEngine& cyl, int n)
{
    const World& w = cyl.world();
    const Presentation& src = cyl.source();
    auto mu = [&](int k) { return *src.find_gen(mu_name(k)); };
    auto mk = [&](Marker m, int k) { return w.marked(m, mu(k)); };

    Element out = Element::generator(w, mk(Marker::I0, n)) - Element::generator(w, mk(Marker::I1, n));

    for (int p = 2; p <= n - 1; ++p) {
        int q = n + 1 - p;
        for (int j = 1; j <= p; ++j) {
            int e = (p - j) + q * (j - 1);
            Monomial m = shallow_monomial(w, mk(Marker::Sigma, p), {{j, mk(Marker::I1, q)}});
            out.add_term(std::move(m), BigInt((e % 2) ? 1 : -1)); // the block enters with a global minus
        }
    }

    // sum over j_0 + t_1 + j_1 + ... + t_s + j_s = n with r = s + sum(j)
    for (int s = 1; 2 * s <= n; ++s) {
        std::vector<int> cur;
        for_each_composition(n, 2 * s + 1, cur, [&](const std::vector<int>& c) {
            // c = j_0, t_1, j_1, t_2, ..., t_s, j_s
            int r = s;
            for (int k = 0; k <= s; ++k)
                r += c[2 * k];
            if (r < 2)
                return;
            for (int k = 1; k <= s; ++k)
                if (c[2 * k - 1] < 2)
                    return;
            int e = 0;
            for (int k = 1; k <= s; ++k) {
                int before = c[0];
                for (int l = 1; l < k; ++l)
                    before += c[2 * l - 1] + c[2 * l];
                e += (c[2 * k - 1] - 1) * before;
            }
            std::vector<std::pair<int, int>> slots;
            int pos = c[0] + 1;
            for (int k = 1; k <= s; ++k) {
                slots.emplace_back(pos, mk(Marker::Sigma, c[2 * k - 1]));
                pos += 1 + c[2 * k];
            }
            Monomial m = shallow_monomial(w, mk(Marker::I0, r), slots);
            out.add_term(std::move(m), BigInt((e % 2) ? -1 : 1));
        });
    }
    return out;
}

namespace {

// all brace fillings root{args} of single generators, direct monomials
void add_brace_monomials(const World& w, Element& out, int root, const std::vector<int>& args, const BigInt& c)
{
    int r = w.arity(root);
    int s = int(args.size());
    if (s > r)
        return;
    std::vector<int> pos(s);
    std::function<void(int, int)> rec = [&](int k, int from) {
        if (k == s) {
            std::vector<std::pair<int, int>> slots;
            for (int i = 0; i < s; ++i)
                slots.emplace_back(pos[i], args[i]);
            out.add_term(shallow_monomial(w, root, slots), c);
            return;
        }
        for (int p = from; p <= r - (s - 1 - k); ++p) {
            pos[k] = p;
            rec(k + 1, p + 1);
        }
    };
    rec(0, 1);
}

void for_each_t_tuple(int s, int total, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn)
{
    if (int(cur.size()) == s) {
        if (total == 0)
            fn(cur);
        return;
    }
    for (int t = 2; t <= total; ++t) {
        cur.push_back(t);
        for_each_t_tuple(s, total - t, cur, fn);
        cur.pop_back();
    }
}

} // namespace

Element tech_h_formula(const CylinderEngine& cyl, int n)
{
    const World& w = cyl.world();
    const Presentation& src = cyl.source();
    auto mu = [&](int k) { return *src.find_gen(mu_name(k)); };
    auto mk = [&](Marker m, int k) { return w.marked(m, mu(k)); };

    Element out = Element::zero(n + 1, -1);
    for (int p = 2; p <= n; ++p) {
        int q = n + 2 - p;
        if (q < 2)
            continue;
        add_brace_monomials(w, out, mk(Marker::Sigma, p), {mk(Marker::I1, q)}, BigInt(1));
    }
    for (int r = 2; r <= n + 1; ++r) {
        for (int s = 1; s <= r; ++s) {
            int total = n + 1 + s - r;
            std::vector<int> cur;
            for_each_t_tuple(s, total, cur, [&](const std::vector<int>& ts) {
                std::vector<int> args;
                for (int t : ts)
                    args.push_back(mk(Marker::Sigma, t));
                add_brace_monomials(w, out, mk(Marker::I0, r), args, BigInt(-1));
            });
        }
    }
    return out;
}

Element conder_h_formula(const CylinderEngine& cyl, int n)
{
    const World& w = cyl.world();
    const Presentation& src = cyl.source();
    auto mu = [&](int k) { return *src.find_gen(mu_name(k)); };
    auto dd = [&](int k) { return *src.find_gen(d_name(k)); };
    auto mkm = [&](Marker m, int k) { return w.marked(m, mu(k)); };
    auto mkd = [&](Marker m, int k) { return w.marked(m, dd(k)); };

    Element out = Element::zero(n, 0);
    for (int p = 2; p <= n; ++p) {
        int q = n + 1 - p;
        if (q < 1)
            continue;
        add_brace_monomials(w, out, mkm(Marker::Sigma, p), {mkd(Marker::I1, q)}, BigInt(1));
    }
    for (int r = 2; r <= n + 1; ++r) {
        for (int s = 0; s < r; ++s) {
            for (int q = 1; q <= n + 1 + s - r; ++q) {
                int total = n + 1 + s - r - q;
                std::vector<int> cur;
                for_each_t_tuple(s, total, cur, [&](const std::vector<int>& ts) {
                    for (int j = 1; j <= s + 1; ++j) {
                        std::vector<int> args;
                        for (int k = 0; k < j - 1; ++k)
                            args.push_back(mkm(Marker::Sigma, ts[k]));
                        args.push_back(mkd(Marker::Sigma, q));
                        for (int k = j - 1; k < s; ++k)
                            args.push_back(mkm(Marker::Sigma, ts[k]));
                        add_brace_monomials(w, out, mkm(Marker::I0, r), args, BigInt(-1));
                    }
                });
            }
        }
    }
    for (int p = 1; p <= n - 1; ++p) {
        int q = n + 1 - p;
        if (q < 2)
            continue;
        add_brace_monomials(w, out, mkd(Marker::Sigma, p), {mkm(Marker::I1, q)}, BigInt(-1));
    }
    for (int r = 1; r <= n; ++r) {
        for (int s = 1; s <= r; ++s) {
            int total = n + s - r;
            std::vector<int> cur;
            for_each_t_tuple(s, total, cur, [&](const std::vector<int>& ts) {
                std::vector<int> args;
                for (int t : ts)
                    args.push_back(mkm(Marker::Sigma, t));
                add_brace_monomials(w, out, mkd(Marker::I0, r), args, BigInt(-1));
            });
        }
    }
    return out;
}

Element tech_first_series_expected(const CylinderEngine& cyl, int r,
                                   const std::vector<int>& slots_sigma_t, int slot_i1, int q)
{
    const World& w = cyl.world();
    const Presentation& src = cyl.source();
    auto mu = [&](int k) { return *src.find_gen(mu_name(k)); };

    // slots_sigma_t lists (slot, t) pairs flattened; the block position of
    // i1 mu_q among the non-identity arguments decides which case applies
    std::vector<std::pair<int, int>> sorted;
    for (size_t k = 0; k + 1 < slots_sigma_t.size(); k += 2)
        sorted.emplace_back(slots_sigma_t[k], slots_sigma_t[k + 1]);
    std::sort(sorted.begin(), sorted.end());

    int j = 1;
    std::vector<int> before, after;
    for (const auto& [slot, t] : sorted) {
        if (slot < slot_i1) {
            ++j;
            before.push_back(t);
        } else {
            after.push_back(t);
        }
    }
    bool cond1 = r >= q;
    for (int t : before)
        cond1 = cond1 && t > r;
    bool cond2 = q > r;
    for (int t : before)
        cond2 = cond2 && t > q;
    for (int t : after)
        cond2 = cond2 && q <= t;

    int n_arity = r;
    for (const auto& [slot, t] : sorted)
        n_arity += t - 1;
    n_arity += q - 1;
    if (!(cond1 || cond2))
        return Element::zero(n_arity, -1);

    std::vector<std::pair<int, int>> slots;
    for (const auto& [slot, t] : sorted)
        slots.emplace_back(slot, w.marked(Marker::Sigma, mu(t)));
    slots.emplace_back(slot_i1, w.marked(Marker::Sigma, mu(q)));
    Monomial m = shallow_monomial(w, w.marked(Marker::I0, mu(r)), slots);
    Element out = Element::zero(n_arity, -1);
    out.add_term(std::move(m), BigInt(-1));
    return out;
}

Element unital_H(const Presentation& p, const CylinderEngine& cyl, const Element& e, int m)
{
    const World& w = cyl.world();
    return apply_operad_map(w, e, [&](int g) -> Element {
        const GenRecord& r = w.rec(g);
        if (r.is_base)
            return Element::generator(w, g);
        if (r.marker == Marker::Plain)
            throw std::invalid_argument("H expects cylinder elements");
        int n;
        std::vector<int> S;
        if (!parse_nu_name(w.rec(r.src).name, n, S))
            throw std::invalid_argument("H is defined on the unital example only");
        switch (r.marker) {
        case Marker::I0:
            return Element::generator(w, r.src);
        case Marker::I1:
            if (n == 1 && m == 1)
                return Element::generator(w, w.base.unit_gen(w));
            return Element::zero(r.arity, r.degree);
        case Marker::Sigma: {
            std::vector<int> S1 = S;
            for (int& v : S1)
                ++v;
            auto up = p.find_gen(nu_name(n + 1, S1));
            if (!up)
                throw std::logic_error("missing generator " + nu_name(n + 1, S1));
            Element t = compose_at(w, Element::generator(w, *up), S[0],
                                   Element::generator(w, w.base.unit_gen(w)));
            return (S[0] + 1) % 2 ? -t : t;
        }
        default:
            throw std::logic_error("unreachable");
        }
    });
}

} // namespace opcyl
