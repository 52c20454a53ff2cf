#pragma once

#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace opcyl {

enum class Marker : uint8_t { Plain, I0, I1, Sigma };

const char* marker_prefix(Marker m); // "", "i0:", "i1:", "sigma:"

// One symbol: a base-operad basis element or a cell generator, possibly
// carrying a cylinder marker (src then points at the unmarked symbol).
struct GenRecord {
    std::string name; // full display name, marker prefix included
    int arity = 0;
    int degree = 0;
    int stage = -1;   // cell stage; -1 for base symbols
    bool is_base = false;
    Marker marker = Marker::Plain;
    int src = -1;     // id of the unmarked symbol, -1 for plain ones
};

// Interning table; grows lazily and is safe to grow through const refs,
// so composition can mint base symbols (m_{p+q-1}) on demand.
class GeneratorTable {
public:
    int intern(const GenRecord& rec) const;
    std::optional<int> find(const std::string& name) const;
    const GenRecord& rec(int id) const;
    int size() const;

private:
    mutable std::mutex mu_;
    mutable std::deque<GenRecord> recs_;
    mutable std::unordered_map<std::string, int> by_name_;
};

enum class BaseKind { Initial, Assoc, LambdaAssoc, UnitalAssoc, Custom };

BaseKind base_kind_from_name(const std::string& name);
std::string base_kind_name(BaseKind k);

struct World;

// Result of one base composition: coefficient and either a basis symbol
// or the operad identity (gen = -1).
struct BaseCompose {
    int coeff = 1;
    int gen = -1;
};

// The bottom operad of a relative presentation, with a chosen basis.
// Assoc has basis m_n (n >= 2, m_1 = id); LambdaAssoc is its operadic
// suspension, deg m_n = 1-n, with the structure-constant signs that
// convention forces; UnitalAssoc adds u in arity 0. A custom base is
// given by its own composition table over symbols it interns itself.
class BaseOperad {
public:
    // gen = -1 stands for the operad identity in composition results
    using ComposeFn = std::function<BaseCompose(const World&, int parent, int slot, int child)>;

    explicit BaseOperad(BaseKind k) : kind_(k) {}
    BaseOperad(std::string name, ComposeFn table)
        : kind_(BaseKind::Custom), name_(std::move(name)), table_(std::move(table))
    {
    }

    BaseKind kind() const { return kind_; }
    const std::string& name() const;
    int mul_gen(const World& w, int arity) const; // m_arity, arity >= 2
    int unit_gen(const World& w) const;           // u (UnitalAssoc only)
    BaseCompose compose(const World& w, int parent, int slot, int child) const;

private:
    BaseKind kind_;
    std::string name_;
    ComposeFn table_;
};

// The symbol universe one family of presentations computes in: a table
// plus the base operad. Cylinder and double-cylinder constructions add
// their symbols to the same world, so elements mix freely.
struct World {
    GeneratorTable gens;
    BaseOperad base;

    explicit World(BaseKind k) : base(k) {}
    explicit World(BaseOperad b) : base(std::move(b)) {}

    const GenRecord& rec(int id) const { return gens.rec(id); }
    int degree(int id) const { return gens.rec(id).degree; }
    int arity(int id) const { return gens.rec(id).arity; }
    bool is_base(int id) const { return gens.rec(id).is_base; }
    int stage(int id) const { return gens.rec(id).stage; }
    Marker marker(int id) const { return gens.rec(id).marker; }

    int intern_cell(const std::string& name, int arity, int degree, int stage) const;
    int marked(Marker m, int src) const; // intern a marked copy of src
};

using WorldPtr = std::shared_ptr<const World>;

} // namespace opcyl
