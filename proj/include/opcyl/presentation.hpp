#pragma once

#include "opcyl/element.hpp"
#include "opcyl/ops.hpp"

#include <functional>
#include <optional>

namespace opcyl {

// A pseudo-cellular DG-operad: a base operad plus an ordered list of cell
// stages. Stage schemas are materialized on demand (the A-infinity family
// has one generator per stage, forever), and boundaries are split into
// the twisting part (strictly earlier stages) and the internal part
// (same-stage linear combinations; zero except for cylinder generators).
class Presentation {
public:
    struct Schema {
        int stage_count = -1; // -1 = unbounded
        std::function<std::vector<int>(const World&, int stage)> stage_gens;
        std::function<Element(const World&, int gen)> boundary;
        std::function<Element(const World&, int gen)> internal; // optional
        std::function<std::optional<int>(const World&, const std::string&)> resolve; // optional
        std::function<int(int max_arity)> last_stage_for_arity; // optional
    };

    Presentation() = default;
    Presentation(std::string name, WorldPtr world, Schema schema);

    const std::string& name() const;
    const World& world() const;
    WorldPtr world_ptr() const;
    int stage_count() const;

    const std::vector<int>& stage_gens(int stage) const;
    std::vector<int> gens_up_to_stage(int max_stage) const;
    // all generators of arity <= max_arity (and stage <= max_stage if >= 0)
    std::vector<int> gens_for_arity(int max_arity, int max_stage = -1) const;

    Element boundary(int gen) const; // twisting part
    Element internal(int gen) const; // same-stage part
    Element d_of_gen(int gen) const; // full differential of a generator

    // the unique derivation extending the generator differentials
    Element differential(const Element& e) const;

    std::optional<int> find_gen(const std::string& name) const;

    struct D2Report {
        bool ok = true;
        int gen = -1;
        Element residue;
    };
    D2Report check_d_squared(int max_stage) const;
    D2Report check_d_squared_arity(int max_arity) const;

    struct LinearParts {
        Element d0, d1, rest;
    };
    LinearParts linear_parts(int gen) const;
    bool is_linear(int max_stage) const;
    bool is_strictly_linear(int max_stage) const;

    bool valid() const { return impl_ != nullptr; }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

} // namespace opcyl
