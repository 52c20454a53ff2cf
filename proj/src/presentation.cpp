#include "opcyl/presentation.hpp"

#include <mutex>
#include <unordered_map>

namespace opcyl {

struct Presentation::Impl {
    std::string name;
    WorldPtr world;
    Schema schema;

    mutable std::mutex mu;
    mutable std::unordered_map<int, std::vector<int>> stages;
    mutable std::unordered_map<int, Element> boundaries;
    mutable std::unordered_map<int, Element> internals;
};

Presentation::Presentation(std::string name, WorldPtr world, Schema schema)
    : impl_(std::make_shared<Impl>())
{
    impl_->name = std::move(name);
    impl_->world = std::move(world);
    impl_->schema = std::move(schema);
}

const std::string& Presentation::name() const { return impl_->name; }
const World& Presentation::world() const { return *impl_->world; }
WorldPtr Presentation::world_ptr() const { return impl_->world; }
int Presentation::stage_count() const { return impl_->schema.stage_count; }

const std::vector<int>& Presentation::stage_gens(int stage) const
{
    {
        std::lock_guard<std::mutex> lk(impl_->mu);
        auto it = impl_->stages.find(stage);
        if (it != impl_->stages.end())
            return it->second;
    }
    std::vector<int> gens;
    if (impl_->schema.stage_count < 0 || stage < impl_->schema.stage_count)
        gens = impl_->schema.stage_gens(world(), stage);
    std::lock_guard<std::mutex> lk(impl_->mu);
    return impl_->stages.emplace(stage, std::move(gens)).first->second;
}

std::vector<int> Presentation::gens_up_to_stage(int max_stage) const
{
    std::vector<int> out;
    int last = impl_->schema.stage_count < 0 ? max_stage : std::min(max_stage, impl_->schema.stage_count - 1);
    for (int s = 0; s <= last; ++s)
        for (int g : stage_gens(s))
            out.push_back(g);
    return out;
}

std::vector<int> Presentation::gens_for_arity(int max_arity, int max_stage) const
{
    int last;
    if (impl_->schema.last_stage_for_arity)
        last = impl_->schema.last_stage_for_arity(max_arity);
    else if (impl_->schema.stage_count >= 0)
        last = impl_->schema.stage_count - 1;
    else
        throw std::logic_error("presentation " + impl_->name + " cannot bound stages by arity");
    if (max_stage >= 0)
        last = std::min(last, max_stage);
    std::vector<int> out;
    for (int s = 0; s <= last; ++s)
        for (int g : stage_gens(s))
            if (world().arity(g) <= max_arity)
                out.push_back(g);
    return out;
}

Element Presentation::boundary(int gen) const
{
    {
        std::lock_guard<std::mutex> lk(impl_->mu);
        auto it = impl_->boundaries.find(gen);
        if (it != impl_->boundaries.end())
            return it->second;
    }
    Element b = impl_->schema.boundary(world(), gen);
    std::lock_guard<std::mutex> lk(impl_->mu);
    return impl_->boundaries.emplace(gen, std::move(b)).first->second;
}

Element Presentation::internal(int gen) const
{
    if (!impl_->schema.internal) {
        const GenRecord& r = world().rec(gen);
        return Element::zero(r.arity, r.degree - 1);
    }
    {
        std::lock_guard<std::mutex> lk(impl_->mu);
        auto it = impl_->internals.find(gen);
        if (it != impl_->internals.end())
            return it->second;
    }
    Element b = impl_->schema.internal(world(), gen);
    std::lock_guard<std::mutex> lk(impl_->mu);
    return impl_->internals.emplace(gen, std::move(b)).first->second;
}

Element Presentation::d_of_gen(int gen) const
{
    return internal(gen) + boundary(gen);
}

Element Presentation::differential(const Element& e) const
{
    const World& w = world();
    std::unordered_map<int, Element> local; // stable storage for rule pointers
    return derive(w, e, [&](int g) -> const Element* {
        if (w.is_base(g))
            return nullptr;
        auto it = local.find(g);
        if (it == local.end())
            it = local.emplace(g, d_of_gen(g)).first;
        return &it->second;
    });
}

std::optional<int> Presentation::find_gen(const std::string& name) const
{
    if (impl_->schema.resolve)
        if (auto g = impl_->schema.resolve(world(), name))
            return g;
    return world().gens.find(name);
}

Presentation::D2Report Presentation::check_d_squared(int max_stage) const
{
    for (int g : gens_up_to_stage(max_stage)) {
        Element res = differential(d_of_gen(g));
        if (!res.is_zero())
            return {false, g, res};
    }
    return {};
}

Presentation::D2Report Presentation::check_d_squared_arity(int max_arity) const
{
    for (int g : gens_for_arity(max_arity)) {
        Element res = differential(d_of_gen(g));
        if (!res.is_zero())
            return {false, g, res};
    }
    return {};
}

Presentation::LinearParts Presentation::linear_parts(int gen) const
{
    const World& w = world();
    Element b = boundary(gen);
    LinearParts out;
    out.d0 = Element::zero(b.arity(), b.degree());
    out.d1 = out.d0;
    out.rest = out.d0;
    for (const auto& [m, c] : b.terms()) {
        int cells = 0;
        for (int32_t g : m.labels)
            cells += !w.is_base(g);
        Element t = Element::monomial(w, m, c);
        if (cells == 0)
            out.d0 += t;
        else if (cells == 1)
            out.d1 += t;
        else
            out.rest += t;
    }
    return out;
}

bool Presentation::is_linear(int max_stage) const
{
    for (int g : gens_up_to_stage(max_stage))
        if (!linear_parts(g).rest.is_zero())
            return false;
    return true;
}

bool Presentation::is_strictly_linear(int max_stage) const
{
    if (!is_linear(max_stage))
        return false;
    for (int g : gens_up_to_stage(max_stage))
        if (!linear_parts(g).d0.is_zero())
            return false;
    return true;
}

} // namespace opcyl
