#include "cliffbrack/variable.hpp"

#include <numeric>

namespace cliffbrack {

VariableContext VariableContext::make(std::vector<std::string> names, std::vector<int> multiplicity) {
    VariableContext ctx;
    if (multiplicity.empty())
        multiplicity.assign(names.size(), 1);
    if (multiplicity.size() != names.size())
        throw ContextError("multiplicity list does not match variable list");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty())
            throw ContextError("empty variable name");
        if (multiplicity[i] < 1)
            throw ContextError("multiplicity of " + names[i] + " must be >= 1");
        auto [it, fresh] = ctx.rank_.emplace(names[i], static_cast<VarId>(i));
        (void)it;
        if (!fresh)
            throw ContextError("duplicate variable " + names[i]);
    }
    ctx.names_ = std::move(names);
    ctx.multiplicity_ = std::move(multiplicity);
    return ctx;
}

int VariableContext::total_multiplicity() const {
    return std::accumulate(multiplicity_.begin(), multiplicity_.end(), 0);
}

const std::string& VariableContext::name(VarId v) const {
    check(v);
    return names_[static_cast<std::size_t>(v)];
}

int VariableContext::multiplicity(VarId v) const {
    check(v);
    return multiplicity_[static_cast<std::size_t>(v)];
}

void VariableContext::set_multiplicity(VarId v, int k) {
    check(v);
    if (k < 1)
        throw ContextError("multiplicity must be >= 1");
    multiplicity_[static_cast<std::size_t>(v)] = k;
}

VarId VariableContext::rank(const std::string& name) const {
    auto it = rank_.find(name);
    if (it == rank_.end())
        throw ContextError("unknown variable " + name);
    return it->second;
}

void VariableContext::check(VarId v) const {
    if (!valid(v))
        throw ContextError("variable rank " + std::to_string(v) + " out of range");
}

} // namespace cliffbrack
