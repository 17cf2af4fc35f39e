#include "prefcore/csp.hpp"

#include <algorithm>

namespace prefcore {

ConstraintSet ConstraintSet::empty(VariableSetPtr vars) {
    ConstraintSet cs;
    cs.fixed = PartialAssignment(vars->size());
    cs.vars = std::move(vars);
    return cs;
}

void validate(const ConstraintSet& cs) {
    const VariableSet& vars = *cs.vars;
    if (cs.fixed.size() != vars.size())
        throw Error(ErrorCode::InvalidModel, "fixed assignment has the wrong width");
    for (int i = 0; i < vars.size(); ++i)
        if (cs.fixed.bound(i) && cs.fixed[i] >= vars.domain_size(i))
            throw Error(ErrorCode::InvalidModel,
                        "fixed value out of range for " + vars.var(i).name);
    for (const Constraint& c : cs.constraints) {
        if (c.scope.empty() || c.scope.size() > 3)
            throw Error(ErrorCode::InvalidModel, "constraint arity must be 1 to 3");
        for (std::size_t i = 0; i < c.scope.size(); ++i) {
            if (c.scope[i] < 0 || c.scope[i] >= vars.size())
                throw Error(ErrorCode::InvalidModel, "constraint scope variable out of range");
            for (std::size_t j = i + 1; j < c.scope.size(); ++j)
                if (c.scope[i] == c.scope[j])
                    throw Error(ErrorCode::InvalidModel,
                                "constraint scope repeats " + vars.var(c.scope[i]).name);
        }
        for (const auto& t : c.allowed) {
            if (t.size() != c.scope.size())
                throw Error(ErrorCode::InvalidModel, "tuple width does not match scope");
            for (std::size_t i = 0; i < t.size(); ++i)
                if (t[i] >= vars.domain_size(c.scope[i]))
                    throw Error(ErrorCode::InvalidModel,
                                "tuple value out of range for " + vars.var(c.scope[i]).name);
        }
    }
}

bool check_outcome(const ConstraintSet& cs, const Outcome& o) {
    if (!cs.fixed.consistent_with(o)) return false;
    for (const Constraint& c : cs.constraints) {
        bool matched = false;
        for (const auto& t : c.allowed) {
            bool eq = true;
            for (std::size_t i = 0; i < c.scope.size() && eq; ++i)
                eq = (t[i] == o[static_cast<std::size_t>(c.scope[i])]);
            if (eq) { matched = true; break; }
        }
        if (!matched) return false;
    }
    return true;
}

ConstraintSet strengthen(const ConstraintSet& cs, int var, int value) {
    if (cs.fixed.bound(var) && cs.fixed[var] != value)
        throw Error(ErrorCode::ConflictingBinding,
                    cs.vars->var(var).name + " already fixed to a different value");
    ConstraintSet out = cs;
    out.fixed.bind(var, value);
    return out;
}

PropagationResult propagate(const ConstraintSet& cs) {
    const VariableSet& vars = *cs.vars;
    PropagationResult res;
    // Start from the full domains, narrowed to the fixed values.
    res.pruned_domains.resize(static_cast<std::size_t>(vars.size()));
    for (int v = 0; v < vars.size(); ++v) {
        auto& dom = res.pruned_domains[static_cast<std::size_t>(v)];
        if (cs.fixed.bound(v)) {
            dom.push_back(static_cast<std::uint8_t>(cs.fixed[v]));
        } else {
            for (int k = 0; k < vars.domain_size(v); ++k)
                dom.push_back(static_cast<std::uint8_t>(k));
        }
    }
    for (const Constraint& c : cs.constraints) {
        // Values of each scope variable supported by some tuple that agrees
        // with `fixed` on the fixed scope variables.
        std::vector<std::vector<bool>> supported(c.scope.size());
        for (std::size_t i = 0; i < c.scope.size(); ++i)
            supported[i].assign(static_cast<std::size_t>(vars.domain_size(c.scope[i])), false);
        for (const auto& t : c.allowed) {
            bool agrees = true;
            for (std::size_t i = 0; i < c.scope.size() && agrees; ++i)
                agrees = !cs.fixed.bound(c.scope[i]) ||
                         cs.fixed[c.scope[i]] == static_cast<int>(t[i]);
            if (!agrees) continue;
            for (std::size_t i = 0; i < c.scope.size(); ++i)
                supported[i][t[i]] = true;
        }
        int emptied = -1;  // last scope position whose surviving set emptied
        for (std::size_t i = 0; i < c.scope.size(); ++i) {
            auto& dom = res.pruned_domains[static_cast<std::size_t>(c.scope[i])];
            std::vector<std::uint8_t> kept;
            for (std::uint8_t v : dom)
                if (supported[i][v]) kept.push_back(v);
            dom = std::move(kept);
            if (dom.empty()) emptied = static_cast<int>(i);
        }
        if (emptied >= 0) {
            res.consistent = false;
            res.wipeout_var = c.scope[static_cast<std::size_t>(emptied)];
            return res;
        }
    }
    res.consistent = true;
    res.induced = cs.fixed;
    for (int v = 0; v < vars.size(); ++v)
        if (res.pruned_domains[static_cast<std::size_t>(v)].size() == 1)
            res.induced.bind(v, res.pruned_domains[static_cast<std::size_t>(v)][0]);
    return res;
}

std::vector<Outcome> solve_all(const ConstraintSet& cs, std::uint64_t cap) {
    std::vector<Outcome> feasible;
    for (const Outcome& o : enumerate_outcomes(*cs.vars, cap))
        if (check_outcome(cs, o)) feasible.push_back(o);
    return feasible;
}

}  // namespace prefcore
