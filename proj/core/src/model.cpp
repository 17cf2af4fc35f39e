#include "prefcore/model.hpp"

#include <algorithm>

namespace prefcore {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::UnknownValue: return "UnknownValue";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::ConflictingBinding: return "ConflictingBinding";
        case ErrorCode::UnknownArc: return "UnknownArc";
        case ErrorCode::PartialRowUnsupported: return "PartialRowUnsupported";
        case ErrorCode::NotTotallyDependent: return "NotTotallyDependent";
        case ErrorCode::EqualOutcomes: return "EqualOutcomes";
        case ErrorCode::NotAncestorClosed: return "NotAncestorClosed";
        case ErrorCode::CyclicNetwork: return "CyclicNetwork";
        case ErrorCode::AriNotOnNop: return "AriNotOnNop";
        case ErrorCode::NopUncovered: return "NopUncovered";
        case ErrorCode::CyclicCprNet: return "CyclicCprNet";
        case ErrorCode::LabelNotPartition: return "LabelNotPartition";
        case ErrorCode::VariableRepeated: return "VariableRepeated";
        case ErrorCode::PathIncomplete: return "PathIncomplete";
        case ErrorCode::BadCptScope: return "BadCptScope";
        case ErrorCode::TooManyOutcomes: return "TooManyOutcomes";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::ModelMismatch: return "ModelMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidModel: return "InvalidModel";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "UnknownError";
}

VariableSet::VariableSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (int i = 0; i < size(); ++i) {
        const Variable& v = vars_[static_cast<std::size_t>(i)];
        if (v.values.empty())
            throw Error(ErrorCode::InvalidModel, "variable " + v.name + " has an empty domain");
        if (v.values.size() > 255)
            throw Error(ErrorCode::InvalidModel, "variable " + v.name + " has too many values");
        if (!index_.emplace(v.name, i).second)
            throw Error(ErrorCode::InvalidModel, "variable " + v.name + " declared twice");
        for (std::size_t a = 0; a < v.values.size(); ++a)
            for (std::size_t b = a + 1; b < v.values.size(); ++b)
                if (v.values[a] == v.values[b])
                    throw Error(ErrorCode::InvalidModel,
                                "variable " + v.name + " repeats value " + v.values[a]);
    }
}

int VariableSet::var_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw Error(ErrorCode::UnknownVariable, "no variable named " + name);
    return it->second;
}

int VariableSet::value_index(int var, const std::string& value) const {
    const Variable& v = vars_[static_cast<std::size_t>(var)];
    for (std::size_t i = 0; i < v.values.size(); ++i)
        if (v.values[i] == value) return static_cast<int>(i);
    throw Error(ErrorCode::UnknownValue, v.name + " has no value " + value);
}

bool VariableSet::operator==(const VariableSet& other) const {
    if (size() != other.size()) return false;
    for (int i = 0; i < size(); ++i) {
        if (vars_[static_cast<std::size_t>(i)].name != other.vars_[static_cast<std::size_t>(i)].name)
            return false;
        if (vars_[static_cast<std::size_t>(i)].values != other.vars_[static_cast<std::size_t>(i)].values)
            return false;
    }
    return true;
}

std::uint64_t VariableSet::outcome_count(std::uint64_t cap) const {
    std::uint64_t count = 1;
    for (int i = 0; i < size(); ++i) {
        count *= static_cast<std::uint64_t>(domain_size(i));
        if (count > cap)
            throw Error(ErrorCode::TooManyOutcomes,
                        "outcome space exceeds cap of " + std::to_string(cap));
    }
    return count;
}

int PartialAssignment::bound_count() const {
    int n = 0;
    for (std::int16_t v : vals_) n += (v >= 0);
    return n;
}

int PartialAssignment::value_of(int var) const {
    if (!bound(var))
        throw Error(ErrorCode::UnboundVariable,
                    "variable #" + std::to_string(var) + " is unbound");
    return vals_[static_cast<std::size_t>(var)];
}

bool PartialAssignment::consistent_with(const Outcome& o) const {
    for (int i = 0; i < size(); ++i)
        if (bound(i) && (*this)[i] != static_cast<int>(o[static_cast<std::size_t>(i)]))
            return false;
    return true;
}

PartialAssignment project(const PartialAssignment& a, const std::vector<int>& keep) {
    PartialAssignment out(a.size());
    for (int var : keep) out.bind(var, a.value_of(var));
    return out;
}

PartialAssignment project(const Outcome& o, const std::vector<int>& keep) {
    PartialAssignment out(static_cast<int>(o.size()));
    for (int var : keep) out.bind(var, o[static_cast<std::size_t>(var)]);
    return out;
}

PartialAssignment merge(const PartialAssignment& a, const PartialAssignment& b) {
    PartialAssignment out = a;
    for (int i = 0; i < b.size(); ++i) {
        if (!b.bound(i)) continue;
        if (out.bound(i) && out[i] != b[i])
            throw Error(ErrorCode::ConflictingBinding,
                        "variable #" + std::to_string(i) + " bound to two values");
        out.bind(i, b[i]);
    }
    return out;
}

std::vector<Outcome> enumerate_outcomes(const VariableSet& vars, std::uint64_t cap) {
    std::vector<int> all(static_cast<std::size_t>(vars.size()));
    for (int i = 0; i < vars.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    return enumerate_extensions(vars, PartialAssignment(vars.size()), all, cap);
}

std::vector<Outcome> enumerate_extensions(const VariableSet& vars,
                                          const PartialAssignment& context,
                                          const std::vector<int>& active,
                                          std::uint64_t cap) {
    std::uint64_t count = 1;
    for (int var : active) {
        count *= static_cast<std::uint64_t>(vars.domain_size(var));
        if (count > cap)
            throw Error(ErrorCode::TooManyOutcomes,
                        "outcome space exceeds cap of " + std::to_string(cap));
    }
    Outcome base(static_cast<std::size_t>(vars.size()), 0);
    for (int i = 0; i < vars.size(); ++i) {
        if (context.bound(i)) {
            base[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(context[i]);
        } else if (std::find(active.begin(), active.end(), i) == active.end()) {
            throw Error(ErrorCode::UnboundVariable,
                        "variable " + vars.var(i).name + " neither active nor bound");
        }
    }
    std::vector<Outcome> out;
    out.reserve(static_cast<std::size_t>(count));
    Outcome cur = base;
    // Odometer over the active variables, last one fastest.
    std::vector<std::size_t> digit(active.size(), 0);
    for (std::uint64_t k = 0;; ++k) {
        for (std::size_t i = 0; i < active.size(); ++i)
            cur[static_cast<std::size_t>(active[i])] = static_cast<std::uint8_t>(digit[i]);
        out.push_back(cur);
        if (k + 1 == count) break;
        for (std::size_t i = active.size(); i-- > 0;) {
            if (++digit[i] < static_cast<std::size_t>(vars.domain_size(active[i]))) break;
            digit[i] = 0;
        }
    }
    return out;
}

std::string format_outcome(const VariableSet& vars, const Outcome& o) {
    std::string s;
    for (int i = 0; i < vars.size(); ++i) {
        if (!s.empty()) s += ',';
        s += vars.var(i).name;
        s += '=';
        s += vars.var(i).values[o[static_cast<std::size_t>(i)]];
    }
    return s;
}

std::string format_assignment(const VariableSet& vars, const PartialAssignment& a) {
    std::string s;
    for (int i = 0; i < vars.size(); ++i) {
        if (!a.bound(i)) continue;
        if (!s.empty()) s += ',';
        s += vars.var(i).name;
        s += '=';
        s += vars.var(i).values[static_cast<std::size_t>(a[i])];
    }
    return s;
}

}  // namespace prefcore
