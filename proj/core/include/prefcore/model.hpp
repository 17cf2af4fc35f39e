#ifndef PREFCORE_MODEL_HPP
#define PREFCORE_MODEL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "prefcore/errors.hpp"

namespace prefcore {

// An outcome assigns every variable a value, stored as the value's index into
// the variable's domain. Indexed by variable declaration order.
using Outcome = std::vector<std::uint8_t>;

// Verdict of a total-order comparison (CPR-nets, LP-trees).
enum class CompareResult { FirstPreferred, SecondPreferred };

// The universe of variables. Values are opaque strings scoped per variable;
// declaration order is the canonical tie-break everywhere (topological sorts,
// enumeration, printing). Immutable once built.
class VariableSet {
  public:
    struct Variable {
        std::string name;
        std::vector<std::string> values;
    };

    VariableSet() = default;
    explicit VariableSet(std::vector<Variable> vars);

    int size() const { return static_cast<int>(vars_.size()); }
    const Variable& var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    int domain_size(int i) const {
        return static_cast<int>(vars_[static_cast<std::size_t>(i)].values.size());
    }

    // Throws UnknownVariable / UnknownValue.
    int var_index(const std::string& name) const;
    int value_index(int var, const std::string& value) const;

    bool operator==(const VariableSet& other) const;

    // Total number of outcomes; throws TooManyOutcomes above `cap`.
    std::uint64_t outcome_count(std::uint64_t cap) const;

  private:
    std::vector<Variable> vars_;
    std::unordered_map<std::string, int> index_;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

// A partial assignment: -1 marks an unbound variable, otherwise a value index.
class PartialAssignment {
  public:
    PartialAssignment() = default;
    explicit PartialAssignment(int var_count)
        : vals_(static_cast<std::size_t>(var_count), -1) {}

    int size() const { return static_cast<int>(vals_.size()); }
    bool bound(int var) const { return vals_[static_cast<std::size_t>(var)] >= 0; }
    int operator[](int var) const { return vals_[static_cast<std::size_t>(var)]; }
    void bind(int var, int value) { vals_[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(value); }
    void unbind(int var) { vals_[static_cast<std::size_t>(var)] = -1; }

    int bound_count() const;
    bool empty() const { return bound_count() == 0; }

    // Value of a bound variable; throws UnboundVariable otherwise.
    int value_of(int var) const;

    // True when `o` agrees with every bound variable.
    bool consistent_with(const Outcome& o) const;

    bool operator==(const PartialAssignment& other) const { return vals_ == other.vals_; }

  private:
    std::vector<std::int16_t> vals_;
};

// Keep the bindings of `a` for the variables in `keep` only.
// Throws UnboundVariable if some kept variable is unbound in `a`.
PartialAssignment project(const PartialAssignment& a, const std::vector<int>& keep);

// Restrict an outcome to a partial assignment over `keep`.
PartialAssignment project(const Outcome& o, const std::vector<int>& keep);

// Union of two partial assignments; throws ConflictingBinding when a variable
// is bound to different values.
PartialAssignment merge(const PartialAssignment& a, const PartialAssignment& b);

// All outcomes over the full variable set, in canonical order: declaration
// order mixed-radix, last variable varying fastest. Throws TooManyOutcomes.
std::vector<Outcome> enumerate_outcomes(const VariableSet& vars,
                                        std::uint64_t cap = (1u << 20));

// All completions of `context` that vary exactly the variables in `active`
// (declaration-order mixed-radix, last active variable fastest). Every other
// variable must be bound by `context`.
std::vector<Outcome> enumerate_extensions(const VariableSet& vars,
                                          const PartialAssignment& context,
                                          const std::vector<int>& active,
                                          std::uint64_t cap = (1u << 20));

// Canonical rendering: "A=a1,B=b2" in declaration order; partial assignments
// list bound variables only.
std::string format_outcome(const VariableSet& vars, const Outcome& o);
std::string format_assignment(const VariableSet& vars, const PartialAssignment& a);

}  // namespace prefcore

#endif
