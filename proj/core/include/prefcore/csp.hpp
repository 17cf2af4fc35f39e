#ifndef PREFCORE_CSP_HPP
#define PREFCORE_CSP_HPP

#include <vector>

#include "prefcore/model.hpp"

namespace prefcore {

// An extensional constraint: the scope (1 to 3 variables, in written order)
// and the list of allowed value-index tuples. An empty tuple list is legal and
// marks plain infeasibility.
struct Constraint {
    std::vector<int> scope;
    std::vector<std::vector<std::uint8_t>> allowed;
};

// A constraint network plus the literals committed so far (`fixed`).
// Immutable; strengthen() returns a new set.
struct ConstraintSet {
    VariableSetPtr vars;
    std::vector<Constraint> constraints;
    PartialAssignment fixed;

    static ConstraintSet empty(VariableSetPtr vars);
};

// Throws InvalidModel on bad arity, out-of-range scope/tuples, duplicate scope
// variables, or fixed bindings outside their domains.
void validate(const ConstraintSet& cs);

struct PropagationResult {
    bool consistent;
    // Consistent case: `fixed` plus every variable whose surviving value set
    // is a singleton, and the per-variable surviving sets themselves.
    PartialAssignment induced;
    std::vector<std::vector<std::uint8_t>> pruned_domains;
    // Wipeout case: the variable whose surviving set emptied.
    int wipeout_var = -1;
};

// True iff `o` extends `fixed` and matches some allowed tuple of every
// constraint.
bool check_outcome(const ConstraintSet& cs, const Outcome& o);

// Commit one literal. Throws ConflictingBinding if `var` is already fixed to a
// different value; re-fixing the same value is a no-op (idempotent).
ConstraintSet strengthen(const ConstraintSet& cs, int var, int value);

// Support filtering against the fixed variables, in one pass.
//
// For each constraint (in declaration order) and each scope variable X, a
// value v survives iff some allowed tuple assigns v to X and agrees with
// `fixed` on every fixed variable of the scope; surviving sets are intersected
// across constraints. Values derived here do not feed back within the same
// call — the fixpoint happens across search steps, where callers commit the
// induced literals via strengthen() and propagate again. (Stronger filtering
// is deliberately not performed: the search algorithms' reference traces
// depend on exactly this consistency level; deeper pruning would change which
// branches die where, and complete assignments are re-verified with
// check_outcome anyway.)
//
// A wipeout is reported against the first constraint that empties some scope
// variable's surviving set, blaming the last such variable in the scope's
// written order.
PropagationResult propagate(const ConstraintSet& cs);

// Exhaustive feasibility oracle: every outcome passing check_outcome, in
// canonical enumeration order. Desk scale only (outcome cap).
std::vector<Outcome> solve_all(const ConstraintSet& cs, std::uint64_t cap = (1u << 20));

}  // namespace prefcore

#endif
