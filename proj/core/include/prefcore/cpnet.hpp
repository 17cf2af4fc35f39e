#ifndef PREFCORE_CPNET_HPP
#define PREFCORE_CPNET_HPP

#include <optional>
#include <utility>
#include <vector>

#include "prefcore/model.hpp"

namespace prefcore {

// One conditional preference row: a strict order over a variable's domain.
//
// Total mode stores a full ranking (best first). Partial mode stores a strict
// partial order as a closed better-than matrix; construction closes the given
// pairs transitively and rejects reflexive or symmetric ones.
class PreferenceRow {
  public:
    static PreferenceRow total(std::vector<std::uint8_t> best_to_worst);
    static PreferenceRow partial(int domain_size,
                                 std::vector<std::pair<std::uint8_t, std::uint8_t>> better);

    bool is_total() const { return total_; }
    int domain_size() const { return domain_size_; }

    // Strictly-better test; the only comparison primitive either mode needs.
    bool prefers(int a, int b) const {
        return matrix_[static_cast<std::size_t>(a * domain_size_ + b)];
    }

    // Total mode only: the ranking, best first.
    const std::vector<std::uint8_t>& order() const { return order_; }

    // Values strictly better than v, most preferred first in total mode,
    // ascending value index in partial mode.
    std::vector<std::uint8_t> better_than(int v) const;

    bool operator==(const PreferenceRow& other) const {
        return total_ == other.total_ && domain_size_ == other.domain_size_ &&
               matrix_ == other.matrix_ && order_ == other.order_;
    }

  private:
    bool total_ = true;
    int domain_size_ = 0;
    std::vector<std::uint8_t> order_;  // total mode
    std::vector<bool> matrix_;         // row-major better-than, both modes
};

// A conditional preference table: one row per assignment to the parents.
// Rows are indexed mixed-radix over the parents in stored order, first parent
// most significant.
struct Cpt {
    int var = -1;
    std::vector<int> parents;
    std::vector<PreferenceRow> rows;

    // Row index for the parent values carried by a full outcome or a partial
    // assignment binding all parents.
    std::size_t row_index(const VariableSet& vars, const Outcome& o) const;
    std::size_t row_index(const VariableSet& vars, const PartialAssignment& a) const;
    const PreferenceRow& row_for(const VariableSet& vars, const Outcome& o) const {
        return rows[row_index(vars, o)];
    }
};

enum class ArcClass { TotalDependency, PartialDependency };

// An acyclic CP-net, possibly restricted to a subset of the variables.
//
// `active` lists the live variables (ascending declaration order); `context`
// freezes the values of the inactive ones, so outcomes stay full-width across
// restrictions. Edges are exactly the CPT parent relations. `topo` is the
// net's fixed topological order: computed for a freshly built net as the
// lexicographically smallest topological sort (by declaration order among
// in-degree-0 candidates) and inherited as a subsequence by restrictions.
struct CpNet {
    VariableSetPtr vars;
    std::vector<Cpt> cpts;  // size vars->size(); inactive slots have var == -1
    std::vector<int> active;
    PartialAssignment context;
    std::vector<int> topo;

    static CpNet over(VariableSetPtr vars, std::vector<Cpt> cpts);

    bool is_active(int var) const;
    const Cpt& cpt(int var) const { return cpts[static_cast<std::size_t>(var)]; }

    // Graph ancestors of `var` among the active variables.
    std::vector<int> ancestors(int var) const;
};

// Structural checks: parents active, acyclic (CyclicNetwork), exactly one row
// per parent assignment, row domain sizes right, context covers exactly the
// inactive variables, topo is a valid topological order of `active`.
void validate(const CpNet& net);

// Arc classification: the arc (x, y) is a PartialDependency iff two distinct
// values of x share an identical CPT(y) row under some assignment to the other
// parents; otherwise TotalDependency. Requires every row of CPT(y) to be Total
// mode (PartialRowUnsupported); throws UnknownArc if x is not a parent of y.
ArcClass classify_arc(const CpNet& net, int x, int y);

// True iff every arc classifies as TotalDependency. A net containing any
// Partial-mode row is not totally dependent (its arcs cannot be classified).
bool is_totally_dependent(const CpNet& net);

// The relative-importance pairs the net induces: exactly its edge set.
// Throws NotTotallyDependent otherwise.
std::vector<std::pair<int, int>> induced_importance(const CpNet& net);

// Non-adjacent active variable pairs (a < b), in declaration order.
std::vector<std::pair<int, int>> nop_pairs(const CpNet& net);

// Every outcome one improving flip away from `o` (all variables, all strictly
// better values per the CPT row selected by o's parent values).
std::vector<Outcome> improving_flips(const CpNet& net, const Outcome& o);

struct OracleResult {
    bool dominates = false;
    // Minimum-length improving flipping sequence from o2 to o1 (inclusive of
    // both endpoints) when dominates is true.
    std::vector<Outcome> witness;
};

// Brute-force dominance: breadth-first search over improving flips from o2,
// succeeding when o1 is reached. Equal outcomes are never dominant. BFS makes
// the reported witness one of minimum length. Desk scale (outcome cap).
OracleResult dominance_oracle(const CpNet& net, const Outcome& o1, const Outcome& o2,
                              std::uint64_t cap = (1u << 20));

enum class OrderingAnswer { NotPreferred, Unknown };

// One-shot ordering query (is N ⊨ o1 ≻ o2 certainly false?): find the first
// variable X in the fixed topological order where the outcomes differ (its
// ancestors then necessarily agree); if CPT(X) under that shared context does
// not rank o1[X] above o2[X], the preference is certified impossible.
// Throws EqualOutcomes.
OrderingAnswer ordering_query(const CpNet& net, const Outcome& o1, const Outcome& o2);

// The net's optimum: instantiate variables in topological order, each to the
// best value under its parents' chosen values. Throws PartialRowUnsupported if
// any consulted row is Partial mode. Returns a full-width outcome (restricted
// nets keep their frozen context values).
Outcome forward_sweep(const CpNet& net);

// Freeze the variables bound by `r` (which must be active and ancestor-closed:
// every active parent of a bound variable is bound too, else
// NotAncestorClosed). The result shares the VariableSet, keeps full-width
// context, restricts the remaining CPTs, and inherits the topological order.
CpNet restrict(const CpNet& net, const PartialAssignment& r);

// restrict() without the ancestor-closure requirement: CPT rows of surviving
// variables are sliced at the bound parents' values. The search solvers use
// this to commit propagation-induced literals, which may bind any variable.
CpNet reduce_by_assignment(const CpNet& net, const PartialAssignment& r);

}  // namespace prefcore

#endif
