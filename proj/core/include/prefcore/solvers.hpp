#ifndef PREFCORE_SOLVERS_HPP
#define PREFCORE_SOLVERS_HPP

#include <optional>

#include "prefcore/cprnet.hpp"
#include "prefcore/csp.hpp"
#include "prefcore/lptree.hpp"

namespace prefcore {

// Execution trace entry; observability only — contracts are on result values.
struct TraceEvent {
    enum class Kind { BranchOpened, ValueTried, WipeoutHit, InducedAssignment, Terminated };
    Kind kind;
    std::string detail;
};

struct SolveResult {
    std::optional<Outcome> outcome;  // absent: the CSP is infeasible
    std::vector<TraceEvent> trace;
};

struct SearchOptions {
    // `None` replaces propagation by the identity (induced = fixed), which
    // drives the search through every branch until the final check_outcome
    // verification; it exists to exercise exactly that safety net in tests.
    enum class Propagation { Full, None };
    Propagation propagation = Propagation::Full;
};

// Best-first backtracking search for the compare-maximum feasible outcome of a
// CPR-net under hard constraints. Walks the unique topological order: at each
// step the sub-net's single parentless variable is tried best-first; each
// value is committed with strengthen + propagate (a wipeout skips the value),
// the propagation-induced literals are committed too, and the sub-net is
// reduced by every newly bound variable. A fully assigned branch is verified
// against the original constraints before being returned (propagation is
// incomplete by design). Returns absent iff the CSP is infeasible.
// Throws ModelMismatch if `cs` is over a different variable set.
SolveResult search_cpr(const CprNet& net, const ConstraintSet& cs,
                       const SearchOptions& opts = {});

// The same search over an LP-tree: the root variable of the reduced tree
// plays the parentless role, and tree reduction realizes the commit step.
SolveResult search_lp(const LpTree& tree, const ConstraintSet& cs,
                      const SearchOptions& opts = {});

struct DominanceVerdict {
    bool yes = false;
    // Improving flipping sequence from o2 to o1 (both endpoints included);
    // nonempty exactly when yes.
    std::vector<Outcome> witness;
};

// Divide-and-conquer dominance (does the net entail o1 ≻ o2?).
//
// Let X be the first variable in the fixed topological order where the
// outcomes differ; its ancestors An(X) then agree (shared value R). The CPT
// row under R must rank o1[X]=x1 above o2[X]=x2, else the answer is No (with
// Partial rows: the row must strictly prefer x1). If the outcomes agree
// everywhere else, a single flip decides Yes. Otherwise the question is split
// over the net restricted at R with X frozen — at x1, at x2, at every
// intermediate value between them, and through every midpoint assignment o3′
// of the remaining variables (canonical enumeration order): Yes when the
// restricted net at x2 takes o3′ above o2's remainder and the one at x1 takes
// o1's remainder above o3′. Multi-valued domains need one further family: the
// remaining variables may stage under x2 at any assignment, X climbs to an
// intermediate value, and the midway outcome versus o1 is re-asked with X
// still active. Every improving sequence decomposes on its first X flip into
// one of these families, so the verdict agrees with the flip-search oracle.
//
// Sub-queries are memoized per invocation; `budget` caps the total number of
// sub-calls (BudgetExhausted beyond it). Throws EqualOutcomes when o1 = o2.
DominanceVerdict acyclic_cp_dt(const CpNet& net, const Outcome& o1, const Outcome& o2,
                               std::uint64_t budget = 10'000'000);

}  // namespace prefcore

#endif
