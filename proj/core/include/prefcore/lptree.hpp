#ifndef PREFCORE_LPTREE_HPP
#define PREFCORE_LPTREE_HPP

#include <memory>

#include "prefcore/cpnet.hpp"  // PreferenceRow
#include "prefcore/model.hpp"

namespace prefcore {

// One node of a conditional-importance tree: the variable decided here, a
// value-order table conditioned on some tree ancestors, and labeled child
// branches whose label sets partition the domain. A node with no children is
// a leaf; by path completeness its branch has decided every active variable.
struct LpNode {
    int var = -1;
    std::vector<int> scope;            // conditioning variables, ⊆ path ancestors
    std::vector<PreferenceRow> rows;   // one Total row per scope assignment,
                                       // mixed-radix, first scope var most significant
    struct Child {
        std::vector<std::uint8_t> labels;  // ascending value indices
        std::unique_ptr<LpNode> node;
    };
    std::vector<Child> children;

    std::size_t row_index(const VariableSet& vars, const Outcome& o) const;
    const PreferenceRow& row_for(const VariableSet& vars, const Outcome& o) const {
        return rows[row_index(vars, o)];
    }
    // The child whose labels contain `value`; nullptr at a leaf.
    const LpNode* child_for(int value) const;
};

// A lexicographic preference tree, possibly reduced: `active` lists the live
// variables, `context` freezes the values of the others, and outcomes stay
// full-width (reduced trees emit outcomes carrying their context values).
// An empty tree (null root, no active variables) is the fixpoint of reduction.
struct LpTree {
    VariableSetPtr vars;
    std::unique_ptr<LpNode> root;
    std::vector<int> active;
    PartialAssignment context;

    static LpTree over(VariableSetPtr vars, std::unique_ptr<LpNode> root);
};

LpTree clone(const LpTree& tree);
bool tree_equal(const LpTree& a, const LpTree& b);

// Structural checks. Throws VariableRepeated (a variable twice on a path),
// PathIncomplete (a root-to-leaf path missing an active variable),
// LabelNotPartition (child labels not partitioning the domain), BadCptScope
// (scope not a subset of the path ancestors), InvalidModel (row shape,
// non-canonical label order, context/active mismatches).
void validate(const LpTree& tree);

// Lexicographic comparison: descend while the outcomes agree, decide at the
// first node whose variable differs, by its row under the (shared) scope
// values. Throws EqualOutcomes when o1 = o2 on the active variables.
CompareResult lp_compare(const LpTree& tree, const Outcome& o1, const Outcome& o2);

// All outcomes, most preferred first (best-first descent; equals the order
// lp_compare induces). The empty tree yields exactly its context outcome.
// Throws TooManyOutcomes above `cap`.
std::vector<Outcome> total_order(const LpTree& tree, std::uint64_t cap = (1u << 20));

// Head of the total order in O(n) lookups.
Outcome lex_head(const LpTree& tree);

// The four-step reduction for a partial assignment w over active variables:
// keep the matching child branch of every bound node and restrict descendant
// tables to the bound value, splice the node out, delete it, and merge
// structurally identical sibling branches (unioning their labels) bottom-up.
// Throws UnknownVariable / UnknownValue for bindings outside the tree.
LpTree reduce(const LpTree& tree, const PartialAssignment& w);

// Exhaustive compatibility check between a reduced tree and its original:
// over every pair of distinct extensions of w, the reduced tree orders the
// pair exactly as the original does.
bool is_compatible(const LpTree& reduced, const LpTree& original,
                   const PartialAssignment& w);

}  // namespace prefcore

#endif
