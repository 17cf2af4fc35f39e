#ifndef PREFCORE_CPRNET_HPP
#define PREFCORE_CPRNET_HPP

#include "prefcore/cpnet.hpp"

namespace prefcore {

// An elicited relative-importance statement: `more` outweighs `less`.
struct AriStatement {
    int more = -1;
    int less = -1;
    bool operator==(const AriStatement& other) const {
        return more == other.more && less == other.less;
    }
};

// A totally dependent acyclic CP-net whose non-adjacent variable pairs are all
// oriented by ARI statements. The combined graph (arcs + ARIs) is then an
// acyclic tournament, so it has a unique topological order, cached in `topo`
// and driving every comparison.
struct CprNet {
    CpNet base;
    std::vector<AriStatement> aris;
    std::vector<int> topo;
};

// Validates and assembles. Throws NotTotallyDependent (base has a partial
// arc or a Partial-mode row), AriNotOnNop (an ARI names an adjacent pair, a
// self-pair, or duplicates a covered NOP), NopUncovered (some NOP lacks an
// ARI), CyclicCprNet (the combined graph has a cycle).
CprNet build_cprnet(CpNet base, std::vector<AriStatement> aris);

// The unique topological order of the combined graph.
const std::vector<int>& unique_topo_order(const CprNet& net);

// Total-order comparison: the first variable in the unique topological order
// where the outcomes differ decides, by its CPT row under the shared earlier
// values. Throws EqualOutcomes.
CompareResult compare(const CprNet& net, const Outcome& o1, const Outcome& o2);

// All outcomes, most preferred first. Generated by best-first descent along
// the unique topological order (provably the same order compare() induces).
// Throws TooManyOutcomes above `cap`.
std::vector<Outcome> total_order(const CprNet& net, std::uint64_t cap = (1u << 20));

// The most preferred outcome (head of the total order), in O(n) table lookups.
Outcome best_outcome(const CprNet& net);

}  // namespace prefcore

#endif
