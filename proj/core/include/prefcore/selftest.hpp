#ifndef PREFCORE_SELFTEST_HPP
#define PREFCORE_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace prefcore {

// Outcome of one randomized cross-check suite. `checks` counts individual
// assertions (queries compared, pairs verified); a suite passes when it ran
// at least one instance and nothing failed.
struct SuiteResult {
    std::string name;
    long long instances = 0;
    long long checks = 0;
    long long failures = 0;
    std::string first_failure;  // empty when clean

    bool passed() const { return instances > 0 && failures == 0; }
};

// Random acyclic CP-nets (2-4 variables, domains of 2-3, tables mixing total
// and partial rows at up to 3 variables): the divide-and-conquer dominance
// answer must equal the flip-search oracle on every ordered outcome pair,
// returned witnesses must be genuine improving sequences, a NotPreferred
// ordering certificate must never contradict the oracle, and on nets without
// partial rows the forward-sweep optimum must dominate every other outcome.
SuiteResult dominance_equivalence_suite(int instances, std::uint64_t seed);

// Random CPR-nets with random constraints over tightness {0, 0.3, 0.6, 0.9}:
// search_cpr must return the compare-maximum of the feasible set (absent
// exactly when it is empty), with and without propagation, and the induced
// total order must rank-embed: compare() agrees with total_order() on every
// ordered pair, which makes it total, asymmetric, and transitive.
SuiteResult constrained_cprnet_suite(int instances, std::uint64_t seed);

// The same contract for LP-trees and search_lp / lp_compare.
SuiteResult constrained_lptree_suite(int instances, std::uint64_t seed);

// Random totally dependent acyclic CP-nets (2-3 variables, reversing tables
// over binary parents), roughly half with a complete arc structure: every
// outcome pair is comparable under the oracle if and only if every variable
// pair is adjacent. On every arc X -> Y the importance consequence is also
// checked directly: improving X dominates regardless of how Y changes.
SuiteResult dependence_theorem_suite(int instances, std::uint64_t seed);

// Random LP-trees and random partial assignments w: reduce(L, w) must be
// compatible with L on the unassigned variables (exhaustively checked), its
// total order must equal the w-consistent subsequence of L's total order
// projected to the surviving variables, and both trees must rank-embed.
SuiteResult tree_reduction_suite(int instances, std::uint64_t seed);

// All five suites at the given scale (instance counts are scaled down from
// the full acceptance counts of 200/200/200/100/100 by percent/100, minimum
// one instance each).
std::vector<SuiteResult> run_all_suites(int percent, std::uint64_t seed);

}  // namespace prefcore

#endif
