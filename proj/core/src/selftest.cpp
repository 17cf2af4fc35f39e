#include "prefcore/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "prefcore/generator.hpp"
#include "prefcore/rng.hpp"
#include "prefcore/solvers.hpp"

namespace prefcore {

namespace {

// Bumps the failure counters and records the first offender with enough
// context to replay it by hand.
void record_failure(SuiteResult& res, long long instance, std::uint64_t seed,
                    const std::string& what) {
    ++res.failures;
    if (!res.first_failure.empty()) return;
    std::ostringstream out;
    out << "instance " << instance << " (seed " << seed << "): " << what;
    res.first_failure = out.str();
}

std::string pair_text(const VariableSet& vars, const Outcome& o1,
                      const Outcome& o2) {
    return "o1 " + format_outcome(vars, o1) + " vs o2 " +
           format_outcome(vars, o2);
}

// --- random CP-nets with mixed row modes --------------------------------

VariableSetPtr letters(const std::vector<int>& domain_sizes) {
    std::vector<VariableSet::Variable> vars;
    for (std::size_t i = 0; i < domain_sizes.size(); ++i) {
        VariableSet::Variable v;
        v.name = std::string(1, static_cast<char>('A' + i));
        char low = static_cast<char>('a' + i);
        for (int k = 1; k <= domain_sizes[i]; ++k)
            v.values.push_back(std::string(1, low) + std::to_string(k));
        vars.push_back(std::move(v));
    }
    return std::make_shared<const VariableSet>(std::move(vars));
}

std::vector<std::uint8_t> random_order(Rng& rng, int n) {
    std::vector<std::uint8_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), std::uint8_t{0});
    rng.shuffle(order);
    return order;
}

PreferenceRow random_partial_row(Rng& rng, int n) {
    auto spine = random_order(rng, n);
    std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(0.5)) pairs.emplace_back(spine[i], spine[j]);
    return PreferenceRow::partial(n, std::move(pairs));
}

// Random acyclic structure: a construction order, then parents drawn from the
// prefix (at most two).
std::vector<std::vector<int>> random_parents(Rng& rng, int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<std::vector<int>> parents(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
        int k = rng.pick(0, std::min(i, 2));
        std::vector<int> ps;
        for (int p : rng.sample(i, k)) ps.push_back(order[p]);
        std::sort(ps.begin(), ps.end());
        parents[static_cast<std::size_t>(order[i])] = std::move(ps);
    }
    return parents;
}

CpNet random_cpnet(Rng& rng, int n, int d, bool allow_partial) {
    auto vars = letters(std::vector<int>(static_cast<std::size_t>(n), d));
    auto parents = random_parents(rng, n);
    std::vector<Cpt> cpts;
    bool any_partial = false;
    for (int x = 0; x < n; ++x) {
        Cpt cpt;
        cpt.var = x;
        cpt.parents = parents[static_cast<std::size_t>(x)];
        std::size_t rows = 1;
        for (int p : cpt.parents)
            rows *= static_cast<std::size_t>(vars->domain_size(p));
        for (std::size_t r = 0; r < rows; ++r) {
            if (allow_partial && rng.chance(0.35)) {
                cpt.rows.push_back(random_partial_row(rng, d));
                any_partial = true;
            } else {
                cpt.rows.push_back(PreferenceRow::total(random_order(rng, d)));
            }
        }
        cpts.push_back(std::move(cpt));
    }
    (void)any_partial;
    return CpNet::over(std::move(vars), std::move(cpts));
}

bool has_partial_rows(const CpNet& net) {
    for (int x : net.active)
        for (const auto& row : net.cpt(x).rows)
            if (!row.is_total()) return true;
    return false;
}

// A genuine improving flipping sequence from o2 to o1?
bool valid_witness(const CpNet& net, const std::vector<Outcome>& seq,
                   const Outcome& o1, const Outcome& o2) {
    if (seq.size() < 2 || seq.front() != o2 || seq.back() != o1) return false;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        const Outcome& from = seq[k];
        const Outcome& to = seq[k + 1];
        int flipped = -1;
        for (int v = 0; v < net.vars->size(); ++v)
            if (from[static_cast<std::size_t>(v)] !=
                to[static_cast<std::size_t>(v)]) {
                if (flipped != -1) return false;
                flipped = v;
            }
        if (flipped == -1 || !net.is_active(flipped)) return false;
        const auto& row = net.cpt(flipped).row_for(*net.vars, from);
        if (!row.prefers(to[static_cast<std::size_t>(flipped)],
                         from[static_cast<std::size_t>(flipped)]))
            return false;
    }
    return true;
}

// --- rank embedding ------------------------------------------------------

// `order` must enumerate `universe` exactly once, and cmp must agree with its
// positions on every ordered pair; a comparison that embeds into a linear
// rank this way is automatically total, asymmetric, and transitive.
template <typename CmpFn>
bool check_rank_embedding(std::vector<Outcome> universe,
                          const std::vector<Outcome>& order, CmpFn&& cmp,
                          std::string& why, long long& checks) {
    std::vector<Outcome> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    std::sort(universe.begin(), universe.end());
    ++checks;
    if (sorted_order != universe) {
        why = "total_order is not a permutation of the outcome space";
        return false;
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            ++checks;
            if (cmp(order[i], order[j]) != CompareResult::FirstPreferred ||
                cmp(order[j], order[i]) != CompareResult::SecondPreferred) {
                why = "compare disagrees with total_order on positions " +
                      std::to_string(i) + " and " + std::to_string(j);
                return false;
            }
        }
    return true;
}

// --- constrained-search scaffolding --------------------------------------

GeneratorConfig cycle_config(ModelKind kind, long long i, std::uint64_t seed) {
    static constexpr double kTightness[4] = {0.0, 0.3, 0.6, 0.9};
    GeneratorConfig cfg;
    cfg.kind = kind;
    cfg.var_count = 2 + static_cast<int>(i % 3);
    cfg.domain_size = 2 + static_cast<int>((i / 3) % 2);
    cfg.max_parents = 2;
    cfg.constraint_count = 1 + static_cast<int>((i / 4) % 3);
    cfg.tightness = kTightness[i % 4];
    cfg.seed = seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull;
    return cfg;
}

// The brute-force side of criterion "search equals compare-maximum":
// enumerate the feasible set and fold with the comparison.
template <typename CmpFn>
std::optional<Outcome> brute_best(const std::vector<Outcome>& feasible,
                                  CmpFn&& cmp) {
    if (feasible.empty()) return std::nullopt;
    Outcome best = feasible.front();
    for (std::size_t k = 1; k < feasible.size(); ++k)
        if (cmp(feasible[k], best) == CompareResult::FirstPreferred)
            best = feasible[k];
    return best;
}

template <typename SearchFn, typename CmpFn>
void check_constrained_instance(SuiteResult& res, long long i,
                                std::uint64_t cfg_seed,
                                const VariableSet& vars,
                                const ConstraintSet& cs, SearchFn&& search,
                                CmpFn&& cmp) {
    auto feasible = solve_all(cs);
    auto expect = brute_best(feasible, cmp);

    for (auto mode : {SearchOptions::Propagation::Full,
                      SearchOptions::Propagation::None}) {
        SearchOptions opts;
        opts.propagation = mode;
        auto got = search(cs, opts);
        ++res.checks;
        const char* tag = mode == SearchOptions::Propagation::Full
                              ? "search"
                              : "search without propagation";
        if (got.outcome.has_value() != expect.has_value()) {
            record_failure(res, i, cfg_seed,
                           std::string(tag) +
                               (got.outcome ? " found an outcome in an "
                                              "infeasible instance"
                                            : " reported infeasible but "
                                              "the feasible set is not empty"));
            continue;
        }
        if (expect && *got.outcome != *expect)
            record_failure(res, i, cfg_seed,
                           std::string(tag) + " returned " +
                               format_outcome(vars, *got.outcome) +
                               " but the compare-maximum is " +
                               format_outcome(vars, *expect));
        if (got.outcome) {
            ++res.checks;
            if (!check_outcome(cs, *got.outcome))
                record_failure(res, i, cfg_seed,
                               std::string(tag) +
                                   " returned an infeasible outcome " +
                                   format_outcome(vars, *got.outcome));
        }
    }
}

}  // namespace

// --- criterion: dominance equivalence ------------------------------------

SuiteResult dominance_equivalence_suite(int instances, std::uint64_t seed) {
    SuiteResult res;
    res.name = "dominance-equivalence";
    Rng rng(seed);
    for (long long i = 0; i < instances; ++i) {
        ++res.instances;
        int n = 2 + static_cast<int>(i % 3);
        int d = 2 + static_cast<int>((i / 3) % 2);
        CpNet net = random_cpnet(rng, n, d, /*allow_partial=*/n <= 3);
        auto outcomes = enumerate_outcomes(*net.vars);

        for (std::size_t p = 0; p < outcomes.size(); ++p)
            for (std::size_t q = 0; q < outcomes.size(); ++q) {
                if (p == q) continue;
                const Outcome& o1 = outcomes[p];
                const Outcome& o2 = outcomes[q];
                auto oracle = dominance_oracle(net, o1, o2);
                auto fast = acyclic_cp_dt(net, o1, o2);
                ++res.checks;
                if (oracle.dominates != fast.yes) {
                    record_failure(
                        res, i, seed,
                        "divide-and-conquer says " +
                            std::string(fast.yes ? "yes" : "no") +
                            ", flip-search oracle says " +
                            std::string(oracle.dominates ? "yes" : "no") +
                            " for " + pair_text(*net.vars, o1, o2));
                    continue;
                }
                if (oracle.dominates) {
                    ++res.checks;
                    if (!valid_witness(net, oracle.witness, o1, o2))
                        record_failure(res, i, seed,
                                       "oracle witness is not an improving "
                                       "sequence for " +
                                           pair_text(*net.vars, o1, o2));
                    ++res.checks;
                    if (!valid_witness(net, fast.witness, o1, o2))
                        record_failure(res, i, seed,
                                       "divide-and-conquer witness is not an "
                                       "improving sequence for " +
                                           pair_text(*net.vars, o1, o2));
                }
                ++res.checks;
                if (ordering_query(net, o1, o2) ==
                        OrderingAnswer::NotPreferred &&
                    oracle.dominates)
                    record_failure(res, i, seed,
                                   "ordering query certified not-preferred "
                                   "against the oracle for " +
                                       pair_text(*net.vars, o1, o2));
            }

        if (!has_partial_rows(net)) {
            Outcome opt = forward_sweep(net);
            for (const Outcome& o : outcomes) {
                if (o == opt) continue;
                ++res.checks;
                if (!dominance_oracle(net, opt, o).dominates)
                    record_failure(res, i, seed,
                                   "forward-sweep optimum " +
                                       format_outcome(*net.vars, opt) +
                                       " does not dominate " +
                                       format_outcome(*net.vars, o));
            }
        }
    }
    return res;
}

// --- criterion: constrained optimization ----------------------------------

SuiteResult constrained_cprnet_suite(int instances, std::uint64_t seed) {
    SuiteResult res;
    res.name = "constrained-cprnet-search";
    for (long long i = 0; i < instances; ++i) {
        ++res.instances;
        auto cfg = cycle_config(ModelKind::Cprnet, i, seed);
        auto doc = generate(cfg);
        const CprNet& net = *doc.cprnet;
        const ConstraintSet& cs = *doc.constraints;

        check_constrained_instance(
            res, i, cfg.seed, *doc.vars, cs,
            [&](const ConstraintSet& c, const SearchOptions& o) {
                return search_cpr(net, c, o);
            },
            [&](const Outcome& a, const Outcome& b) {
                return compare(net, a, b);
            });

        auto order = total_order(net);
        std::string why;
        ++res.checks;
        if (!order.empty() && order.front() != best_outcome(net)) {
            record_failure(res, i, cfg.seed,
                           "best_outcome disagrees with the head of "
                           "total_order");
        }
        if (!check_rank_embedding(
                enumerate_outcomes(*doc.vars), order,
                [&](const Outcome& a, const Outcome& b) {
                    return compare(net, a, b);
                },
                why, res.checks))
            record_failure(res, i, cfg.seed, why);
    }
    return res;
}

SuiteResult constrained_lptree_suite(int instances, std::uint64_t seed) {
    SuiteResult res;
    res.name = "constrained-lptree-search";
    for (long long i = 0; i < instances; ++i) {
        ++res.instances;
        auto cfg = cycle_config(ModelKind::Lptree, i, seed);
        auto doc = generate(cfg);
        const LpTree& tree = *doc.lptree;
        const ConstraintSet& cs = *doc.constraints;

        check_constrained_instance(
            res, i, cfg.seed, *doc.vars, cs,
            [&](const ConstraintSet& c, const SearchOptions& o) {
                return search_lp(tree, c, o);
            },
            [&](const Outcome& a, const Outcome& b) {
                return lp_compare(tree, a, b);
            });

        std::string why;
        if (!check_rank_embedding(
                enumerate_outcomes(*doc.vars), total_order(tree),
                [&](const Outcome& a, const Outcome& b) {
                    return lp_compare(tree, a, b);
                },
                why, res.checks))
            record_failure(res, i, cfg.seed, why);
    }
    return res;
}

// --- criterion: total dependence theorem ----------------------------------

namespace {

// Totally dependent tables by construction: parents are binary, and the row
// order reverses with the parity of the parent assignment, so any two values
// of any parent induce opposite orders under every context.
CpNet reversing_net(Rng& rng, int n, bool complete) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    // Only the last variable in construction order can be non-binary: it
    // never becomes a parent.
    std::vector<int> domains(static_cast<std::size_t>(n), 2);
    if (rng.chance(0.5))
        domains[static_cast<std::size_t>(order.back())] = 3;
    auto vars = letters(domains);

    // Arcs run forward along the construction order; an incomplete instance
    // drops at least one pair.
    std::vector<std::vector<int>> parents(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> kept;
    std::vector<std::pair<int, int>> dropped;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto arc = std::make_pair(order[static_cast<std::size_t>(i)],
                                      order[static_cast<std::size_t>(j)]);
            if (complete || rng.chance(0.6))
                kept.push_back(arc);
            else
                dropped.push_back(arc);
        }
    if (!complete && dropped.empty()) {
        int victim = rng.pick(0, static_cast<int>(kept.size()) - 1);
        dropped.push_back(kept[static_cast<std::size_t>(victim)]);
        kept.erase(kept.begin() + victim);
    }
    for (const auto& [a, b] : kept)
        parents[static_cast<std::size_t>(b)].push_back(a);
    for (auto& ps : parents) std::sort(ps.begin(), ps.end());

    std::vector<Cpt> cpts;
    for (int x = 0; x < n; ++x) {
        Cpt cpt;
        cpt.var = x;
        cpt.parents = parents[static_cast<std::size_t>(x)];
        auto base = random_order(rng, vars->domain_size(x));
        auto reversed = base;
        std::reverse(reversed.begin(), reversed.end());
        std::size_t rows = std::size_t{1} << cpt.parents.size();
        for (std::size_t r = 0; r < rows; ++r) {
            int parity = 0;
            for (std::size_t k = 0; k < cpt.parents.size(); ++k)
                parity ^= static_cast<int>(r >> (cpt.parents.size() - 1 - k)) & 1;
            cpt.rows.push_back(
                PreferenceRow::total(parity == 0 ? base : reversed));
        }
        cpts.push_back(std::move(cpt));
    }
    return CpNet::over(std::move(vars), std::move(cpts));
}

bool adjacency_complete(const CpNet& net) {
    int n = net.vars->size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& pa = net.cpt(a).parents;
            const auto& pb = net.cpt(b).parents;
            bool adjacent =
                std::find(pb.begin(), pb.end(), a) != pb.end() ||
                std::find(pa.begin(), pa.end(), b) != pa.end();
            if (!adjacent) return false;
        }
    return true;
}

}  // namespace

SuiteResult dependence_theorem_suite(int instances, std::uint64_t seed) {
    SuiteResult res;
    res.name = "dependence-theorem";
    Rng rng(seed);
    for (long long i = 0; i < instances; ++i) {
        ++res.instances;
        int n = 2 + static_cast<int>((i / 2) % 2);
        bool complete = (i % 2) == 0;
        CpNet net = reversing_net(rng, n, complete);

        ++res.checks;
        if (!is_totally_dependent(net)) {
            record_failure(res, i, seed,
                           "reversing construction is not totally dependent");
            continue;
        }

        auto outcomes = enumerate_outcomes(*net.vars);
        std::size_t count = outcomes.size();
        std::vector<std::vector<bool>> dom(count,
                                           std::vector<bool>(count, false));
        for (std::size_t p = 0; p < count; ++p)
            for (std::size_t q = 0; q < count; ++q)
                if (p != q)
                    dom[p][q] =
                        dominance_oracle(net, outcomes[p], outcomes[q])
                            .dominates;

        bool all_comparable = true;
        for (std::size_t p = 0; p < count && all_comparable; ++p)
            for (std::size_t q = p + 1; q < count; ++q)
                if (!dom[p][q] && !dom[q][p]) {
                    all_comparable = false;
                    break;
                }
        ++res.checks;
        if (all_comparable != adjacency_complete(net))
            record_failure(
                res, i, seed,
                std::string("comparability and adjacency disagree: ") +
                    (all_comparable ? "all pairs comparable"
                                    : "incomparable pair exists") +
                    " with " +
                    (adjacency_complete(net) ? "complete" : "incomplete") +
                    " structure");

        // Importance consequence per arc: an improvement of the parent
        // dominates regardless of the child's values.
        for (int y : net.active)
            for (int x : net.cpt(y).parents)
                for (std::size_t p = 0; p < count; ++p)
                    for (std::size_t q = 0; q < count; ++q) {
                        if (p == q) continue;
                        const Outcome& o1 = outcomes[p];
                        const Outcome& o2 = outcomes[q];
                        bool elsewhere_equal = true;
                        for (int v = 0; v < net.vars->size(); ++v)
                            if (v != x && v != y &&
                                o1[static_cast<std::size_t>(v)] !=
                                    o2[static_cast<std::size_t>(v)]) {
                                elsewhere_equal = false;
                                break;
                            }
                        if (!elsewhere_equal) continue;
                        auto xi = o1[static_cast<std::size_t>(x)];
                        auto xj = o2[static_cast<std::size_t>(x)];
                        if (xi == xj) continue;
                        const auto& row = net.cpt(x).row_for(*net.vars, o1);
                        if (!row.prefers(xi, xj)) continue;
                        ++res.checks;
                        if (!dom[p][q])
                            record_failure(
                                res, i, seed,
                                "improving the parent of a dependent arc "
                                "failed to dominate: " +
                                    pair_text(*net.vars, o1, o2));
                    }
    }
    return res;
}

// --- criterion: LP-tree reduction -----------------------------------------

SuiteResult tree_reduction_suite(int instances, std::uint64_t seed) {
    SuiteResult res;
    res.name = "tree-reduction";
    Rng rng(seed);
    for (long long i = 0; i < instances; ++i) {
        ++res.instances;
        GeneratorConfig cfg;
        cfg.kind = ModelKind::Lptree;
        cfg.var_count = 2 + static_cast<int>(i % 3);
        cfg.domain_size = 2 + static_cast<int>((i / 3) % 2);
        cfg.max_parents = 2;
        cfg.seed = seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull;
        auto doc = generate(cfg);
        const LpTree& tree = *doc.lptree;
        const VariableSet& vars = *doc.vars;

        PartialAssignment w(vars.size());
        for (int v = 0; v < vars.size(); ++v)
            if (rng.chance(0.45))
                w.bind(v, rng.pick(0, vars.domain_size(v) - 1));

        LpTree red = reduce(tree, w);
        ++res.checks;
        if (!is_compatible(red, tree, w)) {
            record_failure(res, i, cfg.seed,
                           "reduced tree incompatible with the original "
                           "under " +
                               format_assignment(vars, w));
            continue;
        }

        // The reduced order must be the w-consistent subsequence of the
        // original order, once both are projected to the surviving variables.
        auto strip = [&](const Outcome& o) {
            std::vector<std::uint8_t> kept;
            for (int v : red.active)
                kept.push_back(o[static_cast<std::size_t>(v)]);
            return kept;
        };
        std::vector<std::vector<std::uint8_t>> got;
        for (const Outcome& o : total_order(red)) got.push_back(strip(o));
        std::vector<std::vector<std::uint8_t>> expected;
        for (const Outcome& o : total_order(tree))
            if (w.consistent_with(o)) expected.push_back(strip(o));
        ++res.checks;
        if (got != expected)
            record_failure(res, i, cfg.seed,
                           "reduced total order is not the filtered "
                           "subsequence under " +
                               format_assignment(vars, w));

        std::string why;
        if (!check_rank_embedding(
                enumerate_outcomes(vars), total_order(tree),
                [&](const Outcome& a, const Outcome& b) {
                    return lp_compare(tree, a, b);
                },
                why, res.checks))
            record_failure(res, i, cfg.seed, "original tree: " + why);
        if (!red.active.empty()) {
            if (!check_rank_embedding(
                    enumerate_extensions(vars, red.context, red.active),
                    total_order(red),
                    [&](const Outcome& a, const Outcome& b) {
                        return lp_compare(red, a, b);
                    },
                    why, res.checks))
                record_failure(res, i, cfg.seed, "reduced tree: " + why);
        }
    }
    return res;
}

std::vector<SuiteResult> run_all_suites(int percent, std::uint64_t seed) {
    auto scaled = [&](int full) {
        return std::max(1, static_cast<int>(
                               (static_cast<long long>(full) * percent) / 100));
    };
    std::vector<SuiteResult> all;
    all.push_back(dominance_equivalence_suite(scaled(200), seed));
    all.push_back(constrained_cprnet_suite(scaled(200), seed + 1));
    all.push_back(constrained_lptree_suite(scaled(200), seed + 2));
    all.push_back(dependence_theorem_suite(scaled(100), seed + 3));
    all.push_back(tree_reduction_suite(scaled(100), seed + 4));
    return all;
}

}  // namespace prefcore
