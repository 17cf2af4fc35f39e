#include "prefcore/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace prefcore {

namespace {

void trace(SolveResult& res, TraceEvent::Kind kind, std::string detail) {
    res.trace.push_back({kind, std::move(detail)});
}

Outcome context_to_outcome(const VariableSet& vars, const PartialAssignment& ctx) {
    Outcome o(static_cast<std::size_t>(vars.size()), 0);
    for (int v = 0; v < vars.size(); ++v)
        if (ctx.bound(v)) o[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(ctx[v]);
    return o;
}

PropagationResult run_propagation(const ConstraintSet& cs, const SearchOptions& opts) {
    if (opts.propagation == SearchOptions::Propagation::None) {
        PropagationResult res;
        res.consistent = true;
        res.induced = cs.fixed;
        res.pruned_domains.resize(static_cast<std::size_t>(cs.vars->size()));
        for (int v = 0; v < cs.vars->size(); ++v) {
            auto& dom = res.pruned_domains[static_cast<std::size_t>(v)];
            if (cs.fixed.bound(v)) {
                dom.push_back(static_cast<std::uint8_t>(cs.fixed[v]));
            } else {
                for (int k = 0; k < cs.vars->domain_size(v); ++k)
                    dom.push_back(static_cast<std::uint8_t>(k));
            }
        }
        return res;
    }
    return propagate(cs);
}

// Commit every newly induced literal over the live variables: strengthen the
// constraint set and collect the bindings that shrink the model.
struct Commit {
    ConstraintSet cs;
    PartialAssignment bound;  // over the live variables only
    int newly_bound = 0;
};

Commit commit_induced(const ConstraintSet& cs, const PartialAssignment& induced,
                      const std::vector<int>& live) {
    Commit out{cs, PartialAssignment(cs.vars->size()), 0};
    for (int v : live) {
        if (!induced.bound(v)) continue;
        out.bound.bind(v, induced[v]);
        ++out.newly_bound;
        if (!out.cs.fixed.bound(v)) out.cs = strengthen(out.cs, v, induced[v]);
    }
    return out;
}

// Search-CPR recursion. `original` carries the constraints the final outcome
// must satisfy; `cs` accumulates the committed literals.
std::optional<Outcome> cpr_descend(const CprNet& net, const ConstraintSet& original,
                                   const ConstraintSet& cs, const SearchOptions& opts,
                                   SolveResult& res) {
    if (net.base.active.empty()) {
        Outcome o = context_to_outcome(*net.base.vars, net.base.context);
        if (check_outcome(original, o)) return o;
        trace(res, TraceEvent::Kind::WipeoutHit,
              "complete assignment fails a constraint: " + format_outcome(*net.base.vars, o));
        return std::nullopt;
    }
    // The unique parentless variable of the sub-net heads its topological order.
    int x = net.topo.front();
    assert(net.base.cpt(x).parents.empty());
    trace(res, TraceEvent::Kind::BranchOpened, net.base.vars->var(x).name);
    const PreferenceRow& row = net.base.cpt(x).rows.front();
    for (std::uint8_t value : row.order()) {
        trace(res, TraceEvent::Kind::ValueTried,
              net.base.vars->var(x).name + "=" + net.base.vars->var(x).values[value]);
        ConstraintSet tried = strengthen(cs, x, value);
        PropagationResult prop = run_propagation(tried, opts);
        if (!prop.consistent) {
            trace(res, TraceEvent::Kind::WipeoutHit,
                  net.base.vars->var(prop.wipeout_var).name);
            continue;
        }
        Commit commit = commit_induced(tried, prop.induced, net.base.active);
        trace(res, TraceEvent::Kind::InducedAssignment,
              format_assignment(*net.base.vars, commit.bound));
        CprNet next;
        next.base = reduce_by_assignment(net.base, commit.bound);
        for (const AriStatement& a : net.aris)
            if (!commit.bound.bound(a.more) && !commit.bound.bound(a.less))
                next.aris.push_back(a);
        for (int v : net.topo)
            if (!commit.bound.bound(v)) next.topo.push_back(v);
        if (auto found = cpr_descend(next, original, commit.cs, opts, res)) return found;
    }
    return std::nullopt;
}

std::optional<Outcome> lp_descend(const LpTree& tree, const ConstraintSet& original,
                                  const ConstraintSet& cs, const SearchOptions& opts,
                                  SolveResult& res) {
    if (!tree.root) {
        Outcome o = context_to_outcome(*tree.vars, tree.context);
        if (check_outcome(original, o)) return o;
        trace(res, TraceEvent::Kind::WipeoutHit,
              "complete assignment fails a constraint: " + format_outcome(*tree.vars, o));
        return std::nullopt;
    }
    int x = tree.root->var;
    // Reductions strip every decided ancestor from the scope, so the root's
    // table is unconditional.
    assert(tree.root->scope.empty());
    trace(res, TraceEvent::Kind::BranchOpened, tree.vars->var(x).name);
    const PreferenceRow& row = tree.root->rows.front();
    for (std::uint8_t value : row.order()) {
        trace(res, TraceEvent::Kind::ValueTried,
              tree.vars->var(x).name + "=" + tree.vars->var(x).values[value]);
        ConstraintSet tried = strengthen(cs, x, value);
        PropagationResult prop = run_propagation(tried, opts);
        if (!prop.consistent) {
            trace(res, TraceEvent::Kind::WipeoutHit,
                  tree.vars->var(prop.wipeout_var).name);
            continue;
        }
        Commit commit = commit_induced(tried, prop.induced, tree.active);
        trace(res, TraceEvent::Kind::InducedAssignment,
              format_assignment(*tree.vars, commit.bound));
        LpTree next = reduce(tree, commit.bound);
        if (auto found = lp_descend(next, original, commit.cs, opts, res)) return found;
    }
    return std::nullopt;
}

}  // namespace

SolveResult search_cpr(const CprNet& net, const ConstraintSet& cs, const SearchOptions& opts) {
    if (!(*net.base.vars == *cs.vars))
        throw Error(ErrorCode::ModelMismatch,
                    "constraints and model use different variable sets");
    SolveResult res;
    res.outcome = cpr_descend(net, cs, cs, opts, res);
    trace(res, TraceEvent::Kind::Terminated,
          res.outcome ? format_outcome(*net.base.vars, *res.outcome) : "infeasible");
    return res;
}

SolveResult search_lp(const LpTree& tree, const ConstraintSet& cs, const SearchOptions& opts) {
    if (!(*tree.vars == *cs.vars))
        throw Error(ErrorCode::ModelMismatch,
                    "constraints and model use different variable sets");
    SolveResult res;
    res.outcome = lp_descend(tree, cs, cs, opts, res);
    trace(res, TraceEvent::Kind::Terminated,
          res.outcome ? format_outcome(*tree.vars, *res.outcome) : "infeasible");
    return res;
}

namespace {

// The divide-and-conquer dominance recursion runs over the original net with
// an explicit mask of still-active variables; frozen variables keep their
// values inside the full-width outcomes, so CPT row lookups need no rebuilt
// tables and (mask, o1, o2) is a complete memo key.
struct DtContext {
    const CpNet& net;
    std::uint64_t budget;
    std::uint64_t calls = 0;
    // Memoized sub-answers: witness chain when Yes, nullopt when No.
    std::unordered_map<std::string, std::optional<std::vector<Outcome>>> memo;

    std::string key(std::uint64_t mask, const Outcome& a, const Outcome& b) const {
        std::string k(reinterpret_cast<const char*>(&mask), sizeof mask);
        k.append(a.begin(), a.end());
        k.append(b.begin(), b.end());
        return k;
    }
};

bool mask_has(std::uint64_t mask, int var) { return (mask >> var) & 1u; }

// Ancestors of `x` reachable through parent arcs that stay inside the mask.
std::uint64_t masked_ancestors(const CpNet& net, std::uint64_t mask, int x) {
    std::uint64_t out = 0;
    std::vector<int> stack{x};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int p : net.cpt(v).parents)
            if (mask_has(mask, p) && !mask_has(out, p)) {
                out |= (1ull << p);
                stack.push_back(p);
            }
    }
    return out;
}

const std::optional<std::vector<Outcome>>& dt_query(DtContext& ctx, std::uint64_t mask,
                                                    const Outcome& o1, const Outcome& o2) {
    if (++ctx.calls > ctx.budget)
        throw Error(ErrorCode::BudgetExhausted,
                    "dominance search exceeded " + std::to_string(ctx.budget) + " sub-calls");
    std::string key = ctx.key(mask, o1, o2);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

    const CpNet& net = ctx.net;
    std::optional<std::vector<Outcome>> answer;  // nullopt = No

    // First masked variable in topological order where the outcomes differ;
    // everything earlier — ancestors included — agrees.
    int x = -1;
    for (int v : net.topo)
        if (mask_has(mask, v) &&
            o1[static_cast<std::size_t>(v)] != o2[static_cast<std::size_t>(v)]) {
            x = v;
            break;
        }
    assert(x >= 0);
    std::uint8_t x1 = o1[static_cast<std::size_t>(x)];
    std::uint8_t x2 = o2[static_cast<std::size_t>(x)];
    const PreferenceRow& row = net.cpt(x).row_for(*net.vars, o1);

    if (!row.prefers(x1, x2))
        return ctx.memo.emplace(std::move(key), std::move(answer)).first->second;

    std::uint64_t sub = (mask & ~masked_ancestors(net, mask, x)) & ~(1ull << x);
    bool suffix_equal = true;
    for (int v : net.active)
        if (mask_has(sub, v) &&
            o1[static_cast<std::size_t>(v)] != o2[static_cast<std::size_t>(v)]) {
            suffix_equal = false;
            break;
        }
    if (suffix_equal) {
        answer = std::vector<Outcome>{o2, o1};
        return ctx.memo.emplace(std::move(key), std::move(answer)).first->second;
    }

    auto with = [](Outcome o, int var, std::uint8_t val) {
        o[static_cast<std::size_t>(var)] = val;
        return o;
    };

    // Freeze X at x1: the first step lifts o2 across the X arc.
    if (const auto& r1 = dt_query(ctx, sub, o1, with(o2, x, x1))) {
        answer = std::vector<Outcome>{o2};
        answer->insert(answer->end(), r1->begin(), r1->end());
        return ctx.memo.emplace(std::move(key), std::move(answer)).first->second;
    }
    // Freeze X at x2: the last step lifts into o1.
    if (const auto& r2 = dt_query(ctx, sub, with(o1, x, x2), o2)) {
        answer = *r2;
        answer->push_back(o1);
        return ctx.memo.emplace(std::move(key), std::move(answer)).first->second;
    }
    // Freeze X at each value between x1 and x2 (multi-valued domains only).
    for (std::uint8_t xi : row.better_than(x2)) {
        if (xi == x1 || !row.prefers(x1, xi)) continue;
        if (const auto& ri = dt_query(ctx, sub, with(o1, x, xi), with(o2, x, xi))) {
            answer = std::vector<Outcome>{o2};
            answer->insert(answer->end(), ri->begin(), ri->end());
            answer->push_back(o1);
            return ctx.memo.emplace(std::move(key), std::move(answer)).first->second;
        }
    }
    // Midpoint sweep: route through a third assignment o3 of the remaining
    // variables, crossing the X arc between the two legs. Canonical
    // enumeration order: declaration-order mixed-radix, last variable fastest.
    std::vector<int> rest;
    for (int v : net.active)
        if (mask_has(sub, v)) rest.push_back(v);
    std::vector<std::uint8_t> digit(rest.size(), 0);
    auto matches = [&](const Outcome& o) {
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (o[static_cast<std::size_t>(rest[i])] != digit[i]) return false;
        return true;
    };
    for (bool done = false; !done && !answer;) {
        if (!matches(o1) && !matches(o2)) {
            Outcome mid2 = o2;  // carries X = x2 and the shared ancestor values
            for (std::size_t i = 0; i < rest.size(); ++i)
                mid2[static_cast<std::size_t>(rest[i])] = digit[i];
            // References into the memo stay valid across later insertions.
            if (const auto& leg2 = dt_query(ctx, sub, mid2, o2)) {
                if (const auto& leg1 = dt_query(ctx, sub, o1, with(mid2, x, x1))) {
                    answer = *leg2;
                    answer->insert(answer->end(), leg1->begin(), leg1->end());
                }
            }
        }
        done = true;
        for (std::size_t i = rest.size(); i-- > 0;) {
            if (++digit[i] < net.vars->domain_size(rest[i])) {
                done = false;
                break;
            }
            digit[i] = 0;
        }
    }
    // Staged climb through an intermediate value (multi-valued domains only).
    // A sequence may need the remaining variables to move in several phases:
    // some flips while X = x2, some while X sits at an intermediate xi, some
    // later. Decompose on the first X flip: the rest stages under x2 at some
    // assignment, X climbs to xi, and the remainder — midway outcome vs o1 —
    // is the same question with X still active (its value only ever rises, so
    // the recursion is well-founded). The four families above already cover
    // every sequence whose first X flip lands on x1, so only intermediate
    // landings are swept here.
    for (std::uint8_t xi : row.better_than(x2)) {
        if (answer) break;
        if (xi == x1 || !row.prefers(x1, xi)) continue;
        std::fill(digit.begin(), digit.end(), 0);
        for (bool done = false; !done && !answer;) {
            // Staging at o1's values adds nothing: that stage climb is
            // exactly the X-frozen-at-x2 query, which already failed above.
            if (!matches(o1)) {
                Outcome mid2 = o2;  // X = x2 plus the shared ancestor values
                for (std::size_t i = 0; i < rest.size(); ++i)
                    mid2[static_cast<std::size_t>(rest[i])] = digit[i];
                const std::optional<std::vector<Outcome>>* stage = nullptr;
                static const std::optional<std::vector<Outcome>> kNoClimb =
                    std::vector<Outcome>{};
                if (matches(o2))
                    stage = &kNoClimb;  // X flips first; no stage climb
                else
                    stage = &dt_query(ctx, sub, mid2, o2);
                if (*stage) {
                    if (const auto& remainder =
                            dt_query(ctx, mask, o1, with(mid2, x, xi))) {
                        answer = **stage;
                        if (answer->empty()) answer->push_back(o2);
                        answer->insert(answer->end(), remainder->begin(),
                                       remainder->end());
                    }
                }
            }
            done = true;
            for (std::size_t i = rest.size(); i-- > 0;) {
                if (++digit[i] < net.vars->domain_size(rest[i])) {
                    done = false;
                    break;
                }
                digit[i] = 0;
            }
        }
    }
    return ctx.memo.emplace(std::move(key), std::move(answer)).first->second;
}

}  // namespace

DominanceVerdict acyclic_cp_dt(const CpNet& net, const Outcome& o1, const Outcome& o2,
                               std::uint64_t budget) {
    if (net.vars->size() > 63)
        throw Error(ErrorCode::TooManyOutcomes, "dominance search supports up to 63 variables");
    Outcome a = o1, b = o2;
    for (int v = 0; v < net.vars->size(); ++v)
        if (net.context.bound(v)) {
            a[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(net.context[v]);
            b[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(net.context[v]);
        }
    if (a == b) throw Error(ErrorCode::EqualOutcomes, "dominance needs distinct outcomes");
    std::uint64_t mask = 0;
    for (int v : net.active) mask |= (1ull << v);
    DtContext ctx{net, budget, 0, {}};
    const auto& result = dt_query(ctx, mask, a, b);
    DominanceVerdict verdict;
    verdict.yes = result.has_value();
    if (result) verdict.witness = *result;
    return verdict;
}

}  // namespace prefcore
