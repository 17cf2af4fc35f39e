#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "prefcore/solvers.hpp"

using namespace prefcore;
using prefcore::testing::load_fixture;
using prefcore::testing::outcome_of;

namespace {

// Genuine improving flipping sequence from o2 (front) to o1 (back): each step
// changes exactly one variable, to a value its table row strictly prefers.
bool valid_witness(const CpNet& net, const Outcome& o1, const Outcome& o2,
                   const std::vector<Outcome>& w) {
    if (w.size() < 2 || w.front() != o2 || w.back() != o1) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Outcome& from = w[i];
        const Outcome& to = w[i + 1];
        int flipped = -1;
        for (int v = 0; v < net.vars->size(); ++v)
            if (from[static_cast<std::size_t>(v)] != to[static_cast<std::size_t>(v)]) {
                if (flipped >= 0) return false;
                flipped = v;
            }
        if (flipped < 0) return false;
        const PreferenceRow& row = net.cpt(flipped).row_for(*net.vars, from);
        if (!row.prefers(to[static_cast<std::size_t>(flipped)],
                         from[static_cast<std::size_t>(flipped)]))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("constrained search over the importance network fixture") {
    auto doc = load_fixture("fig5-cprnet");
    REQUIRE(doc.constraints.has_value());

    SolveResult res = search_cpr(*doc.cprnet, *doc.constraints);
    REQUIRE(res.outcome.has_value());
    CHECK(format_outcome(*doc.vars, *res.outcome) == "A=a2,B=b2,C=c1,D=d1");
    CHECK(check_outcome(*doc.constraints, *res.outcome));

    // The A=a1 branch must die by propagation wipeouts before completion.
    CHECK(std::any_of(res.trace.begin(), res.trace.end(), [](const TraceEvent& e) {
        return e.kind == TraceEvent::Kind::WipeoutHit;
    }));

    // Without propagation the final feasibility check carries the search
    // alone — the answer must not move.
    SearchOptions none;
    none.propagation = SearchOptions::Propagation::None;
    SolveResult blind = search_cpr(*doc.cprnet, *doc.constraints, none);
    REQUIRE(blind.outcome.has_value());
    CHECK(*blind.outcome == *res.outcome);
}

TEST_CASE("constrained search over the importance tree fixture") {
    auto doc = load_fixture("fig7-lptree");
    REQUIRE(doc.constraints.has_value());

    SolveResult res = search_lp(*doc.lptree, *doc.constraints);
    REQUIRE(res.outcome.has_value());
    CHECK(format_outcome(*doc.vars, *res.outcome) == "A=a2,B=b2,C=c2,D=d1");
    CHECK(check_outcome(*doc.constraints, *res.outcome));

    SearchOptions none;
    none.propagation = SearchOptions::Propagation::None;
    SolveResult blind = search_lp(*doc.lptree, *doc.constraints, none);
    REQUIRE(blind.outcome.has_value());
    CHECK(*blind.outcome == *res.outcome);
}

TEST_CASE("unconstrained search returns the model optimum") {
    auto fig4 = load_fixture("fig4-cprnet");
    SolveResult r1 = search_cpr(*fig4.cprnet, ConstraintSet::empty(fig4.vars));
    REQUIRE(r1.outcome.has_value());
    CHECK(*r1.outcome == best_outcome(*fig4.cprnet));

    auto fig2 = load_fixture("fig2-lptree");
    SolveResult r2 = search_lp(*fig2.lptree, ConstraintSet::empty(fig2.vars));
    REQUIRE(r2.outcome.has_value());
    CHECK(*r2.outcome == lex_head(*fig2.lptree));
}

TEST_CASE("infeasible constraint sets yield no outcome") {
    auto fig4 = load_fixture("fig4-cprnet");
    ConstraintSet cs = ConstraintSet::empty(fig4.vars);
    Constraint never;
    never.scope = {0};
    cs.constraints.push_back(never);  // no allowed tuples
    CHECK_FALSE(search_cpr(*fig4.cprnet, cs).outcome.has_value());

    auto fig2 = load_fixture("fig2-lptree");
    ConstraintSet cs2 = ConstraintSet::empty(fig2.vars);
    cs2.constraints.push_back(never);
    CHECK_FALSE(search_lp(*fig2.lptree, cs2).outcome.has_value());

    SearchOptions none;
    none.propagation = SearchOptions::Propagation::None;
    CHECK_FALSE(search_cpr(*fig4.cprnet, cs, none).outcome.has_value());
    CHECK_FALSE(search_lp(*fig2.lptree, cs2, none).outcome.has_value());
}

TEST_CASE("search rejects constraints over a different variable set") {
    auto fig4 = load_fixture("fig4-cprnet");
    auto fig1 = load_fixture("fig1-cpnet");
    CHECK_ERROR_CODE(search_cpr(*fig4.cprnet, ConstraintSet::empty(fig1.vars)),
                     ModelMismatch);
}

TEST_CASE("divide-and-conquer dominance answers the documented queries") {
    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& net = *fig3.cpnet;
    const auto& vars = *fig3.vars;
    auto o = [&](const char* a, const char* b, const char* c) {
        return outcome_of(vars, {a, b, c});
    };

    CHECK_FALSE(acyclic_cp_dt(net, o("a2", "b2", "c2"), o("a1", "b1", "c1")).yes);

    auto q2 = acyclic_cp_dt(net, o("a2", "b2", "c2"), o("a2", "b1", "c2"));
    CHECK(q2.yes);
    CHECK(q2.witness == std::vector<Outcome>{o("a2", "b1", "c2"),
                                             o("a2", "b2", "c2")});

    auto q3 = acyclic_cp_dt(net, o("a1", "b1", "c1"), o("a2", "b1", "c2"));
    CHECK(q3.yes);
    CHECK(q3.witness == std::vector<Outcome>{o("a2", "b1", "c2"),
                                             o("a1", "b1", "c2"),
                                             o("a1", "b1", "c1")});

    auto q4 = acyclic_cp_dt(net, o("a1", "b1", "c2"), o("a2", "b1", "c1"));
    CHECK(q4.yes);
    CHECK(q4.witness == std::vector<Outcome>{
                            o("a2", "b1", "c1"), o("a2", "b2", "c1"),
                            o("a1", "b2", "c1"), o("a1", "b2", "c2"),
                            o("a1", "b1", "c2")});

    CHECK_ERROR_CODE(acyclic_cp_dt(net, o("a1", "b1", "c1"), o("a1", "b1", "c1")),
                     EqualOutcomes);
}

TEST_CASE("the sub-query budget is enforced") {
    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& net = *fig3.cpnet;
    const auto& vars = *fig3.vars;

    // A single-flip query fits in one node...
    CHECK(acyclic_cp_dt(net, outcome_of(vars, {"a2", "b2", "c2"}),
                        outcome_of(vars, {"a2", "b1", "c2"}), 1)
              .yes);
    // ...but any query that must split exceeds a budget of one.
    CHECK_ERROR_CODE(acyclic_cp_dt(net, outcome_of(vars, {"a1", "b1", "c2"}),
                                   outcome_of(vars, {"a2", "b1", "c1"}), 1),
                     BudgetExhausted);
}

TEST_CASE("divide-and-conquer agrees with the flip-search oracle everywhere") {
    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& net = *fig3.cpnet;
    auto all = enumerate_outcomes(*fig3.vars);

    for (const Outcome& o1 : all)
        for (const Outcome& o2 : all) {
            if (o1 == o2) continue;
            OracleResult truth = dominance_oracle(net, o1, o2);
            DominanceVerdict fast = acyclic_cp_dt(net, o1, o2);
            CHECK(truth.dominates == fast.yes);
            if (truth.dominates) {
                CHECK(valid_witness(net, o1, o2, truth.witness));
                CHECK(valid_witness(net, o1, o2, fast.witness));
            }
        }
}
