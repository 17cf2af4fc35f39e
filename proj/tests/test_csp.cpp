#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "prefcore/csp.hpp"

using namespace prefcore;
using prefcore::testing::load_fixture;
using prefcore::testing::outcome_of;

namespace {

// The constraint section of fig5-cprnet over A, B, C, D (all binary):
//   if A=a1 then B=b2;  iff A=a1 D=d2;  if C=c2 then B=b1;  iff C=c1 D=d1
ConstraintSet fig5_constraints() {
    auto doc = load_fixture("fig5-cprnet");
    REQUIRE(doc.constraints.has_value());
    return *doc.constraints;
}

// The eight-constraint section of fig7-lptree.
ConstraintSet fig7_constraints() {
    auto doc = load_fixture("fig7-lptree");
    REQUIRE(doc.constraints.has_value());
    return *doc.constraints;
}

}  // namespace

TEST_CASE("single-pass propagation induces forced literals") {
    ConstraintSet cs = fig5_constraints();
    const auto& vars = *cs.vars;
    int A = vars.var_index("A"), B = vars.var_index("B");
    int C = vars.var_index("C"), D = vars.var_index("D");

    cs = strengthen(cs, A, vars.value_index(A, "a1"));
    PropagationResult pr = propagate(cs);
    REQUIRE(pr.consistent);
    // A=a1 forces B=b2 (implication) and D=d2 (equivalence); C stays open
    // because its constraints tie it only to the not-yet-fixed B and D.
    CHECK(pr.induced.value_of(A) == vars.value_index(A, "a1"));
    CHECK(pr.induced.value_of(B) == vars.value_index(B, "b2"));
    CHECK(pr.induced.value_of(D) == vars.value_index(D, "d2"));
    CHECK_FALSE(pr.induced.bound(C));
    CHECK(pr.pruned_domains[static_cast<std::size_t>(C)].size() == 2);
    CHECK(pr.pruned_domains[static_cast<std::size_t>(B)] ==
          std::vector<std::uint8_t>{
              static_cast<std::uint8_t>(vars.value_index(B, "b2"))});
}

TEST_CASE("wipeout blames the last emptied variable in scope order") {
    ConstraintSet cs = fig5_constraints();
    const auto& vars = *cs.vars;
    int A = vars.var_index("A"), B = vars.var_index("B");
    int C = vars.var_index("C"), D = vars.var_index("D");

    // A=a1 forces D=d2; fixing C=c1 then contradicts 'iff C=c1 D=d1', whose
    // scope is written (C, D), so the wipeout is reported against D.
    cs = strengthen(cs, A, vars.value_index(A, "a1"));
    cs = strengthen(cs, B, vars.value_index(B, "b2"));
    cs = strengthen(cs, D, vars.value_index(D, "d2"));
    cs = strengthen(cs, C, vars.value_index(C, "c1"));
    PropagationResult pr = propagate(cs);
    REQUIRE_FALSE(pr.consistent);
    CHECK(pr.wipeout_var == D);
}

TEST_CASE("wipeout can blame a variable fixed long before") {
    ConstraintSet cs = fig7_constraints();
    const auto& vars = *cs.vars;
    int A = vars.var_index("A"), B = vars.var_index("B");
    int D = vars.var_index("D");

    // With A=a2 fixed, trying D=d2 violates 'if D=d2 then A=a1'; the scope is
    // written (D, A), so A — emptied last — takes the blame.
    cs = strengthen(cs, A, vars.value_index(A, "a2"));
    cs = strengthen(cs, B, vars.value_index(B, "b2"));
    cs = strengthen(cs, D, vars.value_index(D, "d2"));
    PropagationResult pr = propagate(cs);
    REQUIRE_FALSE(pr.consistent);
    CHECK(pr.wipeout_var == A);
}

TEST_CASE("strengthen is idempotent and rejects rebinding") {
    ConstraintSet cs = fig5_constraints();
    int A = cs.vars->var_index("A");
    cs = strengthen(cs, A, 0);
    ConstraintSet again = strengthen(cs, A, 0);
    CHECK(again.fixed == cs.fixed);
    CHECK_ERROR_CODE(strengthen(cs, A, 1), ConflictingBinding);
}

TEST_CASE("check_outcome and solve_all agree") {
    ConstraintSet cs = fig5_constraints();
    const auto& vars = *cs.vars;
    auto feasible = solve_all(cs);
    // Brute-force recount against check_outcome.
    std::size_t count = 0;
    for (const Outcome& o : enumerate_outcomes(vars))
        count += check_outcome(cs, o) ? 1u : 0u;
    CHECK(feasible.size() == count);
    CHECK(count > 0);
    for (const Outcome& o : feasible) CHECK(check_outcome(cs, o));

    // The documented solver answer is feasible; the all-a1 outcome is not
    // (it breaks 'if A=a1 then B=b2').
    CHECK(check_outcome(cs, outcome_of(vars, {"a2", "b2", "c1", "d1"})));
    CHECK_FALSE(check_outcome(cs, outcome_of(vars, {"a1", "b1", "c1", "d1"})));

    // Once a literal is fixed, feasibility is relative to it.
    int A = vars.var_index("A");
    ConstraintSet at_a1 = strengthen(cs, A, vars.value_index(A, "a1"));
    for (const Outcome& o : solve_all(at_a1))
        CHECK(o[static_cast<std::size_t>(A)] ==
              static_cast<std::uint8_t>(vars.value_index(A, "a1")));
}

TEST_CASE("an unconstrained set accepts everything") {
    auto doc = load_fixture("fig3-cpnet");
    ConstraintSet cs = ConstraintSet::empty(doc.vars);
    CHECK(solve_all(cs).size() == 8);
    PropagationResult pr = propagate(cs);
    CHECK(pr.consistent);
    CHECK(pr.induced.empty());
}

TEST_CASE("constraint validation rejects malformed sets") {
    auto doc = load_fixture("fig3-cpnet");
    ConstraintSet cs = ConstraintSet::empty(doc.vars);

    Constraint bad_arity;
    bad_arity.scope = {};
    cs.constraints = {bad_arity};
    CHECK_ERROR_CODE(validate(cs), InvalidModel);

    Constraint dup_scope;
    dup_scope.scope = {0, 0};
    dup_scope.allowed = {{0, 0}};
    cs.constraints = {dup_scope};
    CHECK_ERROR_CODE(validate(cs), InvalidModel);

    Constraint bad_tuple;
    bad_tuple.scope = {0, 1};
    bad_tuple.allowed = {{0, 9}};
    cs.constraints = {bad_tuple};
    CHECK_ERROR_CODE(validate(cs), InvalidModel);

    Constraint empty_allowed;  // legal: plainly infeasible
    empty_allowed.scope = {0};
    cs.constraints = {empty_allowed};
    validate(cs);
    CHECK(solve_all(cs).empty());
    CHECK_FALSE(propagate(cs).consistent);
}
