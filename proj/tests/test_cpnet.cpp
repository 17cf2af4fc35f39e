#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "prefcore/cpnet.hpp"

using namespace prefcore;
using prefcore::testing::load_fixture;
using prefcore::testing::outcome_of;

TEST_CASE("preference rows: total mode") {
    auto row = PreferenceRow::total({1, 0, 2});
    CHECK(row.is_total());
    CHECK(row.prefers(1, 0));
    CHECK(row.prefers(0, 2));
    CHECK(row.prefers(1, 2));
    CHECK_FALSE(row.prefers(2, 0));
    CHECK_FALSE(row.prefers(1, 1));
    CHECK(row.order() == std::vector<std::uint8_t>{1, 0, 2});
    CHECK(row.better_than(2) == std::vector<std::uint8_t>{1, 0});
    CHECK(row.better_than(1).empty());
    CHECK_ERROR_CODE(PreferenceRow::total({0, 0, 1}), InvalidModel);
}

TEST_CASE("preference rows: partial mode closes transitively") {
    auto row = PreferenceRow::partial(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(row.is_total());
    CHECK(row.prefers(0, 2));  // via 0 > 1 > 2
    CHECK_FALSE(row.prefers(2, 0));
    CHECK(row.better_than(2) == std::vector<std::uint8_t>{0, 1});

    auto sparse = PreferenceRow::partial(3, {{0, 1}});
    CHECK_FALSE(sparse.prefers(0, 2));
    CHECK_FALSE(sparse.prefers(2, 1));

    CHECK_ERROR_CODE(PreferenceRow::partial(2, {{0, 0}}), InvalidModel);
    CHECK_ERROR_CODE(PreferenceRow::partial(2, {{0, 1}, {1, 0}}), InvalidModel);
    CHECK_ERROR_CODE(PreferenceRow::partial(3, {{0, 1}, {1, 2}, {2, 0}}),
                     InvalidModel);
}

TEST_CASE("network construction validates structure") {
    auto vars = std::make_shared<VariableSet>(std::vector<VariableSet::Variable>{
        {"A", {"a1", "a2"}}, {"B", {"b1", "b2"}}});
    auto r2 = [] { return PreferenceRow::total({0, 1}); };

    // A–B parent cycle.
    std::vector<Cpt> cyclic(2);
    cyclic[0] = Cpt{0, {1}, {r2(), r2()}};
    cyclic[1] = Cpt{1, {0}, {r2(), r2()}};
    CHECK_ERROR_CODE(CpNet::over(vars, cyclic), CyclicNetwork);

    // Row count must match the parent assignment space.
    std::vector<Cpt> short_rows(2);
    short_rows[0] = Cpt{0, {}, {r2()}};
    short_rows[1] = Cpt{1, {0}, {r2()}};
    CHECK_ERROR_CODE(CpNet::over(vars, short_rows), InvalidModel);

    std::vector<Cpt> ok(2);
    ok[0] = Cpt{0, {}, {r2()}};
    ok[1] = Cpt{1, {0}, {r2(), r2()}};
    CpNet net = CpNet::over(vars, ok);
    CHECK(net.active == std::vector<int>{0, 1});
    CHECK(net.topo == std::vector<int>{0, 1});
    validate(net);
}

TEST_CASE("fixture nets expose their structure") {
    auto fig1 = load_fixture("fig1-cpnet");
    const CpNet& n1 = *fig1.cpnet;
    CHECK(n1.topo == std::vector<int>{0, 1, 2, 3});  // A, B, C, D

    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& n2 = *fig3.cpnet;
    CHECK(n2.topo == std::vector<int>{0, 1, 2});
    CHECK(nop_pairs(n2) == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(nop_pairs(n1).size() == 4);  // A-C plus D against everything
}

TEST_CASE("arc classification distinguishes total from partial dependence") {
    auto fig1 = load_fixture("fig1-cpnet");
    const CpNet& n1 = *fig1.cpnet;
    const auto& vars = *fig1.vars;
    int A = vars.var_index("A"), B = vars.var_index("B"), C = vars.var_index("C");

    CHECK(classify_arc(n1, A, B) == ArcClass::TotalDependency);
    // b1 and b3 select identical rows of CPT(C), so C only partially
    // depends on B.
    CHECK(classify_arc(n1, B, C) == ArcClass::PartialDependency);
    CHECK_ERROR_CODE(classify_arc(n1, A, C), UnknownArc);
    CHECK_FALSE(is_totally_dependent(n1));
    CHECK_ERROR_CODE(induced_importance(n1), NotTotallyDependent);

    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& n2 = *fig3.cpnet;
    CHECK(is_totally_dependent(n2));
    CHECK(induced_importance(n2) ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("improving flips follow the tables") {
    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& net = *fig3.cpnet;
    const auto& vars = *fig3.vars;

    auto flips = improving_flips(net, outcome_of(vars, {"a2", "b1", "c2"}));
    REQUIRE(flips.size() == 3);
    CHECK(flips[0] == outcome_of(vars, {"a1", "b1", "c2"}));
    CHECK(flips[1] == outcome_of(vars, {"a2", "b2", "c2"}));
    CHECK(flips[2] == outcome_of(vars, {"a2", "b1", "c1"}));

    CHECK(improving_flips(net, outcome_of(vars, {"a1", "b1", "c1"})).empty());
}

TEST_CASE("flip-search dominance answers the documented queries") {
    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& net = *fig3.cpnet;
    const auto& vars = *fig3.vars;
    auto o = [&](const char* a, const char* b, const char* c) {
        return outcome_of(vars, {a, b, c});
    };

    CHECK_FALSE(dominance_oracle(net, o("a2", "b2", "c2"), o("a1", "b1", "c1"))
                    .dominates);

    auto q2 = dominance_oracle(net, o("a2", "b2", "c2"), o("a2", "b1", "c2"));
    CHECK(q2.dominates);
    CHECK(q2.witness == std::vector<Outcome>{o("a2", "b1", "c2"),
                                             o("a2", "b2", "c2")});

    // Two distinct flipping sequences exist; breadth-first search returns a
    // shortest one, here of two flips.
    auto q3 = dominance_oracle(net, o("a1", "b1", "c1"), o("a2", "b1", "c2"));
    CHECK(q3.dominates);
    CHECK(q3.witness == std::vector<Outcome>{o("a2", "b1", "c2"),
                                             o("a1", "b1", "c2"),
                                             o("a1", "b1", "c1")});

    auto q4 = dominance_oracle(net, o("a1", "b1", "c2"), o("a2", "b1", "c1"));
    CHECK(q4.dominates);
    CHECK(q4.witness == std::vector<Outcome>{
                            o("a2", "b1", "c1"), o("a2", "b2", "c1"),
                            o("a1", "b2", "c1"), o("a1", "b2", "c2"),
                            o("a1", "b1", "c2")});

    // A strict order is irreflexive; the oracle reports plain non-dominance.
    CHECK_FALSE(dominance_oracle(net, o("a1", "b1", "c1"), o("a1", "b1", "c1"))
                    .dominates);
}

TEST_CASE("one-shot ordering certificates") {
    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& net = *fig3.cpnet;
    const auto& vars = *fig3.vars;

    // First differing variable is A and CPT(A) ranks a1 above a2, so
    // "a2... preferred" is certainly false while "a1... preferred" stays open.
    CHECK(ordering_query(net, outcome_of(vars, {"a2", "b2", "c2"}),
                         outcome_of(vars, {"a1", "b1", "c1"})) ==
          OrderingAnswer::NotPreferred);
    CHECK(ordering_query(net, outcome_of(vars, {"a1", "b1", "c1"}),
                         outcome_of(vars, {"a2", "b2", "c2"})) ==
          OrderingAnswer::Unknown);
    CHECK_ERROR_CODE(ordering_query(net, outcome_of(vars, {"a1", "b1", "c1"}),
                                    outcome_of(vars, {"a1", "b1", "c1"})),
                     EqualOutcomes);
}

TEST_CASE("forward sweep finds the optimum") {
    auto fig1 = load_fixture("fig1-cpnet");
    CHECK(format_outcome(*fig1.vars, forward_sweep(*fig1.cpnet)) ==
          "A=a1,B=b1,C=c1,D=d1");

    auto fig3 = load_fixture("fig3-cpnet");
    CHECK(format_outcome(*fig3.vars, forward_sweep(*fig3.cpnet)) ==
          "A=a1,B=b1,C=c1");
}

TEST_CASE("restrict freezes an ancestor-closed context") {
    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& net = *fig3.cpnet;
    const auto& vars = *fig3.vars;
    int A = vars.var_index("A"), B = vars.var_index("B"), C = vars.var_index("C");

    PartialAssignment at_a1(vars.size());
    at_a1.bind(A, vars.value_index(A, "a1"));
    CpNet r = restrict(net, at_a1);
    CHECK(r.active == std::vector<int>{B, C});
    CHECK(r.context.value_of(A) == vars.value_index(A, "a1"));
    CHECK(r.topo == std::vector<int>{B, C});
    // CPT(B) collapses to the single row selected by a1.
    REQUIRE(r.cpt(B).parents.empty());
    REQUIRE(r.cpt(B).rows.size() == 1);
    CHECK(r.cpt(B).rows[0].order() == std::vector<std::uint8_t>{0, 1});
    // The optimum of the restriction is still full-width.
    CHECK(format_outcome(vars, forward_sweep(r)) == "A=a1,B=b1,C=c1");
    validate(r);

    // B's parent A is unbound, so {B=b1} is not ancestor-closed.
    PartialAssignment at_b1(vars.size());
    at_b1.bind(B, vars.value_index(B, "b1"));
    CHECK_ERROR_CODE(restrict(net, at_b1), NotAncestorClosed);

    // The closure-free variant slices the surviving tables instead.
    CpNet q = reduce_by_assignment(net, at_b1);
    CHECK(q.active == std::vector<int>{A, C});
    REQUIRE(q.cpt(C).parents.empty());
    REQUIRE(q.cpt(C).rows.size() == 1);
    CHECK(q.cpt(C).rows[0].order() == std::vector<std::uint8_t>{0, 1});
    validate(q);
}
