#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "prefcore/cprnet.hpp"

using namespace prefcore;
using prefcore::testing::formatted;
using prefcore::testing::load_fixture;
using prefcore::testing::outcome_of;

TEST_CASE("importance statements must cover exactly the non-arcs") {
    auto fig3 = load_fixture("fig3-cpnet");
    const CpNet& base = *fig3.cpnet;
    int A = 0, B = 1, C = 2;

    CHECK_ERROR_CODE(build_cprnet(base, {}), NopUncovered);
    CHECK_ERROR_CODE(build_cprnet(base, {{A, B}}), AriNotOnNop);
    CHECK_ERROR_CODE(build_cprnet(base, {{A, A}}), AriNotOnNop);
    CHECK_ERROR_CODE(build_cprnet(base, {{A, C}, {C, A}}), AriNotOnNop);
    // C more important than A closes the cycle A -> B -> C -> A.
    CHECK_ERROR_CODE(build_cprnet(base, {{C, A}}), CyclicCprNet);

    CprNet net = build_cprnet(base, {{A, C}});
    CHECK(unique_topo_order(net) == std::vector<int>{A, B, C});

    auto fig1 = load_fixture("fig1-cpnet");
    CHECK_ERROR_CODE(build_cprnet(*fig1.cpnet, {{0, 2}, {0, 3}, {1, 3}, {2, 3}}),
                     NotTotallyDependent);
}

TEST_CASE("the induced total order is the documented one") {
    auto fig4 = load_fixture("fig4-cprnet");
    const CprNet& net = *fig4.cprnet;
    const auto& vars = *fig4.vars;

    CHECK(formatted(vars, total_order(net)) ==
          std::vector<std::string>{
              "A=a1,B=b1,C=c1", "A=a1,B=b1,C=c2", "A=a1,B=b2,C=c2",
              "A=a1,B=b2,C=c1", "A=a2,B=b2,C=c2", "A=a2,B=b2,C=c1",
              "A=a2,B=b1,C=c1", "A=a2,B=b1,C=c2"});
    CHECK(best_outcome(net) == outcome_of(vars, {"a1", "b1", "c1"}));
}

TEST_CASE("compare decides by the first difference in the unique order") {
    auto fig4 = load_fixture("fig4-cprnet");
    const CprNet& net = *fig4.cprnet;
    const auto& vars = *fig4.vars;

    // A difference on A outweighs both B and C...
    CHECK(compare(net, outcome_of(vars, {"a1", "b2", "c2"}),
                  outcome_of(vars, {"a2", "b1", "c1"})) ==
          CompareResult::FirstPreferred);
    // ...and with A shared, B (under a2: b2 preferred) outweighs C.
    CHECK(compare(net, outcome_of(vars, {"a2", "b2", "c1"}),
                  outcome_of(vars, {"a2", "b1", "c2"})) ==
          CompareResult::FirstPreferred);
    CHECK(compare(net, outcome_of(vars, {"a2", "b1", "c1"}),
                  outcome_of(vars, {"a2", "b2", "c2"})) ==
          CompareResult::SecondPreferred);
    CHECK_ERROR_CODE(compare(net, outcome_of(vars, {"a1", "b1", "c1"}),
                             outcome_of(vars, {"a1", "b1", "c1"})),
                     EqualOutcomes);

    // compare() and the enumerated order agree on every adjacent pair.
    auto order = total_order(net);
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        CHECK(compare(net, order[i], order[i + 1]) ==
              CompareResult::FirstPreferred);
}
