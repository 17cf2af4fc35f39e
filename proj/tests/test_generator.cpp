#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "prefcore/cpnet.hpp"
#include "prefcore/csp.hpp"
#include "prefcore/generator.hpp"

using namespace prefcore;

TEST_CASE("generation is a pure function of the configuration") {
    for (ModelKind kind : {ModelKind::Cpnet, ModelKind::Cprnet, ModelKind::Lptree}) {
        GeneratorConfig cfg;
        cfg.kind = kind;
        cfg.var_count = 4;
        cfg.domain_size = 3;
        cfg.constraint_count = 2;
        cfg.seed = 7;
        std::string once = print_model(generate(cfg));
        std::string twice = print_model(generate(cfg));
        CHECK(once == twice);

        cfg.seed = 8;
        CHECK(print_model(generate(cfg)) != once);
    }
}

TEST_CASE("generated documents are valid and round-trip") {
    for (ModelKind kind : {ModelKind::Cpnet, ModelKind::Cprnet, ModelKind::Lptree}) {
        for (int n : {1, 2, 4}) {
            for (std::uint64_t seed : {0u, 11u, 23u}) {
                CAPTURE(static_cast<int>(kind));
                CAPTURE(n);
                CAPTURE(seed);
                GeneratorConfig cfg;
                cfg.kind = kind;
                cfg.var_count = n;
                cfg.domain_size = 2 + static_cast<int>(seed % 2);
                cfg.constraint_count = static_cast<int>(seed % 3);
                cfg.tightness = 0.4;
                cfg.seed = seed;
                // generate() runs the structural validators itself; the parse
                // of the printed form re-runs them and must agree.
                ModelDocument doc = generate(cfg);
                ModelDocument again = parse_model(print_model(doc));
                CHECK(document_equal(doc, again));
                CHECK((cfg.constraint_count > 0) == doc.constraints.has_value());
            }
        }
    }
}

TEST_CASE("generated importance networks are totally dependent") {
    GeneratorConfig cfg;
    cfg.kind = ModelKind::Cprnet;
    cfg.var_count = 5;
    cfg.domain_size = 3;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        cfg.seed = seed;
        ModelDocument doc = generate(cfg);
        REQUIRE(doc.cprnet.has_value());
        CHECK(is_totally_dependent(doc.cprnet->base));
        // ARIs cover exactly the non-arcs (build_cprnet enforced it), and the
        // combined order is unique.
        CHECK(doc.cprnet->topo.size() == 5);
    }
}

TEST_CASE("tightness drives constraint hardness") {
    GeneratorConfig cfg;
    cfg.kind = ModelKind::Cpnet;
    cfg.var_count = 3;
    cfg.domain_size = 2;
    cfg.constraint_count = 3;
    cfg.seed = 5;

    cfg.tightness = 0.0;  // nothing forbidden: every outcome feasible
    ModelDocument loose = generate(cfg);
    REQUIRE(loose.constraints.has_value());
    CHECK(solve_all(*loose.constraints).size() == 8);

    cfg.tightness = 1.0;  // everything forbidden: no outcome feasible
    ModelDocument tight = generate(cfg);
    REQUIRE(tight.constraints.has_value());
    CHECK(solve_all(*tight.constraints).empty());
}

TEST_CASE("configuration ranges are enforced") {
    GeneratorConfig cfg;
    cfg.var_count = 0;
    CHECK_ERROR_CODE(generate(cfg), InvalidConfig);
    cfg.var_count = 27;
    CHECK_ERROR_CODE(generate(cfg), InvalidConfig);
    cfg.var_count = 4;
    cfg.domain_size = 1;
    CHECK_ERROR_CODE(generate(cfg), InvalidConfig);
    cfg.domain_size = 10;
    CHECK_ERROR_CODE(generate(cfg), InvalidConfig);
    cfg.domain_size = 2;
    cfg.max_parents = -1;
    CHECK_ERROR_CODE(generate(cfg), InvalidConfig);
    cfg.max_parents = 2;
    cfg.constraint_count = -1;
    CHECK_ERROR_CODE(generate(cfg), InvalidConfig);
    cfg.constraint_count = 0;
    cfg.tightness = -0.1;
    CHECK_ERROR_CODE(generate(cfg), InvalidConfig);
    cfg.tightness = 1.5;
    CHECK_ERROR_CODE(generate(cfg), InvalidConfig);
}

TEST_CASE("oversized importance trees are refused, not built") {
    GeneratorConfig cfg;
    cfg.kind = ModelKind::Lptree;
    cfg.var_count = 26;
    cfg.domain_size = 9;
    cfg.seed = 3;  // this draw splits often enough to pass 65536 nodes
    CHECK_ERROR_CODE(generate(cfg), InvalidConfig);
}
