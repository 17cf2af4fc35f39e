// prefq — command-line front end for the preference-reasoning library.
//
// Subcommands: check, optimal, dominance, order, solve, enumerate, gen,
// selftest. Exit codes: 0 the query ran and its answer was printed; 2 usage
// error; 3 invalid model; 4 a budget or size cap was exceeded. Answers go to
// standard output, diagnostics to standard error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "prefcore/generator.hpp"
#include "prefcore/model_io.hpp"
#include "prefcore/selftest.hpp"
#include "prefcore/solvers.hpp"

namespace {

using namespace prefcore;

constexpr int kExitAnswered = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidModel = 3;
constexpr int kExitCapExceeded = 4;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::BudgetExhausted:
        case ErrorCode::TooManyOutcomes:
            return kExitCapExceeded;
        // Problems with command-line arguments (bindings, config values).
        case ErrorCode::UnknownVariable:
        case ErrorCode::UnknownValue:
        case ErrorCode::UnboundVariable:
        case ErrorCode::ConflictingBinding:
        case ErrorCode::EqualOutcomes:
        case ErrorCode::InvalidConfig:
            return kExitUsage;
        // Everything else marks a model that cannot serve the query.
        default:
            return kExitInvalidModel;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ModelDocument load(const std::string& path) {
    return parse_model(read_file(path));
}

// Parses "A=a1,B=b2" into a full outcome; every variable must be bound.
Outcome parse_outcome_arg(const VariableSet& vars, const std::string& text) {
    PartialAssignment a(vars.size());
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(start, end - start);
        std::size_t eq = item.find('=');
        if (item.empty() || eq == std::string::npos)
            throw Error(ErrorCode::UnknownVariable,
                        "binding '" + item + "' is not of the form Var=value");
        int var = vars.var_index(item.substr(0, eq));
        int val = vars.value_index(var, item.substr(eq + 1));
        if (a.bound(var) && a[var] != val)
            throw Error(ErrorCode::ConflictingBinding,
                        "variable bound twice in '" + text + "'");
        a.bind(var, val);
        start = end + 1;
    }
    Outcome o(static_cast<std::size_t>(vars.size()));
    for (int v = 0; v < vars.size(); ++v)
        o[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>(a.value_of(v));  // throws if unbound
    return o;
}

int run_check(const std::string& file) {
    load(file);
    std::cout << "ok\n";
    return kExitAnswered;
}

int run_optimal(const std::string& file) {
    auto doc = load(file);
    Outcome best;
    switch (doc.kind) {
        case ModelKind::Cpnet: best = forward_sweep(*doc.cpnet); break;
        case ModelKind::Cprnet: best = best_outcome(*doc.cprnet); break;
        case ModelKind::Lptree: best = lex_head(*doc.lptree); break;
    }
    std::cout << format_outcome(*doc.vars, best) << "\n";
    return kExitAnswered;
}

int run_dominance(const std::string& file, const std::string& o1_text,
                  const std::string& o2_text, bool use_oracle, bool witness,
                  std::uint64_t budget, bool budget_given) {
    auto doc = load(file);
    if (doc.kind != ModelKind::Cpnet &&
        (use_oracle || witness || budget_given)) {
        std::cerr << "prefq: --oracle, --witness, and --budget apply only to "
                     "cpnet models\n";
        return kExitUsage;
    }
    Outcome o1 = parse_outcome_arg(*doc.vars, o1_text);
    Outcome o2 = parse_outcome_arg(*doc.vars, o2_text);
    if (o1 == o2) {  // a strict order is irreflexive
        std::cout << "no\n";
        return kExitAnswered;
    }
    bool yes = false;
    std::vector<Outcome> flips;
    switch (doc.kind) {
        case ModelKind::Cpnet:
            if (use_oracle) {
                auto r = dominance_oracle(*doc.cpnet, o1, o2);
                yes = r.dominates;
                flips = std::move(r.witness);
            } else {
                auto r = acyclic_cp_dt(*doc.cpnet, o1, o2, budget);
                yes = r.yes;
                flips = std::move(r.witness);
            }
            break;
        case ModelKind::Cprnet:
            yes = compare(*doc.cprnet, o1, o2) == CompareResult::FirstPreferred;
            break;
        case ModelKind::Lptree:
            yes = lp_compare(*doc.lptree, o1, o2) ==
                  CompareResult::FirstPreferred;
            break;
    }
    std::cout << (yes ? "yes" : "no") << "\n";
    if (yes && witness)
        for (const Outcome& o : flips)
            std::cout << format_outcome(*doc.vars, o) << "\n";
    return kExitAnswered;
}

int run_order(const std::string& file, const std::string& o1_text,
              const std::string& o2_text) {
    auto doc = load(file);
    Outcome o1 = parse_outcome_arg(*doc.vars, o1_text);
    Outcome o2 = parse_outcome_arg(*doc.vars, o2_text);
    if (o1 == o2) {
        std::cerr << "prefq: order requires two distinct outcomes\n";
        return kExitUsage;
    }
    switch (doc.kind) {
        case ModelKind::Cpnet:
            std::cout << (ordering_query(*doc.cpnet, o1, o2) ==
                                  OrderingAnswer::NotPreferred
                              ? "not-preferred"
                              : "unknown")
                      << "\n";
            break;
        case ModelKind::Cprnet:
            std::cout << (compare(*doc.cprnet, o1, o2) ==
                                  CompareResult::FirstPreferred
                              ? "preferred"
                              : "not-preferred")
                      << "\n";
            break;
        case ModelKind::Lptree:
            std::cout << (lp_compare(*doc.lptree, o1, o2) ==
                                  CompareResult::FirstPreferred
                              ? "preferred"
                              : "not-preferred")
                      << "\n";
            break;
    }
    return kExitAnswered;
}

int run_solve(const std::string& file, bool trace) {
    auto doc = load(file);
    if (doc.kind == ModelKind::Cpnet) {
        std::cerr << "prefq: solve needs a cprnet or lptree model (a plain "
                     "cpnet induces no total order to search)\n";
        return kExitUsage;
    }
    if (!doc.constraints) {
        std::cerr << "prefq: solve requires a constraints section (add a "
                     "'constraints' line for an unconstrained run)\n";
        return kExitUsage;
    }
    SolveResult res = doc.kind == ModelKind::Cprnet
                          ? search_cpr(*doc.cprnet, *doc.constraints)
                          : search_lp(*doc.lptree, *doc.constraints);
    if (trace)
        for (const auto& ev : res.trace) std::cerr << ev.detail << "\n";
    if (res.outcome)
        std::cout << format_outcome(*doc.vars, *res.outcome) << "\n";
    else
        std::cout << "infeasible\n";
    return kExitAnswered;
}

int run_enumerate(const std::string& file) {
    auto doc = load(file);
    std::vector<Outcome> order;
    switch (doc.kind) {
        case ModelKind::Cpnet:
            std::cerr << "prefq: enumerate needs a cprnet or lptree model (a "
                         "plain cpnet induces no total order)\n";
            return kExitUsage;
        case ModelKind::Cprnet: order = total_order(*doc.cprnet); break;
        case ModelKind::Lptree: order = total_order(*doc.lptree); break;
    }
    for (const Outcome& o : order)
        std::cout << format_outcome(*doc.vars, o) << "\n";
    return kExitAnswered;
}

int run_gen(const GeneratorConfig& cfg, const std::string& out_path) {
    auto doc = generate(cfg);
    std::string text = print_model(doc);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write file: " + out_path);
        out << text;
    }
    return kExitAnswered;
}

int run_selftest(int percent, std::uint64_t seed) {
    bool ok = true;
    for (const auto& suite : run_all_suites(percent, seed)) {
        std::cout << suite.name << ": " << suite.instances << " instances, "
                  << suite.checks << " checks, " << suite.failures
                  << " failures — " << (suite.passed() ? "PASS" : "FAIL")
                  << "\n";
        if (!suite.passed()) {
            ok = false;
            if (!suite.first_failure.empty())
                std::cerr << suite.name << ": " << suite.first_failure << "\n";
        }
    }
    return ok ? kExitAnswered : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qualitative preference reasoning over CP-nets, CPR-nets, "
                 "and LP-trees under hard constraints"};
    app.require_subcommand(1);

    std::string file;
    std::string o1_text, o2_text;
    bool use_oracle = false, witness = false, trace = false;
    std::uint64_t budget = 10'000'000;

    auto* check = app.add_subcommand("check", "Parse and validate a model file");
    check->add_option("file", file, "model file")->required();

    auto* optimal =
        app.add_subcommand("optimal", "Print the model's most preferred outcome");
    optimal->add_option("file", file, "model file")->required();

    auto* dominance = app.add_subcommand(
        "dominance", "Does the model entail o1 strictly preferred to o2?");
    dominance->add_option("file", file, "model file")->required();
    dominance->add_option("--o1", o1_text, "first outcome, e.g. A=a1,B=b2")
        ->required();
    dominance->add_option("--o2", o2_text, "second outcome")->required();
    dominance->add_flag("--oracle", use_oracle,
                        "answer by exhaustive flip search (cpnet only)");
    dominance->add_flag("--witness", witness,
                        "print the improving flipping sequence (cpnet only)");
    auto* budget_opt = dominance->add_option(
        "--budget", budget,
        "sub-query budget for the divide-and-conquer search (cpnet only)");

    auto* order = app.add_subcommand(
        "order", "Can 'o1 preferred to o2' be certified or refuted in one step?");
    order->add_option("file", file, "model file")->required();
    order->add_option("--o1", o1_text, "first outcome")->required();
    order->add_option("--o2", o2_text, "second outcome")->required();

    auto* solve = app.add_subcommand(
        "solve", "Most preferred feasible outcome under the file's constraints");
    solve->add_option("file", file, "model file")->required();
    solve->add_flag("--trace", trace, "dump the search trace to stderr");

    auto* enumerate =
        app.add_subcommand("enumerate", "Print the induced total order");
    enumerate->add_option("file", file, "model file")->required();

    GeneratorConfig cfg;
    std::string kind_text = "cpnet";
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "Generate a random model document");
    gen->add_option("--kind", kind_text, "cpnet, cprnet, or lptree")
        ->check(CLI::IsMember({"cpnet", "cprnet", "lptree"}));
    gen->add_option("--var-count", cfg.var_count, "number of variables (1-26)");
    gen->add_option("--domain-size", cfg.domain_size, "values per variable (2-9)");
    gen->add_option("--max-parents", cfg.max_parents,
                    "cap on table conditioning variables");
    gen->add_option("--constraint-count", cfg.constraint_count,
                    "number of random constraints");
    gen->add_option("--tightness", cfg.tightness,
                    "fraction of tuples forbidden per constraint [0,1]");
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("-o,--out", out_path, "output file (stdout if omitted)");

    int percent = 10;
    std::uint64_t selftest_seed = 2026;
    auto* selftest = app.add_subcommand(
        "selftest", "Run the randomized cross-check suites");
    selftest->add_option("--percent", percent,
                         "scale of the acceptance-size corpora (1-100)")
        ->check(CLI::Range(1, 100));
    selftest->add_option("--seed", selftest_seed, "corpus seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;  // --help exits 0, usage errors 2
    }

    try {
        if (app.got_subcommand(check)) return run_check(file);
        if (app.got_subcommand(optimal)) return run_optimal(file);
        if (app.got_subcommand(dominance))
            return run_dominance(file, o1_text, o2_text, use_oracle, witness,
                                 budget, budget_opt->count() > 0);
        if (app.got_subcommand(order)) return run_order(file, o1_text, o2_text);
        if (app.got_subcommand(solve)) return run_solve(file, trace);
        if (app.got_subcommand(enumerate)) return run_enumerate(file);
        if (app.got_subcommand(gen)) {
            if (kind_text == "cprnet") cfg.kind = ModelKind::Cprnet;
            else if (kind_text == "lptree") cfg.kind = ModelKind::Lptree;
            else cfg.kind = ModelKind::Cpnet;
            return run_gen(cfg, out_path);
        }
        if (app.got_subcommand(selftest))
            return run_selftest(percent, selftest_seed);
    } catch (const Error& e) {
        std::cerr << "prefq: " << e.what() << " [" << error_code_name(e.code())
                  << "]\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "prefq: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
