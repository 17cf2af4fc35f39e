#include "prefcore/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "prefcore/errors.hpp"
#include "prefcore/rng.hpp"

namespace prefcore {

namespace {

void check_config(const GeneratorConfig& cfg) {
    if (cfg.var_count < 1 || cfg.var_count > 26)
        throw Error(ErrorCode::InvalidConfig,
                    "var count must be between 1 and 26");
    if (cfg.domain_size < 2 || cfg.domain_size > 9)
        throw Error(ErrorCode::InvalidConfig,
                    "domain size must be between 2 and 9");
    if (cfg.max_parents < 0)
        throw Error(ErrorCode::InvalidConfig, "max parents must be >= 0");
    if (cfg.constraint_count < 0)
        throw Error(ErrorCode::InvalidConfig, "constraint count must be >= 0");
    if (!(cfg.tightness >= 0.0 && cfg.tightness <= 1.0))
        throw Error(ErrorCode::InvalidConfig,
                    "tightness must be within [0, 1]");
}

VariableSetPtr make_vars(const GeneratorConfig& cfg) {
    std::vector<VariableSet::Variable> vars;
    for (int i = 0; i < cfg.var_count; ++i) {
        VariableSet::Variable v;
        v.name = std::string(1, static_cast<char>('A' + i));
        char low = static_cast<char>('a' + i);
        for (int k = 1; k <= cfg.domain_size; ++k)
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

// Draws the variable processing order and, for each variable, a parent set
// from the variables placed before it.
struct Skeleton {
    std::vector<int> order;                 // construction order
    std::vector<std::vector<int>> parents;  // indexed by variable
};

Skeleton draw_skeleton(Rng& rng, const GeneratorConfig& cfg) {
    Skeleton sk;
    {
        auto perm = random_order(rng, cfg.var_count);
        sk.order.assign(perm.begin(), perm.end());
    }
    sk.parents.resize(static_cast<std::size_t>(cfg.var_count));
    for (int i = 1; i < cfg.var_count; ++i) {
        int cap = std::min(i, cfg.max_parents);
        int k = cap == 0 ? 0 : static_cast<int>(rng.pick(0, cap));
        auto prefix_picks = rng.sample(i, k);
        std::vector<int> ps;
        for (int p : prefix_picks) ps.push_back(sk.order[p]);
        std::sort(ps.begin(), ps.end());
        sk.parents[static_cast<std::size_t>(sk.order[i])] = std::move(ps);
    }
    return sk;
}

std::size_t row_count_for(const VariableSet& vars,
                          const std::vector<int>& parents) {
    std::size_t n = 1;
    for (int p : parents) n *= static_cast<std::size_t>(vars.domain_size(p));
    return n;
}

std::vector<Cpt> draw_cpnet_tables(Rng& rng, const VariableSet& vars,
                                   const Skeleton& sk) {
    std::vector<Cpt> cpts;
    for (int x : sk.order) {
        Cpt cpt;
        cpt.var = x;
        cpt.parents = sk.parents[static_cast<std::size_t>(x)];
        std::size_t rows = row_count_for(vars, cpt.parents);
        for (std::size_t r = 0; r < rows; ++r)
            cpt.rows.push_back(
                PreferenceRow::total(random_order(rng, vars.domain_size(x))));
        cpts.push_back(std::move(cpt));
    }
    return cpts;
}

// Tables where every arc is totally dependent: pick d distinct total orders
// of the child's domain and give the parent context with digit sum s the
// order of index s mod d. Two values of any single parent then always select
// different orders under at least one context of the remaining parents (in
// fact under all of them), so no two slices of the table coincide.
std::vector<Cpt> draw_dependent_tables(Rng& rng, const VariableSet& vars,
                                       const Skeleton& sk) {
    int d = vars.domain_size(0);  // uniform domains by construction
    std::vector<Cpt> cpts;
    for (int x : sk.order) {
        Cpt cpt;
        cpt.var = x;
        cpt.parents = sk.parents[static_cast<std::size_t>(x)];
        std::vector<std::vector<std::uint8_t>> palette;
        while (static_cast<int>(palette.size()) < d) {
            auto cand = random_order(rng, d);
            if (std::find(palette.begin(), palette.end(), cand) ==
                palette.end())
                palette.push_back(std::move(cand));
        }
        std::size_t rows = row_count_for(vars, cpt.parents);
        std::vector<std::uint8_t> digits(cpt.parents.size(), 0);
        for (std::size_t r = 0; r < rows; ++r) {
            int sum = 0;
            for (std::uint8_t dg : digits) sum += dg;
            cpt.rows.push_back(PreferenceRow::total(
                palette[static_cast<std::size_t>(sum % d)]));
            for (std::size_t k = digits.size(); k-- > 0;) {
                if (++digits[k] < d) break;
                digits[k] = 0;
            }
        }
        cpts.push_back(std::move(cpt));
    }
    return cpts;
}

// Importance statements for exactly the variable pairs with no arc, oriented
// from the earlier variable in construction order to the later one.
std::vector<AriStatement> cover_non_arcs(const Skeleton& sk, int n) {
    std::vector<std::vector<bool>> arc(static_cast<std::size_t>(n),
                                       std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int p : sk.parents[static_cast<std::size_t>(x)])
            arc[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)] =
                true;
    std::vector<AriStatement> aris;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int a = sk.order[static_cast<std::size_t>(i)];
            int b = sk.order[static_cast<std::size_t>(j)];
            if (!arc[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                aris.push_back({a, b});
        }
    return aris;
}

constexpr std::size_t kMaxTreeNodes = 1u << 16;

std::unique_ptr<LpNode> draw_lp_subtree(Rng& rng, const VariableSet& vars,
                                        const GeneratorConfig& cfg,
                                        std::vector<int> remaining,
                                        const std::vector<int>& path,
                                        std::size_t& nodes) {
    if (++nodes > kMaxTreeNodes)
        throw Error(ErrorCode::InvalidConfig,
                    "importance tree would exceed 65536 nodes");
    auto node = std::make_unique<LpNode>();
    int at = rng.pick(0, static_cast<int>(remaining.size()) - 1);
    node->var = remaining[static_cast<std::size_t>(at)];
    remaining.erase(remaining.begin() + at);

    // Scope: a random subset of the path above this node.
    if (!path.empty() && cfg.max_parents > 0) {
        int cap = std::min<int>(static_cast<int>(path.size()), cfg.max_parents);
        int k = static_cast<int>(rng.pick(0, cap));
        auto picks = rng.sample(static_cast<int>(path.size()), k);
        for (int p : picks) node->scope.push_back(path[p]);
        std::sort(node->scope.begin(), node->scope.end());
    }
    std::size_t rows = row_count_for(vars, node->scope);
    for (std::size_t r = 0; r < rows; ++r)
        node->rows.push_back(
            PreferenceRow::total(random_order(rng, vars.domain_size(node->var))));

    if (remaining.empty()) return node;

    // Partition this variable's domain into one or two label groups.
    int d = vars.domain_size(node->var);
    int groups = d >= 2 && rng.chance(0.5) ? 2 : 1;
    std::vector<std::vector<std::uint8_t>> labels(
        static_cast<std::size_t>(groups));
    auto values = random_order(rng, d);
    for (int g = 0; g < groups; ++g)
        labels[static_cast<std::size_t>(g)].push_back(
            values[static_cast<std::size_t>(g)]);
    for (int i = groups; i < d; ++i)
        labels[static_cast<std::size_t>(rng.pick(0, groups - 1))].push_back(
            values[static_cast<std::size_t>(i)]);
    for (auto& g : labels) std::sort(g.begin(), g.end());
    std::sort(labels.begin(), labels.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });

    std::vector<int> deeper = path;
    deeper.push_back(node->var);
    for (auto& g : labels) {
        LpNode::Child child;
        child.labels = std::move(g);
        child.node =
            draw_lp_subtree(rng, vars, cfg, remaining, deeper, nodes);
        node->children.push_back(std::move(child));
    }
    return node;
}

std::vector<Constraint> draw_constraints(Rng& rng, const VariableSet& vars,
                                         const GeneratorConfig& cfg) {
    int n = vars.size();
    std::vector<Constraint> cs;
    for (int c = 0; c < cfg.constraint_count; ++c) {
        Constraint con;
        int arity = static_cast<int>(rng.pick(1, std::min(3, n)));
        auto scope = rng.sample(n, arity);
        std::sort(scope.begin(), scope.end());
        con.scope = scope;
        std::size_t total = 1;
        for (int v : con.scope)
            total *= static_cast<std::size_t>(vars.domain_size(v));
        auto forbidden_count = static_cast<std::size_t>(
            std::llround(cfg.tightness * static_cast<double>(total)));
        std::set<int> forbidden;
        for (int idx :
             rng.sample(static_cast<int>(total),
                        static_cast<int>(forbidden_count)))
            forbidden.insert(idx);
        std::vector<std::uint8_t> digits(con.scope.size(), 0);
        for (std::size_t t = 0; t < total; ++t) {
            if (!forbidden.count(static_cast<int>(t)))
                con.allowed.push_back(digits);
            for (std::size_t k = digits.size(); k-- > 0;) {
                if (++digits[k] < vars.domain_size(con.scope[k])) break;
                digits[k] = 0;
            }
        }
        cs.push_back(std::move(con));
    }
    return cs;
}

}  // namespace

ModelDocument generate(const GeneratorConfig& cfg) {
    check_config(cfg);
    Rng rng(cfg.seed);
    ModelDocument doc;
    doc.kind = cfg.kind;
    doc.vars = make_vars(cfg);
    const VariableSet& vars = *doc.vars;

    switch (cfg.kind) {
        case ModelKind::Cpnet: {
            auto sk = draw_skeleton(rng, cfg);
            doc.cpnet =
                CpNet::over(doc.vars, draw_cpnet_tables(rng, vars, sk));
            break;
        }
        case ModelKind::Cprnet: {
            auto sk = draw_skeleton(rng, cfg);
            auto cpts = draw_dependent_tables(rng, vars, sk);
            doc.cprnet = build_cprnet(CpNet::over(doc.vars, std::move(cpts)),
                                      cover_non_arcs(sk, cfg.var_count));
            break;
        }
        case ModelKind::Lptree: {
            std::vector<int> all(static_cast<std::size_t>(cfg.var_count));
            std::iota(all.begin(), all.end(), 0);
            std::size_t nodes = 0;
            auto root = draw_lp_subtree(rng, vars, cfg, std::move(all), {},
                                        nodes);
            doc.lptree = LpTree::over(doc.vars, std::move(root));
            break;
        }
    }
    if (cfg.constraint_count > 0) {
        ConstraintSet set = ConstraintSet::empty(doc.vars);
        set.constraints = draw_constraints(rng, vars, cfg);
        validate(set);
        doc.constraints = std::move(set);
    }
    return doc;
}

}  // namespace prefcore
