#include "prefcore/lptree.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace prefcore {

std::size_t LpNode::row_index(const VariableSet& vars, const Outcome& o) const {
    std::size_t idx = 0;
    for (int s : scope)
        idx = idx * static_cast<std::size_t>(vars.domain_size(s)) + o[static_cast<std::size_t>(s)];
    return idx;
}

const LpNode* LpNode::child_for(int value) const {
    for (const Child& c : children)
        if (std::binary_search(c.labels.begin(), c.labels.end(),
                               static_cast<std::uint8_t>(value)))
            return c.node.get();
    return nullptr;
}

namespace {

std::unique_ptr<LpNode> clone_node(const LpNode* node) {
    if (!node) return nullptr;
    auto out = std::make_unique<LpNode>();
    out->var = node->var;
    out->scope = node->scope;
    out->rows = node->rows;
    for (const LpNode::Child& c : node->children)
        out->children.push_back({c.labels, clone_node(c.node.get())});
    return out;
}

bool node_equal(const LpNode* a, const LpNode* b) {
    if (!a || !b) return a == b;
    if (a->var != b->var || a->scope != b->scope || a->rows != b->rows) return false;
    if (a->children.size() != b->children.size()) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i) {
        if (a->children[i].labels != b->children[i].labels) return false;
        if (!node_equal(a->children[i].node.get(), b->children[i].node.get())) return false;
    }
    return true;
}

void collect_vars(const LpNode* node, std::set<int>& vars) {
    if (!node) return;
    vars.insert(node->var);
    for (const LpNode::Child& c : node->children) collect_vars(c.node.get(), vars);
}

std::size_t scope_row_count(const VariableSet& vars, const std::vector<int>& scope) {
    std::size_t n = 1;
    for (int s : scope) n *= static_cast<std::size_t>(vars.domain_size(s));
    return n;
}

void validate_node(const LpTree& tree, const LpNode* node, std::vector<int>& path) {
    const VariableSet& vars = *tree.vars;
    if (node->var < 0 || node->var >= vars.size())
        throw Error(ErrorCode::InvalidModel, "tree node variable out of range");
    const std::string& name = vars.var(node->var).name;
    if (std::find(path.begin(), path.end(), node->var) != path.end())
        throw Error(ErrorCode::VariableRepeated, name + " occurs twice on a path");
    if (std::find(tree.active.begin(), tree.active.end(), node->var) == tree.active.end())
        throw Error(ErrorCode::InvalidModel, name + " is not an active tree variable");
    for (std::size_t i = 0; i < node->scope.size(); ++i) {
        if (std::find(path.begin(), path.end(), node->scope[i]) == path.end())
            throw Error(ErrorCode::BadCptScope,
                        "scope of " + name + " reaches outside its ancestors");
        for (std::size_t j = i + 1; j < node->scope.size(); ++j)
            if (node->scope[i] == node->scope[j])
                throw Error(ErrorCode::BadCptScope, "scope of " + name + " repeats a variable");
    }
    if (node->rows.size() != scope_row_count(vars, node->scope))
        throw Error(ErrorCode::InvalidModel, "wrong number of rows at " + name);
    for (const PreferenceRow& r : node->rows) {
        if (!r.is_total())
            throw Error(ErrorCode::InvalidModel, "tree rows must be total orders at " + name);
        if (r.domain_size() != vars.domain_size(node->var))
            throw Error(ErrorCode::InvalidModel, "row domain size mismatch at " + name);
    }
    path.push_back(node->var);
    if (node->children.empty()) {
        // Leaf: the path must have decided every active variable.
        if (path.size() != tree.active.size())
            throw Error(ErrorCode::PathIncomplete,
                        "a branch below " + name + " misses some variables");
    } else {
        std::vector<bool> seen(static_cast<std::size_t>(vars.domain_size(node->var)), false);
        for (const LpNode::Child& c : node->children) {
            if (c.labels.empty() || !c.node)
                throw Error(ErrorCode::LabelNotPartition, "empty branch under " + name);
            if (!std::is_sorted(c.labels.begin(), c.labels.end()))
                throw Error(ErrorCode::InvalidModel,
                            "branch labels under " + name + " must be in domain order");
            for (std::uint8_t v : c.labels) {
                if (v >= seen.size())
                    throw Error(ErrorCode::LabelNotPartition,
                                "branch label out of range under " + name);
                if (seen[v])
                    throw Error(ErrorCode::LabelNotPartition,
                                "branch labels under " + name + " overlap");
                seen[v] = true;
            }
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw Error(ErrorCode::LabelNotPartition,
                        "branch labels under " + name + " miss a value");
        for (const LpNode::Child& c : node->children)
            validate_node(tree, c.node.get(), path);
    }
    path.pop_back();
}

}  // namespace

LpTree LpTree::over(VariableSetPtr vars, std::unique_ptr<LpNode> root) {
    LpTree tree;
    tree.vars = std::move(vars);
    tree.root = std::move(root);
    tree.context = PartialAssignment(tree.vars->size());
    for (int v = 0; v < tree.vars->size(); ++v) tree.active.push_back(v);
    validate(tree);
    return tree;
}

LpTree clone(const LpTree& tree) {
    LpTree out;
    out.vars = tree.vars;
    out.root = clone_node(tree.root.get());
    out.active = tree.active;
    out.context = tree.context;
    return out;
}

bool tree_equal(const LpTree& a, const LpTree& b) {
    return *a.vars == *b.vars && a.active == b.active && a.context == b.context &&
           node_equal(a.root.get(), b.root.get());
}

void validate(const LpTree& tree) {
    const VariableSet& vars = *tree.vars;
    if (!std::is_sorted(tree.active.begin(), tree.active.end()))
        throw Error(ErrorCode::InvalidModel, "active variable list must be ascending");
    for (int v = 0; v < vars.size(); ++v) {
        bool act = std::binary_search(tree.active.begin(), tree.active.end(), v);
        if (act && tree.context.bound(v))
            throw Error(ErrorCode::InvalidModel,
                        "active variable " + vars.var(v).name + " must not be frozen");
        if (!act && !tree.context.bound(v))
            throw Error(ErrorCode::InvalidModel,
                        "inactive variable " + vars.var(v).name + " needs a context value");
    }
    if (!tree.root) {
        if (!tree.active.empty())
            throw Error(ErrorCode::PathIncomplete, "empty tree with active variables");
        return;
    }
    if (tree.active.empty())
        throw Error(ErrorCode::InvalidModel, "rooted tree with no active variables");
    std::set<int> used;
    collect_vars(tree.root.get(), used);
    for (int v : tree.active)
        if (!used.count(v))
            throw Error(ErrorCode::PathIncomplete,
                        vars.var(v).name + " appears on no path");
    std::vector<int> path;
    validate_node(tree, tree.root.get(), path);
}

CompareResult lp_compare(const LpTree& tree, const Outcome& o1, const Outcome& o2) {
    const LpNode* node = tree.root.get();
    while (node) {
        std::uint8_t a = o1[static_cast<std::size_t>(node->var)];
        std::uint8_t b = o2[static_cast<std::size_t>(node->var)];
        if (a != b) {
            // Scope variables are path ancestors, on which the outcomes agree.
            const PreferenceRow& row = node->row_for(*tree.vars, o1);
            return row.prefers(a, b) ? CompareResult::FirstPreferred
                                     : CompareResult::SecondPreferred;
        }
        node = node->child_for(a);
    }
    throw Error(ErrorCode::EqualOutcomes, "comparison needs distinct outcomes");
}

namespace {

void emit_in_order(const LpTree& tree, const LpNode* node, Outcome& cur,
                   std::vector<Outcome>& out) {
    if (!node) {
        out.push_back(cur);
        return;
    }
    const PreferenceRow& row = node->row_for(*tree.vars, cur);
    for (std::uint8_t val : row.order()) {
        cur[static_cast<std::size_t>(node->var)] = val;
        emit_in_order(tree, node->child_for(val), cur, out);
    }
}

Outcome context_outcome(const LpTree& tree) {
    Outcome o(static_cast<std::size_t>(tree.vars->size()), 0);
    for (int i = 0; i < tree.vars->size(); ++i)
        if (tree.context.bound(i))
            o[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(tree.context[i]);
    return o;
}

}  // namespace

std::vector<Outcome> total_order(const LpTree& tree, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (int v : tree.active) {
        count *= static_cast<std::uint64_t>(tree.vars->domain_size(v));
        if (count > cap)
            throw Error(ErrorCode::TooManyOutcomes,
                        "outcome space exceeds cap of " + std::to_string(cap));
    }
    std::vector<Outcome> out;
    out.reserve(static_cast<std::size_t>(count));
    Outcome cur = context_outcome(tree);
    emit_in_order(tree, tree.root.get(), cur, out);
    return out;
}

Outcome lex_head(const LpTree& tree) {
    Outcome o = context_outcome(tree);
    const LpNode* node = tree.root.get();
    while (node) {
        std::uint8_t best = node->row_for(*tree.vars, o).order()[0];
        o[static_cast<std::size_t>(node->var)] = best;
        node = node->child_for(best);
    }
    return o;
}

namespace {

// Copy `node` while applying the reduction for `w`: bound nodes are replaced
// by their matching child branch, descendant tables lose the bound scope
// variables (rows sliced at the bound values), and structurally identical
// siblings are merged bottom-up.
std::unique_ptr<LpNode> reduce_node(const VariableSet& vars, const LpNode* node,
                                    const PartialAssignment& w) {
    if (w.bound(node->var)) {
        const LpNode* kept = node->child_for(w[node->var]);
        return kept ? reduce_node(vars, kept, w) : nullptr;
    }
    auto out = std::make_unique<LpNode>();
    out->var = node->var;
    for (int s : node->scope)
        if (!w.bound(s)) out->scope.push_back(s);
    std::size_t n = scope_row_count(vars, out->scope);
    out->rows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t rem = k;
        std::vector<std::size_t> kept(out->scope.size());
        for (std::size_t i = out->scope.size(); i-- > 0;) {
            kept[i] = rem % static_cast<std::size_t>(vars.domain_size(out->scope[i]));
            rem /= static_cast<std::size_t>(vars.domain_size(out->scope[i]));
        }
        std::size_t idx = 0, ki = 0;
        for (int s : node->scope) {
            std::size_t digit = w.bound(s) ? static_cast<std::size_t>(w[s]) : kept[ki++];
            idx = idx * static_cast<std::size_t>(vars.domain_size(s)) + digit;
        }
        out->rows.push_back(node->rows[idx]);
    }
    bool first = true, subtrees_remain = false;
    for (const LpNode::Child& c : node->children) {
        std::unique_ptr<LpNode> sub = reduce_node(vars, c.node.get(), w);
        // Sibling branches decide the same variable set, so they vanish
        // together or not at all.
        if (first) {
            subtrees_remain = (sub != nullptr);
            first = false;
        } else {
            assert((sub != nullptr) == subtrees_remain);
        }
        if (sub) out->children.push_back({c.labels, std::move(sub)});
    }
    (void)subtrees_remain;  // only read by the assert
    // Merge structurally identical siblings, unioning their labels.
    for (std::size_t i = 0; i < out->children.size(); ++i)
        for (std::size_t j = i + 1; j < out->children.size();) {
            if (node_equal(out->children[i].node.get(), out->children[j].node.get())) {
                auto& li = out->children[i].labels;
                const auto& lj = out->children[j].labels;
                li.insert(li.end(), lj.begin(), lj.end());
                std::sort(li.begin(), li.end());
                out->children.erase(out->children.begin() + static_cast<std::ptrdiff_t>(j));
            } else {
                ++j;
            }
        }
    return out;
}

}  // namespace

LpTree reduce(const LpTree& tree, const PartialAssignment& w) {
    for (int v = 0; v < tree.vars->size(); ++v) {
        if (!w.bound(v)) continue;
        if (!std::binary_search(tree.active.begin(), tree.active.end(), v))
            throw Error(ErrorCode::UnknownVariable,
                        tree.vars->var(v).name + " is not an active tree variable");
        if (w[v] >= tree.vars->domain_size(v))
            throw Error(ErrorCode::UnknownValue,
                        "value out of range for " + tree.vars->var(v).name);
    }
    LpTree out;
    out.vars = tree.vars;
    out.context = merge(tree.context, w);
    for (int v : tree.active)
        if (!w.bound(v)) out.active.push_back(v);
    out.root = tree.root ? reduce_node(*tree.vars, tree.root.get(), w) : nullptr;
    validate(out);
    return out;
}

bool is_compatible(const LpTree& reduced, const LpTree& original,
                   const PartialAssignment& w) {
    PartialAssignment ctx = merge(original.context, w);
    std::vector<int> free_vars;
    for (int v : original.active)
        if (!w.bound(v)) free_vars.push_back(v);
    std::vector<Outcome> ext = enumerate_extensions(*original.vars, ctx, free_vars);
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = 0; j < ext.size(); ++j) {
            if (i == j) continue;
            if (lp_compare(original, ext[i], ext[j]) != lp_compare(reduced, ext[i], ext[j]))
                return false;
        }
    return true;
}

}  // namespace prefcore
