#include "prefcore/cpnet.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>

namespace prefcore {

PreferenceRow PreferenceRow::total(std::vector<std::uint8_t> best_to_worst) {
    PreferenceRow row;
    row.total_ = true;
    row.domain_size_ = static_cast<int>(best_to_worst.size());
    row.order_ = std::move(best_to_worst);
    int d = row.domain_size_;
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (std::uint8_t v : row.order_) {
        if (v >= d || seen[v])
            throw Error(ErrorCode::InvalidModel, "total row is not a permutation of the domain");
        seen[v] = true;
    }
    row.matrix_.assign(static_cast<std::size_t>(d * d), false);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            row.matrix_[static_cast<std::size_t>(row.order_[static_cast<std::size_t>(i)] * d +
                                                 row.order_[static_cast<std::size_t>(j)])] = true;
    return row;
}

PreferenceRow PreferenceRow::partial(int domain_size,
                                     std::vector<std::pair<std::uint8_t, std::uint8_t>> better) {
    PreferenceRow row;
    row.total_ = false;
    row.domain_size_ = domain_size;
    int d = domain_size;
    row.matrix_.assign(static_cast<std::size_t>(d * d), false);
    for (auto [a, b] : better) {
        if (a >= d || b >= d)
            throw Error(ErrorCode::InvalidModel, "partial row pair value out of range");
        if (a == b)
            throw Error(ErrorCode::InvalidModel, "partial row pair is reflexive");
        row.matrix_[static_cast<std::size_t>(a * d + b)] = true;
    }
    // Transitive closure, then the antisymmetry check (a cycle in the given
    // pairs shows up as a symmetric closed pair).
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            if (row.matrix_[static_cast<std::size_t>(i * d + k)])
                for (int j = 0; j < d; ++j)
                    if (row.matrix_[static_cast<std::size_t>(k * d + j)])
                        row.matrix_[static_cast<std::size_t>(i * d + j)] = true;
    for (int i = 0; i < d; ++i) {
        if (row.matrix_[static_cast<std::size_t>(i * d + i)])
            throw Error(ErrorCode::InvalidModel, "partial row order is cyclic");
        for (int j = i + 1; j < d; ++j)
            if (row.matrix_[static_cast<std::size_t>(i * d + j)] &&
                row.matrix_[static_cast<std::size_t>(j * d + i)])
                throw Error(ErrorCode::InvalidModel, "partial row order is not antisymmetric");
    }
    return row;
}

std::vector<std::uint8_t> PreferenceRow::better_than(int v) const {
    std::vector<std::uint8_t> out;
    if (total_) {
        for (std::uint8_t u : order_) {
            if (u == v) break;
            out.push_back(u);
        }
    } else {
        for (int u = 0; u < domain_size_; ++u)
            if (prefers(u, v)) out.push_back(static_cast<std::uint8_t>(u));
    }
    return out;
}

std::size_t Cpt::row_index(const VariableSet& vars, const Outcome& o) const {
    std::size_t idx = 0;
    for (int p : parents)
        idx = idx * static_cast<std::size_t>(vars.domain_size(p)) + o[static_cast<std::size_t>(p)];
    return idx;
}

std::size_t Cpt::row_index(const VariableSet& vars, const PartialAssignment& a) const {
    std::size_t idx = 0;
    for (int p : parents)
        idx = idx * static_cast<std::size_t>(vars.domain_size(p)) +
              static_cast<std::size_t>(a.value_of(p));
    return idx;
}

namespace {

// Lexicographically smallest topological sort by declaration order.
std::vector<int> smallest_topo_order(const CpNet& net) {
    std::unordered_map<int, int> indeg;
    for (int v : net.active) indeg[v] = 0;
    for (int v : net.active)
        for (int p : net.cpt(v).parents) {
            (void)p;
            ++indeg[v];
        }
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(net.vars->size()), false);
    for (std::size_t step = 0; step < net.active.size(); ++step) {
        int chosen = -1;
        for (int v : net.active)  // ascending declaration order
            if (!placed[static_cast<std::size_t>(v)] && indeg[v] == 0) { chosen = v; break; }
        if (chosen < 0)
            throw Error(ErrorCode::CyclicNetwork, "CPT parent structure has a cycle");
        placed[static_cast<std::size_t>(chosen)] = true;
        order.push_back(chosen);
        for (int v : net.active)
            if (!placed[static_cast<std::size_t>(v)]) {
                const auto& ps = net.cpt(v).parents;
                indeg[v] -= static_cast<int>(std::count(ps.begin(), ps.end(), chosen));
            }
    }
    return order;
}

std::size_t row_count(const VariableSet& vars, const std::vector<int>& parents) {
    std::size_t n = 1;
    for (int p : parents) n *= static_cast<std::size_t>(vars.domain_size(p));
    return n;
}

// Mixed-radix index of `o` over the active variables — the BFS state encoding.
std::uint64_t encode(const CpNet& net, const Outcome& o) {
    std::uint64_t idx = 0;
    for (int v : net.active)
        idx = idx * static_cast<std::uint64_t>(net.vars->domain_size(v)) +
              o[static_cast<std::size_t>(v)];
    return idx;
}

}  // namespace

CpNet CpNet::over(VariableSetPtr vars, std::vector<Cpt> cpts_in) {
    CpNet net;
    net.vars = std::move(vars);
    net.cpts.resize(static_cast<std::size_t>(net.vars->size()));
    net.context = PartialAssignment(net.vars->size());
    for (Cpt& c : cpts_in) {
        if (c.var < 0 || c.var >= net.vars->size())
            throw Error(ErrorCode::InvalidModel, "cpt variable out of range");
        if (net.cpts[static_cast<std::size_t>(c.var)].var >= 0)
            throw Error(ErrorCode::InvalidModel,
                        "two cpts for " + net.vars->var(c.var).name);
        net.cpts[static_cast<std::size_t>(c.var)] = std::move(c);
    }
    for (int v = 0; v < net.vars->size(); ++v) {
        if (net.cpts[static_cast<std::size_t>(v)].var < 0)
            throw Error(ErrorCode::InvalidModel,
                        "missing cpt for " + net.vars->var(v).name);
        for (int p : net.cpts[static_cast<std::size_t>(v)].parents)
            if (p < 0 || p >= net.vars->size())
                throw Error(ErrorCode::InvalidModel,
                            "parent out of range for " + net.vars->var(v).name);
        net.active.push_back(v);
    }
    net.topo = smallest_topo_order(net);
    validate(net);
    return net;
}

bool CpNet::is_active(int var) const {
    return std::binary_search(active.begin(), active.end(), var);
}

std::vector<int> CpNet::ancestors(int var) const {
    std::vector<bool> mark(static_cast<std::size_t>(vars->size()), false);
    std::deque<int> queue(cpt(var).parents.begin(), cpt(var).parents.end());
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        if (mark[static_cast<std::size_t>(p)]) continue;
        mark[static_cast<std::size_t>(p)] = true;
        for (int q : cpt(p).parents) queue.push_back(q);
    }
    std::vector<int> out;
    for (int v : active)
        if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

void validate(const CpNet& net) {
    const VariableSet& vars = *net.vars;
    if (!std::is_sorted(net.active.begin(), net.active.end()))
        throw Error(ErrorCode::InvalidModel, "active variable list must be ascending");
    for (int v = 0; v < vars.size(); ++v) {
        bool act = net.is_active(v);
        if (act && net.context.bound(v))
            throw Error(ErrorCode::InvalidModel,
                        "active variable " + vars.var(v).name + " must not be frozen");
        if (!act && !net.context.bound(v))
            throw Error(ErrorCode::InvalidModel,
                        "inactive variable " + vars.var(v).name + " needs a context value");
    }
    for (int v : net.active) {
        const Cpt& c = net.cpt(v);
        if (c.var != v)
            throw Error(ErrorCode::InvalidModel, "cpt slot mismatch for " + vars.var(v).name);
        for (std::size_t i = 0; i < c.parents.size(); ++i) {
            if (!net.is_active(c.parents[i]) || c.parents[i] == v)
                throw Error(ErrorCode::InvalidModel,
                            "bad parent list for " + vars.var(v).name);
            for (std::size_t j = i + 1; j < c.parents.size(); ++j)
                if (c.parents[i] == c.parents[j])
                    throw Error(ErrorCode::InvalidModel,
                                "parent repeated for " + vars.var(v).name);
        }
        if (c.rows.size() != row_count(vars, c.parents))
            throw Error(ErrorCode::InvalidModel,
                        "wrong number of rows for " + vars.var(v).name);
        for (const PreferenceRow& r : c.rows)
            if (r.domain_size() != vars.domain_size(v))
                throw Error(ErrorCode::InvalidModel,
                            "row domain size mismatch for " + vars.var(v).name);
    }
    // Topological order check (also rejects cycles).
    if (net.topo.size() != net.active.size())
        throw Error(ErrorCode::InvalidModel, "topological order has wrong length");
    std::vector<int> pos(static_cast<std::size_t>(vars.size()), -1);
    for (std::size_t i = 0; i < net.topo.size(); ++i) {
        if (!net.is_active(net.topo[i]))
            throw Error(ErrorCode::InvalidModel, "topological order names inactive variable");
        pos[static_cast<std::size_t>(net.topo[i])] = static_cast<int>(i);
    }
    for (int v : net.active) {
        if (pos[static_cast<std::size_t>(v)] < 0)
            throw Error(ErrorCode::InvalidModel, "topological order misses a variable");
        for (int p : net.cpt(v).parents)
            if (pos[static_cast<std::size_t>(p)] >= pos[static_cast<std::size_t>(v)])
                throw Error(ErrorCode::CyclicNetwork,
                            "order violates arc into " + vars.var(v).name);
    }
}

ArcClass classify_arc(const CpNet& net, int x, int y) {
    if (!net.is_active(y) || !net.is_active(x))
        throw Error(ErrorCode::UnknownArc, "arc endpoints must be active variables");
    const Cpt& c = net.cpt(y);
    auto it = std::find(c.parents.begin(), c.parents.end(), x);
    if (it == c.parents.end())
        throw Error(ErrorCode::UnknownArc,
                    net.vars->var(x).name + " is not a parent of " + net.vars->var(y).name);
    for (const PreferenceRow& r : c.rows)
        if (!r.is_total())
            throw Error(ErrorCode::PartialRowUnsupported,
                        "classification requires total rows in CPT(" +
                            net.vars->var(y).name + ")");
    // Row index stride of x within the mixed-radix parent index.
    std::size_t x_pos = static_cast<std::size_t>(it - c.parents.begin());
    std::size_t stride = 1;
    for (std::size_t i = x_pos + 1; i < c.parents.size(); ++i)
        stride *= static_cast<std::size_t>(net.vars->domain_size(c.parents[i]));
    int dx = net.vars->domain_size(x);
    // Enumerate assignments to the other parents by walking all row indices
    // with x's digit at zero, then comparing the x-slices.
    for (std::size_t base = 0; base < c.rows.size(); ++base) {
        if ((base / stride) % static_cast<std::size_t>(dx) != 0) continue;
        for (int a = 0; a < dx; ++a)
            for (int b = a + 1; b < dx; ++b)
                if (c.rows[base + static_cast<std::size_t>(a) * stride].order() ==
                    c.rows[base + static_cast<std::size_t>(b) * stride].order())
                    return ArcClass::PartialDependency;
    }
    return ArcClass::TotalDependency;
}

bool is_totally_dependent(const CpNet& net) {
    for (int y : net.active) {
        for (const PreferenceRow& r : net.cpt(y).rows)
            if (!r.is_total()) return false;
        for (int x : net.cpt(y).parents)
            if (classify_arc(net, x, y) == ArcClass::PartialDependency) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> induced_importance(const CpNet& net) {
    if (!is_totally_dependent(net))
        throw Error(ErrorCode::NotTotallyDependent,
                    "importance is induced only by totally dependent nets");
    std::vector<std::pair<int, int>> out;
    for (int y : net.active)
        for (int x : net.cpt(y).parents) out.emplace_back(x, y);
    return out;
}

std::vector<std::pair<int, int>> nop_pairs(const CpNet& net) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < net.active.size(); ++i)
        for (std::size_t j = i + 1; j < net.active.size(); ++j) {
            int a = net.active[i], b = net.active[j];
            const auto& pa = net.cpt(a).parents;
            const auto& pb = net.cpt(b).parents;
            bool adjacent = std::find(pa.begin(), pa.end(), b) != pa.end() ||
                            std::find(pb.begin(), pb.end(), a) != pb.end();
            if (!adjacent) out.emplace_back(a, b);
        }
    return out;
}

std::vector<Outcome> improving_flips(const CpNet& net, const Outcome& o) {
    std::vector<Outcome> out;
    for (int v : net.active) {
        const PreferenceRow& row = net.cpt(v).row_for(*net.vars, o);
        for (std::uint8_t better : row.better_than(o[static_cast<std::size_t>(v)])) {
            Outcome flipped = o;
            flipped[static_cast<std::size_t>(v)] = better;
            out.push_back(std::move(flipped));
        }
    }
    return out;
}

OracleResult dominance_oracle(const CpNet& net, const Outcome& o1, const Outcome& o2,
                              std::uint64_t cap) {
    OracleResult res;
    if (o1 == o2) return res;
    std::uint64_t space = 1;
    for (int v : net.active) {
        space *= static_cast<std::uint64_t>(net.vars->domain_size(v));
        if (space > cap)
            throw Error(ErrorCode::TooManyOutcomes, "oracle outcome space exceeds cap");
    }
    std::uint64_t target = encode(net, o1);
    std::unordered_map<std::uint64_t, std::uint64_t> pred;  // state -> predecessor
    std::deque<Outcome> frontier;
    pred.emplace(encode(net, o2), encode(net, o2));
    frontier.push_back(o2);
    bool found = false;
    while (!frontier.empty() && !found) {
        Outcome cur = std::move(frontier.front());
        frontier.pop_front();
        std::uint64_t cur_id = encode(net, cur);
        for (Outcome& next : improving_flips(net, cur)) {
            std::uint64_t id = encode(net, next);
            if (pred.count(id)) continue;
            pred.emplace(id, cur_id);
            if (id == target) { found = true; break; }
            frontier.push_back(std::move(next));
        }
    }
    if (!found) return res;
    res.dominates = true;
    // Rebuild the path backwards by decoding predecessor states.
    std::vector<std::uint64_t> ids;
    for (std::uint64_t id = target;; id = pred.at(id)) {
        ids.push_back(id);
        if (pred.at(id) == id) break;
    }
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
        std::uint64_t id = *it;
        Outcome o(static_cast<std::size_t>(net.vars->size()), 0);
        for (int i = 0; i < net.vars->size(); ++i)
            if (net.context.bound(i))
                o[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(net.context[i]);
        for (std::size_t k = net.active.size(); k-- > 0;) {
            int v = net.active[k];
            o[static_cast<std::size_t>(v)] =
                static_cast<std::uint8_t>(id % static_cast<std::uint64_t>(net.vars->domain_size(v)));
            id /= static_cast<std::uint64_t>(net.vars->domain_size(v));
        }
        res.witness.push_back(std::move(o));
    }
    return res;
}

OrderingAnswer ordering_query(const CpNet& net, const Outcome& o1, const Outcome& o2) {
    if (o1 == o2) throw Error(ErrorCode::EqualOutcomes, "ordering query needs distinct outcomes");
    for (int v : net.topo) {
        std::uint8_t a = o1[static_cast<std::size_t>(v)];
        std::uint8_t b = o2[static_cast<std::size_t>(v)];
        if (a == b) continue;
        const PreferenceRow& row = net.cpt(v).row_for(*net.vars, o1);
        return row.prefers(a, b) ? OrderingAnswer::Unknown : OrderingAnswer::NotPreferred;
    }
    // Outcomes differing only on frozen context values cannot both arise from
    // this net; treat as equal.
    throw Error(ErrorCode::EqualOutcomes, "outcomes differ only outside the active variables");
}

Outcome forward_sweep(const CpNet& net) {
    Outcome o(static_cast<std::size_t>(net.vars->size()), 0);
    for (int i = 0; i < net.vars->size(); ++i)
        if (net.context.bound(i))
            o[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(net.context[i]);
    for (int v : net.topo) {
        const PreferenceRow& row = net.cpt(v).row_for(*net.vars, o);
        if (!row.is_total())
            throw Error(ErrorCode::PartialRowUnsupported,
                        "optimum undefined: partial row consulted for " + net.vars->var(v).name);
        o[static_cast<std::size_t>(v)] = row.order()[0];
    }
    return o;
}

CpNet restrict(const CpNet& net, const PartialAssignment& r) {
    for (int v : net.active)
        if (r.bound(v))
            for (int p : net.cpt(v).parents)
                if (!r.bound(p))
                    throw Error(ErrorCode::NotAncestorClosed,
                                "restriction binds " + net.vars->var(v).name +
                                    " but not its parent " + net.vars->var(p).name);
    return reduce_by_assignment(net, r);
}

CpNet reduce_by_assignment(const CpNet& net, const PartialAssignment& r) {
    for (int v = 0; v < net.vars->size(); ++v)
        if (r.bound(v) && !net.is_active(v))
            throw Error(ErrorCode::InvalidModel,
                        "restriction binds inactive variable " + net.vars->var(v).name);
    CpNet out;
    out.vars = net.vars;
    out.context = merge(net.context, r);
    out.cpts.resize(static_cast<std::size_t>(net.vars->size()));
    for (int v : net.active) {
        if (r.bound(v)) continue;
        out.active.push_back(v);
        const Cpt& c = net.cpt(v);
        Cpt nc;
        nc.var = v;
        for (int p : c.parents)
            if (!r.bound(p)) nc.parents.push_back(p);
        // Select the row slice matching the bound parents.
        std::size_t n = row_count(*net.vars, nc.parents);
        nc.rows.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            // Expand k over the kept parents, pull bound parents from r.
            std::size_t rem = k;
            std::vector<std::size_t> kept(nc.parents.size());
            for (std::size_t i = nc.parents.size(); i-- > 0;) {
                kept[i] = rem % static_cast<std::size_t>(net.vars->domain_size(nc.parents[i]));
                rem /= static_cast<std::size_t>(net.vars->domain_size(nc.parents[i]));
            }
            std::size_t idx = 0, ki = 0;
            for (int p : c.parents) {
                std::size_t digit = r.bound(p) ? static_cast<std::size_t>(r[p]) : kept[ki++];
                idx = idx * static_cast<std::size_t>(net.vars->domain_size(p)) + digit;
            }
            nc.rows.push_back(c.rows[idx]);
        }
        out.cpts[static_cast<std::size_t>(v)] = std::move(nc);
    }
    for (int v : net.topo)
        if (!r.bound(v)) out.topo.push_back(v);
    validate(out);
    return out;
}

}  // namespace prefcore
