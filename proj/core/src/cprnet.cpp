#include "prefcore/cprnet.hpp"

#include <algorithm>
#include <set>

namespace prefcore {

namespace {

// Unique topological order of the combined (arc + ARI) graph. In an acyclic
// tournament every step has exactly one in-degree-0 vertex; two candidates at
// once would mean a NOP escaped coverage, which build_cprnet has excluded, so
// a tie can only arise from a cycle elsewhere — both are reported as cycles.
std::vector<int> combined_topo_order(const CpNet& base, const std::vector<AriStatement>& aris) {
    std::vector<int> indeg(static_cast<std::size_t>(base.vars->size()), 0);
    for (int v : base.active)
        indeg[static_cast<std::size_t>(v)] = static_cast<int>(base.cpt(v).parents.size());
    for (const AriStatement& a : aris) ++indeg[static_cast<std::size_t>(a.less)];
    std::vector<bool> placed(static_cast<std::size_t>(base.vars->size()), false);
    std::vector<int> order;
    for (std::size_t step = 0; step < base.active.size(); ++step) {
        int chosen = -1;
        for (int v : base.active) {
            if (placed[static_cast<std::size_t>(v)] || indeg[static_cast<std::size_t>(v)] != 0)
                continue;
            if (chosen >= 0)
                throw Error(ErrorCode::CyclicCprNet,
                            "combined graph is not an acyclic tournament");
            chosen = v;
        }
        if (chosen < 0)
            throw Error(ErrorCode::CyclicCprNet, "combined graph has a cycle");
        placed[static_cast<std::size_t>(chosen)] = true;
        order.push_back(chosen);
        for (int v : base.active)
            if (!placed[static_cast<std::size_t>(v)]) {
                const auto& ps = base.cpt(v).parents;
                indeg[static_cast<std::size_t>(v)] -=
                    static_cast<int>(std::count(ps.begin(), ps.end(), chosen));
            }
        for (const AriStatement& a : aris)
            if (a.more == chosen && !placed[static_cast<std::size_t>(a.less)])
                --indeg[static_cast<std::size_t>(a.less)];
    }
    return order;
}

}  // namespace

CprNet build_cprnet(CpNet base, std::vector<AriStatement> aris) {
    validate(base);
    if (!is_totally_dependent(base))
        throw Error(ErrorCode::NotTotallyDependent, "base net has a partial dependency");
    std::set<std::pair<int, int>> nops;
    for (auto [a, b] : nop_pairs(base)) nops.insert({a, b});
    std::set<std::pair<int, int>> covered;
    for (const AriStatement& a : aris) {
        if (a.more == a.less || !base.is_active(a.more) || !base.is_active(a.less))
            throw Error(ErrorCode::AriNotOnNop, "ARI endpoints must be two distinct variables");
        std::pair<int, int> key{std::min(a.more, a.less), std::max(a.more, a.less)};
        if (!nops.count(key))
            throw Error(ErrorCode::AriNotOnNop,
                        "ARI on " + base.vars->var(a.more).name + "," +
                            base.vars->var(a.less).name + " which is not a NOP");
        if (!covered.insert(key).second)
            throw Error(ErrorCode::AriNotOnNop,
                        "duplicate ARI on " + base.vars->var(a.more).name + "," +
                            base.vars->var(a.less).name);
    }
    if (covered.size() != nops.size()) {
        for (auto [a, b] : nops)
            if (!covered.count({a, b}))
                throw Error(ErrorCode::NopUncovered,
                            "NOP " + base.vars->var(a).name + "," + base.vars->var(b).name +
                                " has no ARI");
    }
    CprNet net;
    net.topo = combined_topo_order(base, aris);
    net.base = std::move(base);
    net.aris = std::move(aris);
    return net;
}

const std::vector<int>& unique_topo_order(const CprNet& net) { return net.topo; }

CompareResult compare(const CprNet& net, const Outcome& o1, const Outcome& o2) {
    for (int v : net.topo) {
        std::uint8_t a = o1[static_cast<std::size_t>(v)];
        std::uint8_t b = o2[static_cast<std::size_t>(v)];
        if (a == b) continue;
        // Parents of v precede it in the combined order, so both outcomes
        // agree on them; either outcome selects the row.
        const PreferenceRow& row = net.base.cpt(v).row_for(*net.base.vars, o1);
        return row.prefers(a, b) ? CompareResult::FirstPreferred
                                 : CompareResult::SecondPreferred;
    }
    throw Error(ErrorCode::EqualOutcomes, "comparison needs distinct outcomes");
}

namespace {

void descend(const CprNet& net, std::size_t depth, Outcome& cur, std::vector<Outcome>& out) {
    if (depth == net.topo.size()) {
        out.push_back(cur);
        return;
    }
    int v = net.topo[depth];
    const PreferenceRow& row = net.base.cpt(v).row_for(*net.base.vars, cur);
    for (std::uint8_t val : row.order()) {
        cur[static_cast<std::size_t>(v)] = val;
        descend(net, depth + 1, cur, out);
    }
}

}  // namespace

std::vector<Outcome> total_order(const CprNet& net, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (int v : net.base.active) {
        count *= static_cast<std::uint64_t>(net.base.vars->domain_size(v));
        if (count > cap)
            throw Error(ErrorCode::TooManyOutcomes,
                        "outcome space exceeds cap of " + std::to_string(cap));
    }
    std::vector<Outcome> out;
    out.reserve(static_cast<std::size_t>(count));
    Outcome cur(static_cast<std::size_t>(net.base.vars->size()), 0);
    for (int i = 0; i < net.base.vars->size(); ++i)
        if (net.base.context.bound(i))
            cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(net.base.context[i]);
    descend(net, 0, cur, out);
    return out;
}

Outcome best_outcome(const CprNet& net) {
    Outcome o(static_cast<std::size_t>(net.base.vars->size()), 0);
    for (int i = 0; i < net.base.vars->size(); ++i)
        if (net.base.context.bound(i))
            o[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(net.base.context[i]);
    for (int v : net.topo)
        o[static_cast<std::size_t>(v)] = net.base.cpt(v).row_for(*net.base.vars, o).order()[0];
    return o;
}

}  // namespace prefcore
