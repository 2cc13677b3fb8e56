#include "lpa/cycles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lpa {

const char* to_string(CycleClass c) {
    switch (c) {
        case CycleClass::NoExit: return "no_exit";
        case CycleClass::Extreme: return "extreme";
        case CycleClass::Neither: return "neither";
    }
    return "?";
}

namespace {

CycleReport classify_cycle(const Graph& g, std::vector<EdgeId> edges) {
    CycleReport report;
    report.vertices = VertexSet(g.vertex_count());
    std::vector<bool> on_cycle_class(g.class_count(), false);
    for (EdgeId e : edges) {
        report.vertices.insert(g.edge_class(e).source);
        on_cycle_class[e] = true;
    }
    report.edges = std::move(edges);

    // Exit: an edge leaving a cycle vertex that is not the single cycle edge
    // through it. A multiplicity ≥ 2 class on the cycle supplies one via its
    // parallel instances.
    report.vertices.for_each([&](VertexId v) {
        if (report.exit_witness) return;
        for (EdgeId e : g.out_classes(v)) {
            const auto& m = g.edge_class(e).multiplicity;
            bool has_parallel = m.is_omega() || m.value() >= 2;
            if (!on_cycle_class[e] || has_parallel) {
                report.exit_witness = e;
                return;
            }
        }
    });

    if (!report.exit_witness) {
        report.classification = CycleClass::NoExit;
        return report;
    }

    VertexSet t = tree(g, report.vertices);
    VertexSet r = root(g, report.vertices);
    if (t.is_subset_of(r)) {
        report.classification = CycleClass::Extreme;
        return report;
    }

    report.classification = CycleClass::Neither;

    // Witness: a shortest walk from a cycle vertex to a vertex outside R(c^0).
    VertexSet escaped = set_difference(t, r);
    std::vector<EdgeId> parent_edge(g.vertex_count(), UINT32_MAX);
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> queue;
    report.vertices.for_each([&](VertexId v) {
        seen[v] = true;
        queue.push_back(v);
    });
    VertexId hit = UINT32_MAX;
    while (!queue.empty() && hit == UINT32_MAX) {
        VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : g.out_classes(v)) {
            VertexId w = g.edge_class(e).range;
            if (seen[w]) continue;
            seen[w] = true;
            parent_edge[w] = e;
            if (escaped.contains(w)) {
                hit = w;
                break;
            }
            queue.push_back(w);
        }
    }
    if (hit != UINT32_MAX) {
        std::vector<EdgeId> back;
        VertexId v = hit;
        while (parent_edge[v] != UINT32_MAX) {
            back.push_back(parent_edge[v]);
            v = g.edge_class(parent_edge[v]).source;
        }
        std::reverse(back.begin(), back.end());
        report.non_return_witness = ClassPath{v, std::move(back)};
    }
    return report;
}

} // namespace

std::vector<CycleReport> enumerate_cycles(const Graph& g) {
    std::vector<CycleReport> out;
    const std::size_t n = g.vertex_count();

    // DFS from each start vertex, restricted to the start's SCC and to
    // vertices with index ≥ start; every cycle is found once, rotated so its
    // smallest vertex comes first.
    std::vector<EdgeId> path;
    std::vector<bool> on_path(n, false);

    for (VertexId start = 0; start < n; ++start) {
        if (!g.on_cycle(start)) continue;
        std::uint32_t scc = g.scc_of(start);

        struct Frame {
            VertexId v;
            std::size_t next;
        };
        std::vector<Frame> stack{{start, 0}};
        on_path[start] = true;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& outs = g.out_classes(fr.v);
            if (fr.next >= outs.size()) {
                on_path[fr.v] = false;
                if (!path.empty()) path.pop_back();
                stack.pop_back();
                continue;
            }
            EdgeId e = outs[fr.next++];
            VertexId w = g.edge_class(e).range;
            if (w == start) {
                path.push_back(e);
                out.push_back(classify_cycle(g, path));
                path.pop_back();
                continue;
            }
            if (w < start || on_path[w] || g.scc_of(w) != scc) continue;
            path.push_back(e);
            on_path[w] = true;
            stack.push_back({w, 0});
        }
    }
    return out;
}

bool condition_L(const Graph& g) {
    for (const auto& c : enumerate_cycles(g))
        if (c.classification == CycleClass::NoExit) return false;
    return true;
}

namespace {

// Number of closed simple paths based at v, saturated at 2. Splitting v into
// a source copy and a sink copy turns them into the v→v' walks; any cycle
// among the relevant vertices makes the family infinite, otherwise a DAG
// count (multiplicities capped at 2) decides.
int closed_simple_path_count(const Graph& g, VertexId v) {
    const std::size_t n = g.vertex_count();
    // Forward-reachable in the split graph; the sink copy is implicit.
    VertexSet forward(n);
    bool sink_reached = false;
    {
        std::vector<VertexId> todo{v};
        VertexSet seen(n);
        seen.insert(v);
        while (!todo.empty()) {
            VertexId u = todo.back();
            todo.pop_back();
            for (EdgeId e : g.out_classes(u)) {
                VertexId w = g.edge_class(e).range;
                if (w == v) {
                    sink_reached = true;
                    continue;
                }
                if (!seen.contains(w)) {
                    seen.insert(w);
                    todo.push_back(w);
                }
            }
        }
        forward = seen;
    }
    if (!sink_reached) return 0;

    // Co-reachable to the sink copy: backward from edges into v, never
    // expanding through v itself.
    VertexSet backward(n);
    {
        std::vector<VertexId> todo;
        for (EdgeId e : g.in_classes(v)) {
            VertexId u = g.edge_class(e).source;
            if (!backward.contains(u)) {
                backward.insert(u);
                todo.push_back(u);
            }
        }
        while (!todo.empty()) {
            VertexId u = todo.back();
            todo.pop_back();
            if (u == v) continue;
            for (EdgeId e : g.in_classes(u)) {
                VertexId w = g.edge_class(e).source;
                if (!backward.contains(w)) {
                    backward.insert(w);
                    todo.push_back(w);
                }
            }
        }
    }

    VertexSet relevant = set_intersection(forward, backward);
    if (!relevant.contains(v)) relevant.insert(v); // v is the walk source

    // A cycle inside the relevant region (not through v) gives unboundedly
    // many walks.
    VertexSet interior = relevant;
    interior.erase(v);
    if (contains_cycle_within(g, interior)) return 2;

    // DAG count by memoized DFS, saturating at 2.
    std::vector<int> memo(n, -1);
    struct Rec {
        const Graph& g;
        VertexId base;
        const VertexSet& relevant;
        std::vector<int>& memo;
        int walk_count(VertexId u) {
            if (memo[u] >= 0) return memo[u];
            memo[u] = 0; // u != base here; base handled by caller
            long total = 0;
            for (EdgeId e : g.out_classes(u)) {
                const auto& cls = g.edge_class(e);
                long weight = cls.multiplicity.is_omega()
                                  ? 2
                                  : static_cast<long>(std::min<std::uint64_t>(
                                        cls.multiplicity.value(), 2));
                if (cls.range == base) {
                    total += weight;
                } else if (relevant.contains(cls.range)) {
                    total += weight * walk_count(cls.range);
                }
                if (total >= 2) break;
            }
            memo[u] = static_cast<int>(std::min<long>(total, 2));
            return memo[u];
        }
    } rec{g, v, relevant, memo};

    long total = 0;
    for (EdgeId e : g.out_classes(v)) {
        const auto& cls = g.edge_class(e);
        long weight = cls.multiplicity.is_omega()
                          ? 2
                          : static_cast<long>(std::min<std::uint64_t>(cls.multiplicity.value(), 2));
        if (cls.range == v)
            total += weight;
        else if (relevant.contains(cls.range))
            total += weight * rec.walk_count(cls.range);
        if (total >= 2) return 2;
    }
    return static_cast<int>(std::min<long>(total, 2));
}

} // namespace

bool condition_K(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (closed_simple_path_count(g, v) == 1) return false;
    return true;
}

CycleShapeCheck check_cycles_no_exit_or_extreme(const Graph& g) {
    for (auto& c : enumerate_cycles(g)) {
        if (c.classification == CycleClass::Neither)
            return {false, std::move(c)};
    }
    return {};
}

EmitterCycleCheck check_infinite_emitters_on_cycles(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.is_infinite_emitter(v) && !g.on_cycle(v)) return {false, v};
    return {};
}

BifurcationCheck check_omega_bifurcations_return(const Graph& g) {
    for (EdgeId e = 0; e < g.class_count(); ++e) {
        const auto& cls = g.edge_class(e);
        if (!cls.multiplicity.is_omega()) continue;
        VertexSet avoided = tree(g, g.singleton(cls.range));
        if (avoided.contains(cls.source)) continue;
        VertexSet allowed = avoided.complement();
        if (reaches_cycle_within(g, cls.source, allowed))
            return {false, BifurcationWitness{e, cls.source, std::move(avoided)}};
    }
    return {};
}

bool is_all_reflexive(const Graph& g) {
    return check_cycles_no_exit_or_extreme(g).holds &&
           check_infinite_emitters_on_cycles(g).holds &&
           check_omega_bifurcations_return(g).holds;
}

bool is_strongly_all_reflexive(const Graph& g) {
    for (const auto& c : enumerate_cycles(g))
        if (c.classification != CycleClass::Extreme) return false;
    return check_infinite_emitters_on_cycles(g).holds &&
           check_omega_bifurcations_return(g).holds;
}

} // namespace lpa
