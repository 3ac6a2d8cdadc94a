#include "hamlink/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace hamlink {

namespace {

// Small Dinic max-flow on an explicitly built network. Node counts stay at
// 2n+1 or so; capacities are 1 on vertex-split arcs and n+1 ("infinite") on
// edge arcs, so values never overflow int.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int rev;        // index of the reverse arc in arcs[to]
        bool forward;   // true for arcs added with positive capacity
    };

    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit FlowNetwork(int nodes) : arcs(nodes), level(nodes), iter(nodes) {}

    void add_arc(int from, int to, int cap) {
        arcs[from].push_back({to, cap, (int)arcs[to].size(), true});
        arcs[to].push_back({from, 0, (int)arcs[from].size() - 1, false});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < (int)arcs[v].size(); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    // Max flow from s to t, stopping once `limit` is reached.
    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            while (flow < limit) {
                int f = dfs(s, t, limit - flow);
                if (f == 0) break;
                flow += f;
            }
        }
        return flow;
    }

    // Net flow carried by each forward arc, addressed as (node, arc index).
    std::vector<std::vector<int>> flow_table() const {
        std::vector<std::vector<int>> flow(arcs.size());
        for (std::size_t v = 0; v < arcs.size(); ++v) {
            flow[v].assign(arcs[v].size(), 0);
            for (std::size_t i = 0; i < arcs[v].size(); ++i) {
                const Arc& a = arcs[v][i];
                if (a.forward) flow[v][i] = arcs[a.to][a.rev].cap;
            }
        }
        return flow;
    }

    // Nodes reachable from s in the residual network.
    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(arcs.size(), false);
        std::queue<int> q;
        seen[s] = true;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }
};

// Vertex-split network for s-t vertex connectivity inside g[sub].
// Node 2v = v_in, 2v+1 = v_out.
int st_vertex_flow(const Graph& g, const Bitset& sub, int s, int t, int limit,
                   FlowNetwork* out_net = nullptr) {
    int n = g.vertex_count();
    int big = n + 1;
    FlowNetwork net(2 * n);
    for (int v = sub.next(0); v >= 0; v = sub.next(v + 1)) {
        if (v != s && v != t) net.add_arc(2 * v, 2 * v + 1, 1);
        for (int u : g.neighbors(v))
            if (sub.test(u)) net.add_arc(2 * v + 1, 2 * u, big);
    }
    int flow = net.max_flow(2 * s + 1, 2 * t, limit);
    if (out_net) *out_net = std::move(net);
    return flow;
}

VertexSet cut_from_residual(const Bitset& sub, const FlowNetwork& net, int s) {
    auto seen = net.residual_reachable(2 * s + 1);
    VertexSet cut;
    for (int v = sub.next(0); v >= 0; v = sub.next(v + 1))
        if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    return cut;
}

}  // namespace

CutResult vertex_connectivity_within(const Graph& g, const Bitset& sub) {
    int size = sub.count();
    if (size == 0) return {0, {}};
    if (!within::is_connected(g, sub)) return {0, {}};
    if (within::is_complete(g, sub)) return {size - 1, {}};

    // First pass: flow value for every non-adjacent pair in increasing
    // (s, t) order. Values above the running minimum are capped; any value
    // <= the cap is exact, so the final minimum is exact.
    int best = size - 1;
    std::vector<std::pair<int, int>> pairs;
    for (int s = sub.next(0); s >= 0; s = sub.next(s + 1))
        for (int t = sub.next(s + 1); t >= 0; t = sub.next(t + 1))
            if (!g.has_edge(s, t)) pairs.push_back({s, t});
    std::vector<int> value(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        value[i] = st_vertex_flow(g, sub, pairs[i].first, pairs[i].second, best + 1);
        best = std::min(best, value[i]);
    }

    // Second pass: canonical minimum cut of every achieving pair; ties
    // resolve to the lexicographically smallest vertex set.
    VertexSet best_cut;
    bool have_cut = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (value[i] != best) continue;
        FlowNetwork net(0);
        st_vertex_flow(g, sub, pairs[i].first, pairs[i].second, size, &net);
        VertexSet cut = cut_from_residual(sub, net, pairs[i].first);
        if (!have_cut || cut < best_cut) {
            best_cut = std::move(cut);
            have_cut = true;
        }
    }
    if (!have_cut || (int)best_cut.size() != best)
        throw InvariantViolation("vertex_connectivity: cut extraction failed");
    return {best, best_cut};
}

CutResult vertex_connectivity(const Graph& g) {
    return vertex_connectivity_within(g, g.full_vertex_set());
}

Fan menger_fan(const Graph& g, int x, const VertexSet& targets, int s) {
    int n = g.vertex_count();
    if (x < 0 || x >= n) throw PreconditionError("menger_fan: source out of range");
    if (targets.empty()) throw PreconditionError("menger_fan: empty target set");
    if (s < 1) throw PreconditionError("menger_fan: s must be >= 1");
    Bitset in_targets(n);
    for (int y : targets) {
        if (y < 0 || y >= n) throw PreconditionError("menger_fan: target out of range");
        if (y == x) throw PreconditionError("menger_fan: source inside target set");
        in_targets.set(y);
    }

    int m = std::min<int>(s, (int)targets.size());
    int big = n + 1;
    // 2v / 2v+1 = v_in / v_out. Targets keep only a unit arc y_in -> sink,
    // so no path may pass through a target.
    int sink = 2 * n;
    FlowNetwork net(2 * n + 1);
    for (int v = 0; v < n; ++v) {
        if (in_targets.test(v)) {
            net.add_arc(2 * v, sink, 1);
            continue;
        }
        if (v != x) net.add_arc(2 * v, 2 * v + 1, 1);
        for (int u : g.neighbors(v)) net.add_arc(2 * v + 1, 2 * u, big);
    }
    int source = 2 * x + 1;
    int flow = net.max_flow(source, sink, m);
    if (flow < m)
        throw PreconditionError("menger_fan: only " + std::to_string(flow) + " of " +
                                std::to_string(m) + " disjoint paths exist; the graph is not " +
                                std::to_string(s) + "-connected");

    // Decompose the unit flow into vertex paths. Every non-target vertex
    // passes at most one unit (split arc), so the walks are vertex-disjoint
    // and cannot revisit a node.
    auto flow_left = net.flow_table();
    Fan fan;
    for (std::size_t i0 = 0; i0 < net.arcs[source].size(); ++i0) {
        if (flow_left[source][i0] <= 0) continue;
        flow_left[source][i0] -= 1;
        std::vector<int> path{x};
        int node = net.arcs[source][i0].to;  // some v_in
        while (node != sink) {
            int v = node / 2;
            path.push_back(v);
            // Advance through this vertex: v_in's single forward arc leads
            // to v_out (or the sink for targets), then pick an outgoing
            // edge arc still carrying flow.
            int hops = 0;
            int cur = node;
            bool done = false;
            while (!done) {
                int next = -1;
                for (std::size_t i = 0; i < net.arcs[cur].size(); ++i) {
                    if (flow_left[cur][i] > 0) {
                        flow_left[cur][i] -= 1;
                        next = net.arcs[cur][i].to;
                        break;
                    }
                }
                if (next < 0) throw InvariantViolation("menger_fan: flow decomposition failed");
                if (next == sink) {
                    node = sink;
                    done = true;
                } else if (next % 2 == 0) {
                    node = next;  // reached the next v_in
                    done = true;
                } else {
                    cur = next;  // moved v_in -> v_out, continue
                }
                if (++hops > 4) throw InvariantViolation("menger_fan: malformed flow walk");
            }
        }
        fan.paths.push_back(std::move(path));
    }
    if ((int)fan.paths.size() != m)
        throw InvariantViolation("menger_fan: expected " + std::to_string(m) +
                                 " paths, decomposed " + std::to_string(fan.paths.size()));

    // Structural validation: internal disjointness and single target touch.
    Bitset used(n);
    for (const auto& path : fan.paths) {
        if (path.front() != x)
            throw InvariantViolation("menger_fan: path does not start at source");
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1]))
                throw InvariantViolation("menger_fan: non-adjacent consecutive vertices");
        for (std::size_t i = 1; i < path.size(); ++i) {
            int v = path[i];
            if (used.test(v)) throw InvariantViolation("menger_fan: paths share a vertex");
            used.set(v);
            bool is_target = in_targets.test(v);
            if (is_target != (i + 1 == path.size()))
                throw InvariantViolation("menger_fan: path meets target set before its end");
        }
    }
    return fan;
}

}  // namespace hamlink
