#include "hamlink/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <string>

namespace hamlink {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw PreconditionError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.rows_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self-loop");
        if (g.rows_[u].test(v)) continue;
        g.rows_[u].set(v);
        g.rows_[v].set(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

namespace {

struct Line {
    std::string text;
    int number;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = (nl == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, nl - pos);
        ++number;
        std::string s(raw);
        if (!s.empty() && s.back() == '\r') s.pop_back();
        lines.push_back({std::move(s), number});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

long parse_int(const std::string& tok, int line) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("expected an integer, got '" + tok + "'", line);
    return value;
}

Graph parse_dimacs(const std::vector<Line>& lines) {
    int n = -1;
    long m = -1;
    std::vector<std::pair<int, int>> edges;
    for (const auto& line : lines) {
        auto toks = tokens_of(line.text);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", line.number);
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError("malformed problem line, expected 'p edge n m'", line.number);
            n = (int)parse_int(toks[2], line.number);
            m = parse_int(toks[3], line.number);
            if (n < 0 || m < 0) throw ParseError("negative size in problem line", line.number);
        } else if (toks[0] == "e") {
            if (n < 0) throw ParseError("edge before problem line", line.number);
            if (toks.size() != 3) throw ParseError("expected 'e u v'", line.number);
            long u = parse_int(toks[1], line.number);
            long v = parse_int(toks[2], line.number);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex index out of range 1.." + std::to_string(n), line.number);
            if (u == v) throw ParseError("self-loop", line.number);
            edges.push_back({(int)u - 1, (int)v - 1});
        } else {
            throw ParseError("unrecognized line '" + toks[0] + " ...'", line.number);
        }
    }
    if (n < 0) throw ParseError("missing 'p edge' line");
    if ((long)edges.size() != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) +
                         ", found " + std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::vector<Line>& lines) {
    int n = -1;
    long m = -1;
    std::vector<std::pair<int, int>> edges;
    for (const auto& line : lines) {
        auto toks = tokens_of(line.text);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (n < 0) {
            if (toks.size() != 2)
                throw ParseError("malformed header, expected 'n m'", line.number);
            n = (int)parse_int(toks[0], line.number);
            m = parse_int(toks[1], line.number);
            if (n < 0 || m < 0) throw ParseError("negative size in header", line.number);
            continue;
        }
        if (toks.size() != 2) throw ParseError("expected 'u v'", line.number);
        long u = parse_int(toks[0], line.number);
        long v = parse_int(toks[1], line.number);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex index out of range 0.." + std::to_string(n - 1), line.number);
        if (u == v) throw ParseError("self-loop", line.number);
        edges.push_back({(int)u, (int)v});
    }
    if (n < 0) throw ParseError("empty input");
    if ((long)edges.size() != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) +
                         ", found " + std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
    auto lines = split_lines(text);
    for (const auto& line : lines) {
        auto toks = tokens_of(line.text);
        if (toks.empty()) continue;
        if (toks[0] == "c" || toks[0] == "p") return parse_dimacs(lines);
        if (toks[0][0] == '#') continue;
        return parse_edge_list(lines);
    }
    throw ParseError("empty input");
}

std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << " " << v << "\n";
    return out.str();
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> to_sub(g.vertex_count(), -1);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw PreconditionError("induced_subgraph: vertex out of range");
        if (to_sub[v] != -1)
            throw PreconditionError("induced_subgraph: duplicate vertex");
        to_sub[v] = 0;
    }
    InducedSubgraph out;
    out.to_parent.assign(s.begin(), s.end());
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_sub = std::move(to_sub);
    for (int i = 0; i < (int)out.to_parent.size(); ++i) out.to_sub[out.to_parent[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < (int)out.to_parent.size(); ++i)
        for (int w : g.neighbors(out.to_parent[i]))
            if (out.to_sub[w] > i) edges.push_back({i, out.to_sub[w]});
    out.graph = Graph::from_edges((int)out.to_parent.size(), edges);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    auto comps = within::components(g, g.full_vertex_set());
    std::vector<VertexSet> out;
    out.reserve(comps.size());
    for (const auto& c : comps) out.push_back(c.to_vector());
    return out;
}

VertexSet articulation_points(const Graph& g) {
    return within::articulation_points(g, g.full_vertex_set()).to_vector();
}

namespace {

// Branch-and-bound search for an independent set of size >= target within
// `cand`. When maximizing, target is raised as better sets are found.
struct IndepSearch {
    const Graph& g;
    std::vector<int> current;
    std::vector<int> best;
    int target;       // stop as soon as a set this large is found (0 = maximize)
    bool stop = false;

    // Greedy clique cover of cand; its size bounds the independent set above.
    int clique_cover_bound(Bitset cand) const {
        int cliques = 0;
        while (cand.any()) {
            int v = cand.next(0);
            Bitset clique(g.vertex_count());
            clique.set(v);
            cand.reset(v);
            for (int u = cand.next(0); u >= 0; u = cand.next(u + 1)) {
                if (clique.is_subset_of(g.row(u))) {
                    clique.set(u);
                    cand.reset(u);
                }
            }
            ++cliques;
        }
        return cliques;
    }

    void run(Bitset cand) {
        if (stop) return;
        if ((int)current.size() > (int)best.size()) {
            best = current;
            if (target > 0 && (int)best.size() >= target) {
                stop = true;
                return;
            }
        }
        if (cand.none()) return;
        int need = target > 0 ? target : (int)best.size() + 1;
        if ((int)current.size() + clique_cover_bound(cand) < need) return;
        // Branch on a vertex of maximum degree inside cand.
        int pick = -1, best_deg = -1;
        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            int d = (g.row(v) & cand).count();
            if (d > best_deg) {
                best_deg = d;
                pick = v;
            }
        }
        // Include pick.
        Bitset with = cand;
        with.subtract(g.row(pick));
        with.reset(pick);
        current.push_back(pick);
        run(with);
        current.pop_back();
        if (stop) return;
        // Exclude pick.
        cand.reset(pick);
        run(cand);
    }
};

}  // namespace

int independence_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    IndepSearch search{g, {}, {}, 0};
    search.run(g.full_vertex_set());
    return (int)search.best.size();
}

bool find_independent_set(const Graph& g, int size, VertexSet* out) {
    if (size <= 0) {
        if (out) out->clear();
        return true;
    }
    if (size > g.vertex_count()) return false;
    IndepSearch search{g, {}, {}, size};
    search.run(g.full_vertex_set());
    if ((int)search.best.size() < size) return false;
    if (out) {
        *out = search.best;
        std::sort(out->begin(), out->end());
    }
    return true;
}

bool is_kk1_free(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("is_kk1_free: k must be >= 1");
    return !find_independent_set(g, k);
}

namespace within {

std::vector<Bitset> components(const Graph& g, const Bitset& sub) {
    std::vector<Bitset> out;
    Bitset remaining = sub;
    std::vector<int> stack;
    while (true) {
        int start = remaining.next(0);
        if (start < 0) break;
        Bitset comp(g.vertex_count());
        comp.set(start);
        remaining.reset(start);
        stack.assign(1, start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset nbrs = g.row(v) & remaining;
            for (int u = nbrs.next(0); u >= 0; u = nbrs.next(u + 1)) {
                comp.set(u);
                remaining.reset(u);
                stack.push_back(u);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g, const Bitset& sub) {
    int total = sub.count();
    if (total <= 1) return true;
    int start = sub.next(0);
    Bitset seen(g.vertex_count());
    seen.set(start);
    std::vector<int> stack{start};
    int seen_count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        Bitset nbrs = g.row(v) & sub;
        nbrs.subtract(seen);
        for (int u = nbrs.next(0); u >= 0; u = nbrs.next(u + 1)) {
            seen.set(u);
            ++seen_count;
            stack.push_back(u);
        }
    }
    return seen_count == total;
}

bool is_complete(const Graph& g, const Bitset& sub) {
    int size = sub.count();
    for (int v = sub.next(0); v >= 0; v = sub.next(v + 1))
        if ((g.row(v) & sub).count() != size - 1) return false;
    return true;
}

namespace {

struct ArtDfs {
    const Graph& g;
    const Bitset& sub;
    std::vector<int> disc, low;
    Bitset arts;
    int timer = 0;

    ArtDfs(const Graph& g, const Bitset& sub)
        : g(g), sub(sub), disc(g.vertex_count(), -1), low(g.vertex_count(), 0),
          arts(g.vertex_count()) {}

    void dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (!sub.test(u)) continue;
            if (disc[u] == -1) {
                ++children;
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (parent != -1 && low[u] >= disc[v]) arts.set(v);
            } else if (u != parent) {
                low[v] = std::min(low[v], disc[u]);
            }
        }
        if (parent == -1 && children > 1) arts.set(v);
    }
};

}  // namespace

Bitset articulation_points(const Graph& g, const Bitset& sub) {
    ArtDfs dfs(g, sub);
    for (int v = sub.next(0); v >= 0; v = sub.next(v + 1))
        if (dfs.disc[v] == -1) dfs.dfs(v, -1);
    return dfs.arts;
}

int component_count_after_removal(const Graph& g, const Bitset& sub, const Bitset& removed) {
    Bitset rest = sub;
    rest.subtract(removed);
    return (int)components(g, rest).size();
}

}  // namespace within

}  // namespace hamlink
