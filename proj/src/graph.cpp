#include "tubings/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tubings {

DiGraph::DiGraph(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
    if (n < 0 || n > LabelSet::kMaxLabel) throw std::invalid_argument("bad vertex count");
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (i > 0 && edges[i] == edges[i - 1])
            throw std::invalid_argument("duplicate edge");
    }
}

std::string to_string(const DiGraph& g) {
    std::string out = "n " + std::to_string(g.n);
    for (auto [u, v] : g.edges)
        out += " " + std::to_string(u) + ">" + std::to_string(v);
    return out;
}

DiGraph cycle_graph(int k) {
    if (k < 1) throw std::invalid_argument("cycle_graph requires k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < k; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(k, 1);
    return DiGraph(k, std::move(e));
}

DiGraph path_graph(int k) {
    if (k < 1) throw std::invalid_argument("path_graph requires k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < k; ++i) e.emplace_back(i, i + 1);
    return DiGraph(k, std::move(e));
}

DiGraph disjoint_union(const DiGraph& a, const DiGraph& b) {
    std::vector<std::pair<int, int>> e = a.edges;
    for (auto [u, v] : b.edges) e.emplace_back(a.n + u, a.n + v);
    return DiGraph(a.n + b.n, std::move(e));
}

namespace {
std::vector<LabelSet> undirected_adjacency(const DiGraph& g) {
    std::vector<LabelSet> adj(g.n + 1);
    for (auto [u, v] : g.edges) {
        if (u == v) continue;  // loops carry no connectivity
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

LabelSet reach(const std::vector<LabelSet>& adj, const LabelSet& within, int start) {
    LabelSet visited;
    LabelSet frontier = LabelSet::of({start});
    while (!frontier.empty()) {
        int v = frontier.min_label();
        frontier.erase(v);
        visited.insert(v);
        frontier |= (adj[v] & within) - visited;
    }
    return visited;
}
}  // namespace

std::vector<LabelSet> components(const DiGraph& g) {
    auto adj = undirected_adjacency(g);
    std::vector<LabelSet> out;
    LabelSet remaining = LabelSet::full(g.n);
    while (!remaining.empty()) {
        LabelSet comp = reach(adj, remaining, remaining.min_label());
        out.push_back(comp);
        remaining -= comp;
    }
    return out;
}

bool is_cycle_union(const DiGraph& g) {
    std::vector<int> indeg(g.n + 1, 0), outdeg(g.n + 1, 0);
    for (auto [u, v] : g.edges) {
        ++outdeg[u];
        ++indeg[v];
    }
    for (int v = 1; v <= g.n; ++v)
        if (indeg[v] != 1 || outdeg[v] != 1) return false;
    return true;
}

bool is_path_union(const DiGraph& g) {
    std::vector<int> indeg(g.n + 1, 0), outdeg(g.n + 1, 0);
    for (auto [u, v] : g.edges) {
        if (u == v) return false;
        ++outdeg[u];
        ++indeg[v];
    }
    for (int v = 1; v <= g.n; ++v)
        if (indeg[v] > 1 || outdeg[v] > 1) return false;
    // degree bounds plus one fewer edge than vertices per component rule out cycles
    for (const auto& comp : components(g)) {
        int edges_in_comp = 0;
        for (auto [u, v] : g.edges)
            if (comp.contains(u)) ++edges_in_comp;
        if (edges_in_comp != comp.size() - 1) return false;
    }
    return true;
}

std::vector<LabelSet> graph_tubes(const DiGraph& g) {
    auto adj = undirected_adjacency(g);
    std::vector<LabelSet> out;
    for (const auto& comp : components(g)) {
        auto members = comp.labels();
        const int c = static_cast<int>(members.size());
        for (std::uint32_t bits = 1; bits < (1u << c); ++bits) {
            LabelSet s;
            for (int i = 0; i < c; ++i)
                if (bits >> i & 1u) s.insert(members[i]);
            if (s == comp) continue;  // a tube is proper within its component
            if (reach(adj, s, s.min_label()) == s) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), tube_order_less);
    return out;
}

bool tubes_compatible(const DiGraph& g, const LabelSet& a, const LabelSet& b) {
    if (a == b) return false;
    if (a.nested_with(b)) return true;
    if (!a.disjoint_from(b)) return false;
    for (auto [u, v] : g.edges) {
        if (u == v) continue;
        if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) return false;
    }
    return true;
}

bool is_valid_graph_tubing(const DiGraph& g, const std::vector<LabelSet>& tubes) {
    auto all = graph_tubes(g);
    for (const auto& t : tubes)
        if (!std::binary_search(all.begin(), all.end(), t,
                                [](const LabelSet& x, const LabelSet& y) { return tube_order_less(x, y); }))
            throw std::invalid_argument("not a tube of the graph: " + to_string(t));
    for (std::size_t i = 0; i < tubes.size(); ++i)
        for (std::size_t j = i + 1; j < tubes.size(); ++j)
            if (!tubes_compatible(g, tubes[i], tubes[j])) return false;
    return true;
}

void for_each_graph_tubing(const DiGraph& g,
                           const std::function<void(const std::vector<LabelSet>&)>& visit) {
    auto tubes = graph_tubes(g);
    const int m = static_cast<int>(tubes.size());
    std::vector<std::vector<bool>> compat(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            compat[i][j] = compat[j][i] = tubes_compatible(g, tubes[i], tubes[j]);

    std::vector<int> chosen;
    std::vector<LabelSet> scratch;
    auto rec = [&](auto&& self, int from) -> void {
        scratch.clear();
        for (int i : chosen) scratch.push_back(tubes[i]);
        visit(scratch);
        for (int i = from; i < m; ++i) {
            bool ok = true;
            for (int c : chosen)
                if (!compat[c][i]) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

FaceCount graph_tubing_census(const DiGraph& g) {
    FaceCount census;
    for_each_graph_tubing(g, [&](const std::vector<LabelSet>& t) {
        census.add(static_cast<int>(t.size()));
    });
    return census;
}

DiGraph cycles_of_permutation(const Permutation& w) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= w.size(); ++i) e.emplace_back(i, w(i));
    return DiGraph(w.size(), std::move(e));
}

std::vector<DiGraph> path_deletions(const Permutation& w) {
    auto cyc = cycles(w);
    std::vector<DiGraph> out;
    std::vector<std::size_t> choice(cyc.size(), 0);
    for (;;) {
        std::vector<std::pair<int, int>> e;
        for (std::size_t c = 0; c < cyc.size(); ++c) {
            const auto& cycle = cyc[c];
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i == choice[c]) continue;  // delete this edge
                e.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
            }
        }
        out.emplace_back(w.size(), std::move(e));
        // advance the mixed-radix choice vector
        std::size_t c = 0;
        while (c < cyc.size() && ++choice[c] == cyc[c].size()) choice[c++] = 0;
        if (c == cyc.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
/// Path components of a path union, each listed source to sink, ordered by
/// smallest vertex.
std::vector<std::vector<int>> path_list(const DiGraph& g) {
    std::vector<int> next(g.n + 1, 0), indeg(g.n + 1, 0);
    for (auto [u, v] : g.edges) {
        next[u] = v;
        ++indeg[v];
    }
    std::vector<std::vector<int>> paths;
    for (int v = 1; v <= g.n; ++v) {
        if (indeg[v] != 0) continue;  // not a source
        std::vector<int> path{v};
        for (int cur = v; next[cur] != 0; cur = next[cur]) path.push_back(next[cur]);
        paths.push_back(std::move(path));
    }
    std::sort(paths.begin(), paths.end(),
              [](const auto& a, const auto& b) {
                  return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
              });
    return paths;
}
}  // namespace

bool is_bottom_excluding(const DiGraph& g, const std::vector<LabelSet>& tubes) {
    if (!is_path_union(g)) throw std::invalid_argument("host is not a union of directed paths");
    for (const auto& path : path_list(g)) {
        if (path.size() < 2) continue;
        LabelSet required;
        for (std::size_t i = 1; i < path.size(); ++i) required.insert(path[i]);
        if (std::find(tubes.begin(), tubes.end(), required) == tubes.end()) return false;
    }
    return true;
}

FaceCount bottom_excluding_census(const DiGraph& g) {
    if (!is_path_union(g)) throw std::invalid_argument("host is not a union of directed paths");
    FaceCount census;
    for_each_graph_tubing(g, [&](const std::vector<LabelSet>& t) {
        if (is_bottom_excluding(g, t)) census.add(static_cast<int>(t.size()));
    });
    return census;
}

PathTubingPair cut_lonely_vertices(const DiGraph& g, const std::vector<LabelSet>& tubes) {
    if (!is_cycle_union(g)) throw std::invalid_argument("host is not a union of directed cycles");
    if (!is_valid_graph_tubing(g, tubes)) throw std::invalid_argument("invalid tubing");

    LabelSet covered;
    for (const auto& t : tubes) covered |= t;

    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : g.edges)
        if (covered.contains(v)) kept.emplace_back(u, v);
    DiGraph cut(g.n, std::move(kept));

    auto paths = path_list(cut);
    std::vector<int> path_of(g.n + 1, 0);
    std::size_t covered_by_paths = 0;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (int v : paths[i]) {
            path_of[v] = static_cast<int>(i) + 1;
            ++covered_by_paths;
        }
    // a valid tubing leaves at least one lonely vertex per cycle, so every
    // vertex lands on a path
    if (covered_by_paths != static_cast<std::size_t>(g.n))
        throw std::logic_error("a cycle component has no lonely vertex");

    std::vector<int> sigma_line(paths.size(), 0);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        int sink = paths[i].back();
        for (auto [u, v] : g.edges)
            if (u == sink && !covered.contains(v)) sigma_line[i] = path_of[v];
    }
    Permutation sigma(std::move(sigma_line));

    PathTubingPair out{std::move(cut), tubes, std::move(sigma)};
    std::sort(out.tubes.begin(), out.tubes.end(), tube_order_less);
    if (!is_bottom_excluding(out.graph, out.tubes))
        throw std::logic_error("cut tubing is not bottom-excluding");
    return out;
}

CycleTubing close_paths(const DiGraph& g, const std::vector<LabelSet>& tubes,
                        const Permutation& sigma) {
    if (!is_path_union(g)) throw std::invalid_argument("host is not a union of directed paths");
    if (!is_bottom_excluding(g, tubes)) throw std::invalid_argument("tubing is not bottom-excluding");
    auto paths = path_list(g);
    if (sigma.size() != static_cast<int>(paths.size()))
        throw std::invalid_argument("sigma size must match the number of paths");

    std::vector<std::pair<int, int>> edges = g.edges;
    for (std::size_t i = 0; i < paths.size(); ++i)
        edges.emplace_back(paths[i].back(), paths[sigma(static_cast<int>(i) + 1) - 1].front());
    CycleTubing out{DiGraph(g.n, std::move(edges)), tubes};
    std::sort(out.tubes.begin(), out.tubes.end(), tube_order_less);
    if (!is_cycle_union(out.graph)) throw std::logic_error("closing did not produce a cycle union");
    if (!is_valid_graph_tubing(out.graph, out.tubes))
        throw std::logic_error("closing produced an invalid tubing");
    return out;
}

}  // namespace tubings
