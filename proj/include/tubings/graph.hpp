#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tubings/face_count.hpp"
#include "tubings/label_set.hpp"
#include "tubings/perm.hpp"

namespace tubings {

/// Directed graph on vertices 1..n. Loops are allowed (a fixed point of a
/// permutation is the one-vertex directed cycle) but are invisible to
/// tubing connectivity, which ignores directions throughout.
struct DiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // sorted, duplicates rejected

    DiGraph() = default;
    DiGraph(int n, std::vector<std::pair<int, int>> edges);

    bool operator==(const DiGraph&) const = default;
    auto operator<=>(const DiGraph&) const = default;
};

std::string to_string(const DiGraph& g);

DiGraph cycle_graph(int k);  // 1 -> 2 -> ... -> k -> 1
DiGraph path_graph(int k);   // 1 -> 2 -> ... -> k
/// Disjoint union; the second block is relabelled above the first.
DiGraph disjoint_union(const DiGraph& a, const DiGraph& b);

/// Undirected connected components, loops ignored.
std::vector<LabelSet> components(const DiGraph& g);
/// Every vertex has in-degree and out-degree exactly one.
bool is_cycle_union(const DiGraph& g);
/// Every component is a simple directed path (loops disallowed).
bool is_path_union(const DiGraph& g);

/// Graph tubes: nonempty vertex sets inducing a connected subgraph and
/// properly contained in their component. Canonical order.
std::vector<LabelSet> graph_tubes(const DiGraph& g);
/// Nested, or disjoint with no edge crossing between them.
bool tubes_compatible(const DiGraph& g, const LabelSet& a, const LabelSet& b);
bool is_valid_graph_tubing(const DiGraph& g, const std::vector<LabelSet>& tubes);
void for_each_graph_tubing(const DiGraph& g,
                           const std::function<void(const std::vector<LabelSet>&)>& visit);
FaceCount graph_tubing_census(const DiGraph& g);

/// The union of directed cycles whose cycles are the cycles of w: one edge
/// i -> w(i) per element. A fixed point becomes a loop.
DiGraph cycles_of_permutation(const Permutation& w);
/// All graphs obtained by deleting exactly one edge from each directed
/// cycle of cycles_of_permutation(w); the list has prod(cycle lengths)
/// members.
std::vector<DiGraph> path_deletions(const Permutation& w);

/// For a union of directed paths: every path of size >= 2 carries the tube
/// of all its vertices except the source.
bool is_bottom_excluding(const DiGraph& g, const std::vector<LabelSet>& tubes);
FaceCount bottom_excluding_census(const DiGraph& g);

/// Forward direction of the cycle/path correspondence: cut the incoming
/// edge of every lonely vertex, keep the tubes, and record in sigma how the
/// original cycles wired the resulting paths together (paths ordered by
/// smallest vertex; sigma_i = j when the sink of path i fed the source of
/// path j). The output tubing is bottom-excluding.
struct PathTubingPair {
    DiGraph graph;
    std::vector<LabelSet> tubes;
    Permutation sigma;
    bool operator==(const PathTubingPair&) const = default;
};
PathTubingPair cut_lonely_vertices(const DiGraph& g, const std::vector<LabelSet>& tubes);

/// Inverse direction: add an arrow from the sink of the i-th path to the
/// source of the sigma_i-th and keep the tubes. Requires a bottom-excluding
/// tubing and |sigma| = number of paths.
struct CycleTubing {
    DiGraph graph;
    std::vector<LabelSet> tubes;
    bool operator==(const CycleTubing&) const = default;
};
CycleTubing close_paths(const DiGraph& g, const std::vector<LabelSet>& tubes,
                        const Permutation& sigma);

}  // namespace tubings
