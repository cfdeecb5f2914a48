#include "tubings/graph.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace tubings;

namespace {
FaceCount census(std::initializer_list<std::pair<int, long long>> entries) {
    FaceCount c;
    for (auto [k, v] : entries) c.by_tube_count[k] = v;
    return c;
}

FaceCount census_of_reversed(const IntPoly& p, int window) {
    IntPoly rev = reverse_within(p, window);
    FaceCount c;
    for (int k = 0; k <= rev.degree(); ++k)
        if (rev.coeff(k) != 0) c.add(k, static_cast<long long>(rev.coeff(k)));
    return c;
}

// all unions of r directed paths on labelled vertices 1..n, generated
// independently of path_deletions
std::set<DiGraph> all_path_unions(int n) {
    std::set<DiGraph> out;
    for_each_permutation(n, [&](const Permutation& w) {
        for (const Composition& alpha : compositions_of(n)) {
            std::vector<std::pair<int, int>> edges;
            int pos = 1;
            for (int part : alpha.parts) {
                for (int i = 0; i < part - 1; ++i)
                    edges.emplace_back(w(pos + i), w(pos + i + 1));
                pos += part;
            }
            out.emplace(n, std::move(edges));
        }
    });
    return out;
}
}  // namespace

TEST_CASE("graph construction and components") {
    DiGraph tri = cycle_graph(3);
    CHECK(tri.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}});
    CHECK(is_cycle_union(tri));
    CHECK_FALSE(is_path_union(tri));

    DiGraph p3 = path_graph(3);
    CHECK(is_path_union(p3));
    CHECK_FALSE(is_cycle_union(p3));

    DiGraph two = disjoint_union(path_graph(2), path_graph(2));
    CHECK(two.n == 4);
    CHECK(components(two) == std::vector<LabelSet>{LabelSet::of({1, 2}), LabelSet::of({3, 4})});

    DiGraph loop(1, {{1, 1}});
    CHECK(is_cycle_union(loop));
    CHECK_FALSE(is_path_union(loop));
}

TEST_CASE("graph tubes live properly inside components") {
    CHECK(graph_tubes(cycle_graph(3)) ==
          std::vector<LabelSet>{LabelSet::of({1}), LabelSet::of({2}), LabelSet::of({3}),
                                LabelSet::of({1, 2}), LabelSet::of({1, 3}),
                                LabelSet::of({2, 3})});
    CHECK(graph_tubes(path_graph(1)).empty());
    // a whole component is never a tube
    auto tubes = graph_tubes(disjoint_union(path_graph(2), path_graph(1)));
    CHECK(tubes == std::vector<LabelSet>{LabelSet::of({1}), LabelSet::of({2})});
}

TEST_CASE("tube compatibility") {
    DiGraph tri = cycle_graph(3);
    CHECK(tubes_compatible(tri, LabelSet::of({1}), LabelSet::of({1, 2})));
    CHECK_FALSE(tubes_compatible(tri, LabelSet::of({1}), LabelSet::of({2, 3})));  // adjacent
    DiGraph p3 = path_graph(3);
    CHECK(tubes_compatible(p3, LabelSet::of({1}), LabelSet::of({3})));
    CHECK_FALSE(tubes_compatible(p3, LabelSet::of({1, 2}), LabelSet::of({2, 3})));
}

TEST_CASE("graph tubing census") {
    CHECK(graph_tubing_census(cycle_graph(3)) == census({{0, 1}, {1, 6}, {2, 6}}));
    CHECK(graph_tubing_census(path_graph(3)) == census({{0, 1}, {1, 5}, {2, 5}}));
    CHECK(graph_tubing_census(path_graph(2)) == census({{0, 1}, {1, 2}}));
    CHECK(graph_tubing_census(path_graph(1)) == census({{0, 1}}));

    // censuses match the reversed f-polynomial families
    for (int k = 1; k <= 6; ++k) {
        CHECK(graph_tubing_census(cycle_graph(k)) == census_of_reversed(cyclo_f(k), k));
        CHECK(graph_tubing_census(path_graph(k)) == census_of_reversed(assoc_f(k), k));
    }

    // disjoint unions multiply censuses componentwise
    FaceCount u = graph_tubing_census(disjoint_union(path_graph(2), path_graph(2)));
    CHECK(u == census({{0, 1}, {1, 4}, {2, 4}}));
}

TEST_CASE("cycle graphs of permutations") {
    CHECK(cycles_of_permutation(parse_one_line("231")) == cycle_graph(3));
    DiGraph id3 = cycles_of_permutation(Permutation::identity(3));
    CHECK(id3.edges == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});

    DiGraph dc = cycles_of_permutation(parse_one_line("324796185"));
    std::vector<std::pair<int, int>> expected{{1, 3}, {2, 2}, {3, 4}, {4, 7}, {5, 9},
                                              {6, 6}, {7, 1}, {8, 8}, {9, 5}};
    std::sort(expected.begin(), expected.end());
    CHECK(dc.edges == expected);
}

TEST_CASE("path deletions") {
    auto dp = path_deletions(parse_one_line("231"));
    REQUIRE(dp.size() == 3);
    std::set<DiGraph> got(dp.begin(), dp.end());
    CHECK(got.count(DiGraph(3, {{1, 2}, {2, 3}})) == 1);
    CHECK(got.count(DiGraph(3, {{2, 3}, {3, 1}})) == 1);
    CHECK(got.count(DiGraph(3, {{3, 1}, {1, 2}})) == 1);

    auto dp_id = path_deletions(Permutation::identity(4));
    REQUIRE(dp_id.size() == 1);
    CHECK(dp_id[0] == DiGraph(4, {}));

    CHECK(path_deletions(parse_one_line("213")).size() == 2);  // cycle type (2,1)

    for (int n = 1; n <= 5; ++n) {
        for_each_permutation(n, [&](const Permutation& w) {
            long long expected = 1;
            for (int part : cycle_type(w).parts) expected *= part;
            CHECK(static_cast<long long>(path_deletions(w).size()) == expected);
        });
    }
}

TEST_CASE("path unions are exactly the deletions, with no overlap") {
    for (int n = 1; n <= 5; ++n) {
        std::set<DiGraph> from_deletions;
        long long with_multiplicity = 0;
        for_each_permutation(n, [&](const Permutation& w) {
            for (const DiGraph& g : path_deletions(w)) {
                from_deletions.insert(g);
                ++with_multiplicity;
            }
        });
        CHECK(static_cast<long long>(from_deletions.size()) == with_multiplicity);
        CHECK(from_deletions == all_path_unions(n));
    }
}

TEST_CASE("bottom-excluding tubings") {
    DiGraph p3 = path_graph(3);
    CHECK(is_bottom_excluding(p3, {LabelSet::of({2, 3})}));
    CHECK_FALSE(is_bottom_excluding(p3, {LabelSet::of({1, 2})}));
    CHECK(is_bottom_excluding(DiGraph(3, {}), {}));
    CHECK_THROWS_AS(is_bottom_excluding(cycle_graph(3), {}), std::invalid_argument);

    CHECK(bottom_excluding_census(p3) == census({{1, 1}, {2, 2}}));
    CHECK(bottom_excluding_census(path_graph(1)) == census({{0, 1}}));
    CHECK(bottom_excluding_census(disjoint_union(path_graph(2), path_graph(2))) ==
          census({{2, 1}}));

    // per-path product: x * reversed F_{k-1} for each path of size k
    for (int k = 2; k <= 5; ++k) {
        FaceCount got = bottom_excluding_census(path_graph(k));
        IntPoly expected = IntPoly::monomial(1, 1) * reverse_within(assoc_f(k - 1), k - 1);
        for (int i = 0; i <= expected.degree(); ++i)
            CHECK(Int(got.at(i)) == expected.coeff(i));
    }
}

TEST_CASE("cutting lonely vertices") {
    // empty tubing on the identity graph: loops vanish, sigma is the identity
    DiGraph id3 = cycles_of_permutation(Permutation::identity(3));
    PathTubingPair pair = cut_lonely_vertices(id3, {});
    CHECK(pair.graph == DiGraph(3, {}));
    CHECK(pair.sigma == Permutation::identity(3));

    // one tube on a 3-cycle
    DiGraph tri = cycle_graph(3);
    PathTubingPair p1 = cut_lonely_vertices(tri, {LabelSet::of({1, 2})});
    CHECK(p1.graph == DiGraph(3, {{3, 1}, {1, 2}}));
    CHECK(p1.sigma == Permutation::identity(1));

    PathTubingPair p2 = cut_lonely_vertices(tri, {LabelSet::of({1})});
    CHECK(p2.graph == DiGraph(3, {{3, 1}}));  // paths: 3->1 and {2}
    CHECK(p2.sigma == parse_one_line("21"));
}

TEST_CASE("the twelve one-tube pairs on three vertices") {
    // the one-tube tubings over both 3-cycles split into six pairs with the
    // identity of S_1 and six with the transposition of S_2
    int with_identity = 0, with_transposition = 0;
    for_each_permutation(3, [&](const Permutation& w) {
        if (cycle_count(w) != 1) return;
        DiGraph g = cycles_of_permutation(w);
        for_each_graph_tubing(g, [&](const std::vector<LabelSet>& tubes) {
            if (tubes.size() != 1) return;
            PathTubingPair pair = cut_lonely_vertices(g, tubes);
            CHECK(is_bottom_excluding(pair.graph, pair.tubes));
            if (pair.sigma == Permutation::identity(1)) ++with_identity;
            else if (pair.sigma == parse_one_line("21")) ++with_transposition;
        });
    });
    CHECK(with_identity == 6);
    CHECK(with_transposition == 6);
}

TEST_CASE("cycle/path round-trips exhaustively") {
    for (int n = 1; n <= 4; ++n) {
        for_each_permutation(n, [&](const Permutation& w) {
            DiGraph g = cycles_of_permutation(w);
            for_each_graph_tubing(g, [&](const std::vector<LabelSet>& tubes) {
                PathTubingPair pair = cut_lonely_vertices(g, tubes);
                CHECK(pair.tubes.size() == tubes.size());
                CycleTubing back = close_paths(pair.graph, pair.tubes, pair.sigma);
                CHECK(back.graph == g);
                std::vector<LabelSet> sorted = tubes;
                std::sort(sorted.begin(), sorted.end(), tube_order_less);
                CHECK(back.tubes == sorted);
            });
        });
        for (const DiGraph& g : all_path_unions(n)) {
            const int r = static_cast<int>(components(g).size());
            std::vector<std::vector<LabelSet>> be;
            for_each_graph_tubing(g, [&](const std::vector<LabelSet>& tubes) {
                if (is_bottom_excluding(g, tubes)) be.push_back(tubes);
            });
            for_each_permutation(r, [&](const Permutation& sigma) {
                for (const auto& tubes : be) {
                    CycleTubing closed = close_paths(g, tubes, sigma);
                    CHECK(cycle_count(sigma) ==
                          static_cast<int>(components(closed.graph).size()));
                    PathTubingPair pair = cut_lonely_vertices(closed.graph, closed.tubes);
                    CHECK(pair.graph == g);
                    CHECK(pair.tubes == tubes);
                    CHECK(pair.sigma == sigma);
                }
            });
        }
    }
}

TEST_CASE("census identities against the cycle-type polynomials") {
    for (int n = 1; n <= 5; ++n) {
        // left side: tubings of the cycle unions, grouped by cycle count
        std::map<std::pair<int, int>, long long> dc_counts;
        for_each_permutation(n, [&](const Permutation& w) {
            DiGraph g = cycles_of_permutation(w);
            int ell = cycle_count(w);
            for (const auto& [k, c] : graph_tubing_census(g).by_tube_count)
                dc_counts[{ell, k}] += c;
        });
        BiPoly lhs = eq3_lhs(n);
        for (int ell = 0; ell <= lhs.t_degree(); ++ell)
            for (int k = 0; k <= n; ++k)
                CHECK(lhs.coeff(ell, k) == Int(dc_counts[{ell, k}]));

        // right side: bottom-excluding tubings paired with permutations of
        // the paths, grouped by the pairing's cycle count
        std::map<std::pair<int, int>, long long> dp_counts;
        for (const DiGraph& g : all_path_unions(n)) {
            const int r = static_cast<int>(components(g).size());
            FaceCount be = bottom_excluding_census(g);
            for_each_permutation(r, [&](const Permutation& sigma) {
                int ell = cycle_count(sigma);
                for (const auto& [k, c] : be.by_tube_count) dp_counts[{ell, k}] += c;
            });
        }
        BiPoly rhs = eq3_rhs(n);
        for (int ell = 0; ell <= rhs.t_degree(); ++ell)
            for (int k = 0; k <= n; ++k)
                CHECK(rhs.coeff(ell, k) == Int(dp_counts[{ell, k}]));
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(close_paths(path_graph(3), {LabelSet::of({2, 3})}, Permutation::identity(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(close_paths(path_graph(3), {LabelSet::of({1, 2})}, Permutation::identity(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(cut_lonely_vertices(path_graph(3), {}), std::invalid_argument);
    CHECK_THROWS_AS(DiGraph(2, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(DiGraph(2, {{1, 3}}), std::invalid_argument);
}
