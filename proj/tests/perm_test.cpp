#include "tubings/perm.hpp"

#include <set>

#include "doctest.h"

using namespace tubings;

namespace {
// independent oracle: stack-sortable means 231-avoiding
bool avoids_231(const Permutation& w) {
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (w(k) < w(i) && w(i) < w(j)) return false;
    return true;
}
}  // namespace

TEST_CASE("permutation basics") {
    Permutation w = parse_one_line("231");
    CHECK(w(1) == 2);
    CHECK(w(3) == 1);
    CHECK(to_string(w) == "231");
    CHECK(Permutation::identity(3) == parse_one_line("123"));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK(parse_one_line("10,2,3,4,5,6,7,8,9,1").size() == 10);
}

TEST_CASE("cycle structure") {
    Permutation omega = parse_one_line("324796185");
    CHECK(cycle_type(omega) == Partition({4, 2, 1, 1, 1}));
    CHECK(cycle_count(omega) == 5);
    CHECK(to_cycle_string(omega) == "(1347)(2)(59)(6)(8)");
    CHECK(parse_cycles("(59)(6)(1347)(2)(8)", 9) == omega);

    CHECK(cycle_type(Permutation::identity(4)) == Partition({1, 1, 1, 1}));
    CHECK(cycle_type(parse_one_line("231")) == Partition({3}));
    CHECK(parse_cycles("(123)", 3) == parse_one_line("231"));
    CHECK_THROWS_AS(parse_cycles("(12)", 3), std::invalid_argument);  // 3 missing
}

TEST_CASE("descents") {
    CHECK(descents(parse_one_line("321")) == 2);
    CHECK(descents(Permutation::identity(5)) == 0);
    CHECK(descents(parse_one_line("965347128")) == 4);
}

TEST_CASE("eulerian polynomials") {
    CHECK(eulerian(1) == IntPoly::constant(1));
    CHECK(eulerian(3) == IntPoly(std::vector<Int>{1, 4, 1}));
    CHECK(eulerian(4) == IntPoly(std::vector<Int>{1, 11, 11, 1}));
    for (int n = 1; n <= 7; ++n) {
        CHECK(eulerian(n).palindromic(n - 1));
        CHECK(eulerian(n)(1) == factorial(n));
    }
}

TEST_CASE("restricted eulerian polynomials") {
    CHECK(eulerian_restricted(1, 1) == IntPoly::constant(1));
    for (int n = 1; n <= 4; ++n) CHECK(eulerian_restricted(1, n) == eulerian(n));
    CHECK(eulerian_restricted(2, 2) == IntPoly(std::vector<Int>{1, 6, 1}));
    CHECK_THROWS_AS(eulerian_restricted(0, 2), std::invalid_argument);
}

TEST_CASE("stack sorting") {
    CHECK(stack_sort(parse_one_line("231")) == parse_one_line("213"));
    CHECK(stack_sort(parse_one_line("321")) == parse_one_line("123"));
    CHECK(stack_sort(Permutation::identity(4)) == Permutation::identity(4));
}

TEST_CASE("stack-sorting preimages") {
    auto pre = stack_preimage(Permutation::identity(3));
    std::set<std::string> got;
    for (const auto& w : pre) got.insert(to_string(w));
    CHECK(got == std::set<std::string>{"123", "132", "213", "312", "321"});
    CHECK(descent_gf(pre) == narayana(3));

    auto pre213 = stack_preimage(parse_one_line("213"));
    REQUIRE(pre213.size() == 1);
    CHECK(pre213[0] == parse_one_line("231"));

    for (int n = 1; n <= 5; ++n) {
        Int catalan = binomial(2 * n, n) / (n + 1);
        CHECK(Int(stack_preimage(Permutation::identity(n)).size()) == catalan);
        CHECK(descent_gf(stack_preimage(Permutation::identity(n))) == narayana(n));
    }
}

TEST_CASE("stack-sortable iff 231-avoiding") {
    for (int n = 1; n <= 6; ++n) {
        Permutation id = Permutation::identity(n);
        for_each_permutation(n, [&](const Permutation& w) {
            CHECK((stack_sort(w) == id) == avoids_231(w));
        });
    }
}

TEST_CASE("broom narayana polynomials") {
    for (int n = 1; n <= 5; ++n) CHECK(broom_narayana(n, 0) == narayana(n));
    CHECK(broom_narayana(1, 2) == eulerian(3));
    CHECK(broom_narayana(0, 3) == eulerian(3));  // no fixed positions at all
    CHECK(broom_narayana(1, 1) == narayana(2));
}

TEST_CASE("compositions and ordered set partitions") {
    CHECK(compositions_of(4).size() == 8);
    CHECK(compositions_of(1).size() == 1);
    CHECK(ordered_set_partitions(3).size() == 13);
    CHECK(ordered_set_partitions(1).size() == 1);
    CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedSetPartition({{1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedSetPartition(std::vector<std::vector<int>>{{2}}), std::invalid_argument);
}

TEST_CASE("segment/cycle bijection on the worked example") {
    Permutation w = parse_one_line("965347128");
    Composition alpha({3, 4, 2});
    CycleSplit r = composition_to_cycles(w, alpha);
    CHECK(r.omega == parse_one_line("324796185"));
    CHECK(r.blocks == OrderedSetPartition({{3, 4}, {1}, {2, 5}}));
    SegmentForm back = cycles_to_composition(r.omega, r.blocks);
    CHECK(back.w == w);
    CHECK(back.alpha == alpha);
}

TEST_CASE("segment/cycle bijection edge cases") {
    // identity with one segment: all fixed points, one block
    CycleSplit r = composition_to_cycles(Permutation::identity(4), Composition({4}));
    CHECK(r.omega == Permutation::identity(4));
    CHECK(r.blocks == OrderedSetPartition(std::vector<std::vector<int>>{{1, 2, 3, 4}}));

    CycleSplit r2 = composition_to_cycles(parse_one_line("21"), Composition({2}));
    CHECK(r2.omega == parse_one_line("21"));
    CHECK(r2.blocks == OrderedSetPartition(std::vector<std::vector<int>>{{1}}));

    CHECK_THROWS_AS(composition_to_cycles(parse_one_line("21"), Composition({3})),
                    std::invalid_argument);
}

TEST_CASE("segment/cycle bijection round-trips exhaustively") {
    for (int n = 1; n <= 4; ++n) {
        long long forward = 0;
        for_each_permutation(n, [&](const Permutation& w) {
            for (const Composition& alpha : compositions_of(n)) {
                CycleSplit r = composition_to_cycles(w, alpha);
                CHECK(r.blocks.length() == alpha.length());
                SegmentForm back = cycles_to_composition(r.omega, r.blocks);
                CHECK(back.w == w);
                CHECK(back.alpha == alpha);
                ++forward;
            }
        });
        long long backward = 0;
        for_each_permutation(n, [&](const Permutation& omega) {
            for (const OrderedSetPartition& u : ordered_set_partitions(cycle_count(omega))) {
                SegmentForm sf = cycles_to_composition(omega, u);
                CycleSplit fwd = composition_to_cycles(sf.w, sf.alpha);
                CHECK(fwd.omega == omega);
                CHECK(fwd.blocks == u);
                ++backward;
            }
        });
        CHECK(forward == backward);
    }
}
