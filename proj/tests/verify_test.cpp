#include "tubings/verify.hpp"

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"

#include "tubings/builder.hpp"
#include "tubings/cache.hpp"
#include "tubings/graph.hpp"

using namespace tubings;

TEST_CASE("h-substitution identity on a chain") {
    VerificationReport r = verify_h_substitution(Poset::chain(4), ElementSet::of({2, 3}));
    CHECK(r.equal);
    CHECK(r.lhs == "1 + 3x + x^2");
    CHECK(r.rhs == r.lhs);

    // the two-element case written out: h_P = (h_{P_2} + (1+x) h_{P_1}) / 2
    IntPoly h_p1 = h_polynomial(substitute(Poset::chain(4), ElementSet::of({2, 3}),
                                           Poset::antichain(1)));
    IntPoly h_p2 = h_polynomial(substitute(Poset::chain(4), ElementSet::of({2, 3}),
                                           Poset::antichain(2)));
    IntPoly by_hand =
        (h_p2 + IntPoly(std::vector<Int>{1, 1}) * h_p1).divided_exact(2);
    CHECK(by_hand == h_polynomial(Poset::chain(4)));
}

TEST_CASE("h-substitution degenerates for a singleton block") {
    VerificationReport r = verify_h_substitution(Poset::chain(4), ElementSet::of({2}));
    CHECK(r.equal);
}

TEST_CASE("h-substitution names failing preconditions") {
    CHECK_THROWS_WITH_AS(verify_h_substitution(claw(3), ElementSet::of({2, 3})),
                         "block is not a chain: elements 2 and 3 are incomparable",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(verify_h_substitution(Poset::chain(4), ElementSet::of({1, 3})),
                         "block is not autonomous: element 2 sees 1 and 3 differently",
                         std::invalid_argument);
    CHECK_THROWS_AS(verify_h_substitution(Poset::chain(3), ElementSet::full(3)),
                    std::invalid_argument);
}

TEST_CASE("nondegradable count reports") {
    VerificationReport r =
        verify_nondegradable_counts(Poset::chain(4), ElementSet::of({2, 3}));
    CHECK(r.equal);
    CHECK(r.lhs == "k 0 2; k 1 8; k 2 6");
    CHECK(r.rhs == r.lhs);
}

TEST_CASE("nondegradable counts hold at seven elements") {
    CHECK(verify_nondegradable_counts(Poset::chain(7), ElementSet::of({3, 4, 5})).equal);
    CHECK(verify_nondegradable_counts(broom_poset(3, 2), ElementSet::of({2, 3, 4})).equal);
}

TEST_CASE("eq reports") {
    CHECK(verify_eq(3, "eq2").equal);
    CHECK(verify_eq(3, "eq3").equal);
    VerificationReport r = verify_eq(1, "eq2");
    CHECK(r.equal);
    CHECK(r.lhs == "t^1: 1");
    CHECK_THROWS_AS(verify_eq(2, "eq4"), std::invalid_argument);
}

TEST_CASE("corollary reports") {
    VerificationReport c51 = verify_corollary("5.1", 2, 0);
    CHECK(c51.equal);
    CHECK(c51.lhs == "1 + x");

    CHECK(verify_corollary("5.2", 1, 2).equal);
    CHECK(verify_corollary("5.3", 2, 2).equal);
    CHECK(verify_corollary("5.4", 2, 2).equal);

    VerificationReport c55 = verify_corollary("5.5", 1, 1);
    CHECK(c55.equal);
    CHECK(c55.lhs == "1 + x");

    CHECK(verify_corollary("5.6", 2, 1).equal);
    CHECK(verify_corollary("5.7", 1, 1).equal);

    VerificationReport fp = verify_corollary("final-prop", 1, 1);
    CHECK(fp.equal);
    CHECK(fp.lhs == "1 + x");

    CHECK_THROWS_AS(verify_corollary("5.9", 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_corollary("final-prop", 1, 0), std::invalid_argument);
}

TEST_CASE("report rendering") {
    VerificationReport r = verify_corollary("5.1", 3, 0);
    std::string text = render_text(r);
    CHECK(text.find("identity: 5.1") != std::string::npos);
    CHECK(text.find("equal: true") != std::string::npos);
    auto j = nlohmann::json::parse(render_json(r));
    CHECK(j["identity"] == "5.1");
    CHECK(j["equal"] == true);
    CHECK(j["lhs"] == r.lhs);
}

TEST_CASE("poset builder expressions") {
    CHECK(build_poset("chain:4") == Poset::chain(4));
    CHECK(build_poset("antichain:3") == Poset::antichain(3));
    CHECK(build_poset("osum(antichain:1,antichain:3)") == claw(3));
    CHECK(build_poset("broom:1,2") == broom_poset(1, 2));
    CHECK(build_poset("osum(chain:2, antichain:2, chain:1)") ==
          ordinal_sum({Poset::chain(2), Poset::antichain(2), Poset::chain(1)}));
    CHECK(build_poset("osum(osum(antichain:1,chain:2),antichain:2)") ==
          ordinal_sum({Poset::antichain(1), Poset::chain(2), Poset::antichain(2)}));
    CHECK_THROWS_AS(build_poset("chain"), std::invalid_argument);
    CHECK_THROWS_AS(build_poset("osum(chain:2)"), std::invalid_argument);
    CHECK_THROWS_AS(build_poset("ring:4"), std::invalid_argument);
    CHECK_THROWS_AS(build_poset("chain:4 extra"), std::invalid_argument);
}

TEST_CASE("graph builder specs") {
    CHECK(build_graph("cycle:3") == cycle_graph(3));
    CHECK(build_graph("path:4") == path_graph(4));
    CHECK(build_graph("perm-cycles:231") == cycles_of_permutation(parse_one_line("231")));
    CHECK(build_graph("union:path:2+path:2") ==
          disjoint_union(path_graph(2), path_graph(2)));
    CHECK(build_graph("union:cycle:2+path:1+path:1") ==
          disjoint_union(disjoint_union(cycle_graph(2), path_graph(1)), path_graph(1)));
    CHECK_THROWS_AS(build_graph("blob:3"), std::invalid_argument);
    CHECK_THROWS_AS(build_graph("union:"), std::invalid_argument);
}

TEST_CASE("census cache round-trip") {
    auto dir = std::filesystem::temp_directory_path() /
               ("tubings-cache-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    CensusCache cache(dir);

    CHECK_FALSE(cache.lookup("poset\nn 4\n").has_value());
    FaceCount census = tubing_census(Poset::chain(4));
    cache.store("poset\nn 4\n", census);
    auto hit = cache.lookup("poset\nn 4\n");
    REQUIRE(hit.has_value());
    CHECK(*hit == census);
    CHECK_FALSE(cache.lookup("poset\nn 5\n").has_value());

    // cached and fresh enumerations agree
    auto again = cache.lookup("poset\nn 4\n");
    REQUIRE(again.has_value());
    CHECK(*again == tubing_census(Poset::chain(4)));

    // a corrupted file is treated as a miss
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ofstream out(entry.path(), std::ios::trunc);
        out << "garbage";
    }
    CHECK_FALSE(cache.lookup("poset\nn 4\n").has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache environment override") {
    auto dir = std::filesystem::temp_directory_path() /
               ("tubings-cache-env-" + std::to_string(::getpid()));
    setenv("TUBINGS_CACHE_DIR", dir.c_str(), 1);
    CensusCache cache = CensusCache::from_environment();
    CHECK(cache.directory() == dir);
    unsetenv("TUBINGS_CACHE_DIR");
    CHECK(CensusCache::from_environment().directory() == std::filesystem::path(".tubings-cache"));
}
