#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gtf/generate.hh"
#include "gtf/json_io.hh"

using namespace gtf;

TEST_CASE("seed mixing separates tags and indices") {
    CHECK(mix_seed(7, "space", 0) == mix_seed(7, "space", 0));
    CHECK(mix_seed(7, "space", 0) != mix_seed(7, "space", 1));
    CHECK(mix_seed(7, "space", 0) != mix_seed(7, "gnets", 0));
    CHECK(mix_seed(7, "space", 0) != mix_seed(8, "space", 0));
}

TEST_CASE("rng draws are reproducible") {
    Rng a(42), b(42), c(43);
    bool all_equal = true, any_diff_seed = false;
    for (int i = 0; i < 64; ++i) {
        std::uint64_t x = a.next();
        if (x != b.next()) all_equal = false;
        if (x != c.next()) any_diff_seed = true;
    }
    CHECK(all_equal);
    CHECK(any_diff_seed);
    Rng d(1);
    for (int i = 0; i < 256; ++i) CHECK(d.below(7) < 7);
    CHECK(Rng(5).below(1) == 0);
}

TEST_CASE("random spaces validate and honour the size bounds") {
    SpaceGenParams p;
    std::set<std::size_t> sizes;
    for (std::uint64_t i = 0; i < 200; ++i) {
        GtfSpace s = random_space(p, i);
        CHECK(validate(s).pass);
        REQUIRE(s.universe.size() >= 2);
        REQUIRE(s.universe.size() <= 7);
        sizes.insert(s.universe.size());
    }
    CHECK(sizes.size() == 6);  // every size in 2..7 appears in 200 draws

    SpaceGenParams small;
    small.max_universe_size = 5;
    for (std::uint64_t i = 0; i < 50; ++i)
        CHECK(random_space(small, i).universe.size() <= 5);

    CHECK(random_space(p, 3) == random_space(p, 3));
    bool some_difference = false;
    for (std::uint64_t i = 1; i < 20 && !some_difference; ++i)
        some_difference = !(random_space(p, i) == random_space(p, 0));
    CHECK(some_difference);

    SpaceGenParams bad;
    bad.max_universe_size = 1;
    CHECK_THROWS_AS(random_space(bad, 0), ValidationError);
    bad.max_universe_size = 9;
    CHECK_THROWS_AS(random_space(bad, 0), ValidationError);
}

TEST_CASE("orphan families appear under the default densities") {
    SpaceGenParams p;
    bool some_orphan_family = false, some_empty_flag = false;
    for (std::uint64_t i = 0; i < 100; ++i) {
        GtfSpace s = random_space(p, i);
        PointSet orphans = orphaned_points(s);
        for (std::size_t w : orphans.members()) {
            if (!s.assoc_of(w).empty()) some_orphan_family = true;
            if (s.assoc_of(w).contains(PointSet{})) some_empty_flag = true;
        }
    }
    CHECK(some_orphan_family);
    CHECK(some_empty_flag);
}

TEST_CASE("exhaustive space streams have the known cardinalities") {
    CHECK(exhaustive_spaces(1).size() == 3);
    CHECK(exhaustive_spaces(2).size() == 16);
    CHECK(exhaustive_spaces(3).size() == 209);
    CHECK_THROWS_AS(exhaustive_spaces(0), ValidationError);
    CHECK_THROWS_AS(exhaustive_spaces(4), ResourceError);

    std::set<std::string> seen;
    for (const GtfSpace& s : exhaustive_spaces(2)) {
        CHECK(validate(s).pass);
        seen.insert(space_to_json(s).dump());
    }
    CHECK(seen.size() == 16);  // no duplicates
}

TEST_CASE("chain gnet enumeration is complete and shares domains") {
    std::vector<Gnet> gs = chain_gnets(2, 3);
    CHECK(gs.size() == 2 + 4 + 8);
    std::set<std::string> distinct;
    Universe u({"w", "v"});
    for (const Gnet& g : gs) {
        CHECK(g.domain->is_sequence());
        distinct.insert(gnet_to_json(g, u).dump());
    }
    CHECK(distinct.size() == gs.size());
    // same-length gnets share one domain object
    CHECK(gs[0].domain.get() == gs[1].domain.get());
    CHECK(chain_gnets(3, 2).size() == 3 + 9);
}

TEST_CASE("random posets and gnets stay within bounds and reproduce") {
    Rng r1(mix_seed(7, "gnets", 0)), r2(mix_seed(7, "gnets", 0));
    for (int i = 0; i < 50; ++i) {
        auto p1 = random_poset(r1);
        auto p2 = random_poset(r2);
        REQUIRE(p1->size() >= 1);
        REQUIRE(p1->size() <= 5);
        CHECK(p1->relation_pairs() == p2->relation_pairs());
        Gnet g1 = random_gnet(r1, p1, 4);
        Gnet g2 = random_gnet(r2, p2, 4);
        CHECK(g1.values == g2.values);
        for (std::size_t v : g1.values) CHECK(v < 4);
    }
}
