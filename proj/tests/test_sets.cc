#include <catch2/catch_amalgamated.hpp>

#include "gtf/sets.hh"

using namespace gtf;

TEST_CASE("universe validates and indexes labels") {
    Universe u({"w", "v", "z"});
    CHECK(u.size() == 3);
    CHECK(u.label(1) == "v");
    CHECK(u.index_of("z") == 2);
    CHECK(u.has_label("w"));
    CHECK_FALSE(u.has_label("q"));
    CHECK(u.full_mask() == 0b111u);
    CHECK_THROWS_AS(u.index_of("q"), ValidationError);

    CHECK_THROWS_AS(Universe({"a", "a"}), ValidationError);
    CHECK_THROWS_AS(Universe({""}), ValidationError);
    CHECK_THROWS_AS(Universe({}), ValidationError);
    CHECK_THROWS_AS(Universe(std::vector<std::string>(65, "x")), ValidationError);
}

TEST_CASE("universe of exactly 64 points is accepted") {
    std::vector<std::string> labels;
    for (int i = 0; i < 64; ++i) labels.push_back("p" + std::to_string(i));
    Universe u(labels);
    CHECK(u.full_mask() == ~Mask{0});
    CHECK(PointSet::from_mask(u.full_mask()).count() == 64);
}

TEST_CASE("point set algebra over bitmasks") {
    PointSet a = PointSet::from_mask(0b0101);
    PointSet b = PointSet::single(1);
    CHECK(a.contains(0));
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(1));
    CHECK(a.count() == 2);
    CHECK(b.count() == 1);
    CHECK((a | b).mask() == 0b0111u);
    CHECK((a & b).empty());
    CHECK((a - PointSet::single(0)).mask() == 0b0100u);
    CHECK(a.with(3).mask() == 0b1101u);
    CHECK(b.subset_of(a | b));
    CHECK_FALSE(a.subset_of(b));
    CHECK(a.intersects(PointSet::single(2)));
    CHECK_FALSE(a.intersects(b));
    CHECK(a.complement_in(PointSet::from_mask(0b1111)).mask() == 0b1010u);
    CHECK(a.members() == std::vector<std::size_t>{0, 2});
    CHECK(PointSet{}.empty());
    CHECK(PointSet{}.members().empty());
}

TEST_CASE("canonical order sorts by size then by earliest members") {
    // 0b01 = {first point}, 0b10 = {second point}
    CHECK(canonical_less(PointSet{}, PointSet::from_mask(0b01)));
    CHECK(canonical_less(PointSet::from_mask(0b01), PointSet::from_mask(0b10)));
    CHECK(canonical_less(PointSet::from_mask(0b10), PointSet::from_mask(0b11)));
    CHECK(canonical_less(PointSet::from_mask(0b011), PointSet::from_mask(0b101)));
    CHECK(canonical_less(PointSet::from_mask(0b101), PointSet::from_mask(0b110)));
    CHECK_FALSE(canonical_less(PointSet::from_mask(0b110), PointSet::from_mask(0b101)));
    CHECK_FALSE(canonical_less(PointSet::from_mask(0b11), PointSet::from_mask(0b11)));
    // a three-member set never precedes a two-member set
    CHECK_FALSE(canonical_less(PointSet::from_mask(0b111), PointSet::from_mask(0b110)));
}

TEST_CASE("set family deduplicates and stays canonically sorted") {
    SetFamily f;
    f.insert(PointSet::from_mask(0b11));
    f.insert(PointSet::from_mask(0b01));
    f.insert(PointSet{});
    f.insert(PointSet::from_mask(0b01));
    CHECK(f.size() == 3);
    CHECK(f.contains(PointSet::from_mask(0b11)));
    CHECK_FALSE(f.contains(PointSet::from_mask(0b10)));
    std::vector<Mask> order;
    for (PointSet s : f) order.push_back(s.mask());
    CHECK(order == std::vector<Mask>{0b00, 0b01, 0b11});

    SetFamily g(std::vector<PointSet>{PointSet::from_mask(0b10), PointSet::from_mask(0b01),
                                      PointSet::from_mask(0b10)});
    CHECK(g.size() == 2);
    CHECK(g.sets().front().mask() == 0b01u);
}

TEST_CASE("family-wide union and intersection") {
    SetFamily f;
    CHECK(f.union_all().empty());
    CHECK(f.intersect_all(PointSet::from_mask(0b111)).mask() == 0b111u);
    f.insert(PointSet::from_mask(0b011));
    f.insert(PointSet::from_mask(0b110));
    CHECK(f.union_all().mask() == 0b111u);
    CHECK(f.intersect_all(PointSet::from_mask(0b111)).mask() == 0b010u);
}

TEST_CASE("set and family formatting") {
    Universe u({"w", "v"});
    CHECK(format_set(u, PointSet{}) == "∅");
    CHECK(format_set(u, PointSet::single(0)) == "{w}");
    CHECK(format_set(u, PointSet::from_mask(0b11)) == "{w,v}");
    SetFamily f;
    CHECK(format_family(u, f) == "(none)");
    f.insert(PointSet::from_mask(0b11));
    f.insert(PointSet{});
    CHECK(format_family(u, f) == "∅, {w,v}");
}
