#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hh"
#include "gtf/e_ops.hh"
#include "gtf/f_ops.hh"

using namespace gtf;
using fixtures::pts;

TEST_CASE("e-neighbourhoods on the two-point space") {
    GtfSpace s = fixtures::tp_space();
    SetFamily ew = e_neighbourhoods(s, 0);
    SetFamily ev = e_neighbourhoods(s, 1);
    REQUIRE(ew.size() == 1);
    CHECK(ew.contains(pts(s, "w,v")));
    CHECK(ev == ew);
}

TEST_CASE("e-interior and e-closure on the two-point space") {
    GtfSpace s = fixtures::tp_space();
    CHECK(e_interior(s, pts(s, "w")) == pts(s, ""));
    CHECK(e_interior(s, pts(s, "v")) == pts(s, ""));
    CHECK(e_interior(s, pts(s, "w,v")) == pts(s, "w,v"));
    CHECK(e_interior(s, pts(s, "")) == pts(s, ""));
    CHECK(e_closure(s, pts(s, "v")) == pts(s, "w,v"));
    CHECK(e_closure(s, pts(s, "w")) == pts(s, "w,v"));
    CHECK(e_closure(s, pts(s, "")) == pts(s, ""));
}

TEST_CASE("empty families give empty e-neighbourhoods and vacuous e-closures") {
    GtfSpace d = fixtures::degenerate_pair_space();
    CHECK(e_neighbourhoods(d, 0).empty());
    SetFamily eb = e_neighbourhoods(d, 1);
    REQUIRE(eb.size() == 1);
    CHECK(eb.contains(pts(d, "b")));
    CHECK(e_interior(d, pts(d, "a")) == pts(d, ""));
    CHECK(e_interior(d, pts(d, "a,b")) == pts(d, "b"));
    CHECK(e_closure(d, pts(d, "")) == pts(d, "a"));
    CHECK(e_closure(d, pts(d, "a")) == pts(d, "a"));
    CHECK(e_closure(d, pts(d, "b")) == pts(d, "a,b"));
}

TEST_CASE("e-open family is a generalized topology") {
    GtfSpace s = fixtures::tp_space();
    GeneralizedTopology eo = e_open_family(s);
    REQUIRE(eo.mu.size() == 2);
    CHECK(eo.mu.contains(pts(s, "")));
    CHECK(eo.mu.contains(pts(s, "w,v")));
    CHECK(validate_topology(s.universe, eo.mu).pass);
    CHECK(eo.is_strong(s.universe));  // both families are nonempty here

    GtfSpace d = fixtures::degenerate_pair_space();
    GeneralizedTopology deo = e_open_family(d);
    REQUIRE(deo.mu.size() == 2);
    CHECK(deo.mu.contains(pts(d, "")));
    CHECK(deo.mu.contains(pts(d, "b")));
    CHECK(validate_topology(d.universe, deo.mu).pass);
    CHECK_FALSE(deo.is_strong(d.universe));
}

TEST_CASE("precomputed-family variants agree with the direct operators") {
    for (const GtfSpace& s : {fixtures::tp_space(), fixtures::degenerate_pair_space(),
                              example_space(ExampleVariant::TriplePrime, 3)}) {
        SetFamily fo = enumerate_f_open(s);
        std::size_t n = s.universe.size();
        for (std::size_t w = 0; w < n; ++w)
            CHECK(e_neighbourhoods_over(fo, w) == e_neighbourhoods(s, w));
        for (Mask m = 0; m <= s.universe.full_mask(); ++m) {
            PointSet a = PointSet::from_mask(m);
            CHECK(e_interior_over(fo, n, a) == e_interior(s, a));
            CHECK(e_closure_over(fo, n, a) == e_closure(s, a));
        }
    }
}

TEST_CASE("e-level operators respect the enumeration cap") {
    GtfSpace big = example_space(ExampleVariant::Base, 9);
    CHECK_THROWS_AS(e_open_family(big), ResourceError);
    CHECK_THROWS_AS(e_interior(big, PointSet{}), ResourceError);
    CHECK_NOTHROW(e_neighbourhoods(big, 0, 18));
}
