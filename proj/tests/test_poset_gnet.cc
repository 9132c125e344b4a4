#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hh"
#include "gtf/gnet.hh"

using namespace gtf;
using fixtures::pts;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Gnet over(std::shared_ptr<const FinitePoset> dom, std::vector<std::size_t> values) {
    return Gnet{std::move(dom), std::move(values)};
}

}  // namespace

TEST_CASE("poset construction validates the relation and never repairs it") {
    CHECK_NOTHROW(FinitePoset({"a", "b"}, Pairs{{0, 0}, {1, 1}, {0, 1}}));
    // a missing reflexive pair is an error, not something to patch up
    CHECK_THROWS_AS(FinitePoset({"a", "b"}, Pairs{{0, 0}, {0, 1}}), ValidationError);
    // a two-cycle breaks antisymmetry
    CHECK_THROWS_AS(FinitePoset({"a", "b"}, Pairs{{0, 0}, {1, 1}, {0, 1}, {1, 0}}),
                    ValidationError);
    // a missing composite breaks transitivity
    CHECK_THROWS_AS(
        FinitePoset({"a", "b", "c"}, Pairs{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}),
        ValidationError);
    CHECK_THROWS_AS(FinitePoset({"a", "a"}, Pairs{{0, 0}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(FinitePoset({""}, Pairs{{0, 0}}), ValidationError);
    CHECK_THROWS_AS(FinitePoset({}, Pairs{}), ValidationError);
    CHECK_THROWS_AS(FinitePoset({"a"}, Pairs{{0, 1}}), ValidationError);
}

TEST_CASE("covers are closed and then validated") {
    FinitePoset p = FinitePoset::from_covers({"a", "b", "c"}, Pairs{{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK(p.leq(0, 0));
    CHECK_FALSE(p.leq(2, 0));
    CHECK_THROWS_AS(FinitePoset::from_covers({"a", "b"}, Pairs{{0, 1}, {1, 0}}),
                    ValidationError);
}

TEST_CASE("chains and antichains") {
    FinitePoset c = FinitePoset::chain(3);
    CHECK(c.size() == 3);
    CHECK(c.label(0) == "c0");
    CHECK(c.leq(0, 2));
    CHECK(c.is_directed());
    CHECK(c.is_sequence());
    CHECK(c.maximal_elements() == std::vector<std::size_t>{2});
    CHECK(c.relation_pairs() == Pairs{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});

    FinitePoset a = FinitePoset::antichain(3);
    CHECK_FALSE(a.is_directed());
    CHECK_FALSE(a.is_sequence());
    CHECK(a.maximal_elements() == std::vector<std::size_t>{0, 1, 2});
    CHECK(FinitePoset::antichain(1).is_sequence());
    CHECK(FinitePoset::chain(1).is_directed());
}

TEST_CASE("eventual and frequent residence") {
    GtfSpace s = fixtures::tp_space();
    auto chain3 = std::make_shared<const FinitePoset>(FinitePoset::chain(3));
    Gnet g = over(chain3, {0, 1, 0});  // w, v, w
    CHECK(eventually(g, pts(s, "w")));
    CHECK_FALSE(eventually(g, pts(s, "v")));
    CHECK(frequently(g, pts(s, "w")));
    CHECK_FALSE(frequently(g, pts(s, "v")));
    CHECK_FALSE(eventually(g, pts(s, "")));
    CHECK(eventually(g, pts(s, "w,v")));

    // on a non-directed domain both tails can count as eventual at once
    auto anti2 = std::make_shared<const FinitePoset>(FinitePoset::antichain(2));
    Gnet h = over(anti2, {0, 1});
    CHECK(eventually(h, pts(s, "w")));
    CHECK(eventually(h, pts(s, "v")));
    CHECK_FALSE(frequently(h, pts(s, "w")));
    CHECK_FALSE(frequently(h, pts(s, "v")));

    SetFamily fam;
    fam.insert(pts(s, "w"));
    fam.insert(pts(s, "w,v"));
    CHECK(eventually_in_all(g, fam));
    CHECK(frequently_in_all(g, fam));
    fam.insert(pts(s, "v"));
    CHECK_FALSE(eventually_in_all(g, fam));
    CHECK(eventually_in_all(g, SetFamily{}));  // vacuous
}

TEST_CASE("constant gnets on the two-point space") {
    GtfSpace s = fixtures::tp_space();
    auto dom = std::make_shared<const FinitePoset>(FinitePoset::chain(2));
    Gnet cv = constant_gnet(dom, 1);
    CHECK(cv.value_set() == pts(s, "v"));
    CHECK_FALSE(converges(s, cv, 1));
    CHECK(e_converges(s, cv, 1));
    CHECK(limits(s, cv) == pts(s, ""));
    CHECK(e_limits(s, cv) == pts(s, "w,v"));

    Gnet cw = constant_gnet(dom, 0);
    CHECK(limits(s, cw) == pts(s, "w,v"));
    CHECK(limit_points(s, cw) == pts(s, "w,v"));
    CHECK(e_limits(s, cw) == pts(s, "w,v"));
}

TEST_CASE("points without families are limits of everything") {
    GtfSpace d = fixtures::degenerate_pair_space();
    auto dom = std::make_shared<const FinitePoset>(FinitePoset::chain(2));
    for (std::size_t w : {std::size_t{0}, std::size_t{1}}) {
        Gnet g = constant_gnet(dom, w);
        CHECK(converges(d, g, 0));        // assoc(a) is empty
        CHECK_FALSE(converges(d, g, 1));  // the empty set blocks everything
    }
}

TEST_CASE("separation flags") {
    CHECK_FALSE(is_ft1(fixtures::tp_space()));
    CHECK_FALSE(is_et1(fixtures::tp_space()));
    CHECK_FALSE(is_ft1(fixtures::degenerate_pair_space()));

    Universe u({"a", "b"});
    SetFamily gens;
    gens.insert(PointSet::single(0));
    gens.insert(PointSet::single(1));
    GtfSpace discrete = make_space(u, build_topology(u, gens));
    CHECK(is_ft1(discrete));
    CHECK(is_et1(discrete));

    Universe one({"a"});
    SetFamily g1;
    g1.insert(PointSet::single(0));
    GtfSpace single = make_space(one, build_topology(one, g1));
    CHECK(is_ft1(single));
    CHECK(is_et1(single));
}

TEST_CASE("subset poset under reverse inclusion") {
    Universe u({"w", "v"});
    auto p = subset_poset(u);
    REQUIRE(p->size() == 3);
    CHECK(p->label(0) == "{w}");
    CHECK(p->label(1) == "{v}");
    CHECK(p->label(2) == "{w,v}");
    CHECK(p->leq(p->index_of("{w,v}"), p->index_of("{w}")));
    CHECK_FALSE(p->leq(p->index_of("{w}"), p->index_of("{w,v}")));
    CHECK(p->maximal_elements() ==
          std::vector<std::size_t>{p->index_of("{w}"), p->index_of("{v}")});
    // disjoint subsets have no common refinement, so the order is not directed
    CHECK_FALSE(p->is_directed());

    std::vector<std::string> many;
    for (int i = 0; i < 11; ++i) many.push_back("p" + std::to_string(i));
    CHECK_THROWS_AS(subset_poset(Universe(many)), ResourceError);
}

TEST_CASE("subset-choice gnet on the k=2 example spaces") {
    for (auto var : {ExampleVariant::Base, ExampleVariant::Prime, ExampleVariant::DoublePrime,
                     ExampleVariant::TriplePrime}) {
        GtfSpace s = example_space(var, 2);
        Gnet g = subset_choice_gnet(s);
        CHECK(g.at(g.domain->index_of("{2,4}")) == s.universe.index_of("2"));
        CHECK(g.at(g.domain->index_of("{1,2,3,4}")) == s.universe.index_of("1"));
        CHECK(limits(s, g) == pts(s, "1,2,3,4"));
    }
    GtfSpace ba = example_space(ExampleVariant::Base, 2);
    CHECK(limit_points(ba, subset_choice_gnet(ba)) == pts(ba, "2,4"));
    GtfSpace pr = example_space(ExampleVariant::Prime, 2);
    CHECK(limit_points(pr, subset_choice_gnet(pr)) == pts(pr, ""));
    GtfSpace db = example_space(ExampleVariant::DoublePrime, 2);
    CHECK(limit_points(db, subset_choice_gnet(db)) == pts(db, "4"));
    GtfSpace tr = example_space(ExampleVariant::TriplePrime, 2);
    CHECK(limit_points(tr, subset_choice_gnet(tr)) == pts(tr, ""));
}

TEST_CASE("witness gnets track the f-closure exactly") {
    GtfSpace s = fixtures::tp_space();
    CHECK_FALSE(witness_gnet(s, 0, pts(s, "v")).has_value());
    auto g1 = witness_gnet(s, 1, pts(s, "w"));
    REQUIRE(g1.has_value());
    CHECK(g1->value_set().subset_of(pts(s, "w")));
    CHECK(converges(s, *g1, 1));
    auto g2 = witness_gnet(s, 0, pts(s, "w"));
    REQUIRE(g2.has_value());
    CHECK(converges(s, *g2, 0));
    CHECK_THROWS_AS(witness_gnet(s, 0, pts(s, "")), DomainError);

    GtfSpace d = fixtures::degenerate_pair_space();
    auto g3 = witness_gnet(d, 0, pts(d, "b"));  // empty family: constant witness
    REQUIRE(g3.has_value());
    CHECK(g3->value_set() == pts(d, "b"));
    CHECK(converges(d, *g3, 0));
    CHECK_FALSE(witness_gnet(d, 1, pts(d, "a")).has_value());
}
