#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>

#include "fixtures.hh"
#include "gtf/laws.hh"

using namespace gtf;

namespace {

SuiteParams tuned_params() {
    SuiteParams p;
    p.random_spaces = 60;
    p.exhaustive_max = 3;  // the smallest limit-transfer anomalies need three points
    p.random_gnets_per_space = 40;
    p.family_samples = 24;
    p.pair_samples = 8;
    return p;
}

const std::vector<LawReport>& main_run() {
    static const std::vector<LawReport> reports = run_laws(tuned_params());
    return reports;
}

const LawReport& report(const std::string& id) {
    for (const LawReport& r : main_run())
        if (r.id == id) return r;
    FAIL("no report with id " + id);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("law id list is complete and ordered") {
    std::vector<std::string> ids = law_ids();
    REQUIRE(ids.size() == 40);
    CHECK(ids.front() == "L1");
    CHECK(ids[14] == "L15");
    CHECK(ids[15] == "E1");
    CHECK(ids[20] == "G1");
    CHECK(ids[29] == "A1");
    CHECK(ids[36] == "EL1");
    CHECK(ids.back() == "EL15");
    std::vector<std::string> got;
    for (const LawReport& r : main_run()) got.push_back(r.id);
    CHECK(got == ids);
}

TEST_CASE("exactly the four flawed convergence claims fail") {
    std::set<std::string> failing;
    for (const LawReport& r : main_run())
        if (!r.ok()) failing.insert(r.id);
    CHECK(failing == std::set<std::string>{"G1", "G2", "G3", "G4"});
    CHECK_FALSE(all_ok(main_run()));
    for (const char* id : {"G1", "G2", "G3", "G4"}) {
        CHECK(report(id).status() == "fail");
        CHECK_FALSE(report(id).witnesses.empty());
    }
}

TEST_CASE("sound laws run clean with real work behind them") {
    for (const LawReport& r : main_run()) {
        if (r.kind != LawKind::Positive || !r.ok()) continue;
        CHECK(r.status() == "pass");
        CHECK(r.witnesses.empty());
        CHECK(r.spaces_checked == 3 + 16 + 209 + 60);
        CHECK(r.checks > 0);
    }
}

TEST_CASE("every sought counterexample is found") {
    for (const char* id : {"A1", "A2", "A3", "A4", "A5", "A6", "A7"}) {
        const LawReport& r = report(id);
        CHECK(r.kind == LawKind::Anti);
        CHECK(r.ok());
        CHECK(r.status() == "counterexample-found");
        REQUIRE_FALSE(r.witnesses.empty());
    }
    std::set<std::string> kinds;
    for (const LawWitness& w : report("A4").witnesses)
        kinds.insert(w.data.at("which").get<std::string>());
    CHECK(kinds == std::set<std::string>{"reverse-union-interior", "reverse-intersection-interior",
                                         "reverse-union-closure"});
}

TEST_CASE("e-level probe outcomes") {
    CHECK(report("EL1").witnesses.empty());    // monotonicity carries over
    CHECK(report("EL13").witnesses.empty());   // complement duality carries over
    CHECK_FALSE(report("EL2").witnesses.empty());   // interior bound does not
    CHECK_FALSE(report("EL15").witnesses.empty());  // closure bound does not
    for (const char* id : {"EL1", "EL2", "EL13", "EL15"}) {
        CHECK(report(id).kind == LawKind::Info);
        CHECK(report(id).status() == "info");
        CHECK(report(id).ok());
    }
}

TEST_CASE("recorded witnesses replay against a fresh evaluation") {
    std::size_t replayed = 0;
    for (const LawReport& r : main_run()) {
        for (const LawWitness& w : r.witnesses) {
            if (r.kind == LawKind::Info) continue;  // probes carry no replay procedure
            INFO("law " << r.id << ": " << w.note);
            CHECK(replay_witness(r.id, w));
            ++replayed;
        }
    }
    CHECK(replayed >= 4 + 7);  // at least one per failing law and per anti law
}

TEST_CASE("replay rejects laws without a procedure") {
    LawWitness w{space_to_json(fixtures::tp_space()), Json::object(), ""};
    CHECK_THROWS_AS(replay_witness("L1", w), ValidationError);
    CHECK_THROWS_AS(replay_witness("EL2", w), ValidationError);
    CHECK_THROWS_AS(replay_witness("nope", w), ValidationError);
}

TEST_CASE("hand-built counterexamples replay directly") {
    Json degenerate = space_to_json(fixtures::degenerate_pair_space());
    CHECK(replay_witness("G1", LawWitness{degenerate, {{"point", "b"}}, ""}));
    CHECK(replay_witness("G2", LawWitness{degenerate, {{"point", "b"}}, ""}));
    CHECK(replay_witness("G3", LawWitness{degenerate, Json::object(), ""}));
    CHECK_FALSE(replay_witness("G1", LawWitness{degenerate, {{"point", "a"}}, ""}));

    Json vacuous = space_to_json(fixtures::vacuous_transfer_space());
    CHECK(replay_witness(
        "G4", LawWitness{vacuous, {{"part", "converse"}, {"w", "w"}, {"v", "v"}}, ""}));
    CHECK_FALSE(replay_witness(
        "G4", LawWitness{vacuous, {{"part", "converse"}, {"w", "u"}, {"v", "v"}}, ""}));
}

TEST_CASE("the suite is deterministic") {
    SuiteParams p;
    p.random_spaces = 20;
    p.exhaustive_max = 2;
    p.random_gnets_per_space = 20;
    p.family_samples = 12;
    p.pair_samples = 6;
    Json a = reports_to_json(run_laws(p), p);
    Json b = reports_to_json(run_laws(p), p);
    CHECK(a == b);
    p.space.seed = 8;
    Json c = reports_to_json(run_laws(p), p);
    CHECK(a != c);
}

TEST_CASE("restricting the law selection never changes a report") {
    SuiteParams p = tuned_params();
    p.random_spaces = 25;
    p.exhaustive_max = 2;
    std::vector<LawReport> only = run_laws(p, {"L9", "G5"});
    REQUIRE(only.size() == 2);
    CHECK(only[0].id == "L9");
    CHECK(only[1].id == "G5");
    std::vector<LawReport> whole = run_laws(p);
    for (const LawReport& r : whole) {
        if (r.id != "L9" && r.id != "G5") continue;
        const LawReport& o = r.id == "L9" ? only[0] : only[1];
        CHECK(report_to_json(o) == report_to_json(r));
    }
    CHECK_THROWS_AS(run_laws(p, {"L99"}), ValidationError);
}

TEST_CASE("parameter validation") {
    SuiteParams p;
    p.witness_cap = 0;
    CHECK_THROWS_AS(run_laws(p), ValidationError);
    SuiteParams q;
    q.exhaustive_max = 4;
    q.random_spaces = 0;
    CHECK_THROWS_AS(run_laws(q), ResourceError);
}

TEST_CASE("rendering carries the verdicts") {
    std::string text = reports_to_text(main_run());
    CHECK(text.find("L1") != std::string::npos);
    CHECK(text.find("counterexample-found") != std::string::npos);
    CHECK(text.find("result: 4 law(s) failing: G1 G2 G3 G4") != std::string::npos);

    Json j = reports_to_json(main_run(), tuned_params());
    REQUIRE(j.at("laws").size() == 40);
    CHECK_FALSE(j.at("ok").get<bool>());
    CHECK(j.at("params").at("seed").get<std::uint64_t>() == 7);
    const Json& first = j.at("laws").at(0);
    CHECK(first.at("id") == "L1");
    CHECK(first.at("status") == "pass");
    for (const Json& law : j.at("laws"))
        for (const Json& w : law.at("witnesses")) {
            CHECK(w.contains("space"));
            CHECK(w.contains("data"));
            CHECK(w.contains("note"));
        }
}
