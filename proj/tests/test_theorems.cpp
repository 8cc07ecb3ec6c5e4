#include <doctest.h>

#include <set>
#include <sstream>

#include "pbei/theorems.hpp"

using namespace pbei;

TEST_CASE("claim registry") {
    const auto& claims = claim_registry();
    CHECK(claims.size() >= 20);
    std::set<std::string> ids;
    for (const Claim& c : claims) {
        CHECK(ids.insert(c.id).second);  // ids unique
        CHECK(!c.description.empty());
        CHECK(c.hypothesis);
        CHECK(c.check);
    }
    CHECK(ids.count("reg_bipartite") == 1);
    CHECK(ids.count("lower_bound") == 1);
    CHECK(ids.count("pure_classification") == 1);
    const Claim* probe = find_claim("kk_conjecture_probe");
    REQUIRE(probe != nullptr);
    CHECK(probe->probe);
    const Claim* ext = find_claim("km12_diamond_b23");
    REQUIRE(ext != nullptr);
    CHECK(ext->external);
    CHECK(find_claim("nonexistent") == nullptr);
    CHECK_THROWS_AS(check_claim("nonexistent", path_graph(2), CheckConfig{}),
                    std::invalid_argument);
}

TEST_CASE("regularity lower bound") {
    // max(ell, oc) on hand-checked graphs
    CHECK(reg_lower_bound(cycle_graph(5)) == 5);
    CHECK(reg_lower_bound(path_graph(4)) == 3);
    CHECK(reg_lower_bound(complete_graph(4)) == 3);
    CHECK(reg_lower_bound(claw_graph()) == 2);
    CHECK(reg_lower_bound(cycle_graph(6)) == 4);
}

TEST_CASE("predicted regularity closed forms") {
    CHECK(predicted_regularity(cycle_graph(7)) == 7);
    CHECK(predicted_regularity(path_graph(5)) == 4);
    CHECK(predicted_regularity(complete_bipartite_graph(3, 3)) == 2);
    CHECK(predicted_regularity(claw_graph()) == 2);
    CHECK(predicted_regularity(disjoint_union(path_graph(2), path_graph(2))) == 2);
    CHECK(predicted_regularity(disjoint_union(cycle_graph(3), path_graph(3))) == 5);
    CHECK(!predicted_regularity(complete_graph(4)).has_value());
    CHECK(!predicted_regularity(cycle_graph(6)).has_value());
    CHECK(!predicted_regularity(diamond_graph()).has_value());
}

TEST_CASE("check_claim verdicts and reports") {
    CheckConfig cfg;
    ClaimReport r = check_claim("reg_odd_cycle", cycle_graph(5), cfg);
    CHECK(r.hypotheses_met);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.claim_id == "reg_odd_cycle");
    CHECK(r.n == 5);
    CHECK(r.graph6 == to_graph6(cycle_graph(5)));
    CHECK(r.characteristic == cfg.characteristic);
    CHECK(r.seconds >= 0.0);

    // hypothesis not met -> skipped, checker never runs
    r = check_claim("reg_odd_cycle", path_graph(4), cfg);
    CHECK(!r.hypotheses_met);
    CHECK(r.verdict == Verdict::skipped);

    // betti_24_bound needs at least one edge pair; K2 is out of scope
    r = check_claim("betti_24_bound", path_graph(2), cfg);
    CHECK(r.verdict != Verdict::fail);

    // report serializes to a JSON object with the claim id inside
    CHECK(check_claim("lower_bound", cycle_graph(5), cfg).to_json().find(
              "\"claim_id\":\"lower_bound\"") != std::string::npos);
}

TEST_CASE("external citations on their frozen instances") {
    CheckConfig cfg;
    CHECK(check_claim("km12_diamond_b23", diamond_graph(), cfg).verdict == Verdict::pass);
    CHECK(check_claim("pz_claw_b35", claw_graph(), cfg).verdict == Verdict::pass);
    CHECK(check_claim("km3_reg_binomial", path_graph(4), cfg).verdict == Verdict::pass);
}

TEST_CASE("cached betti tables are stable references") {
    Graph g = cycle_graph(4);
    const BettiTable& a = cached_betti(g, IdealKind::parity, 32003);
    // relabeled isomorphic copy hits the same cache entry
    Graph h = graph_from_edges(4, {{1, 3}, {3, 2}, {2, 4}, {4, 1}});
    const BettiTable& b = cached_betti(h, IdealKind::parity, 32003);
    CHECK(&a == &b);
    CHECK(a.get(1, 2) == 4);
    const BettiTable& c = cached_betti(g, IdealKind::binomial, 32003);
    CHECK(&a != &c);
}

TEST_CASE("sweep aggregates and reports") {
    CheckConfig cfg;
    cfg.jobs = 2;
    SweepSummary summary;
    std::ostringstream jsonl;
    std::vector<ClaimReport> reports =
        sweep(4, {"reg_bipartite", "lower_bound"}, cfg, &summary, &jsonl);
    CHECK(summary.failed == 0);
    CHECK(summary.passed > 0);
    CHECK(summary.checked.at("lower_bound") > 0);
    CHECK(summary.passed + summary.failed + summary.skipped ==
          static_cast<long>(reports.size()));
    // one JSON line per report plus the trailing summary line
    long lines = 0;
    std::string line;
    std::istringstream in(jsonl.str());
    while (std::getline(in, line)) ++lines;
    CHECK(lines == static_cast<long>(reports.size()) + 1);
    CHECK(jsonl.str().find("\"summary\"") != std::string::npos);
}
