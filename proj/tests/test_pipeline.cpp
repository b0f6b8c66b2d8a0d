#include <doctest.h>

#include "gxstplc/json_io.hpp"
#include "gxstplc/pipeline.hpp"

using namespace gxstplc;
using namespace gxstplc::pipeline;
using exactlp::to_string;

namespace {

pattern::StoragePattern make(int n, std::vector<std::vector<int>> sets) {
    std::vector<pattern::MessageSet> ms;
    for (auto& s : sets) {
        for (auto& x : s) --x;
        ms.push_back({s, 1});
    }
    return pattern::StoragePattern(n, ms);
}

} // namespace

TEST_CASE("demo reports") {
    const auto d1 = demo("ex-4.1.1");
    CHECK(to_string(d1.rate) == "2/7");
    CHECK(d1.downloads == 7);
    CHECK(d1.l_value == 2);
    CHECK(to_string(d1.capacity) == "2/7");
    CHECK(d1.passed());

    const auto d2 = demo("ex-4.1.2");
    CHECK(to_string(d2.rate) == "2/9");
    CHECK(to_string(d2.capacity) == "2/9");
    CHECK(d2.passed());

    const auto e1 = demo("ex-4.2-1");
    CHECK(to_string(e1.capacity) == "2/9");
    CHECK(to_string(e1.rate) == "2/9");
    CHECK(e1.decode_match);
    CHECK(e1.audit_pass);

    const auto e2 = demo("ex-4.2-2");
    CHECK(to_string(e2.capacity) == "5/22");
    CHECK(to_string(e2.rate) == "5/22");
    CHECK(e2.downloads == 44);
    CHECK(e2.passed());

    CHECK_THROWS_AS(demo("ex-9"), UnknownDemo);
}

TEST_CASE("run_merged downloads tau per original server") {
    const auto p = make(6, {{1, 2, 3, 5}, {3, 4, 6}});
    const auto run = run_merged(p, 1, 1, 42);
    CHECK(run.merged_downloads == run.capacity.tau);
    CHECK(run.rate == run.capacity.capacity);
    CHECK(run.transcript.match());
    REQUIRE(run.audit.has_value());
    CHECK(run.audit->passed);
    CHECK_THROWS_AS(run_merged(make(3, {{1, 2}}), 1, 1, 0), DegenerateConfig);
}

TEST_CASE("random points and field overrides still decode") {
    const auto p = make(6, {{1, 2, 3, 5}, {3, 4, 6}});
    const auto run = run_merged(p, 1, 1, 5, {.field = 101, .random_points = true, .audit = false});
    CHECK(run.params.field.modulus() == 101);
    CHECK(run.transcript.match());
    CHECK_FALSE(run.audit.has_value());
}

TEST_CASE("lemmas") {
    CHECK(lemmas(0, 1).passed());
    const auto r = lemmas(123, 100);
    CHECK(r.trials == 100);
    CHECK(r.dual_grs_pass == 100);
    CHECK(r.cauchy_pass == 100);
    CHECK_THROWS_AS(lemmas(0, 0), InvalidArgument);
    const ff::PrimeField f(11);
    CHECK(dual_grs_vanishing(std::vector<scheme::Fq>{f.element(1), f.element(5)}));
    CHECK_THROWS_AS(dual_grs_vanishing(std::vector<scheme::Fq>{f.element(1), f.element(1)}), DuplicateNodes);
}

TEST_CASE("JSON documents") {
    const auto p = make(6, {{1, 2, 3, 5}, {3, 4, 6}});
    const auto cap = json_io::to_json(capacity::asymptotic_capacity(p, 1, 1));
    CHECK(cap["capacity"] == "2/9");
    CHECK(cap["L"] == 2);
    CHECK(cap["vertex"][0] == "1/2");
    CHECK(cap["tau"] == nlohmann::json({1, 1, 2, 2, 1, 2}));

    const auto run = run_merged(p, 1, 1, 3);
    const auto audit = json_io::to_json(*run.audit);
    CHECK(audit["passed"] == audit["violations"].empty());
    CHECK(audit["mode"] == "rank_certificate");

    const auto tr = json_io::to_json(run.transcript, run.rate);
    CHECK(tr["rate"] == "2/9");
    CHECK(tr["match"] == true);
    CHECK(tr["decoded"] == tr["expected"]);

    const auto plan = json_io::to_json(run.system);
    CHECK(plan["virtual_servers"][3]["server"] == 3);
    CHECK(plan["virtual_servers"][3]["copy"] == 2);
    CHECK(plan["merge_map"] == nlohmann::json({1, 2, 3, 3, 4, 4, 5, 6, 6}));

    // Same inputs, same bytes.
    CHECK(json_io::to_json(run_merged(p, 1, 1, 3).transcript, run.rate).dump() == tr.dump());
    CHECK(json_io::to_json(demo("ex-4.1.1", 9)).dump() == json_io::to_json(demo("ex-4.1.1", 9)).dump());
}
