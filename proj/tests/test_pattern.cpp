#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gxstplc/json_io.hpp"
#include "gxstplc/pattern.hpp"
#include "oracles/oracles.hpp"

using namespace gxstplc;
using namespace gxstplc::pattern;

namespace {

// 1-based input for readability.
StoragePattern make(int n, std::vector<std::vector<int>> sets) {
    std::vector<MessageSet> ms;
    for (auto& s : sets) {
        for (auto& x : s) --x;
        ms.push_back({s, 1});
    }
    return StoragePattern(n, ms);
}

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(x + 1);
    return out;
}

} // namespace

TEST_CASE("validation") {
    CHECK_THROWS_AS(StoragePattern(3, {{{}, 1}}), InvalidPattern);
    CHECK_THROWS_AS(StoragePattern(3, {{{0, 3}, 1}}), InvalidPattern);
    CHECK_THROWS_AS(StoragePattern(3, {{{-1}, 1}}), InvalidPattern);
    CHECK_THROWS_AS(StoragePattern(3, {{{1, 1}, 1}}), InvalidPattern);
    CHECK_THROWS_AS(StoragePattern(3, {{{1}, 0}}), InvalidPattern);
    const StoragePattern p(4, {{{3, 0, 2}, 2}});
    CHECK(p.set(0).servers == std::vector<int>{0, 2, 3});
    CHECK(p.replication(0) == 3);
    CHECK(p.stores(2, 0));
    CHECK_FALSE(p.stores(1, 0));
}

TEST_CASE("dual of the 7-server illustration") {
    const auto p = make(7, {{1, 2, 4}, {2, 3, 4, 5, 6}, {1, 4, 7}, {2, 3, 5, 6}});
    const auto d = dual(p);
    CHECK(one_based(d.sets_at_server[0]) == std::vector<int>{1, 3});
    CHECK(one_based(d.sets_at_server[1]) == std::vector<int>{1, 2, 4});
    CHECK(one_based(d.sets_at_server[3]) == std::vector<int>{1, 2, 3});
    CHECK(one_based(d.sets_at_server[6]) == std::vector<int>{3});
}

TEST_CASE("dual examples") {
    const auto full = make(3, {{1, 2, 3}});
    for (const auto& ms : dual(full).sets_at_server) CHECK(one_based(ms) == std::vector<int>{1});
    const auto ex1 = make(6, {{1, 2, 3, 5}, {3, 4, 6}});
    CHECK(one_based(dual(ex1).sets_at_server[2]) == std::vector<int>{1, 2});
    CHECK(one_based(dual(ex1).sets_at_server[5]) == std::vector<int>{2});
}

TEST_CASE("min_replication_slack examples") {
    CHECK(min_replication_slack(make(6, {{1, 2, 3, 5}, {3, 4, 6}}), 1, 1) == 1);
    CHECK(min_replication_slack(make(2, {{1, 2}}), 1, 1) == 0);
    const auto ex2 = make(14, {{1, 4, 7, 9}, {1, 3, 4, 5, 8}, {3, 4, 6, 8, 10, 13}, {2, 6, 10, 11, 12, 13, 14}});
    CHECK(min_replication_slack(ex2, 1, 1) == 2);
}

TEST_CASE("dual and invert round trip on random patterns") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracle::random_pattern(rng, 10, 6, 0, 0);
        const auto d = dual(p);
        const auto back = invert(d, p.n_sets());
        REQUIRE(back.size() == p.n_sets());
        for (std::size_t m = 0; m < p.n_sets(); ++m) {
            CHECK(back[m] == p.set(m).servers);
            for (int n = 0; n < p.n_servers(); ++n) {
                const auto& ms = d.sets_at_server[static_cast<std::size_t>(n)];
                CHECK(p.stores(n, m) == std::binary_search(ms.begin(), ms.end(), static_cast<int>(m)));
            }
        }
    }
}

TEST_CASE("slack is invariant under relabeling") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracle::random_pattern(rng, 10, 6, 0, 0);
        std::vector<int> perm(static_cast<std::size_t>(p.n_servers()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> inverse(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) inverse[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
        const auto q = relabel_servers(p, perm);
        const int x = oracle::uniform(rng, 0, 2), t = oracle::uniform(rng, 0, 2);
        CHECK(min_replication_slack(q, x, t) == min_replication_slack(p, x, t));
        CHECK(relabel_servers(q, inverse) == p);
    }
}

TEST_CASE("JSON pattern round trip") {
    const auto p = make(6, {{1, 2, 3, 5}, {3, 4, 6}});
    const auto j = json_io::to_json(p);
    CHECK(j["servers"] == 6);
    CHECK(j["message_sets"][0]["servers"] == nlohmann::json({1, 2, 3, 5}));
    CHECK(json_io::pattern_from_json(j) == p);
    CHECK_THROWS_AS(json_io::pattern_from_json(nlohmann::json::parse(R"({"servers": 2})")), InvalidPattern);
    CHECK_THROWS_AS(json_io::pattern_from_json(nlohmann::json::parse(
                        R"({"servers": 2, "message_sets": [{"servers": [3]}]})")),
                    InvalidPattern);
    const auto defaulted =
        json_io::pattern_from_json(nlohmann::json::parse(R"({"servers": 2, "message_sets": [{"servers": [1]}]})"));
    CHECK(defaulted.set(0).count == 1);
}
