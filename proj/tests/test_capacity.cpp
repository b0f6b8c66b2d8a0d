#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "gxstplc/capacity.hpp"
#include "oracles/oracles.hpp"

using namespace gxstplc;
using namespace gxstplc::capacity;
using exactlp::parse_rational;
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

const pattern::StoragePattern kEx1 = make(6, {{1, 2, 3, 5}, {3, 4, 6}});
const pattern::StoragePattern kEx2 =
    make(14, {{1, 4, 7, 9}, {1, 3, 4, 5, 8}, {3, 4, 6, 8, 10, 13}, {2, 6, 10, 11, 12, 13, 14}});

bool has_row(const exactlp::LinearProgram& lp, std::vector<int> servers_one_based) {
    std::vector<std::uint8_t> row(lp.num_vars, 0);
    for (int s : servers_one_based) row[static_cast<std::size_t>(s - 1)] = 1;
    return std::find(lp.rows.begin(), lp.rows.end(), row) != lp.rows.end();
}

} // namespace

TEST_CASE("capacity LP rows of the first worked example") {
    const auto lp = build_capacity_lp(kEx1, 1, 1);
    for (auto r : std::vector<std::vector<int>>{{3}, {4}, {6}, {1, 2}, {2, 5}, {1, 5}}) CHECK(has_row(lp, r));
    // 6 two-subsets of R_1 and 3 singletons of R_2, all distinct.
    CHECK(lp.rows.size() == 9);
}

TEST_CASE("capacity LP rows: full set with X=0, T=1") {
    const auto lp = build_capacity_lp(make(4, {{1, 2, 3, 4}}), 0, 1);
    CHECK(lp.rows.size() == 4);
    for (const auto& r : lp.rows) CHECK(std::count(r.begin(), r.end(), 1) == 3);
}

TEST_CASE("capacity LP rows of the second worked example") {
    const auto lp = build_capacity_lp(kEx2, 1, 1);
    CHECK(has_row(lp, {1, 4}));
    CHECK(has_row(lp, {7, 9}));
    CHECK(has_row(lp, {3, 5, 8}));
    // C(4,2) + C(5,3) + C(6,4) + C(7,5) = 6 + 10 + 15 + 21; sizes differ per set,
    // so nothing is merged.
    CHECK(lp.rows.size() == 52);
    std::size_t five = 0;
    for (const auto& r : lp.rows) five += std::count(r.begin(), r.end(), 1) == 5 ? 1 : 0;
    CHECK(five == 21);
}

TEST_CASE("duplicate rows across message sets are merged") {
    const auto lp = build_capacity_lp(make(3, {{1, 2}, {1, 2}, {2, 3}}), 0, 1);
    // Singletons {1},{2},{1},{2},{2},{3} collapse to three rows.
    CHECK(lp.rows.size() == 3);
}

TEST_CASE("first worked example capacity") {
    const auto r = asymptotic_capacity(kEx1, 1, 1);
    CHECK(to_string(r.capacity) == "2/9");
    CHECK(r.l_value == 2);
    CHECK(r.tau == std::vector<std::int64_t>{1, 1, 2, 2, 1, 2});
    CHECK(r.total_download() == 9);
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("second worked example capacity") {
    const auto start = std::chrono::steady_clock::now();
    const auto r = asymptotic_capacity(kEx2, 1, 1);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(to_string(r.capacity) == "5/22");
    CHECK(r.l_value == 10);
    CHECK(r.total_download() == 44);
    CHECK(elapsed < std::chrono::seconds(5));
    exactlp::ExactRational sum = 0;
    for (const auto& d : r.vertex) sum += d;
    CHECK(to_string(sum) == "22/5");
}

TEST_CASE("degenerate patterns") {
    const auto r = asymptotic_capacity(make(3, {{1, 2}, {1, 2, 3}}), 1, 1);
    CHECK(r.degenerate);
    CHECK(to_string(r.capacity) == "0");
    CHECK_THROWS_AS(build_capacity_lp(make(3, {{1, 2}}), 1, 1), DegeneratePattern);
    CHECK_THROWS_AS(asymptotic_capacity(kEx1, 6, 0), InvalidArgument);
    CHECK_THROWS_AS(asymptotic_capacity(kEx1, -1, 0), InvalidArgument);
}

TEST_CASE("full replication, four servers, X=0, T=1") {
    const auto r = asymptotic_capacity(make(4, {{1, 2, 3, 4}}), 0, 1);
    CHECK(to_string(r.capacity) == "3/4");
    CHECK(oracle::lp_min_by_vertices(4, oracle::capacity_rows(make(4, {{1, 2, 3, 4}}), 0, 1)).str() == "4/3");
}

TEST_CASE("from_vertex with the published 14-server vertex") {
    const std::vector<std::string> published = {"1/2", "1/5", "2/5", "1/2", "1/10", "1/5", "1/2",
                                            "1/2", "1/2", "1/5", "1/5", "1/5", "1/5", "1/5"};
    exactlp::RationalVector v;
    for (const auto& s : published) v.push_back(parse_rational(s));
    const auto r = from_vertex(v);
    CHECK(r.l_value == 10);
    CHECK(r.tau == std::vector<std::int64_t>{5, 2, 4, 5, 1, 2, 5, 5, 5, 2, 2, 2, 2, 2});
    CHECK(r.total_download() == 44);
    CHECK(to_string(r.capacity) == "5/22");
    CHECK_THROWS_AS(from_vertex({parse_rational("3/2")}), InvalidArgument);
}

TEST_CASE("capacity equals the inverse vertex-enumeration minimum on random patterns") {
    std::mt19937_64 rng(31337);
    int checked = 0;
    while (checked < 100) {
        const int x = oracle::uniform(rng, 0, 2), t = oracle::uniform(rng, 0, 2);
        if (x + t + 1 > 6) continue;
        const auto p = oracle::random_pattern(rng, 6, 3, x, t);
        if (!oracle::within_oracle_scale(p, x, t)) continue;
        const auto r = asymptotic_capacity(p, x, t);
        const auto min = oracle::lp_min_by_vertices(p.n_servers(), oracle::capacity_rows(p, x, t));
        CHECK(to_string(r.capacity) == oracle::Fraction{min.den, min.num}.str());
        // tau integrality and the rate identity.
        for (std::size_t n = 0; n < r.tau.size(); ++n) {
            CHECK(exactlp::ExactRational(r.tau[n]) == r.vertex[n] * r.l_value);
        }
        CHECK(r.capacity == exactlp::ExactRational(r.l_value) / r.total_download());
        ++checked;
    }
}

TEST_CASE("capacity invariant under relabeling and set reordering") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const int x = oracle::uniform(rng, 0, 1), t = oracle::uniform(rng, 0, 1);
        const auto p = oracle::random_pattern(rng, 7, 4, x, t);
        std::vector<int> perm(static_cast<std::size_t>(p.n_servers()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto sets = p.message_sets();
        std::shuffle(sets.begin(), sets.end(), rng);
        const pattern::StoragePattern reordered(p.n_servers(), sets);
        const auto base = asymptotic_capacity(p, x, t).capacity;
        CHECK(asymptotic_capacity(pattern::relabel_servers(p, perm), x, t).capacity == base);
        CHECK(asymptotic_capacity(reordered, x, t).capacity == base);
    }
}

TEST_CASE("adding a server to a set never lowers capacity") {
    std::mt19937_64 rng(13);
    int checked = 0;
    while (checked < 60) {
        const int x = oracle::uniform(rng, 0, 1), t = oracle::uniform(rng, 0, 1);
        const auto p = oracle::random_pattern(rng, 7, 4, x, t);
        auto sets = p.message_sets();
        const auto m = static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<int>(sets.size()) - 1));
        std::vector<int> missing;
        for (int n = 0; n < p.n_servers(); ++n) {
            if (!p.stores(n, m)) missing.push_back(n);
        }
        if (missing.empty()) continue;
        sets[m].servers.push_back(missing[rng() % missing.size()]);
        const pattern::StoragePattern bigger(p.n_servers(), sets);
        CHECK(asymptotic_capacity(bigger, x, t).capacity >= asymptotic_capacity(p, x, t).capacity);
        ++checked;
    }
}
