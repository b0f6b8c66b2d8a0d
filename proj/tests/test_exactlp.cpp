#include <doctest.h>

#include <algorithm>
#include <random>

#include "gxstplc/capacity.hpp"
#include "gxstplc/exactlp.hpp"
#include "oracles/oracles.hpp"

using namespace gxstplc;
using namespace gxstplc::exactlp;

namespace {

LinearProgram covering(std::size_t n, std::vector<std::vector<std::uint8_t>> rows) {
    LinearProgram lp;
    lp.num_vars = n;
    lp.objective.assign(n, ExactRational(1));
    lp.rows = std::move(rows);
    return lp;
}

ExactRational q(const std::string& s) { return parse_rational(s); }

std::vector<std::vector<std::uint8_t>> random_rows(std::mt19937_64& rng, std::size_t n, std::size_t count) {
    std::vector<std::vector<std::uint8_t>> rows;
    while (rows.size() < count) {
        std::vector<std::uint8_t> r(n);
        for (auto& e : r) e = rng() % 2 ? 1 : 0;
        if (std::count(r.begin(), r.end(), 1) > 0) rows.push_back(r);
    }
    return rows;
}

bool satisfies(const LinearProgram& lp, const RationalVector& x) {
    for (const auto& v : x) {
        if (v < 0) return false;
    }
    for (const auto& row : lp.rows) {
        ExactRational s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j]) s += x[j];
        }
        if (s < 1) return false;
    }
    return true;
}

} // namespace

TEST_CASE("rational text round trip") {
    CHECK(to_string(q("6/4")) == "3/2");
    CHECK(to_string(q("-2/4")) == "-1/2");
    CHECK(to_string(q("4/2")) == "2");
    CHECK(to_string(q("0")) == "0");
    CHECK(to_string(q("5/22")) == "5/22");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
}

TEST_CASE("rational arithmetic round trip property") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        const ExactRational a(static_cast<long long>(rng() % 2001) - 1000,
                              static_cast<long long>(rng() % 999) + 1);
        const ExactRational c(static_cast<long long>(rng() % 2001) - 1000,
                              static_cast<long long>(rng() % 999) + 1);
        CHECK((a + c) - c == a);
        CHECK(parse_rational(to_string(a)) == a);
        CHECK(boost::multiprecision::denominator(a) > 0);
    }
}

TEST_CASE("lcm_of_denominators examples") {
    CHECK(lcm_of_denominators({q("1/2"), q("1/2"), q("1"), q("1"), q("1/2"), q("1")}) == 2);
    CHECK(lcm_of_denominators({q("1/2"), q("1/5"), q("2/5"), q("1/2"), q("1/10"), q("1/5"), q("1/2"),
                               q("1/2"), q("1/2"), q("1/5"), q("1/5"), q("1/5"), q("1/5"), q("1/5")}) == 10);
    CHECK(lcm_of_denominators({q("3"), q("0"), q("7")}) == 1);
}

TEST_CASE("simplex_min trivial LP") {
    const auto sol = simplex_min(covering(1, {{1}}));
    CHECK(sol.optimum == 1);
    CHECK(sol.vertex == RationalVector{ExactRational(1)});
}

TEST_CASE("simplex_min on the first worked example") {
    // Capacity rows for R_1={1,2,3,5}, R_2={3,4,6}, X=T=1.
    const auto lp = covering(6, {{0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 0, 1},
                                 {1, 1, 0, 0, 0, 0},
                                 {0, 1, 0, 0, 1, 0},
                                 {1, 0, 0, 0, 1, 0},
                                 {1, 0, 1, 0, 0, 0},
                                 {0, 1, 1, 0, 0, 0},
                                 {0, 0, 1, 0, 1, 0}});
    for (auto route : {SimplexRoute::Automatic, SimplexRoute::DualFromSlack, SimplexRoute::TwoPhase}) {
        const auto sol = simplex_min(lp, route);
        CHECK(sol.optimum == q("9/2"));
        CHECK(satisfies(lp, sol.vertex));
    }
    const auto sol = simplex_min(lp);
    CHECK(sol.vertex == RationalVector{q("1/2"), q("1/2"), q("1"), q("1"), q("1/2"), q("1")});
}

TEST_CASE("validation and error paths") {
    CHECK_THROWS_AS(simplex_min(covering(2, {{0, 0}})), InvalidArgument);
    CHECK_THROWS_AS(simplex_min(covering(2, {{1}})), InvalidArgument);
    CHECK_THROWS_AS(simplex_min(covering(2, {{2, 0}})), InvalidArgument);
    LinearProgram unbounded = covering(2, {{1, 1}});
    unbounded.objective = {ExactRational(-1), ExactRational(1)};
    CHECK_THROWS_AS(simplex_min(unbounded), Unbounded);
    // No rows: x = 0 is optimal.
    CHECK(simplex_min(covering(3, {})).optimum == 0);
}

TEST_CASE("vertex oracle examples") {
    const auto one = oracle::enumerate_vertices(1, {{1}});
    REQUIRE(one.size() == 1);
    CHECK(one[0][0].str() == "1");

    const auto square = oracle::enumerate_vertices(2, {{1, 1}});
    auto has = [&](std::int64_t a, std::int64_t b) {
        return std::any_of(square.begin(), square.end(), [&](const auto& v) {
            return v[0].num == a && v[0].den == 1 && v[1].num == b && v[1].den == 1;
        });
    };
    CHECK(has(1, 0));
    CHECK(has(0, 1));
    CHECK(has(1, 1));
    CHECK(square.size() == 3);

    const pattern::StoragePattern ex1(6, {{{0, 1, 2, 4}, 1}, {{2, 3, 5}, 1}});
    CHECK(oracle::lp_min_by_vertices(6, oracle::capacity_rows(ex1, 1, 1)).str() == "9/2");
    CHECK_THROWS_AS(oracle::enumerate_vertices(9, {}), ScaleExceeded);
}

TEST_CASE("simplex_min equals the vertex-enumeration minimum on random 0/1 LPs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
        const auto count = static_cast<std::size_t>(oracle::uniform(rng, 1, 12));
        const auto rows = random_rows(rng, n, count);
        const auto lp = covering(n, rows);
        const auto expected = oracle::lp_min_by_vertices(static_cast<int>(n), rows);
        for (auto route : {SimplexRoute::DualFromSlack, SimplexRoute::TwoPhase}) {
            const auto sol = simplex_min(lp, route);
            CHECK(to_string(sol.optimum) == expected.str());
            CHECK(satisfies(lp, sol.vertex));
            for (const auto& v : sol.vertex) {
                CHECK(v >= 0);
                CHECK(v <= 1);
            }
        }
    }
}

TEST_CASE("returned vertex is basic: the basis columns determine it") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
        const auto rows = random_rows(rng, n, static_cast<std::size_t>(oracle::uniform(rng, 1, 10)));
        const auto sol = simplex_min(covering(n, rows));
        // Nonbasic decision variables are zero; nonbasic surpluses are tight rows.
        std::size_t tight_or_zero = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const bool basic = std::find(sol.basis.begin(), sol.basis.end(), j) != sol.basis.end();
            if (!basic) {
                CHECK(sol.vertex[j] == 0);
                ++tight_or_zero;
            }
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const bool basic = std::find(sol.basis.begin(), sol.basis.end(), n + i) != sol.basis.end();
            if (!basic) {
                ExactRational s = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (rows[i][j]) s += sol.vertex[j];
                }
                CHECK(s == 1);
                ++tight_or_zero;
            }
        }
        CHECK(tight_or_zero >= n);
    }
}
