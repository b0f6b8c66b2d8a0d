#include "gxstplc/capacity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace gxstplc::capacity {

std::int64_t CapacityResult::total_download() const {
    return std::accumulate(tau.begin(), tau.end(), std::int64_t{0});
}

exactlp::LinearProgram build_capacity_lp(const pattern::StoragePattern& p, int x, int t) {
    const int slack = pattern::min_replication_slack(p, x, t);
    if (slack <= 0) {
        throw DegeneratePattern("min replication " + std::to_string(slack + x + t) +
                                " does not exceed X + T = " + std::to_string(x + t));
    }
    const auto n = static_cast<std::size_t>(p.n_servers());
    exactlp::LinearProgram lp;
    lp.num_vars = n;
    lp.objective.assign(n, ExactRational(1));

    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& set : p.message_sets()) {
        const auto& servers = set.servers;
        const std::size_t rho = servers.size();
        const auto k = rho - static_cast<std::size_t>(x + t);
        // Walk all k-subsets of R_m via a selection mask in lexicographic order.
        std::vector<bool> pick(rho, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<std::uint8_t> row(n, 0);
            for (std::size_t i = 0; i < rho; ++i) {
                if (pick[i]) row[static_cast<std::size_t>(servers[i])] = 1;
            }
            if (seen.insert(row).second) lp.rows.push_back(std::move(row));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return lp;
}

CapacityResult from_vertex(RationalVector vertex) {
    CapacityResult res;
    ExactRational total;
    for (const auto& d : vertex) {
        if (d < 0 || d > 1) {
            throw InvalidArgument("vertex coordinate " + exactlp::to_string(d) +
                                  " outside [0, 1]");
        }
        total += d;
    }
    if (total == 0) throw InvalidArgument("vertex has zero total download");
    const exactlp::BigInt l = exactlp::lcm_of_denominators(vertex);
    if (l > std::numeric_limits<std::int64_t>::max()) {
        throw ScaleExceeded("lcm of vertex denominators does not fit in 64 bits");
    }
    res.l_value = static_cast<std::int64_t>(l);
    for (const auto& d : vertex) {
        const ExactRational scaled = d * ExactRational(l);
        res.tau.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(scaled)));
    }
    res.capacity = 1 / total;
    res.vertex = std::move(vertex);
    return res;
}

CapacityResult asymptotic_capacity(const pattern::StoragePattern& p, int x, int t) {
    const int n = p.n_servers();
    if (x < 0 || x >= n || t < 0 || t >= n) {
        throw InvalidArgument("require 0 <= X < N and 0 <= T < N");
    }
    if (pattern::min_replication_slack(p, x, t) <= 0) {
        CapacityResult res;
        res.degenerate = true;
        return res;
    }
    const auto sol = exactlp::simplex_min(build_capacity_lp(p, x, t));
    CapacityResult res = from_vertex(sol.vertex);
    if (res.capacity != 1 / sol.optimum) {
        throw std::logic_error("capacity does not match the LP optimum");
    }
    return res;
}

} // namespace gxstplc::capacity
