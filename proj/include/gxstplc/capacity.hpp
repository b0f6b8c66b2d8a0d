#pragma once

#include <cstdint>
#include <vector>

#include "gxstplc/exactlp.hpp"
#include "gxstplc/pattern.hpp"

namespace gxstplc::capacity {

using exactlp::ExactRational;
using exactlp::RationalVector;

struct CapacityResult {
    ExactRational capacity;
    RationalVector vertex;          // D*, one entry per server
    std::int64_t l_value = 0;       // lcm of the vertex denominators
    std::vector<std::int64_t> tau;  // L * D*_n
    bool degenerate = false;

    std::int64_t total_download() const;
};

// One >= 1 row per subset of R_m of size rho_m - x - t, duplicates removed
// (first occurrence kept). Throws DegeneratePattern when the slack is <= 0.
exactlp::LinearProgram build_capacity_lp(const pattern::StoragePattern& p, int x, int t);

// Derives L and tau from a vertex of the capacity LP. Throws InvalidArgument
// if a coordinate lies outside [0, 1].
CapacityResult from_vertex(RationalVector vertex);

// Requires 0 <= x < N and 0 <= t < N. Degenerate patterns give capacity 0.
CapacityResult asymptotic_capacity(const pattern::StoragePattern& p, int x, int t);

} // namespace gxstplc::capacity
