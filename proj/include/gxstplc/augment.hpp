#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gxstplc/capacity.hpp"
#include "gxstplc/pattern.hpp"

namespace gxstplc::augment {

// A virtual server (n, i): the i-th of the tau_n virtual servers that merge
// into original server n. Both indices are 0-based in memory.
struct VirtualServer {
    int server = 0;
    int copy = 0;
    friend bool operator==(const VirtualServer&, const VirtualServer&) = default;
};

// Asymmetric system on sum(tau) virtual servers whose server-merged version
// solves the original symmetric problem at the LP rate.
struct AugmentedSystem {
    int n_original = 0;
    int x = 0;
    int t = 0;
    std::int64_t l_value = 0;
    std::vector<std::int64_t> tau;

    std::vector<VirtualServer> virtual_servers; // ordered by (server, copy)
    std::vector<int> first_virtual;             // index of (n, 0) per original n
    std::vector<std::vector<int>> r_bar;        // per m: sorted virtual indices
    std::vector<std::int64_t> gamma;
    std::vector<std::int64_t> x_bar;
    std::vector<std::int64_t> t_bar;
    std::vector<std::vector<std::int64_t>> delta; // [m][n], 0 when n is not in R_m
    std::vector<int> merge_map;                   // virtual index -> original server
    std::vector<int> counts;                      // K_m, carried from the pattern

    int n_virtual() const { return static_cast<int>(virtual_servers.size()); }
    int virtual_index(int server, int copy) const;
    std::int64_t rho_bar(std::size_t m) const { return static_cast<std::int64_t>(r_bar.at(m).size()); }

    // Storage pattern over the virtual servers.
    pattern::StoragePattern virtual_pattern() const;
};

// Throws DegenerateInput for a degenerate capacity result or when some
// rho_m <= X + T.
AugmentedSystem generate_augmented_system(const pattern::StoragePattern& p, int x, int t,
                                          const capacity::CapacityResult& cap);

// nu_m: sum of the (rho_m - X - T) smallest tau_n over n in R_m.
std::int64_t nu(const pattern::StoragePattern& p, int x, int t,
                const std::vector<std::int64_t>& tau, std::size_t m);

struct ServerDuty {
    int server = 0;
    std::vector<int> virtual_indices;
    std::vector<std::vector<int>> sets_per_virtual; // dual pattern of each virtual server
    std::int64_t download = 0;                      // = tau_n symbols
};

// What each original server does once its virtual servers are merged.
std::vector<ServerDuty> merged_query_plan(const AugmentedSystem& a);

// Per message set, the number of virtual servers of R_bar_m owned by the
// colluding original servers.
std::vector<std::int64_t> collusion_exposure(const AugmentedSystem& a,
                                             const std::vector<int>& colluders);

} // namespace gxstplc::augment
