#pragma once

#include <cstddef>
#include <vector>

#include "gxstplc/error.hpp"

namespace gxstplc::pattern {

// Servers and message sets are 0-indexed in memory. Serialized artifacts
// use 1-indexing.
struct MessageSet {
    std::vector<int> servers; // sorted, distinct, each in [0, N)
    int count = 1;            // K_m
    friend bool operator==(const MessageSet&, const MessageSet&) = default;
};

class StoragePattern {
public:
    // Sorts each server list. Throws InvalidPattern on an empty set, an
    // out-of-range or repeated server, or a count < 1.
    StoragePattern(int n_servers, std::vector<MessageSet> message_sets);

    int n_servers() const noexcept { return n_servers_; }
    std::size_t n_sets() const noexcept { return sets_.size(); }
    const std::vector<MessageSet>& message_sets() const noexcept { return sets_; }
    const MessageSet& set(std::size_t m) const { return sets_.at(m); }
    int replication(std::size_t m) const { return static_cast<int>(sets_.at(m).servers.size()); }
    bool stores(int server, std::size_t m) const;

    friend bool operator==(const StoragePattern&, const StoragePattern&) = default;

private:
    int n_servers_;
    std::vector<MessageSet> sets_;
};

// M_n: for each server, the sorted message sets it stores.
struct DualPattern {
    std::vector<std::vector<int>> sets_at_server;
    friend bool operator==(const DualPattern&, const DualPattern&) = default;
};

DualPattern dual(const StoragePattern& p);

// R_m recovered from the dual form; `n_sets` is needed because a message set
// never appears in the dual if it were empty (which validation forbids).
std::vector<std::vector<int>> invert(const DualPattern& d, std::size_t n_sets);

// min over m of (rho_m - x - t). Values <= 0 mean zero capacity.
int min_replication_slack(const StoragePattern& p, int x, int t);

// Server n becomes perm[n]; used to check labeling invariance.
StoragePattern relabel_servers(const StoragePattern& p, const std::vector<int>& perm);

} // namespace gxstplc::pattern
