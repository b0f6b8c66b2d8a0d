#include "gxstplc/pattern.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace gxstplc::pattern {

StoragePattern::StoragePattern(int n_servers, std::vector<MessageSet> message_sets)
    : n_servers_(n_servers), sets_(std::move(message_sets)) {
    if (n_servers_ < 1) throw InvalidPattern("pattern needs at least one server");
    if (sets_.empty()) throw InvalidPattern("pattern needs at least one message set");
    for (std::size_t m = 0; m < sets_.size(); ++m) {
        auto& s = sets_[m];
        const std::string label = "message set " + std::to_string(m + 1);
        if (s.servers.empty()) throw InvalidPattern(label + " has no servers");
        if (s.count < 1) throw InvalidPattern(label + " has count < 1");
        std::sort(s.servers.begin(), s.servers.end());
        if (std::adjacent_find(s.servers.begin(), s.servers.end()) != s.servers.end()) {
            throw InvalidPattern(label + " lists a server twice");
        }
        if (s.servers.front() < 0 || s.servers.back() >= n_servers_) {
            throw InvalidPattern(label + " references a server outside [1, " +
                                 std::to_string(n_servers_) + "]");
        }
    }
}

bool StoragePattern::stores(int server, std::size_t m) const {
    const auto& s = sets_.at(m).servers;
    return std::binary_search(s.begin(), s.end(), server);
}

DualPattern dual(const StoragePattern& p) {
    DualPattern d;
    d.sets_at_server.resize(static_cast<std::size_t>(p.n_servers()));
    for (std::size_t m = 0; m < p.n_sets(); ++m) {
        for (int n : p.set(m).servers) {
            d.sets_at_server[static_cast<std::size_t>(n)].push_back(static_cast<int>(m));
        }
    }
    return d;
}

std::vector<std::vector<int>> invert(const DualPattern& d, std::size_t n_sets) {
    std::vector<std::vector<int>> r(n_sets);
    for (std::size_t n = 0; n < d.sets_at_server.size(); ++n) {
        for (int m : d.sets_at_server[n]) r.at(static_cast<std::size_t>(m)).push_back(static_cast<int>(n));
    }
    return r;
}

int min_replication_slack(const StoragePattern& p, int x, int t) {
    int slack = std::numeric_limits<int>::max();
    for (std::size_t m = 0; m < p.n_sets(); ++m) {
        slack = std::min(slack, p.replication(m) - x - t);
    }
    return slack;
}

StoragePattern relabel_servers(const StoragePattern& p, const std::vector<int>& perm) {
    if (perm.size() != static_cast<std::size_t>(p.n_servers())) {
        throw InvalidArgument("permutation length does not match server count");
    }
    std::vector<MessageSet> sets = p.message_sets();
    for (auto& s : sets) {
        for (int& n : s.servers) n = perm.at(static_cast<std::size_t>(n));
    }
    return StoragePattern(p.n_servers(), std::move(sets));
}

} // namespace gxstplc::pattern
