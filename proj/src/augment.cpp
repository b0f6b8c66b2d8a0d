#include "gxstplc/augment.hpp"

#include <algorithm>
#include <string>

namespace gxstplc::augment {

int AugmentedSystem::virtual_index(int server, int copy) const {
    if (server < 0 || server >= n_original || copy < 0 ||
        copy >= tau.at(static_cast<std::size_t>(server))) {
        throw InvalidArgument("no virtual server (" + std::to_string(server + 1) + "," +
                              std::to_string(copy + 1) + ")");
    }
    return first_virtual[static_cast<std::size_t>(server)] + copy;
}

pattern::StoragePattern AugmentedSystem::virtual_pattern() const {
    std::vector<pattern::MessageSet> sets;
    for (std::size_t m = 0; m < r_bar.size(); ++m) {
        sets.push_back({r_bar[m], counts.at(m)});
    }
    return pattern::StoragePattern(n_virtual(), std::move(sets));
}

std::int64_t nu(const pattern::StoragePattern& p, int x, int t,
                const std::vector<std::int64_t>& tau, std::size_t m) {
    std::vector<std::int64_t> vals;
    for (int n : p.set(m).servers) vals.push_back(tau.at(static_cast<std::size_t>(n)));
    std::sort(vals.begin(), vals.end());
    const auto k = static_cast<std::size_t>(std::max(0, p.replication(m) - x - t));
    std::int64_t s = 0;
    for (std::size_t i = 0; i < k && i < vals.size(); ++i) s += vals[i];
    return s;
}

AugmentedSystem generate_augmented_system(const pattern::StoragePattern& p, int x, int t,
                                          const capacity::CapacityResult& cap) {
    if (cap.degenerate) throw DegenerateInput("capacity result is degenerate");
    if (cap.tau.size() != static_cast<std::size_t>(p.n_servers())) {
        throw DegenerateInput("tau length does not match the server count");
    }
    if (pattern::min_replication_slack(p, x, t) <= 0) {
        throw DegenerateInput("some message set has rho_m <= X + T");
    }

    AugmentedSystem a;
    a.n_original = p.n_servers();
    a.x = x;
    a.t = t;
    a.l_value = cap.l_value;
    a.tau = cap.tau;
    for (int n = 0; n < a.n_original; ++n) {
        a.first_virtual.push_back(static_cast<int>(a.virtual_servers.size()));
        for (std::int64_t i = 0; i < a.tau[static_cast<std::size_t>(n)]; ++i) {
            a.virtual_servers.push_back({n, static_cast<int>(i)});
            a.merge_map.push_back(n);
        }
    }

    const auto rank = static_cast<std::size_t>(x + t); // 0-based (X+T+1)-th element
    for (std::size_t m = 0; m < p.n_sets(); ++m) {
        const auto& servers = p.set(m).servers;
        std::vector<int> order = servers;
        // Non-ascending tau; ties by ascending server index.
        std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
            return a.tau[static_cast<std::size_t>(lhs)] > a.tau[static_cast<std::size_t>(rhs)];
        });
        const std::int64_t gamma = a.tau[static_cast<std::size_t>(order.at(rank))];
        a.gamma.push_back(gamma);
        a.x_bar.push_back(x * gamma);
        a.t_bar.push_back(t * gamma);

        std::vector<std::int64_t> delta(static_cast<std::size_t>(a.n_original), 0);
        std::vector<int> members;
        for (int n : servers) {
            const std::int64_t d = std::min(gamma, a.tau[static_cast<std::size_t>(n)]);
            delta[static_cast<std::size_t>(n)] = d;
            for (std::int64_t i = 0; i < d; ++i) {
                members.push_back(a.first_virtual[static_cast<std::size_t>(n)] + static_cast<int>(i));
            }
        }
        std::sort(members.begin(), members.end());
        a.delta.push_back(std::move(delta));
        a.r_bar.push_back(std::move(members));
        a.counts.push_back(p.set(m).count);
    }
    return a;
}

std::vector<ServerDuty> merged_query_plan(const AugmentedSystem& a) {
    const pattern::DualPattern d = pattern::dual(a.virtual_pattern());
    std::vector<ServerDuty> plan;
    for (int n = 0; n < a.n_original; ++n) {
        ServerDuty duty;
        duty.server = n;
        duty.download = a.tau[static_cast<std::size_t>(n)];
        for (std::int64_t i = 0; i < duty.download; ++i) {
            const int v = a.first_virtual[static_cast<std::size_t>(n)] + static_cast<int>(i);
            duty.virtual_indices.push_back(v);
            duty.sets_per_virtual.push_back(d.sets_at_server[static_cast<std::size_t>(v)]);
        }
        plan.push_back(std::move(duty));
    }
    return plan;
}

std::vector<std::int64_t> collusion_exposure(const AugmentedSystem& a,
                                             const std::vector<int>& colluders) {
    std::vector<std::int64_t> exposure(a.r_bar.size(), 0);
    for (int n : colluders) {
        if (n < 0 || n >= a.n_original) throw InvalidArgument("colluder outside [1, N]");
    }
    for (std::size_t m = 0; m < a.r_bar.size(); ++m) {
        for (int v : a.r_bar[m]) {
            if (std::find(colluders.begin(), colluders.end(), a.merge_map[static_cast<std::size_t>(v)]) !=
                colluders.end()) {
                ++exposure[m];
            }
        }
    }
    return exposure;
}

} // namespace gxstplc::augment
