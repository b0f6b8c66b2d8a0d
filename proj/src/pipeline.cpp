#include "gxstplc/pipeline.hpp"

#include <numeric>
#include <set>

#include "gxstplc/rng.hpp"

namespace gxstplc::pipeline {

using pattern::MessageSet;
using pattern::StoragePattern;
using scheme::Fq;

namespace {

scheme::SetupOptions setup_options(const RunOptions& opts, std::uint64_t seed,
                                   std::optional<int> message_length) {
    scheme::SetupOptions s;
    s.field = opts.field;
    s.message_length = message_length;
    if (opts.random_points) s.point_seed = derive_seed(seed, "points");
    return s;
}

ExactRational ratio(std::int64_t num, std::int64_t den) {
    return ExactRational(num) / ExactRational(den);
}

std::int64_t sum(const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

// 1-based description to a pattern with K_m = 1.
StoragePattern make_pattern(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<MessageSet> ms;
    for (const auto& s : sets) {
        MessageSet m;
        for (int server : s) m.servers.push_back(server - 1);
        ms.push_back(std::move(m));
    }
    return StoragePattern(n, std::move(ms));
}

// Original pattern obtained by merging the groups of an asymmetric system.
StoragePattern merge_pattern(const StoragePattern& p, const std::vector<std::vector<int>>& groups) {
    std::vector<int> owner(static_cast<std::size_t>(p.n_servers()), -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int v : groups[g]) owner[static_cast<std::size_t>(v)] = static_cast<int>(g);
    }
    std::vector<MessageSet> ms;
    for (const auto& set : p.message_sets()) {
        std::set<int> merged;
        for (int v : set.servers) merged.insert(owner[static_cast<std::size_t>(v)]);
        ms.push_back({std::vector<int>(merged.begin(), merged.end()), set.count});
    }
    return StoragePattern(static_cast<int>(groups.size()), std::move(ms));
}

DemoReport asymmetric_demo(const std::string& name, const scheme::AsymmConfig& c,
                           const std::vector<std::vector<int>>& groups, int x, int t,
                           std::uint64_t seed) {
    const AsymmRun run = run_asymm(c, seed);
    const StoragePattern original = merge_pattern(c.pattern, groups);
    const capacity::CapacityResult cap = capacity::asymptotic_capacity(original, x, t);
    const audit::AuditReport merged = audit::merged_audit(c, run.params, groups, x, t);

    DemoReport r;
    r.name = name;
    r.capacity = cap.capacity;
    r.rate = run.rate;
    r.decode_match = run.transcript.match();
    r.audit_pass = run.audit->passed && merged.passed;
    r.l_value = run.params.l_value;
    r.downloads = sum(run.transcript.downloads);
    r.scheme_servers = c.pattern.n_servers();
    return r;
}

} // namespace

MergedRun run_merged(const StoragePattern& p, int x, int t, std::uint64_t seed, const RunOptions& opts) {
    capacity::CapacityResult cap = capacity::asymptotic_capacity(p, x, t);
    if (cap.degenerate) {
        throw DegenerateConfig("capacity is 0: some rho_m <= X + T");
    }
    augment::AugmentedSystem system = augment::generate_augmented_system(p, x, t, cap);
    scheme::AsymmConfig config = scheme::from_augmented(system);
    scheme::SchemeParams params =
        scheme::setup(config, setup_options(opts, seed, static_cast<int>(cap.l_value)));
    scheme::Transcript transcript = scheme::run(config, params, seed);

    std::vector<std::int64_t> merged(static_cast<std::size_t>(p.n_servers()), 0);
    for (std::size_t v = 0; v < transcript.downloads.size(); ++v) {
        merged[static_cast<std::size_t>(system.merge_map[v])] += transcript.downloads[v];
    }
    const ExactRational rate = ratio(params.l_value, sum(merged));

    std::optional<audit::AuditReport> report;
    if (opts.audit) report = audit::merged_scheme_audit(system, params, x, t);

    return MergedRun{std::move(cap),        std::move(system), std::move(config), std::move(params),
                     std::move(transcript), std::move(merged), rate,              std::move(report)};
}

AsymmRun run_asymm(const scheme::AsymmConfig& c, std::uint64_t seed, const RunOptions& opts) {
    c.validate();
    scheme::SchemeParams params = scheme::setup(c, setup_options(opts, seed, std::nullopt));
    scheme::Transcript transcript = scheme::run(c, params, seed);
    const ExactRational rate = ratio(params.l_value, sum(transcript.downloads));
    std::optional<audit::AuditReport> report;
    if (opts.audit) report = audit::asymmetric_audit(c, params);
    return AsymmRun{c, std::move(params), std::move(transcript), rate, std::move(report)};
}

std::vector<std::string> demo_names() { return {"ex-4.1.1", "ex-4.1.2", "ex-4.2-1", "ex-4.2-2"}; }

DemoReport demo(const std::string& name, std::uint64_t seed) {
    if (name == "ex-4.1.1") {
        const scheme::AsymmConfig c{
            make_pattern(7, {{1, 2, 4}, {2, 3, 4, 5, 6}, {1, 4, 7}, {2, 3, 5, 6}}), {0, 0, 0, 0}, {1, 2, 1, 2}};
        return asymmetric_demo(name, c, {{0}, {1, 2}, {3}, {4, 5}, {6}}, 0, 1, seed);
    }
    if (name == "ex-4.1.2") {
        const scheme::AsymmConfig c{make_pattern(9, {{1, 2, 3, 7}, {3, 4, 5, 6, 8, 9}}), {1, 2}, {1, 2}};
        return asymmetric_demo(name, c, {{0}, {1}, {2, 3}, {4, 5}, {6}, {7, 8}}, 1, 1, seed);
    }
    StoragePattern p = [&] {
        if (name == "ex-4.2-1") return make_pattern(6, {{1, 2, 3, 5}, {3, 4, 6}});
        if (name == "ex-4.2-2") {
            return make_pattern(14, {{1, 4, 7, 9},
                                     {1, 3, 4, 5, 8},
                                     {3, 4, 6, 8, 10, 13},
                                     {2, 6, 10, 11, 12, 13, 14}});
        }
        throw UnknownDemo("unknown demo '" + name + "'");
    }();
    const MergedRun run = run_merged(p, 1, 1, seed);
    DemoReport r;
    r.name = name;
    r.capacity = run.capacity.capacity;
    r.rate = run.rate;
    r.decode_match = run.transcript.match();
    r.audit_pass = run.audit->passed;
    r.l_value = run.params.l_value;
    r.downloads = sum(run.merged_downloads);
    r.scheme_servers = run.system.n_virtual();
    return r;
}

bool dual_grs_vanishing(std::span<const Fq> nodes) {
    const std::vector<Fq> v = scheme::dual_grs_weights(nodes);
    if (nodes.size() < 2) return true;
    for (std::size_t j = 0; j + 2 <= nodes.size(); ++j) {
        Fq acc = ff::PrimeField(nodes.front().modulus()).zero();
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += v[i] * nodes[i].pow(j);
        if (!acc.is_zero()) return false;
    }
    return true;
}

LemmaReport lemmas(std::uint64_t seed, int trials) {
    if (trials < 1) throw InvalidArgument("trials must be at least 1");
    static constexpr std::uint64_t kModuli[] = {11, 59, 101};
    CounterRng rng(derive_seed(seed, "lemmas"));
    LemmaReport report;
    report.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        const ff::PrimeField field(kModuli[rng.below(3)]);
        const std::uint64_t q = field.modulus();
        const auto n = static_cast<std::size_t>(2 + rng.below(7));                 // 2..8
        const std::size_t l_max = std::min<std::size_t>(n, static_cast<std::size_t>(q) - n);
        const auto l = static_cast<std::size_t>(1 + rng.below(l_max));
        std::set<std::uint64_t> used;
        auto draw = [&](std::size_t count) {
            std::vector<Fq> out;
            while (out.size() < count) {
                const std::uint64_t v = rng.below(q);
                if (used.insert(v).second) out.push_back(field.from_canonical(v));
            }
            return out;
        };
        const std::vector<Fq> alpha = draw(n);
        const std::vector<Fq> f = draw(l);
        if (dual_grs_vanishing(alpha)) ++report.dual_grs_pass;
        if (scheme::cauchy_vandermonde_check(alpha, f)) ++report.cauchy_pass;
    }
    return report;
}

} // namespace gxstplc::pipeline
