#include "gxstplc/json_io.hpp"

#include <fstream>

namespace gxstplc::json_io {

namespace {

json one_based(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

json values(const std::vector<ff::Fq>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(e.value());
    return out;
}

json rationals(const exactlp::RationalVector& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(exactlp::to_string(r));
    return out;
}

} // namespace

pattern::StoragePattern pattern_from_json(const json& j) {
    try {
        const int n = j.at("servers").get<int>();
        std::vector<pattern::MessageSet> sets;
        for (const auto& entry : j.at("message_sets")) {
            pattern::MessageSet m;
            for (const auto& s : entry.at("servers")) m.servers.push_back(s.get<int>() - 1);
            m.count = entry.value("count", 1);
            sets.push_back(std::move(m));
        }
        return pattern::StoragePattern(n, std::move(sets));
    } catch (const json::exception& e) {
        throw InvalidPattern(std::string("malformed pattern JSON: ") + e.what());
    }
}

pattern::StoragePattern load_pattern(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open pattern file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidPattern("cannot parse '" + path + "': " + e.what());
    }
    return pattern_from_json(j);
}

json to_json(const pattern::StoragePattern& p) {
    json sets = json::array();
    for (const auto& m : p.message_sets()) sets.push_back({{"servers", one_based(m.servers)}, {"count", m.count}});
    return {{"servers", p.n_servers()}, {"message_sets", sets}};
}

json to_json(const capacity::CapacityResult& r) {
    return {{"capacity", exactlp::to_string(r.capacity)},
            {"vertex", rationals(r.vertex)},
            {"L", r.l_value},
            {"tau", r.tau},
            {"total_download", r.total_download()},
            {"degenerate", r.degenerate}};
}

json to_json(const augment::AugmentedSystem& a) {
    json table = json::array();
    const pattern::StoragePattern vp = a.virtual_pattern();
    const pattern::DualPattern dp = pattern::dual(vp);
    for (int v = 0; v < a.n_virtual(); ++v) {
        const auto& vs = a.virtual_servers[static_cast<std::size_t>(v)];
        table.push_back({{"index", v + 1},
                         {"server", vs.server + 1},
                         {"copy", vs.copy + 1},
                         {"message_sets", one_based(dp.sets_at_server[static_cast<std::size_t>(v)])}});
    }
    json sets = json::array();
    for (std::size_t m = 0; m < a.r_bar.size(); ++m) {
        sets.push_back({{"servers", one_based(a.r_bar[m])},
                        {"rho_bar", a.rho_bar(m)},
                        {"gamma", a.gamma[m]},
                        {"x_bar", a.x_bar[m]},
                        {"t_bar", a.t_bar[m]},
                        {"delta", a.delta[m]}});
    }
    json plan = json::array();
    for (const auto& d : augment::merged_query_plan(a)) {
        plan.push_back({{"server", d.server + 1}, {"virtual_servers", one_based(d.virtual_indices)},
                        {"download", d.download}});
    }
    return {{"L", a.l_value},       {"tau", a.tau},           {"n_virtual", a.n_virtual()},
            {"x", a.x},             {"t", a.t},               {"virtual_servers", table},
            {"message_sets", sets}, {"merge_map", one_based(a.merge_map)}, {"merged_plan", plan}};
}

json to_json(const audit::AuditReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"subset", one_based(v.subset)},
                              {"message_set", v.message_set < 0 ? json(nullptr) : json(v.message_set + 1)},
                              {"detail", v.detail}});
    }
    return {{"mode", r.mode == audit::Mode::Exhaustive ? "exhaustive" : "rank_certificate"},
            {"checked_subsets", r.checked_subsets},
            {"violations", violations},
            {"passed", r.passed},
            {"sampled", r.sampled},
            {"notes", r.notes}};
}

json to_json(const scheme::Transcript& t, const exactlp::ExactRational& rate) {
    return {{"answers", values(t.answers)},   {"decoded", values(t.decoded)},
            {"expected", values(t.expected)}, {"downloads", t.downloads},
            {"stored_symbols", t.stored_symbols}, {"rate", exactlp::to_string(rate)},
            {"match", t.match()}};
}

json to_json(const pipeline::DemoReport& r) {
    return {{"name", r.name},
            {"capacity", exactlp::to_string(r.capacity)},
            {"rate", exactlp::to_string(r.rate)},
            {"decode_match", r.decode_match},
            {"audit_pass", r.audit_pass},
            {"L", r.l_value},
            {"downloads", r.downloads},
            {"scheme_servers", r.scheme_servers},
            {"passed", r.passed()}};
}

json to_json(const pipeline::LemmaReport& r) {
    return {{"trials", r.trials},
            {"dual_grs_pass", r.dual_grs_pass},
            {"cauchy_vandermonde_pass", r.cauchy_pass},
            {"passed", r.passed()}};
}

} // namespace gxstplc::json_io
