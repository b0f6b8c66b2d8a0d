// Command-line front end. One JSON document on stdout; diagnostics on stderr.
// Exit status: 0 when every check passes, 1 when a check fails, 2 on errors.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gxstplc/json_io.hpp"
#include "gxstplc/pipeline.hpp"

using namespace gxstplc;
using json_io::json;

namespace {

struct Args {
    std::string pattern_path;
    int x = -1;
    int t = -1;
    std::vector<int> x_vec;
    std::vector<int> t_vec;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> field;
    bool exhaustive = false;
    bool random_points = false;
    int trials = 100;
    std::string demo_name;
};

bool asymmetric(const Args& a) { return !a.x_vec.empty() || !a.t_vec.empty(); }

void require_symmetric(const Args& a) {
    if (a.x < 0 || a.t < 0) throw InvalidArgument("--x and --t are required");
}

scheme::AsymmConfig asymm_config(const Args& a, const pattern::StoragePattern& p) {
    const auto m = p.n_sets();
    auto expand = [&](const std::vector<int>& v, int scalar, const char* flag) {
        if (!v.empty()) return v;
        if (scalar < 0) throw InvalidArgument(std::string("missing ") + flag);
        return std::vector<int>(m, scalar);
    };
    scheme::AsymmConfig c{p, expand(a.x_vec, a.x, "--x-vec"), expand(a.t_vec, a.t, "--t-vec")};
    c.validate();
    return c;
}

pipeline::RunOptions run_options(const Args& a, bool audit) {
    pipeline::RunOptions o;
    o.field = a.field;
    o.random_points = a.random_points;
    o.audit = audit;
    return o;
}

// Every subset of [0, n) of size 1..k accepted by `keep`.
template <typename Keep>
std::vector<std::vector<int>> subsets_upto(int n, int k, Keep keep) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int start) -> void {
        if (!cur.empty() && keep(cur)) out.push_back(cur);
        if (static_cast<int>(cur.size()) == k) return;
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

json exhaustive_section(const scheme::AsymmConfig& c, const scheme::SchemeParams& params,
                        const std::vector<std::vector<int>>& subsets, audit::Target target,
                        bool& all_pass) {
    json out = json::array();
    for (const auto& s : subsets) {
        const auto r = audit::exhaustive_independence_audit(c, params, s, target);
        all_pass = all_pass && r.passed;
        json j = json_io::to_json(r);
        json servers = json::array();
        for (int n : s) servers.push_back(n + 1);
        j["subset"] = servers;
        j["target"] = target == audit::Target::Security ? "security" : "privacy";
        out.push_back(std::move(j));
    }
    return out;
}

int cmd_capacity(const Args& a) {
    require_symmetric(a);
    const auto p = json_io::load_pattern(a.pattern_path);
    std::cout << json_io::to_json(capacity::asymptotic_capacity(p, a.x, a.t)).dump(2) << '\n';
    return 0;
}

int cmd_plan(const Args& a) {
    require_symmetric(a);
    const auto p = json_io::load_pattern(a.pattern_path);
    const auto cap = capacity::asymptotic_capacity(p, a.x, a.t);
    const auto sys = augment::generate_augmented_system(p, a.x, a.t, cap);
    json j = json_io::to_json(sys);
    j["capacity"] = exactlp::to_string(cap.capacity);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_simulate(const Args& a) {
    const auto p = json_io::load_pattern(a.pattern_path);
    json j;
    bool ok = false;
    if (asymmetric(a)) {
        const auto run = pipeline::run_asymm(asymm_config(a, p), a.seed, run_options(a, false));
        j = json_io::to_json(run.transcript, run.rate);
        j["L"] = run.params.l_value;
        j["field"] = run.params.field.modulus();
        ok = run.transcript.match();
    } else {
        require_symmetric(a);
        const auto run = pipeline::run_merged(p, a.x, a.t, a.seed, run_options(a, false));
        j = json_io::to_json(run.transcript, run.rate);
        j["L"] = run.params.l_value;
        j["field"] = run.params.field.modulus();
        j["capacity"] = exactlp::to_string(run.capacity.capacity);
        j["merged_downloads"] = run.merged_downloads;
        ok = run.transcript.match() && run.rate == run.capacity.capacity;
    }
    std::cout << j.dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_audit(const Args& a) {
    const auto p = json_io::load_pattern(a.pattern_path);
    json j;
    bool ok = false;
    if (asymmetric(a)) {
        const auto c = asymm_config(a, p);
        const auto run = pipeline::run_asymm(c, a.seed, run_options(a, true));
        j = json_io::to_json(*run.audit);
        ok = run.audit->passed;
        if (a.exhaustive) {
            auto within = [&](const std::vector<int>& limits) {
                return [&c, limits](const std::vector<int>& s) {
                    for (std::size_t m = 0; m < c.pattern.n_sets(); ++m) {
                        int hit = 0;
                        for (int n : s) hit += c.pattern.stores(n, m) ? 1 : 0;
                        if (hit > limits[m]) return false;
                    }
                    return true;
                };
            };
            const int n = p.n_servers();
            j["exhaustive"] = {
                {"security", exhaustive_section(c, run.params, subsets_upto(n, n, within(c.x_vec)),
                                                audit::Target::Security, ok)},
                {"privacy", exhaustive_section(c, run.params, subsets_upto(n, n, within(c.t_vec)),
                                               audit::Target::Privacy, ok)}};
        }
    } else {
        require_symmetric(a);
        const auto run = pipeline::run_merged(p, a.x, a.t, a.seed, run_options(a, true));
        j = json_io::to_json(*run.audit);
        ok = run.audit->passed;
        if (a.exhaustive) {
            const auto groups = audit::merge_groups(run.system);
            auto expand = [&](int k) {
                std::vector<std::vector<int>> out;
                for (const auto& s : subsets_upto(p.n_servers(), k, [](const auto&) { return true; })) {
                    std::vector<int> v;
                    for (int n : s) v.insert(v.end(), groups[static_cast<std::size_t>(n)].begin(),
                                             groups[static_cast<std::size_t>(n)].end());
                    out.push_back(std::move(v));
                }
                return out;
            };
            j["exhaustive"] = {
                {"security", exhaustive_section(run.config, run.params, expand(a.x), audit::Target::Security, ok)},
                {"privacy", exhaustive_section(run.config, run.params, expand(a.t), audit::Target::Privacy, ok)}};
        }
    }
    j["passed"] = ok;
    std::cout << j.dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_lemmas(const Args& a) {
    const auto r = pipeline::lemmas(a.seed, a.trials);
    std::cout << json_io::to_json(r).dump(2) << '\n';
    return r.passed() ? 0 : 1;
}

int cmd_demo(const Args& a) {
    const auto r = pipeline::demo(a.demo_name, a.seed);
    std::cout << json_io::to_json(r).dump(2) << '\n';
    return r.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Capacity, planning, simulation, and audit for secure private linear computation"};
    app.require_subcommand(1);
    Args args;

    auto add_pattern_flags = [&](CLI::App* sub, bool vectors) {
        sub->add_option("--pattern", args.pattern_path, "storage pattern JSON")->required();
        sub->add_option("--x", args.x, "security threshold X");
        sub->add_option("--t", args.t, "privacy threshold T");
        if (vectors) {
            sub->add_option("--x-vec", args.x_vec, "per-set X_m (comma separated)")->delimiter(',');
            sub->add_option("--t-vec", args.t_vec, "per-set T_m (comma separated)")->delimiter(',');
        }
    };
    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--seed", args.seed, "64-bit seed");
        sub->add_option("--field", args.field, "prime modulus override");
        sub->add_flag("--random-points", args.random_points, "draw distinct evaluation points from the seed");
    };

    auto* capacity_cmd = app.add_subcommand("capacity", "exact asymptotic capacity");
    add_pattern_flags(capacity_cmd, false);
    auto* plan_cmd = app.add_subcommand("plan", "augmented system and merge plan");
    add_pattern_flags(plan_cmd, false);
    auto* simulate_cmd = app.add_subcommand("simulate", "run the scheme end to end");
    add_pattern_flags(simulate_cmd, true);
    add_run_flags(simulate_cmd);
    auto* audit_cmd = app.add_subcommand("audit", "security and privacy audit");
    add_pattern_flags(audit_cmd, true);
    add_run_flags(audit_cmd);
    audit_cmd->add_flag("--exhaustive", args.exhaustive, "also enumerate all noise and secrets");
    auto* lemmas_cmd = app.add_subcommand("lemmas", "check the algebraic identities on random nodes");
    lemmas_cmd->add_option("--seed", args.seed, "64-bit seed");
    lemmas_cmd->add_option("--trials", args.trials, "number of random node sets");
    auto* demo_cmd = app.add_subcommand("demo", "run a built-in worked example");
    demo_cmd->add_option("name", args.demo_name, "ex-4.1.1 | ex-4.1.2 | ex-4.2-1 | ex-4.2-2")->required();
    demo_cmd->add_option("--seed", args.seed, "64-bit seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*capacity_cmd) return cmd_capacity(args);
        if (*plan_cmd) return cmd_plan(args);
        if (*simulate_cmd) return cmd_simulate(args);
        if (*audit_cmd) return cmd_audit(args);
        if (*lemmas_cmd) return cmd_lemmas(args);
        if (*demo_cmd) return cmd_demo(args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
