#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gxstplc/audit.hpp"
#include "gxstplc/augment.hpp"
#include "gxstplc/capacity.hpp"
#include "gxstplc/scheme.hpp"

namespace gxstplc::pipeline {

using exactlp::ExactRational;

struct RunOptions {
    std::optional<std::uint64_t> field;
    bool random_points = false; // points drawn from a stream derived from the seed
    bool audit = true;
};

// Symmetric problem solved through the augmented system and server merging.
struct MergedRun {
    capacity::CapacityResult capacity;
    augment::AugmentedSystem system;
    scheme::AsymmConfig config; // on the virtual servers
    scheme::SchemeParams params;
    scheme::Transcript transcript;
    std::vector<std::int64_t> merged_downloads; // per original server
    ExactRational rate;
    std::optional<audit::AuditReport> audit;
};

// Throws DegenerateConfig when the capacity is zero.
MergedRun run_merged(const pattern::StoragePattern& p, int x, int t, std::uint64_t seed,
                     const RunOptions& opts = {});

// Asymmetric problem run directly, one symbol downloaded per server.
struct AsymmRun {
    scheme::AsymmConfig config;
    scheme::SchemeParams params;
    scheme::Transcript transcript;
    ExactRational rate;
    std::optional<audit::AuditReport> audit;
};

AsymmRun run_asymm(const scheme::AsymmConfig& c, std::uint64_t seed, const RunOptions& opts = {});

struct DemoReport {
    std::string name;
    ExactRational capacity;
    ExactRational rate;
    bool decode_match = false;
    bool audit_pass = false;
    std::int64_t l_value = 0;
    std::int64_t downloads = 0;
    int scheme_servers = 0;

    bool passed() const { return decode_match && audit_pass && rate == capacity; }
};

// Names: ex-4.1.1, ex-4.1.2, ex-4.2-1, ex-4.2-2. Throws UnknownDemo.
DemoReport demo(const std::string& name, std::uint64_t seed = 0);
std::vector<std::string> demo_names();

// sum_i v_i a_i^j == 0 for all 0 <= j <= n-2.
bool dual_grs_vanishing(std::span<const scheme::Fq> nodes);

struct LemmaReport {
    int trials = 0;
    int dual_grs_pass = 0;
    int cauchy_pass = 0;

    bool passed() const { return dual_grs_pass == trials && cauchy_pass == trials; }
};

// Random node sets with q in {11, 59, 101}, n <= 8, l <= n. Throws
// InvalidArgument when trials < 1.
LemmaReport lemmas(std::uint64_t seed, int trials);

} // namespace gxstplc::pipeline
