#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gxstplc/augment.hpp"
#include "gxstplc/scheme.hpp"

namespace gxstplc::audit {

enum class Mode { RankCertificate, Exhaustive };

struct Violation {
    std::vector<int> subset;  // servers, 0-based
    int message_set = -1;     // -1 when the finding is not tied to one set
    std::string detail;

    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct AuditReport {
    Mode mode = Mode::RankCertificate;
    std::size_t checked_subsets = 0;
    std::vector<Violation> violations;
    bool passed = true;
    bool sampled = false;
    std::vector<std::string> notes;

    void add(Violation v) {
        violations.push_back(std::move(v));
        passed = false;
    }
};

struct Certificate {
    bool holds = true;
    bool not_applicable = false; // privacy with T_m = 0 and an observed server
    std::optional<std::size_t> failing_set;
    std::string detail;

    explicit operator bool() const { return holds; }
};

// Per m with s = |subset ∩ R_m| > 0: s <= X_m and the s x X_m matrix
// [alpha_n^(x-1)] has rank s, so the storage noise pads every observed share.
Certificate security_rank_certificate(const scheme::AsymmConfig& c,
                                      const scheme::SchemeParams& params,
                                      const std::vector<int>& subset);

// Same for queries: s <= T_m and [(alpha_n - f_l) alpha_n^(t-1)] has rank s
// for every l.
Certificate privacy_rank_certificate(const scheme::AsymmConfig& c,
                                     const scheme::SchemeParams& params,
                                     const std::vector<int>& subset);

enum class Target { Security, Privacy };

inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

// Enumerates every secret (messages or coefficients) and every noise
// realization, and checks that each observation at `subset` occurs equally
// often under every secret value. Throws ScaleExceeded beyond kMaxEnumeration.
AuditReport exhaustive_independence_audit(const scheme::AsymmConfig& c,
                                          const scheme::SchemeParams& params,
                                          const std::vector<int>& subset, Target target);

// Rank-certificate audit of a server-merged scheme: every group of at most x
// (resp. t) original servers is mapped to the scheme servers it owns.
// `groups[n]` lists the scheme servers merged into original server n.
// Exhaustive when N <= kExhaustiveSubsetLimit or there are at most
// kSampledSubsets groups to check; otherwise kSampledSubsets groups are drawn
// with a fixed seed and the report is marked sampled.
AuditReport merged_audit(const scheme::AsymmConfig& c, const scheme::SchemeParams& params,
                         const std::vector<std::vector<int>>& groups, int x, int t);

inline constexpr int kExhaustiveSubsetLimit = 12;
inline constexpr std::size_t kSampledSubsets = 4096;

// merged_audit over a generated augmented system, plus a structural check
// that colluders never expose more than X_bar_m (T_bar_m) virtual shares.
AuditReport merged_scheme_audit(const augment::AugmentedSystem& a,
                                const scheme::SchemeParams& params, int x, int t);

// Asymmetric contract: for each m, every subset of R_m of size <= X_m (resp.
// <= T_m) passes the certificate restricted to set m.
AuditReport asymmetric_audit(const scheme::AsymmConfig& c, const scheme::SchemeParams& params);

std::vector<std::vector<int>> merge_groups(const augment::AugmentedSystem& a);

} // namespace gxstplc::audit
