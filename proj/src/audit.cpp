#include "gxstplc/audit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gxstplc/rng.hpp"

namespace gxstplc::audit {

using ff::Fq;

namespace {

std::vector<int> observed_in(const std::vector<int>& subset, const std::vector<int>& servers) {
    std::vector<int> out;
    for (int n : subset) {
        if (std::binary_search(servers.begin(), servers.end(), n)) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Certificate fail(std::size_t m, std::string detail) {
    Certificate c;
    c.holds = false;
    c.failing_set = m;
    c.detail = std::move(detail);
    return c;
}

std::string set_label(std::size_t m) { return "message set " + std::to_string(m + 1); }

} // namespace

namespace {

Certificate security_for_set(const scheme::AsymmConfig& c, const scheme::SchemeParams& params,
                             const std::vector<int>& subset, std::size_t m) {
    const auto obs = observed_in(subset, c.pattern.set(m).servers);
    const auto s = obs.size();
    if (s == 0) return {};
    const auto width = static_cast<std::size_t>(c.x_vec[m]);
    if (s > width) {
        return fail(m, set_label(m) + ": " + std::to_string(s) + " observed shares exceed X_m = " +
                           std::to_string(width));
    }
    ff::FieldMatrix noise(params.field, s, width);
    for (std::size_t r = 0; r < s; ++r) {
        const Fq a = params.alpha[static_cast<std::size_t>(obs[r])];
        for (std::size_t x = 0; x < width; ++x) noise.at(r, x) = a.pow(x);
    }
    if (ff::mat_rank(noise) != s) return fail(m, set_label(m) + ": storage noise matrix is rank deficient");
    return {};
}

Certificate privacy_for_set(const scheme::AsymmConfig& c, const scheme::SchemeParams& params,
                            const std::vector<int>& subset, std::size_t m) {
    const auto obs = observed_in(subset, c.pattern.set(m).servers);
    const auto s = obs.size();
    if (s == 0) return {};
    const auto width = static_cast<std::size_t>(c.t_vec[m]);
    if (width == 0) {
        Certificate cert = fail(m, set_label(m) + ": T_m = 0, queries carry no noise");
        cert.not_applicable = true;
        return cert;
    }
    if (s > width) {
        return fail(m, set_label(m) + ": " + std::to_string(s) + " observed queries exceed T_m = " +
                           std::to_string(width));
    }
    for (std::size_t l = 0; l < params.f.size(); ++l) {
        ff::FieldMatrix noise(params.field, s, width);
        for (std::size_t r = 0; r < s; ++r) {
            const Fq a = params.alpha[static_cast<std::size_t>(obs[r])];
            const Fq shift = a - params.f[l];
            for (std::size_t t = 0; t < width; ++t) noise.at(r, t) = shift * a.pow(t);
        }
        if (ff::mat_rank(noise) != s) {
            return fail(m, set_label(m) + ": query noise matrix is rank deficient at l = " +
                               std::to_string(l + 1));
        }
    }
    return {};
}

} // namespace

Certificate security_rank_certificate(const scheme::AsymmConfig& c,
                                      const scheme::SchemeParams& params,
                                      const std::vector<int>& subset) {
    for (std::size_t m = 0; m < c.pattern.n_sets(); ++m) {
        if (Certificate cert = security_for_set(c, params, subset, m); !cert) return cert;
    }
    return {};
}

Certificate privacy_rank_certificate(const scheme::AsymmConfig& c,
                                     const scheme::SchemeParams& params,
                                     const std::vector<int>& subset) {
    for (std::size_t m = 0; m < c.pattern.n_sets(); ++m) {
        if (Certificate cert = privacy_for_set(c, params, subset, m); !cert) return cert;
    }
    return {};
}

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > kMaxEnumeration / base + 1) return kMaxEnumeration + 1;
        r *= base;
    }
    return r;
}

// Fills `blocks` ([m][k][l]) from the base-q digits of `index`.
void decode_blocks(std::uint64_t index, const ff::PrimeField& field, scheme::Blocks& blocks) {
    const std::uint64_t q = field.modulus();
    for (auto& per_m : blocks) {
        for (auto& row : per_m) {
            for (auto& e : row) {
                e = field.from_canonical(index % q);
                index /= q;
            }
        }
    }
}

void decode_noise(std::uint64_t index, const ff::PrimeField& field, scheme::NoiseBank& noise) {
    const std::uint64_t q = field.modulus();
    for (auto& per_m : noise) {
        for (auto& per_x : per_m) {
            for (auto& vec : per_x) {
                for (auto& e : vec) {
                    e = field.from_canonical(index % q);
                    index /= q;
                }
            }
        }
    }
}

std::size_t count_symbols(const scheme::Blocks& b) {
    std::size_t n = 0;
    for (const auto& per_m : b) {
        for (const auto& row : per_m) n += row.size();
    }
    return n;
}

std::size_t count_symbols(const scheme::NoiseBank& z) {
    std::size_t n = 0;
    for (const auto& per_m : z) {
        for (const auto& per_x : per_m) {
            for (const auto& vec : per_x) n += vec.size();
        }
    }
    return n;
}

} // namespace

AuditReport exhaustive_independence_audit(const scheme::AsymmConfig& c,
                                          const scheme::SchemeParams& params,
                                          const std::vector<int>& subset, Target target) {
    for (int n : subset) {
        if (n < 0 || n >= c.pattern.n_servers()) throw InvalidArgument("subset server out of range");
    }
    const ff::PrimeField& field = params.field;
    const std::uint64_t q = field.modulus();
    scheme::Blocks secret = scheme::zero_messages(c, params).w;
    scheme::NoiseBank noise =
        scheme::zero_noise(target == Target::Security ? c.x_vec : c.t_vec, c, params);
    const std::size_t secret_symbols = count_symbols(secret);
    const std::size_t noise_symbols = count_symbols(noise);
    const std::uint64_t secret_space = checked_power(q, secret_symbols);
    const std::uint64_t total = checked_power(q, secret_symbols + noise_symbols);
    if (total > kMaxEnumeration) {
        throw ScaleExceeded("exhaustive audit needs q^" +
                            std::to_string(secret_symbols + noise_symbols) + " > 10^7 realizations");
    }
    const std::uint64_t noise_space = total / secret_space;

    std::vector<int> observed = subset;
    std::sort(observed.begin(), observed.end());
    observed.erase(std::unique(observed.begin(), observed.end()), observed.end());

    // observation -> count under each secret value
    std::map<std::vector<std::uint64_t>, std::vector<std::uint32_t>> table;
    for (std::uint64_t s = 0; s < secret_space; ++s) {
        decode_blocks(s, field, secret);
        for (std::uint64_t z = 0; z < noise_space; ++z) {
            decode_noise(z, field, noise);
            const scheme::ServerBlocks blocks =
                target == Target::Security
                    ? scheme::encode_storage(c, params, scheme::MessageBank{secret}, noise).shares
                    : scheme::generate_queries(c, params, scheme::CoefficientBank{secret}, noise).queries;
            std::vector<std::uint64_t> key;
            for (int n : observed) {
                for (const auto& [m, block] : blocks[static_cast<std::size_t>(n)]) {
                    for (const Fq& e : block) key.push_back(e.value());
                }
            }
            auto [it, inserted] = table.try_emplace(std::move(key));
            if (inserted) it->second.assign(secret_space, 0);
            ++it->second[s];
        }
    }

    AuditReport report;
    report.mode = Mode::Exhaustive;
    report.checked_subsets = 1;
    std::size_t dependent = 0;
    for (const auto& [key, counts] : table) {
        if (std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) != counts.end()) {
            ++dependent;
        }
    }
    if (dependent > 0) {
        report.add({observed, -1,
                    std::to_string(dependent) + " of " + std::to_string(table.size()) +
                        " observations have secret-dependent frequencies (" +
                        (target == Target::Security ? "shares vs messages" : "queries vs coefficients") +
                        ")"});
    }
    report.notes.push_back("enumerated " + std::to_string(total) + " realizations");
    return report;
}

namespace {

// All non-empty subsets of [0, n) of size <= k, in lexicographic order of
// (size, members).
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    for (int size = 1; size <= std::min(k, n); ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            fn(idx);
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
}

template <typename Fn>
void for_each_sampled_subset(int n, int k, std::size_t samples, Fn&& fn) {
    CounterRng rng(derive_seed(static_cast<std::uint64_t>(n) * 131 + static_cast<std::uint64_t>(k),
                               "audit-sample"));
    for (std::size_t s = 0; s < samples; ++s) {
        const auto size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(k, n))));
        std::set<int> pick;
        while (static_cast<int>(pick.size()) < size) {
            pick.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        }
        fn(std::vector<int>(pick.begin(), pick.end()));
    }
}

std::vector<int> expand(const std::vector<std::vector<int>>& groups, const std::vector<int>& originals) {
    std::vector<int> out;
    for (int n : originals) {
        const auto& g = groups.at(static_cast<std::size_t>(n));
        out.insert(out.end(), g.begin(), g.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

AuditReport merged_audit(const scheme::AsymmConfig& c, const scheme::SchemeParams& params,
                         const std::vector<std::vector<int>>& groups, int x, int t) {
    AuditReport report;
    report.mode = Mode::RankCertificate;
    const int n = static_cast<int>(groups.size());
    auto subset_count = [n](int k) {
        std::uint64_t total = 0, binom = 1;
        for (int size = 1; size <= std::min(k, n); ++size) {
            binom = binom * static_cast<std::uint64_t>(n - size + 1) / static_cast<std::uint64_t>(size);
            total += binom;
        }
        return total;
    };

    auto check = [&](const std::vector<int>& originals, Target target) {
        ++report.checked_subsets;
        const std::vector<int> scheme_servers = expand(groups, originals);
        const Certificate cert = target == Target::Security
                                     ? security_rank_certificate(c, params, scheme_servers)
                                     : privacy_rank_certificate(c, params, scheme_servers);
        if (!cert) {
            report.add({originals, cert.failing_set ? static_cast<int>(*cert.failing_set) : -1,
                        std::string(target == Target::Security ? "security: " : "privacy: ") +
                            cert.detail});
        }
    };
    for (const Target target : {Target::Security, Target::Privacy}) {
        const int k = target == Target::Security ? x : t;
        if (k <= 0) {
            report.notes.push_back(std::string(target == Target::Security ? "security" : "privacy") +
                                   " audit skipped: threshold is 0");
            continue;
        }
        auto fn = [&](const std::vector<int>& originals) { check(originals, target); };
        if (n <= kExhaustiveSubsetLimit || subset_count(k) <= kSampledSubsets) {
            for_each_subset(n, k, fn);
        } else {
            report.sampled = true;
            for_each_sampled_subset(n, k, kSampledSubsets, fn);
        }
    }
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

AuditReport asymmetric_audit(const scheme::AsymmConfig& c, const scheme::SchemeParams& params) {
    AuditReport report;
    report.mode = Mode::RankCertificate;
    for (std::size_t m = 0; m < c.pattern.n_sets(); ++m) {
        const auto& servers = c.pattern.set(m).servers;
        const int rho = static_cast<int>(servers.size());
        for (const Target target : {Target::Security, Target::Privacy}) {
            const int k = target == Target::Security ? c.x_vec[m] : c.t_vec[m];
            if (k == 0) continue;
            for_each_subset(rho, k, [&](const std::vector<int>& idx) {
                ++report.checked_subsets;
                std::vector<int> subset;
                for (int i : idx) subset.push_back(servers[static_cast<std::size_t>(i)]);
                const Certificate cert = target == Target::Security
                                             ? security_for_set(c, params, subset, m)
                                             : privacy_for_set(c, params, subset, m);
                if (!cert) {
                    report.add({subset, static_cast<int>(m),
                                std::string(target == Target::Security ? "security: " : "privacy: ") +
                                    cert.detail});
                }
            });
        }
    }
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

std::vector<std::vector<int>> merge_groups(const augment::AugmentedSystem& a) {
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(a.n_original));
    for (std::size_t v = 0; v < a.merge_map.size(); ++v) {
        groups[static_cast<std::size_t>(a.merge_map[v])].push_back(static_cast<int>(v));
    }
    return groups;
}

AuditReport merged_scheme_audit(const augment::AugmentedSystem& a,
                                const scheme::SchemeParams& params, int x, int t) {
    const scheme::AsymmConfig c = scheme::from_augmented(a);
    AuditReport report = merged_audit(c, params, merge_groups(a), x, t);

    // Exposure bound, derived twice: by counting and from delta <= gamma.
    for (std::size_t m = 0; m < a.r_bar.size(); ++m) {
        for (int n = 0; n < a.n_original; ++n) {
            const std::int64_t d = a.delta[m][static_cast<std::size_t>(n)];
            if (d > a.gamma[m]) {
                report.add({{n}, static_cast<int>(m), "delta exceeds gamma"});
            }
            const auto counted = augment::collusion_exposure(a, {n})[m];
            if (counted != d) {
                report.add({{n}, static_cast<int>(m), "counted exposure differs from delta"});
            }
        }
    }
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

} // namespace gxstplc::audit
