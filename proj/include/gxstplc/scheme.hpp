#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gxstplc/augment.hpp"
#include "gxstplc/ff.hpp"
#include "gxstplc/pattern.hpp"

namespace gxstplc::scheme {

using ff::Fq;

// Storage pattern plus per-message-set security (X_m) and privacy (T_m)
// thresholds. Message counts K_m come from the pattern.
struct AsymmConfig {
    pattern::StoragePattern pattern;
    std::vector<int> x_vec;
    std::vector<int> t_vec;

    // min over m of (rho_m - X_m - T_m).
    int min_slack() const;
    // Throws InvalidArgument on length mismatch or negative thresholds.
    void validate() const;
};

AsymmConfig symmetric_config(const pattern::StoragePattern& p, int x, int t);
AsymmConfig from_augmented(const augment::AugmentedSystem& a);

struct SetupOptions {
    std::optional<std::uint64_t> field{};      // prime modulus override
    std::optional<int> message_length{};       // L, at most min_slack()
    std::optional<std::uint64_t> point_seed{};     // random distinct evaluation points
};

struct SchemeParams {
    ff::PrimeField field;
    int l_value = 0;
    std::vector<Fq> alpha;              // per server
    std::vector<Fq> f;                  // per symbol index
    std::vector<std::vector<Fq>> u;     // [m][l] = prod_{n in R_m} (f_l - alpha_n)
    std::vector<std::map<int, Fq>> v;   // [m][n] = prod_{n' in R_m \ n} (alpha_n - alpha_n')^-1

    Fq v_at(int server, std::size_t m) const { return v.at(m).at(server); }
};

// Canonical points alpha_n = n, f_l = N + l (1-based) over the smallest prime
// q >= N + L, unless overridden. Throws DegenerateConfig when min_slack() <= 0,
// FieldTooSmall when an override q < N + L.
SchemeParams setup(const AsymmConfig& c, const SetupOptions& opts = {});

// [m][k][l]: one K_m x L block per message set.
using Blocks = std::vector<std::vector<std::vector<Fq>>>;

struct MessageBank {
    Blocks w;
    // W_{m,(l)}: column of length K_m.
    std::vector<Fq> column(std::size_t m, std::size_t l) const;
};

struct CoefficientBank {
    Blocks lambda;
    std::vector<Fq> column(std::size_t m, std::size_t l) const;
};

// [m][x][l]: noise vector of length K_m.
using NoiseBank = std::vector<std::vector<std::vector<std::vector<Fq>>>>;

// Per server n: message set m -> stacked vector of length K_m * L
// (entry l * K_m + k).
using ServerBlocks = std::vector<std::map<int, std::vector<Fq>>>;

struct ShareBank {
    ServerBlocks shares;
    NoiseBank noise; // held by the encoder only
};

struct QueryBank {
    ServerBlocks queries;
    NoiseBank noise; // held by the user only
};

MessageBank random_messages(const AsymmConfig& c, const SchemeParams& params, std::uint64_t seed);
CoefficientBank random_coefficients(const AsymmConfig& c, const SchemeParams& params,
                                    std::uint64_t seed);
MessageBank zero_messages(const AsymmConfig& c, const SchemeParams& params);

// Uniform noise with X_m (storage) or T_m (query) vectors per (m, l).
NoiseBank draw_storage_noise(const AsymmConfig& c, const SchemeParams& params, std::uint64_t seed);
NoiseBank draw_query_noise(const AsymmConfig& c, const SchemeParams& params, std::uint64_t seed);
NoiseBank zero_noise(const std::vector<int>& per_set_width, const AsymmConfig& c,
                     const SchemeParams& params);

// Throws DimensionMismatch when banks do not match (K_m, L) or the thresholds.
ShareBank encode_storage(const AsymmConfig& c, const SchemeParams& params,
                         const MessageBank& messages, NoiseBank noise);
ShareBank encode_storage(const AsymmConfig& c, const SchemeParams& params,
                         const MessageBank& messages, std::uint64_t rng_seed);
QueryBank generate_queries(const AsymmConfig& c, const SchemeParams& params,
                           const CoefficientBank& coeffs, NoiseBank noise);
QueryBank generate_queries(const AsymmConfig& c, const SchemeParams& params,
                           const CoefficientBank& coeffs, std::uint64_t rng_seed);

// A_n = sum_{m in M_n} v_{n,m} <share_{n,m}, query_{n,m}>. Sees only server n's
// storage and query.
Fq server_answer(const SchemeParams& params, int server,
                 const std::map<int, std::vector<Fq>>& shares_at_n,
                 const std::map<int, std::vector<Fq>>& queries_at_n);

// Solves the Vandermonde system in the f_l from V_i = sum_n alpha_n^{i-1} A_n.
std::vector<Fq> reconstruct(const SchemeParams& params, std::span<const Fq> answers);

// Direct evaluation of [sum_m W_{m,(l)}^T lambda_{m,(l)}]_l.
std::vector<Fq> expected_combination(const SchemeParams& params, const MessageBank& messages,
                                     const CoefficientBank& coeffs);

struct Transcript {
    std::vector<Fq> answers;
    std::vector<Fq> decoded;
    std::vector<Fq> expected;
    std::vector<std::int64_t> downloads; // symbols per server
    std::vector<std::size_t> stored_symbols; // per server storage size

    bool match() const { return decoded == expected; }
};

// Complete run with messages, coefficients, and both noise banks drawn from
// independent streams derived from `seed`.
Transcript run(const AsymmConfig& c, const SchemeParams& params, std::uint64_t seed);
Transcript run_with(const AsymmConfig& c, const SchemeParams& params, const MessageBank& messages,
                    const CoefficientBank& coeffs, NoiseBank storage_noise, NoiseBank query_noise);

// v_i = prod_{j != i} (a_i - a_j)^-1. Throws DuplicateNodes.
std::vector<Fq> dual_grs_weights(std::span<const Fq> nodes);

// C == -D_v V_alpha^-1 V_f D_u^-1 entrywise, with v_i = prod_{k != i}(alpha_i - alpha_k)
// and u_j = prod_i (f_j - alpha_i). Requires |alpha| >= |f| and all points
// distinct (DuplicateNodes otherwise).
bool cauchy_vandermonde_check(std::span<const Fq> alpha, std::span<const Fq> f);

// sum_{n in R_m} v_{n,m} u_{m,l} alpha_n^{i-1} / (alpha_n - f_l) == -f_l^{i-1}.
// `i` and `l` are 1-based as in the indexing of V_i.
bool alignment_identity_check(const AsymmConfig& c, const SchemeParams& params, std::size_t m,
                              int i, int l);

} // namespace gxstplc::scheme
