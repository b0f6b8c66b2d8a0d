#include "gxstplc/scheme.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "gxstplc/rng.hpp"

namespace gxstplc::scheme {

int AsymmConfig::min_slack() const {
    int slack = std::numeric_limits<int>::max();
    for (std::size_t m = 0; m < pattern.n_sets(); ++m) {
        slack = std::min(slack, pattern.replication(m) - x_vec.at(m) - t_vec.at(m));
    }
    return slack;
}

void AsymmConfig::validate() const {
    if (x_vec.size() != pattern.n_sets() || t_vec.size() != pattern.n_sets()) {
        throw InvalidArgument("threshold vectors must have one entry per message set");
    }
    for (std::size_t m = 0; m < pattern.n_sets(); ++m) {
        if (x_vec[m] < 0 || t_vec[m] < 0) throw InvalidArgument("thresholds must be >= 0");
    }
}

AsymmConfig symmetric_config(const pattern::StoragePattern& p, int x, int t) {
    return AsymmConfig{p, std::vector<int>(p.n_sets(), x), std::vector<int>(p.n_sets(), t)};
}

AsymmConfig from_augmented(const augment::AugmentedSystem& a) {
    AsymmConfig c{a.virtual_pattern(), {}, {}};
    for (std::size_t m = 0; m < a.r_bar.size(); ++m) {
        c.x_vec.push_back(static_cast<int>(a.x_bar[m]));
        c.t_vec.push_back(static_cast<int>(a.t_bar[m]));
    }
    return c;
}

SchemeParams setup(const AsymmConfig& c, const SetupOptions& opts) {
    c.validate();
    const int slack = c.min_slack();
    if (slack <= 0) {
        throw DegenerateConfig("min_m (rho_m - X_m - T_m) = " + std::to_string(slack) +
                               " leaves no room for a desired symbol");
    }
    const int l_value = opts.message_length.value_or(slack);
    if (l_value < 1 || l_value > slack) {
        throw InvalidArgument("message length must lie in [1, " + std::to_string(slack) + "]");
    }
    const int n = c.pattern.n_servers();
    const auto needed = static_cast<std::uint64_t>(n + l_value);
    std::uint64_t q = 0;
    if (opts.field) {
        q = *opts.field;
        if (q < needed) {
            throw FieldTooSmall("F_" + std::to_string(q) + " cannot hold " +
                                std::to_string(needed) + " distinct evaluation points");
        }
    } else {
        q = ff::smallest_prime_at_least(std::max<std::uint64_t>(needed, 2));
    }

    SchemeParams params{ff::PrimeField(q), l_value, {}, {}, {}, {}};
    const ff::PrimeField& field = params.field;
    if (opts.point_seed) {
        CounterRng rng(*opts.point_seed);
        std::set<std::uint64_t> used;
        std::vector<Fq> points;
        while (points.size() < needed) {
            const std::uint64_t v = rng.below(q);
            if (used.insert(v).second) points.push_back(field.from_canonical(v));
        }
        params.alpha.assign(points.begin(), points.begin() + n);
        params.f.assign(points.begin() + n, points.end());
    } else {
        for (int i = 1; i <= n; ++i) params.alpha.push_back(field.element(i));
        for (int l = 1; l <= l_value; ++l) params.f.push_back(field.element(n + l));
    }

    for (std::size_t m = 0; m < c.pattern.n_sets(); ++m) {
        const auto& servers = c.pattern.set(m).servers;
        std::vector<Fq> u_row;
        for (const Fq& fl : params.f) {
            Fq prod = field.one();
            for (int s : servers) prod *= fl - params.alpha[static_cast<std::size_t>(s)];
            u_row.push_back(prod);
        }
        params.u.push_back(std::move(u_row));

        std::map<int, Fq> v_row;
        for (int s : servers) {
            Fq prod = field.one();
            for (int other : servers) {
                if (other != s) {
                    prod *= params.alpha[static_cast<std::size_t>(s)] -
                            params.alpha[static_cast<std::size_t>(other)];
                }
            }
            v_row.emplace(s, prod.inv());
        }
        params.v.push_back(std::move(v_row));
    }
    return params;
}

std::vector<Fq> MessageBank::column(std::size_t m, std::size_t l) const {
    std::vector<Fq> col;
    for (const auto& row : w.at(m)) col.push_back(row.at(l));
    return col;
}

std::vector<Fq> CoefficientBank::column(std::size_t m, std::size_t l) const {
    std::vector<Fq> col;
    for (const auto& row : lambda.at(m)) col.push_back(row.at(l));
    return col;
}

namespace {

Blocks random_blocks(const AsymmConfig& c, const SchemeParams& params, CounterRng& rng) {
    Blocks b;
    for (const auto& set : c.pattern.message_sets()) {
        std::vector<std::vector<Fq>> rows;
        for (int k = 0; k < set.count; ++k) {
            std::vector<Fq> row;
            for (int l = 0; l < params.l_value; ++l) {
                row.push_back(params.field.from_canonical(rng.below(params.field.modulus())));
            }
            rows.push_back(std::move(row));
        }
        b.push_back(std::move(rows));
    }
    return b;
}

NoiseBank random_noise(const std::vector<int>& width, const AsymmConfig& c,
                       const SchemeParams& params, std::uint64_t seed) {
    CounterRng rng(seed);
    NoiseBank bank;
    for (std::size_t m = 0; m < c.pattern.n_sets(); ++m) {
        const int k_m = c.pattern.set(m).count;
        std::vector<std::vector<std::vector<Fq>>> per_m;
        for (int x = 0; x < width[m]; ++x) {
            std::vector<std::vector<Fq>> per_x;
            for (int l = 0; l < params.l_value; ++l) {
                std::vector<Fq> vec;
                for (int k = 0; k < k_m; ++k) {
                    vec.push_back(params.field.from_canonical(rng.below(params.field.modulus())));
                }
                per_x.push_back(std::move(vec));
            }
            per_m.push_back(std::move(per_x));
        }
        bank.push_back(std::move(per_m));
    }
    return bank;
}

void check_blocks(const AsymmConfig& c, const SchemeParams& params, const Blocks& b,
                  const char* what) {
    bool ok = b.size() == c.pattern.n_sets();
    for (std::size_t m = 0; ok && m < b.size(); ++m) {
        ok = b[m].size() == static_cast<std::size_t>(c.pattern.set(m).count);
        for (const auto& row : b[m]) ok = ok && row.size() == static_cast<std::size_t>(params.l_value);
    }
    if (!ok) throw DimensionMismatch(std::string(what) + " bank is not K_m x L per message set");
}

void check_noise(const AsymmConfig& c, const SchemeParams& params, const NoiseBank& z,
                 const std::vector<int>& width, const char* what) {
    bool ok = z.size() == c.pattern.n_sets();
    for (std::size_t m = 0; ok && m < z.size(); ++m) {
        ok = z[m].size() == static_cast<std::size_t>(width[m]);
        for (const auto& per_x : z[m]) {
            ok = ok && per_x.size() == static_cast<std::size_t>(params.l_value);
            for (const auto& vec : per_x) {
                ok = ok && vec.size() == static_cast<std::size_t>(c.pattern.set(m).count);
            }
        }
    }
    if (!ok) throw DimensionMismatch(std::string(what) + " noise does not match thresholds");
}

} // namespace

MessageBank random_messages(const AsymmConfig& c, const SchemeParams& params, std::uint64_t seed) {
    CounterRng rng(seed);
    return MessageBank{random_blocks(c, params, rng)};
}

CoefficientBank random_coefficients(const AsymmConfig& c, const SchemeParams& params,
                                    std::uint64_t seed) {
    CounterRng rng(seed);
    return CoefficientBank{random_blocks(c, params, rng)};
}

MessageBank zero_messages(const AsymmConfig& c, const SchemeParams& params) {
    Blocks b;
    for (const auto& set : c.pattern.message_sets()) {
        b.emplace_back(static_cast<std::size_t>(set.count),
                       std::vector<Fq>(static_cast<std::size_t>(params.l_value), params.field.zero()));
    }
    return MessageBank{std::move(b)};
}

NoiseBank draw_storage_noise(const AsymmConfig& c, const SchemeParams& params, std::uint64_t seed) {
    return random_noise(c.x_vec, c, params, seed);
}

NoiseBank draw_query_noise(const AsymmConfig& c, const SchemeParams& params, std::uint64_t seed) {
    return random_noise(c.t_vec, c, params, seed);
}

NoiseBank zero_noise(const std::vector<int>& width, const AsymmConfig& c,
                     const SchemeParams& params) {
    NoiseBank bank;
    for (std::size_t m = 0; m < c.pattern.n_sets(); ++m) {
        const std::vector<Fq> zeros(static_cast<std::size_t>(c.pattern.set(m).count), params.field.zero());
        bank.emplace_back(static_cast<std::size_t>(width.at(m)),
                          std::vector<std::vector<Fq>>(static_cast<std::size_t>(params.l_value), zeros));
    }
    return bank;
}

ShareBank encode_storage(const AsymmConfig& c, const SchemeParams& params,
                         const MessageBank& messages, NoiseBank noise) {
    check_blocks(c, params, messages.w, "message");
    check_noise(c, params, noise, c.x_vec, "storage");
    ShareBank bank;
    bank.shares.resize(static_cast<std::size_t>(c.pattern.n_servers()));
    for (std::size_t m = 0; m < c.pattern.n_sets(); ++m) {
        const auto k_m = static_cast<std::size_t>(c.pattern.set(m).count);
        for (int n : c.pattern.set(m).servers) {
            const Fq a = params.alpha[static_cast<std::size_t>(n)];
            std::vector<Fq> block(k_m * static_cast<std::size_t>(params.l_value));
            for (std::size_t l = 0; l < params.f.size(); ++l) {
                const Fq scale = (a - params.f[l]).inv();
                for (std::size_t k = 0; k < k_m; ++k) {
                    Fq s = scale * messages.w[m][k][l];
                    Fq power = params.field.one();
                    for (const auto& z : noise[m]) {
                        s += power * z[l][k];
                        power *= a;
                    }
                    block[l * k_m + k] = s;
                }
            }
            bank.shares[static_cast<std::size_t>(n)].emplace(static_cast<int>(m), std::move(block));
        }
    }
    bank.noise = std::move(noise);
    return bank;
}

ShareBank encode_storage(const AsymmConfig& c, const SchemeParams& params,
                         const MessageBank& messages, std::uint64_t rng_seed) {
    return encode_storage(c, params, messages, draw_storage_noise(c, params, rng_seed));
}

QueryBank generate_queries(const AsymmConfig& c, const SchemeParams& params,
                           const CoefficientBank& coeffs, NoiseBank noise) {
    check_blocks(c, params, coeffs.lambda, "coefficient");
    check_noise(c, params, noise, c.t_vec, "query");
    QueryBank bank;
    bank.queries.resize(static_cast<std::size_t>(c.pattern.n_servers()));
    for (std::size_t m = 0; m < c.pattern.n_sets(); ++m) {
        const auto k_m = static_cast<std::size_t>(c.pattern.set(m).count);
        for (int n : c.pattern.set(m).servers) {
            const Fq a = params.alpha[static_cast<std::size_t>(n)];
            std::vector<Fq> block(k_m * static_cast<std::size_t>(params.l_value));
            for (std::size_t l = 0; l < params.f.size(); ++l) {
                const Fq shift = a - params.f[l];
                for (std::size_t k = 0; k < k_m; ++k) {
                    Fq masked = params.field.zero();
                    Fq power = params.field.one();
                    for (const auto& z : noise[m]) {
                        masked += power * z[l][k];
                        power *= a;
                    }
                    block[l * k_m + k] = params.u[m][l] * coeffs.lambda[m][k][l] + shift * masked;
                }
            }
            bank.queries[static_cast<std::size_t>(n)].emplace(static_cast<int>(m), std::move(block));
        }
    }
    bank.noise = std::move(noise);
    return bank;
}

QueryBank generate_queries(const AsymmConfig& c, const SchemeParams& params,
                           const CoefficientBank& coeffs, std::uint64_t rng_seed) {
    return generate_queries(c, params, coeffs, draw_query_noise(c, params, rng_seed));
}

Fq server_answer(const SchemeParams& params, int server,
                 const std::map<int, std::vector<Fq>>& shares_at_n,
                 const std::map<int, std::vector<Fq>>& queries_at_n) {
    if (shares_at_n.size() != queries_at_n.size()) {
        throw DimensionMismatch("share and query sets differ at server " + std::to_string(server + 1));
    }
    Fq answer = params.field.zero();
    for (const auto& [m, share] : shares_at_n) {
        const auto it = queries_at_n.find(m);
        if (it == queries_at_n.end() || it->second.size() != share.size()) {
            throw DimensionMismatch("share and query blocks misaligned at server " +
                                    std::to_string(server + 1));
        }
        Fq dot = params.field.zero();
        for (std::size_t j = 0; j < share.size(); ++j) dot += share[j] * it->second[j];
        answer += params.v_at(server, static_cast<std::size_t>(m)) * dot;
    }
    return answer;
}

std::vector<Fq> reconstruct(const SchemeParams& params, std::span<const Fq> answers) {
    if (answers.size() != params.alpha.size()) {
        throw DimensionMismatch("expected one answer per server");
    }
    std::vector<Fq> minus_v;
    for (int i = 0; i < params.l_value; ++i) {
        Fq vi = params.field.zero();
        for (std::size_t n = 0; n < answers.size(); ++n) {
            vi += params.alpha[n].pow(static_cast<std::uint64_t>(i)) * answers[n];
        }
        minus_v.push_back(-vi);
    }
    return ff::mat_solve(ff::vandermonde(params.f, params.f.size()), minus_v);
}

std::vector<Fq> expected_combination(const SchemeParams& params, const MessageBank& messages,
                                     const CoefficientBank& coeffs) {
    std::vector<Fq> out(static_cast<std::size_t>(params.l_value), params.field.zero());
    for (std::size_t m = 0; m < messages.w.size(); ++m) {
        for (std::size_t k = 0; k < messages.w[m].size(); ++k) {
            for (std::size_t l = 0; l < out.size(); ++l) {
                out[l] += coeffs.lambda.at(m).at(k).at(l) * messages.w[m][k][l];
            }
        }
    }
    return out;
}

Transcript run_with(const AsymmConfig& c, const SchemeParams& params, const MessageBank& messages,
                    const CoefficientBank& coeffs, NoiseBank storage_noise, NoiseBank query_noise) {
    const ShareBank shares = encode_storage(c, params, messages, std::move(storage_noise));
    const QueryBank queries = generate_queries(c, params, coeffs, std::move(query_noise));
    Transcript tr;
    for (int n = 0; n < c.pattern.n_servers(); ++n) {
        const auto idx = static_cast<std::size_t>(n);
        tr.answers.push_back(server_answer(params, n, shares.shares[idx], queries.queries[idx]));
        tr.downloads.push_back(1);
        std::size_t stored = 0;
        for (const auto& [m, block] : shares.shares[idx]) stored += block.size();
        tr.stored_symbols.push_back(stored);
    }
    tr.decoded = reconstruct(params, tr.answers);
    tr.expected = expected_combination(params, messages, coeffs);
    return tr;
}

Transcript run(const AsymmConfig& c, const SchemeParams& params, std::uint64_t seed) {
    const MessageBank messages = random_messages(c, params, derive_seed(seed, "messages"));
    const CoefficientBank coeffs = random_coefficients(c, params, derive_seed(seed, "coefficients"));
    return run_with(c, params, messages, coeffs,
                    draw_storage_noise(c, params, derive_seed(seed, "storage-noise")),
                    draw_query_noise(c, params, derive_seed(seed, "query-noise")));
}

std::vector<Fq> dual_grs_weights(std::span<const Fq> nodes) {
    if (nodes.empty()) throw InvalidArgument("dual_grs_weights needs at least one node");
    ff::require_distinct(nodes);
    const Fq one = ff::PrimeField(nodes.front().modulus()).one();
    std::vector<Fq> v;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Fq prod = one;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j != i) prod *= nodes[i] - nodes[j];
        }
        v.push_back(prod.inv());
    }
    return v;
}

bool cauchy_vandermonde_check(std::span<const Fq> alpha, std::span<const Fq> f) {
    if (alpha.empty() || f.empty()) throw InvalidArgument("need at least one alpha and one f");
    if (alpha.size() < f.size()) throw InvalidArgument("need at least as many alphas as f's");
    std::vector<Fq> all(alpha.begin(), alpha.end());
    all.insert(all.end(), f.begin(), f.end());
    ff::require_distinct(all);

    const ff::PrimeField field(alpha.front().modulus());
    const std::size_t n = alpha.size();
    const std::size_t l = f.size();
    ff::FieldMatrix cauchy(field, n, l);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < l; ++j) cauchy.at(i, j) = (alpha[i] - f[j]).inv();
    }
    std::vector<Fq> dv;
    for (std::size_t i = 0; i < n; ++i) {
        Fq prod = field.one();
        for (std::size_t k = 0; k < n; ++k) {
            if (k != i) prod *= alpha[i] - alpha[k];
        }
        dv.push_back(prod);
    }
    std::vector<Fq> du_inv;
    for (std::size_t j = 0; j < l; ++j) {
        Fq prod = field.one();
        for (std::size_t i = 0; i < n; ++i) prod *= f[j] - alpha[i];
        du_inv.push_back(prod.inv());
    }
    const ff::FieldMatrix rhs = -(ff::FieldMatrix::diagonal(field, dv) *
                                  ff::mat_inverse(ff::vandermonde(alpha, n)) *
                                  ff::vandermonde(f, n) * ff::FieldMatrix::diagonal(field, du_inv));
    return rhs == cauchy;
}

bool alignment_identity_check(const AsymmConfig& c, const SchemeParams& params, std::size_t m,
                              int i, int l) {
    if (i < 1 || i > params.l_value || l < 1 || l > params.l_value) {
        throw InvalidArgument("alignment indices must lie in [1, L]");
    }
    const Fq fl = params.f[static_cast<std::size_t>(l - 1)];
    const Fq ul = params.u.at(m)[static_cast<std::size_t>(l - 1)];
    Fq sum = params.field.zero();
    for (int n : c.pattern.set(m).servers) {
        const Fq a = params.alpha[static_cast<std::size_t>(n)];
        sum += params.v_at(n, m) * ul * a.pow(static_cast<std::uint64_t>(i - 1)) / (a - fl);
    }
    return sum == -fl.pow(static_cast<std::uint64_t>(i - 1));
}

} // namespace gxstplc::scheme
