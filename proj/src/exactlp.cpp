#include "gxstplc/exactlp.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <regex>
#include <stdexcept>

namespace gxstplc::exactlp {

std::string to_string(const ExactRational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

ExactRational parse_rational(const std::string& text) {
    static const std::regex kForm(R"((-?[0-9]+)(?:/([0-9]+))?)");
    std::smatch match;
    if (!std::regex_match(text, match, kForm)) {
        throw InvalidArgument("malformed rational \"" + text + "\"");
    }
    const BigInt num(match[1].str());
    const BigInt den = match[2].matched ? BigInt(match[2].str()) : BigInt(1);
    if (den == 0) throw InvalidArgument("zero denominator in \"" + text + "\"");
    return ExactRational(num, den);
}

void LinearProgram::validate() const {
    if (objective.size() != num_vars) {
        throw InvalidArgument("objective length does not match num_vars");
    }
    for (const auto& row : rows) {
        if (row.size() != num_vars) throw InvalidArgument("constraint row has wrong length");
        bool any = false;
        for (auto v : row) {
            if (v > 1) throw InvalidArgument("constraint row entries must be 0 or 1");
            any = any || v == 1;
        }
        if (!any) throw InvalidArgument("constraint row has no nonzero entry");
    }
}

namespace {

// Dense simplex tableau. Rows [0, m) are constraints, row m holds the reduced
// costs with the negated objective value in the last column.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t cols)
        : m_(m), cols_(cols), cells_((m + 1) * (cols + 1)), basis_(m) {}

    ExactRational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
    const ExactRational& at(std::size_t r, std::size_t c) const {
        return cells_[r * (cols_ + 1) + c];
    }
    ExactRational& rhs(std::size_t r) { return at(r, cols_); }
    ExactRational& cost(std::size_t c) { return at(m_, c); }

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t r, std::size_t c) {
        const ExactRational p = at(r, c);
        for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r) continue;
            const ExactRational factor = at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (at(r, j) != 0) at(i, j) -= factor * at(r, j);
            }
        }
        basis_[r] = c;
    }

    void drop_row(std::size_t r) {
        const std::size_t w = cols_ + 1;
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * w),
                     cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * w));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --m_;
    }

    // Keeps the first `keep` columns plus the right-hand side.
    void truncate_columns(std::size_t keep) {
        std::vector<ExactRational> next((m_ + 1) * (keep + 1));
        for (std::size_t i = 0; i <= m_; ++i) {
            for (std::size_t j = 0; j < keep; ++j) next[i * (keep + 1) + j] = at(i, j);
            next[i * (keep + 1) + keep] = at(i, cols_);
        }
        cells_ = std::move(next);
        cols_ = keep;
    }

private:
    std::size_t m_;
    std::size_t cols_;
    std::vector<ExactRational> cells_;
    std::vector<std::size_t> basis_;
};

// Primal simplex with Bland's rule over columns [0, allowed). Returns false
// when the objective is unbounded below.
bool primal_bland(Tableau& t, std::size_t allowed) {
    for (;;) {
        std::optional<std::size_t> enter;
        for (std::size_t j = 0; j < allowed; ++j) {
            if (t.cost(j) < 0) {
                enter = j;
                break;
            }
        }
        if (!enter) return true;
        std::optional<std::size_t> leave;
        ExactRational best;
        for (std::size_t i = 0; i < t.rows(); ++i) {
            const ExactRational& a = t.at(i, *enter);
            if (a <= 0) continue;
            ExactRational ratio = t.rhs(i) / a;
            if (!leave || ratio < best ||
                (ratio == best && t.basis()[i] < t.basis()[*leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (!leave) return false;
        t.pivot(*leave, *enter);
    }
}

LpSolution extract(Tableau& t, const LinearProgram& lp) {
    LpSolution sol;
    sol.vertex.assign(lp.num_vars, ExactRational(0));
    for (std::size_t i = 0; i < t.rows(); ++i) {
        if (t.basis()[i] < lp.num_vars) sol.vertex[t.basis()[i]] = t.rhs(i);
    }
    sol.basis = t.basis();
    std::sort(sol.basis.begin(), sol.basis.end());
    for (std::size_t j = 0; j < lp.num_vars; ++j) sol.optimum += lp.objective[j] * sol.vertex[j];

    for (const auto& x : sol.vertex) {
        if (x < 0) throw std::logic_error("simplex produced a negative coordinate");
    }
    for (const auto& row : lp.rows) {
        ExactRational s;
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
            if (row[j]) s += sol.vertex[j];
        }
        if (s < 1) throw std::logic_error("simplex vertex violates a constraint");
    }
    return sol;
}

// Surplus basis of  -A x + s = -1  is dual feasible when c >= 0, so the
// dual simplex runs without a phase 1.
LpSolution dual_from_slack(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.rows.size();
    Tableau t(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (lp.rows[i][j]) t.at(i, j) = -1;
        }
        t.at(i, n + i) = 1;
        t.rhs(i) = -1;
        t.basis()[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t.cost(j) = lp.objective[j];

    for (;;) {
        std::optional<std::size_t> leave;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.rhs(i) < 0 && (!leave || t.basis()[i] < t.basis()[*leave])) leave = i;
        }
        if (!leave) break;
        std::optional<std::size_t> enter;
        ExactRational best;
        for (std::size_t j = 0; j < n + m; ++j) {
            const ExactRational& a = t.at(*leave, j);
            if (a >= 0) continue;
            ExactRational ratio = t.cost(j) / -a;
            if (!enter || ratio < best) {
                enter = j;
                best = ratio;
            }
        }
        if (!enter) throw Infeasible("constraint row cannot be satisfied");
        t.pivot(*leave, *enter);
    }
    return extract(t, lp);
}

LpSolution two_phase(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.rows.size();
    const std::size_t real_cols = n + m;
    Tableau t(m, real_cols + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (lp.rows[i][j]) t.at(i, j) = 1;
        }
        t.at(i, n + i) = -1;
        t.at(i, real_cols + i) = 1;
        t.rhs(i) = 1;
        t.basis()[i] = real_cols + i;
    }
    // Phase 1: minimize the sum of artificials.
    for (std::size_t j = 0; j < real_cols; ++j) {
        ExactRational s;
        for (std::size_t i = 0; i < m; ++i) s += t.at(i, j);
        t.cost(j) = -s;
    }
    t.rhs(m) = -static_cast<long>(m);
    primal_bland(t, real_cols + m);
    if (t.rhs(m) != 0) throw Infeasible("phase 1 optimum is positive");

    // Pivot zero-level artificials out of the basis; rows where that is
    // impossible are redundant.
    for (std::size_t i = 0; i < t.rows();) {
        if (t.basis()[i] < real_cols) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < real_cols; ++j) {
            if (t.at(i, j) != 0) {
                col = j;
                break;
            }
        }
        if (col) {
            t.pivot(i, *col);
            ++i;
        } else {
            t.drop_row(i);
        }
    }
    t.truncate_columns(real_cols);

    for (std::size_t j = 0; j <= real_cols; ++j) t.cost(j) = 0;
    for (std::size_t j = 0; j < n; ++j) t.cost(j) = lp.objective[j];
    for (std::size_t i = 0; i < t.rows(); ++i) {
        const std::size_t b = t.basis()[i];
        const ExactRational cb = t.cost(b);
        if (cb == 0) continue;
        for (std::size_t j = 0; j <= real_cols; ++j) t.cost(j) -= cb * t.at(i, j);
    }
    if (!primal_bland(t, real_cols)) throw Unbounded("objective decreases without bound");
    return extract(t, lp);
}

} // namespace

LpSolution simplex_min(const LinearProgram& lp, SimplexRoute route) {
    lp.validate();
    const bool nonnegative_costs =
        std::all_of(lp.objective.begin(), lp.objective.end(),
                    [](const ExactRational& c) { return c >= 0; });
    if (route == SimplexRoute::Automatic) {
        route = nonnegative_costs ? SimplexRoute::DualFromSlack : SimplexRoute::TwoPhase;
    }
    if (route == SimplexRoute::DualFromSlack) {
        if (!nonnegative_costs) {
            throw InvalidArgument("dual simplex start requires a nonnegative objective");
        }
        return dual_from_slack(lp);
    }
    return two_phase(lp);
}

BigInt lcm_of_denominators(const RationalVector& v) {
    BigInt l = 1;
    for (const auto& x : v) {
        const BigInt d = boost::multiprecision::denominator(x);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    return l;
}

} // namespace gxstplc::exactlp
