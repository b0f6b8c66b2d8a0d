#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gxstplc/error.hpp"

namespace gxstplc::exactlp {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.
using ExactRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalVector = std::vector<ExactRational>;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const ExactRational& r);
// Parses "p/q" or "p". Throws InvalidArgument on malformed input.
ExactRational parse_rational(const std::string& text);

// minimize objective . x  subject to  row . x >= 1 for every row, x >= 0.
// Rows are 0/1 incidence vectors over the variables.
struct LinearProgram {
    std::size_t num_vars = 0;
    RationalVector objective;
    std::vector<std::vector<std::uint8_t>> rows;

    // Throws InvalidArgument when a row has the wrong length, holds a value
    // other than 0/1, or is all zeros.
    void validate() const;
};

struct LpSolution {
    ExactRational optimum;
    RationalVector vertex;
    // Basic variables of the final tableau. Indices < num_vars are decision
    // variables; index num_vars + i is the surplus of row i.
    std::vector<std::size_t> basis;
};

enum class SimplexRoute {
    Automatic,   // dual simplex from the surplus basis when the objective is >= 0
    DualFromSlack,
    TwoPhase,
};

// Exact optimal basic feasible solution, Bland's rule throughout so the
// result is deterministic. Throws Infeasible or Unbounded.
LpSolution simplex_min(const LinearProgram& lp, SimplexRoute route = SimplexRoute::Automatic);

BigInt lcm_of_denominators(const RationalVector& v);

} // namespace gxstplc::exactlp
