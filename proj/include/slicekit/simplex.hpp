#pragma once

#include <vector>

#include "slicekit/rational.hpp"

namespace slicekit {

/// Standard-form LP over exact rationals:
///   minimize objective . x  subject to  row_i . x (=|>=) rhs_i,  x >= 0.
struct LPProblem {
    enum class Sense { eq, ge };
    std::vector<std::vector<Rational>> rows;
    std::vector<Sense> sense;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;
};

struct LPSolution {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::optimal;
    Rational value;
    std::vector<Rational> x;     // original variables only
    std::vector<int> basis;      // basic column indices of the final tableau
};

/// Two-phase primal simplex with Bland's rule; every pivot is exact, so the
/// result carries no tolerance. Optimal solutions are re-verified against
/// all constraints and for non-negative reduced costs before returning.
LPSolution solve_min(const LPProblem& problem);

} // namespace slicekit
