#pragma once

#include "plabic/arith.hpp"

#include <vector>

namespace plabic {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    std::vector<Rational> x;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

// minimize c.x subject to A x = b, x >= 0.
// Dense two-phase tableau simplex over exact rationals; Bland's rule.
LpResult solve_standard_lp(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c);

// maximize c.x subject to A x <= b with x free.
LpResult maximize(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c);

// Is there x >= 0 with A x = b?
bool feasible(const RationalMatrix& A, const std::vector<Rational>& b);

} // namespace plabic
