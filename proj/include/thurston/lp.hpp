#pragma once

#include <optional>
#include <vector>

#include "thurston/rational.hpp"

namespace thurston::lp {

/// Finds x >= 0 with A x >= b (A is m x n, row-major rows) by a phase-one
/// simplex over exact rationals with Bland's anti-cycling rule. Returns
/// nothing when the system is infeasible.
std::optional<std::vector<Rational>> find_nonnegative_solution(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace thurston::lp
