#pragma once

#include "vuf/field.hpp"
#include "vuf/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace vuf {

inline constexpr std::int64_t kDefaultPointBudget = 100'000'000;

/// Number of points of F_q^n where all generators vanish. Throws
/// BudgetExceeded when q^n exceeds the budget.
std::int64_t affine_point_count(const std::vector<Polynomial>& generators, const FieldPtr& field,
                                std::int64_t budget = kDefaultPointBudget);

/// Points of the multi-projective variety: each block of variable indices is
/// one projective factor, enumerated through normalized representatives
/// (first nonzero coordinate equal to 1). The blocks must partition the
/// variables and the generators must be homogeneous in each block.
std::int64_t projective_point_count(const std::vector<Polynomial>& generators,
                                    const std::vector<std::vector<int>>& blocks, const FieldPtr& field,
                                    std::int64_t budget = kDefaultPointBudget);

}  // namespace vuf
