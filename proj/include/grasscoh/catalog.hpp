#pragma once

#include <vector>

#include "grasscoh/bott.hpp"

namespace grasscoh {

/// Every irreducible (a | b) with all five entries in [-bound, bound], after
/// normalization and without duplicates.
std::vector<IrreducibleWeight> catalog_irreducibles(int bound = 3);

/// Every sum of 1..max_terms line bundles with twists in `twists`.
std::vector<BundleExpr> catalog_line_sums(int max_terms = 3, TwistWindow twists = {-4, 4});

/// Irreducibles followed by line-bundle sums.
std::vector<BundleExpr> full_catalog();

}  // namespace grasscoh
