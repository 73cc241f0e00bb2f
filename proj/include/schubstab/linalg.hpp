#pragma once

// Small dense exact linear algebra over the rationals.

#include "schubstab/rational.hpp"

#include <optional>
#include <vector>

namespace schubstab {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Unique solution of A x = b for square A, or nullopt when A is singular.
std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b);

/// Row rank by Gaussian elimination.
int rank(RationalMatrix a);

}  // namespace schubstab
