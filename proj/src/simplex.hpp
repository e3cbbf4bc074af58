#pragma once

#include <vector>

#include "cantor/rational.hpp"

namespace cantor::detail {

/// Maximizes c . y subject to M y <= rhs and y >= 0, over exact rationals,
/// where every rhs entry is nonnegative (so the slack basis is feasible and
/// no phase-1 is needed). Dense tableau simplex with Bland's rule, hence
/// finite termination. Throws DomainError if the program is unbounded.
Rational simplex_max(const std::vector<std::vector<Rational>>& M, const std::vector<Rational>& rhs,
                     const std::vector<Rational>& c);

}  // namespace cantor::detail
