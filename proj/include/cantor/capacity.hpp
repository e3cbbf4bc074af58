#pragma once

#include <vector>

#include "cantor/kernel.hpp"
#include "cantor/measure.hpp"
#include "cantor/prefix_free.hpp"

namespace cantor {

/// Capacity of the open set denoted by `set` under the k-shifted kernel: the
/// least total mass of a measure whose potential is at least 1 everywhere on
/// the set. Computed exactly by the branch recursion
///
///   cap(empty)  = 0
///   cap({root}) = 1 / tw(k)
///   cap(S)      = T / (1 + f(k) T),   T = sum over symbols i of the
///                 capacity of branch i under shift k+1.
///
/// Finite-support kernels are rejected: their deep sets have no measures of
/// finite mass reaching potential 1.
Rational capacity(const Kernel& kernel, const PrefixFreeSet& set, long shift = 0);

/// The measure attaining the capacity: total mass equals capacity(set), the
/// potential is exactly 1 on every cylinder of the set and at most 1
/// everywhere. Spreads mass uniformly below each word of the set.
TrieMeasure realizing_measure(const Kernel& kernel, const PrefixFreeSet& set, long shift = 0);

/// Capacity for the distance-based energy with 2^s = r on a binary alphabet,
/// by its own two-branch recursion
///
///   cap(empty)  = 0
///   cap({root}) = 1 - r/2
///   cap(S)      = (C0 + C1) / (r + C0 + C1).
///
/// Agrees with capacity under the geometric(r) kernel up to the tail-weight
/// normalization; requires 1 < r < 2.
Rational capacity_s(const PrefixFreeSet& set, const Rational& r);

/// Independent cross-check: computes the same capacity as the least mass in
/// the finite linear program over cylinder masses at the set's maximal depth
/// (solved exactly via the dual with a rational simplex). Shares no code
/// with the recursion above. The instance must be small: max word length at
/// most max_depth and at most 2^max_depth cylinders at that depth.
Rational capacity_lp_oracle(const Kernel& kernel, const PrefixFreeSet& set, int max_depth = 6);

/// One level of a nested capacity test: level n must have capacity at
/// most 2^-n.
struct CfTestLevel {
    std::size_t index;
    Rational capacity_value;
    Rational bound;
    bool pass;
};

struct CfTestReport {
    std::vector<CfTestLevel> levels;
    bool pass;
};

/// Checks the capacity bound capacity(level n) <= 2^-n for each level.
CfTestReport cf_test_check(const Kernel& kernel, const std::vector<PrefixFreeSet>& levels);

}  // namespace cantor
