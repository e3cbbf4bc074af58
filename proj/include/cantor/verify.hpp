#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cantor/capacity.hpp"
#include "cantor/enumeration.hpp"
#include "cantor/kernel.hpp"
#include "cantor/measure.hpp"
#include "cantor/prefix_free.hpp"

namespace cantor::verify {

/// One property check: a stable name, a verdict, and a one-line account of
/// what was swept (or the first counterexample).
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// ---------------------------------------------------------------------------
// Deterministic generators. All suites seed their own engines, so runs are
// reproducible bit for bit.
// ---------------------------------------------------------------------------

/// Uniformly random p/q with 1 <= p <= max_num, 1 <= q <= max_den.
Rational random_positive_rational(std::mt19937_64& rng, long max_num = 8, long max_den = 8);

/// Random antichain of words of length <= max_depth (possibly empty).
PrefixFreeSet random_prefix_free_set(std::mt19937_64& rng, Alphabet ab, int max_depth);

/// Same, re-rolled until nonempty.
PrefixFreeSet random_nonempty_prefix_free_set(std::mt19937_64& rng, Alphabet ab, int max_depth);

/// Random trie measure of explicit depth <= max_depth with positive total
/// mass; point tails only when allow_atoms.
TrieMeasure random_measure(std::mt19937_64& rng, Alphabet ab, int max_depth, bool allow_atoms);

// ---------------------------------------------------------------------------
// Independent reference routes. These recompute distance-based quantities
// from the common-prefix-length distribution (depth profiles of cylinder
// masses) and share no code with the kernel-based implementations they
// cross-check.
// ---------------------------------------------------------------------------

/// Distance-based energy of a binary-alphabet measure from its depth profile
/// of squared cylinder masses. Exact; +inf when the measure has atoms.
ExtValue riesz_energy_reference(const TrieMeasure& mu, const Rational& r);

/// Distance-based potential at x from the cylinder masses along x's path.
/// Requires an atomless measure.
ExtValue riesz_potential_reference(const TrieMeasure& mu, const EventuallyPeriodicSequence& x,
                                   const Rational& r);

struct MonteCarloRieszReport {
    std::size_t samples = 0;
    double estimate = 0;
    double exact = 0;
    double stderr_value = 0;
    double deviation = 0;  // |estimate - exact| in stderr units
    bool pass = false;     // within 4 stderr
};

/// Estimates the distance-based energy by sampling independent pairs of
/// paths from the normalized measure and averaging r^(common prefix length),
/// then compares against the exact value. Requires an atomless binary
/// measure with positive mass.
MonteCarloRieszReport monte_carlo_riesz(const TrieMeasure& mu, const Rational& r,
                                        std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Instance sweeps shared by the suites and the acceptance harness.
// ---------------------------------------------------------------------------

struct EnumerationSweepOutcome {
    std::size_t instances = 0;
    bool sandwich_ok = true;   // capacity <= ww <= (2 norm bound + 2) capacity
    bool potential_ok = true;  // staged-measure potential >= 1 on enumerated cylinders
    bool mass_ok = true;       // staged-measure total mass equals final ww
    std::string detail;        // first counterexample, if any
    bool pass() const { return sandwich_ok && potential_ok && mass_ok; }
};

/// Every antichain of depth <= max_depth over the binary alphabet, under
/// every enumeration order, for the three bound kernels geometric(3/2),
/// geometric(1) and polynomial(1).
EnumerationSweepOutcome enumeration_exhaustive_sweep(int max_depth = 3);

/// Random nonempty antichains of depth <= max_depth in shuffled order, per
/// bound kernel.
EnumerationSweepOutcome enumeration_random_sweep(std::size_t instances_per_kernel, int max_depth,
                                                 std::uint64_t seed);

struct SweepOutcome {
    std::size_t instances = 0;
    bool pass = true;
    std::string detail;
};

/// Realizing-measure certificates on random antichains: total mass equals
/// the capacity, potential exactly 1 on the set's cylinders, at most 1 on
/// the complementary cylinders.
SweepOutcome realizer_certificate_sweep(std::size_t instances, int max_depth, std::uint64_t seed);

/// Recursion vs. linear-program agreement: every nonempty binary antichain
/// of depth <= 3 under the three bound kernels, plus every nonempty ternary
/// antichain of depth <= 2 under geometric(2).
SweepOutcome oracle_agreement_sweep();

// ---------------------------------------------------------------------------
// Named checks. Each runs a self-contained deterministic sweep.
// ---------------------------------------------------------------------------

CheckResult kernel_tail_shift_check();
CheckResult kernel_geometric_ratio_check();
CheckResult kernel_norm_bound_check();
CheckResult kernel_tail_partial_sum_check();

CheckResult measure_additivity_check();
CheckResult energy_identities_check();
CheckResult riesz_identity_check();
CheckResult json_round_trip_check();
CheckResult monte_carlo_check();

CheckResult capacity_base_cases_check();
CheckResult distance_capacity_example_check();
CheckResult capacity_monotonicity_check();
CheckResult capacity_upper_bound_check();
CheckResult capacity_shift_scaling_check();
CheckResult oracle_agreement_check();
CheckResult realizer_certificate_check();
CheckResult decomposition_invariance_check();
CheckResult distance_capacity_agreement_check();

CheckResult single_word_realization_check();
CheckResult stage_locality_check();
CheckResult monotone_increment_check();
CheckResult order_dependence_check();
CheckResult enumeration_symmetry_check();
CheckResult calc_inequality_suite_check();

// ---------------------------------------------------------------------------
// Suites, as exposed by the command-line `verify` subcommand. Kernel
// invariants report under the measure suite.
// ---------------------------------------------------------------------------

std::vector<CheckResult> measure_suite();
std::vector<CheckResult> capacity_suite();
std::vector<CheckResult> enumeration_suite();

/// name is one of "measure", "capacity", "enumeration", "all".
std::vector<CheckResult> run_suite(const std::string& name);

std::vector<std::string> suite_names();

}  // namespace cantor::verify
