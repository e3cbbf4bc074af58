#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cantor/capacity.hpp"
#include "cantor/kernel.hpp"
#include "cantor/measure.hpp"
#include "cantor/prefix_free.hpp"

namespace cantor {

/// A prefix-free set given one word per stage, in discovery order. The order
/// matters: the online weight below depends on it.
class GoodEnumeration {
public:
    /// Validates stage by stage; a duplicate or prefix violation is reported
    /// with the stage that introduced it.
    static GoodEnumeration from_words(std::vector<Word> order, Alphabet ab);

    /// One word per line in discovery order, '-' for the empty word, blank
    /// lines ignored.
    static GoodEnumeration parse_lines(std::istream& in, Alphabet ab);
    static GoodEnumeration load_file(const std::string& path, Alphabet ab);

    const std::vector<Word>& order() const { return order_; }
    Alphabet alphabet() const { return alphabet_; }
    std::size_t stages() const { return order_.size(); }

    /// The set enumerated by the first t stages.
    PrefixFreeSet set_after(std::size_t t) const;
    PrefixFreeSet set() const { return set_after(order_.size()); }

    /// The enumeration truncated to its first t stages.
    GoodEnumeration prefix(std::size_t t) const;

private:
    GoodEnumeration(std::vector<Word> order, Alphabet ab)
        : order_(std::move(order)), alphabet_(ab) {}

    std::vector<Word> order_;
    Alphabet alphabet_;
};

struct DynamicWeightStage {
    std::size_t stage;   // 1-based
    Word word;           // the word entering at this stage
    Rational increment;  // strictly positive
    Rational ww;         // running weight after the stage
};

struct DynamicWeightTrace {
    std::vector<DynamicWeightStage> stages;
    Rational final_ww;  // 0 for the empty enumeration
};

/// Runs the online weight recursion along the enumeration: each subtree keeps
/// a running weight that, when its branch sums increase by delta, grows by
/// delta / (1 + f(k) * current branch sum); a subtree whose own root enters
/// jumps to 1/tw(k). The result is order-dependent by design. Requires an
/// amicable kernel (so the two-sided capacity bound below is meaningful).
DynamicWeightTrace dynamic_weight(const Kernel& kernel, const GoodEnumeration& enumeration,
                                  long shift = 0);

/// The measure the online process deposits: at each stage its increment is
/// spread uniformly over the entering cylinder. Total mass equals the final
/// running weight, and the potential is at least 1 on every enumerated
/// cylinder.
TrieMeasure staged_measure(const Kernel& kernel, const GoodEnumeration& enumeration,
                           long shift = 0);

struct SandwichReport {
    Rational capacity_value;
    Rational ww;
    Rational bound_constant;  // 2 * norm bound + 2
    bool lower_ok;            // capacity <= ww
    bool upper_ok;            // ww <= bound_constant * capacity
    bool pass() const { return lower_ok && upper_ok; }
};

/// Checks capacity <= ww <= (2 * norm bound + 2) * capacity for the final
/// stage of the enumeration.
SandwichReport check_sandwich(const Kernel& kernel, const GoodEnumeration& enumeration,
                              long shift = 0);

struct OrderDependenceWitness {
    bool found = false;
    std::vector<Word> order_a;  // meaningful when found
    std::vector<Word> order_b;
    Rational ww_a;
    Rational ww_b;
    std::size_t sets_searched = 0;
    std::size_t orders_searched = 0;
};

/// Searches every antichain of depth <= max_depth, under every enumeration
/// order, for two orders of the same set with different final weights.
/// Returns either a witness or the exhaustion counts.
OrderDependenceWitness order_dependence_witness(const Kernel& kernel, int max_depth = 3);

struct CalcInequalityReport {
    Rational a;
    std::size_t samples;
    double worst_margin;  // min over samples of rhs - lhs
    bool pass;            // worst_margin >= -1e-12
};

/// Samples the inequality log(1 + a y) <= a y / (1 + y) on [0, a - 2] at
/// evenly spaced points, evaluated in 50-digit floating point. Equality holds
/// at y = 0, so the margin is tested against -1e-12. Requires a >= 2.
CalcInequalityReport calc_inequality_check(const Rational& a, std::size_t samples = 1000);

/// Writes the stage-by-stage trace as CSV with the header
///   stage,word,increment,ww,capacity,bound_A,ratio
/// one row per stage (capacity of the set so far; ratio = ww / capacity) and
/// a final row  final,PASS|FAIL,,ww,capacity,bound_A,ratio  carrying the
/// sandwich verdict. The empty word prints as '-'. Exact rationals
/// throughout, so output is reproducible byte for byte.
void write_trace_csv(std::ostream& out, const Kernel& kernel, const GoodEnumeration& enumeration,
                     const DynamicWeightTrace& trace, long shift = 0);

}  // namespace cantor
