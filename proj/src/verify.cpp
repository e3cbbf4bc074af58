#include "cantor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

namespace cantor::verify {

namespace {

Kernel geo32() {
    return Kernel::geometric(make_rational(3, 2), Alphabet(2));
}
Kernel geo_unit() {
    return Kernel::geometric(Rational(1), Alphabet(2));
}
Kernel poly_linear() {
    return Kernel::polynomial(1, Alphabet(2));
}

// The three kernels whose two-sided online bounds the suites sweep.
const std::vector<Kernel>& bound_kernels() {
    static const std::vector<Kernel> kernels{geo32(), geo_unit(), poly_linear()};
    return kernels;
}

std::string word_text(const Word& w) {
    return w.empty() ? "-" : w.str();
}

std::string words_text(const std::vector<Word>& words) {
    std::string out = "[";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ' ';
        out += word_text(words[i]);
    }
    return out + "]";
}

CheckResult fail(std::string name, std::string detail) {
    return CheckResult{std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail) {
    return CheckResult{std::move(name), true, std::move(detail)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Rational random_positive_rational(std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

namespace {

std::vector<Word> random_words_below(std::mt19937_64& rng, int depth_left, int b) {
    std::uniform_int_distribution<int> roll(0, 3);
    int r = roll(rng);
    if (depth_left == 0) return r < 2 ? std::vector<Word>{} : std::vector<Word>{Word()};
    if (r == 0) return {};
    if (r == 1) return {Word()};
    std::vector<Word> out;
    for (int i = 0; i < b; ++i)
        for (const auto& w : random_words_below(rng, depth_left - 1, b))
            out.push_back(w.prepended(i));
    return out;
}

}  // namespace

PrefixFreeSet random_prefix_free_set(std::mt19937_64& rng, Alphabet ab, int max_depth) {
    return PrefixFreeSet::from_words(random_words_below(rng, max_depth, ab.size()), ab);
}

PrefixFreeSet random_nonempty_prefix_free_set(std::mt19937_64& rng, Alphabet ab, int max_depth) {
    for (;;) {
        PrefixFreeSet set = random_prefix_free_set(rng, ab, max_depth);
        if (!set.is_empty()) return set;
    }
}

namespace {

using Node = TrieMeasure::Node;
using NodePtr = TrieMeasure::NodePtr;

EventuallyPeriodicSequence random_atom(std::mt19937_64& rng, int b) {
    std::uniform_int_distribution<int> sym(0, b - 1);
    std::uniform_int_distribution<int> head_len(0, 2);
    std::uniform_int_distribution<int> period_len(1, 2);
    std::vector<std::uint8_t> head, period;
    for (int i = head_len(rng); i > 0; --i) head.push_back(static_cast<std::uint8_t>(sym(rng)));
    for (int i = period_len(rng); i > 0; --i) period.push_back(static_cast<std::uint8_t>(sym(rng)));
    return EventuallyPeriodicSequence(Word(std::move(head)), Word(std::move(period)));
}

NodePtr random_node(std::mt19937_64& rng, int depth_left, int b, bool allow_atoms) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<long> small(1, 8);
    if (depth_left > 0 && kind(rng) >= 2) {
        std::vector<NodePtr> children(b);
        Rational sum = 0;
        bool any = false;
        std::uniform_int_distribution<int> skip(0, 3);
        for (int i = 0; i < b; ++i) {
            if (skip(rng) == 0) continue;
            children[i] = random_node(rng, depth_left - 1, b, allow_atoms);
            sum += children[i]->mass;
            any = true;
        }
        if (any) return std::make_shared<const Node>(Node{std::move(sum), std::move(children)});
    }
    Rational mass = make_rational(small(rng), small(rng));
    if (allow_atoms && kind(rng) == 0)
        return std::make_shared<const Node>(
            Node{std::move(mass), TrieMeasure::PointTail{random_atom(rng, b)}});
    return std::make_shared<const Node>(Node{std::move(mass), TrieMeasure::UniformTail{}});
}

}  // namespace

TrieMeasure random_measure(std::mt19937_64& rng, Alphabet ab, int max_depth, bool allow_atoms) {
    return TrieMeasure::from_root(random_node(rng, max_depth, ab.size(), allow_atoms), ab);
}

// ---------------------------------------------------------------------------
// Reference routes for the distance-based quantities
// ---------------------------------------------------------------------------

namespace {

void profile_walk(const NodePtr& n, std::size_t depth, std::vector<Rational>& internal_sq,
                  std::vector<Rational>& leaf_sq) {
    if (!n) return;
    if (const auto* children = std::get_if<std::vector<NodePtr>>(&n->below)) {
        if (internal_sq.size() <= depth) internal_sq.resize(depth + 1, Rational(0));
        internal_sq[depth] += n->mass * n->mass;
        for (const auto& c : *children) profile_walk(c, depth + 1, internal_sq, leaf_sq);
    } else {
        if (leaf_sq.size() <= depth) leaf_sq.resize(depth + 1, Rational(0));
        leaf_sq[depth] += n->mass * n->mass;
    }
}

void require_riesz_args(const TrieMeasure& mu, const Rational& r) {
    if (mu.alphabet().size() != 2)
        throw DomainError("distance-based reference is defined over a binary alphabet");
    if (r <= 1 || r >= 2)
        throw DomainError("distance exponent must satisfy 1 < r < 2, got " + rational_str(r));
}

}  // namespace

ExtValue riesz_energy_reference(const TrieMeasure& mu, const Rational& r) {
    require_riesz_args(mu, r);
    if (mu.has_atoms()) return ExtValue::infinity();
    if (mu.is_zero()) return ExtValue(Rational(0));

    // W(n) = sum of squared masses of the depth-n cylinders. The pair measure
    // of {common prefix length >= n} is exactly W(n), so the energy is
    // sum_n r^n (W(n) - W(n+1)); past the deepest node the mass spreads
    // uniformly and W halves each level, closing the sum in closed form.
    std::vector<Rational> internal_sq, leaf_sq;
    profile_walk(mu.root(), 0, internal_sq, leaf_sq);
    std::size_t nmax = std::max(internal_sq.size(), leaf_sq.size()) - 1;
    Rational half = make_rational(1, 2);
    std::vector<Rational> w(nmax + 1, Rational(0));
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (n < internal_sq.size()) w[n] += internal_sq[n];
        Rational factor = 1;
        for (std::size_t d = n + 1; d-- > 0;) {
            if (d < leaf_sq.size()) w[n] += leaf_sq[d] * factor;
            factor *= half;
        }
    }
    Rational total = 0;
    Rational rpow = 1;
    for (std::size_t n = 0; n < nmax; ++n) {
        total += rpow * (w[n] - w[n + 1]);
        rpow *= r;
    }
    total += rpow * w[nmax] * half / (1 - r * half);
    return ExtValue(std::move(total));
}

ExtValue riesz_potential_reference(const TrieMeasure& mu, const EventuallyPeriodicSequence& x,
                                   const Rational& r) {
    require_riesz_args(mu, r);
    if (mu.has_atoms())
        throw DomainError("distance-based potential reference needs an atomless measure");
    if (mu.is_zero()) return ExtValue(Rational(0));

    // The measure of {y : common prefix length with x is exactly n} is
    // mu[x|n] - mu[x|n+1]; below the explicit trie the path mass halves.
    std::size_t nmax = mu.depth();
    std::vector<Rational> m(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) m[n] = mu.cylinder_mass(x.prefix(n));
    Rational half = make_rational(1, 2);
    Rational total = 0;
    Rational rpow = 1;
    for (std::size_t n = 0; n < nmax; ++n) {
        total += rpow * (m[n] - m[n + 1]);
        rpow *= r;
    }
    total += rpow * m[nmax] * half / (1 - r * half);
    return ExtValue(std::move(total));
}

// ---------------------------------------------------------------------------
// Monte Carlo estimator
// ---------------------------------------------------------------------------

namespace {

double to_double(const Rational& q) {
    return mpq_get_d(q.get_mpq_t());
}

// Emits the symbols of one path sampled from the normalized measure.
class RandomPath {
public:
    RandomPath(const TrieMeasure& mu, std::mt19937_64& rng)
        : rng_(&rng), b_(mu.alphabet().size()), node_(mu.root().get()) {}

    int next() {
        for (;;) {
            if (mode_ == Mode::uniform_tail)
                return std::uniform_int_distribution<int>(0, b_ - 1)(*rng_);
            if (mode_ == Mode::atom) return atom_->at(pos_++);
            if (std::holds_alternative<TrieMeasure::UniformTail>(node_->below)) {
                mode_ = Mode::uniform_tail;
                continue;
            }
            if (const auto* p = std::get_if<TrieMeasure::PointTail>(&node_->below)) {
                atom_ = p->atom;
                pos_ = 0;
                mode_ = Mode::atom;
                continue;
            }
            const auto& children = std::get<std::vector<NodePtr>>(node_->below);
            double total = to_double(node_->mass);
            double u = std::uniform_real_distribution<double>(0.0, 1.0)(*rng_) * total;
            int pick = -1;
            double acc = 0;
            for (int i = 0; i < b_; ++i) {
                if (!children[i] || sgn(children[i]->mass) == 0) continue;
                acc += to_double(children[i]->mass);
                pick = i;
                if (u < acc) break;
            }
            node_ = children[pick].get();
            return pick;
        }
    }

private:
    enum class Mode { node, uniform_tail, atom };
    std::mt19937_64* rng_;
    int b_;
    const TrieMeasure::Node* node_;
    Mode mode_ = Mode::node;
    std::optional<EventuallyPeriodicSequence> atom_;
    std::size_t pos_ = 0;
};

std::size_t sample_common_prefix_length(const TrieMeasure& mu, std::mt19937_64& rng) {
    RandomPath a(mu, rng), b(mu, rng);
    for (std::size_t n = 0; n < 4096; ++n)
        if (a.next() != b.next()) return n;
    throw DomainError("sampled paths agree beyond depth 4096; is the measure atomless?");
}

}  // namespace

MonteCarloRieszReport monte_carlo_riesz(const TrieMeasure& mu, const Rational& r,
                                        std::size_t samples, std::uint64_t seed) {
    require_riesz_args(mu, r);
    if (mu.has_atoms()) throw DomainError("Monte Carlo estimator needs an atomless measure");
    if (mu.is_zero()) throw DomainError("Monte Carlo estimator needs positive mass");
    if (samples < 2) throw DomainError("Monte Carlo estimator needs at least two samples");

    MonteCarloRieszReport report;
    report.samples = samples;
    report.exact = to_double(riesz_energy(mu, r).finite_value());

    std::mt19937_64 rng(seed);
    double rd = to_double(r);
    double mass = to_double(mu.total_mass());
    double mean = 0, m2 = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        double w = std::pow(rd, static_cast<double>(sample_common_prefix_length(mu, rng))) *
                   mass * mass;
        double delta = w - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (w - mean);
    }
    report.estimate = mean;
    double variance = m2 / static_cast<double>(samples - 1);
    report.stderr_value = std::sqrt(variance / static_cast<double>(samples));
    double diff = std::fabs(report.estimate - report.exact);
    report.deviation = report.stderr_value > 0 ? diff / report.stderr_value
                                               : (diff == 0 ? 0 : std::numeric_limits<double>::infinity());
    report.pass = diff <= 4 * report.stderr_value;
    return report;
}

// ---------------------------------------------------------------------------
// Enumeration sweeps
// ---------------------------------------------------------------------------

namespace {

void check_enumeration_instance(const Kernel& kernel, const PrefixFreeSet& set,
                                const Rational& cap, const Rational& bound_a,
                                const std::vector<Word>& order, EnumerationSweepOutcome& out) {
    Alphabet ab = kernel.alphabet();
    GoodEnumeration e = GoodEnumeration::from_words(order, ab);
    DynamicWeightTrace trace = dynamic_weight(kernel, e);
    ++out.instances;

    bool sandwich = cap <= trace.final_ww && trace.final_ww <= bound_a * cap;
    TrieMeasure mu = TrieMeasure::zero(ab);
    for (const auto& s : trace.stages)
        mu = add(mu, TrieMeasure::uniform_on(s.word, s.increment, ab));
    bool mass = mu.total_mass() == trace.final_ww;
    bool pot = true;
    for (const auto& w : set.words())
        if (!(potential(kernel, mu, EventuallyPeriodicSequence::cylinder_point(w)) >=
              ExtValue(Rational(1)))) {
            pot = false;
            break;
        }

    if ((!sandwich || !mass || !pot) && out.detail.empty()) {
        std::ostringstream why;
        why << kernel.describe() << ", order " << words_text(order) << ": ww "
            << rational_str(trace.final_ww) << ", capacity " << rational_str(cap);
        out.detail = why.str();
    }
    out.sandwich_ok = out.sandwich_ok && sandwich;
    out.mass_ok = out.mass_ok && mass;
    out.potential_ok = out.potential_ok && pot;
}

void merge_outcomes(EnumerationSweepOutcome& into, const EnumerationSweepOutcome& part) {
    into.instances += part.instances;
    into.sandwich_ok = into.sandwich_ok && part.sandwich_ok;
    into.potential_ok = into.potential_ok && part.potential_ok;
    into.mass_ok = into.mass_ok && part.mass_ok;
    if (into.detail.empty()) into.detail = part.detail;
}

}  // namespace

EnumerationSweepOutcome enumeration_exhaustive_sweep(int max_depth) {
    const std::vector<PrefixFreeSet> sets = all_prefix_free_sets(Alphabet(2), max_depth);
    const auto& kernels = bound_kernels();

    auto worker = [&](std::size_t first, std::size_t stride) {
        EnumerationSweepOutcome out;
        for (std::size_t si = first; si < sets.size(); si += stride) {
            const PrefixFreeSet& set = sets[si];
            if (set.is_empty()) continue;
            for (const auto& kernel : kernels) {
                Rational cap = capacity(kernel, set);
                Rational bound_a = 2 * kernel.norm_bound() + 2;
                std::vector<Word> perm = set.words();
                do {
                    check_enumeration_instance(kernel, set, cap, bound_a, perm, out);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
        return out;
    };

    std::size_t threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    threads = std::min(threads, sets.size());
    if (threads <= 1) return worker(0, 1);
    std::vector<std::future<EnumerationSweepOutcome>> futures;
    for (std::size_t t = 0; t < threads; ++t)
        futures.push_back(std::async(std::launch::async, worker, t, threads));
    EnumerationSweepOutcome out;
    for (auto& f : futures) merge_outcomes(out, f.get());
    return out;
}

EnumerationSweepOutcome enumeration_random_sweep(std::size_t instances_per_kernel, int max_depth,
                                                 std::uint64_t seed) {
    EnumerationSweepOutcome out;
    std::mt19937_64 rng(seed);
    for (const auto& kernel : bound_kernels()) {
        Rational bound_a = 2 * kernel.norm_bound() + 2;
        for (std::size_t i = 0; i < instances_per_kernel; ++i) {
            PrefixFreeSet set = random_nonempty_prefix_free_set(rng, Alphabet(2), max_depth);
            std::vector<Word> order = set.words();
            std::shuffle(order.begin(), order.end(), rng);
            Rational cap = capacity(kernel, set);
            check_enumeration_instance(kernel, set, cap, bound_a, order, out);
        }
    }
    return out;
}

SweepOutcome realizer_certificate_sweep(std::size_t instances, int max_depth, std::uint64_t seed) {
    SweepOutcome out;
    std::mt19937_64 rng(seed);
    const auto& kernels = bound_kernels();
    const ExtValue one{Rational(1)};
    for (std::size_t i = 0; i < instances; ++i) {
        const Kernel& kernel = kernels[i % kernels.size()];
        PrefixFreeSet set = random_nonempty_prefix_free_set(rng, Alphabet(2), max_depth);
        TrieMeasure mu = realizing_measure(kernel, set);
        ++out.instances;
        bool ok = mu.total_mass() == capacity(kernel, set);
        for (const auto& w : set.words())
            ok = ok &&
                 potential(kernel, mu, EventuallyPeriodicSequence::cylinder_point(w)) == one;
        for (const auto& w : set.complement_antichain())
            ok = ok &&
                 potential(kernel, mu, EventuallyPeriodicSequence::cylinder_point(w)) <= one;
        if (!ok && out.detail.empty())
            out.detail = kernel.describe() + " on " + words_text(set.words());
        out.pass = out.pass && ok;
    }
    if (out.pass)
        out.detail = std::to_string(out.instances) +
                     " random antichains: mass = capacity, potential 1 on the set, <= 1 off it";
    return out;
}

SweepOutcome oracle_agreement_sweep() {
    SweepOutcome out;
    auto run = [&](const Kernel& kernel, const std::vector<PrefixFreeSet>& sets) {
        for (const auto& set : sets) {
            if (set.is_empty()) continue;
            ++out.instances;
            Rational rec = capacity(kernel, set);
            Rational lp = capacity_lp_oracle(kernel, set);
            if (rec != lp && out.pass) {
                out.pass = false;
                out.detail = kernel.describe() + " on " + words_text(set.words()) +
                             ": recursion " + rational_str(rec) + ", linear program " +
                             rational_str(lp);
            }
        }
    };
    std::vector<PrefixFreeSet> binary = all_prefix_free_sets(Alphabet(2), 3);
    for (const auto& kernel : bound_kernels()) run(kernel, binary);
    run(Kernel::geometric(Rational(2), Alphabet(3)), all_prefix_free_sets(Alphabet(3), 2));
    if (out.pass)
        out.detail = std::to_string(out.instances) +
                     " antichains: recursion and linear program agree exactly";
    return out;
}

// ---------------------------------------------------------------------------
// Kernel checks
// ---------------------------------------------------------------------------

namespace {

std::vector<Kernel> survey_kernels() {
    return {geo32(),
            geo_unit(),
            poly_linear(),
            Kernel::polynomial(0, Alphabet(2)),
            Kernel::polynomial(2, Alphabet(2)),
            Kernel::geometric(make_rational(1, 2), Alphabet(2)),
            Kernel::geometric(make_rational(5, 3), Alphabet(3)),
            Kernel::shift(Kernel::polynomial(2, Alphabet(2)), 3),
            Kernel::table({Rational(1), make_rational(1, 2), make_rational(1, 4)}, Alphabet(2))};
}

}  // namespace

CheckResult kernel_tail_shift_check() {
    const std::string name = "kernel/tail-shift-consistency";
    std::size_t checks = 0;
    for (const auto& k : survey_kernels())
        for (long s = 0; s <= 20; ++s) {
            if (k.tail_weight(s) != Kernel::shift(k, s).tail_weight(0))
                return fail(name, k.describe() + " disagrees with its shift at offset " +
                                      std::to_string(s));
            ++checks;
        }
    return pass(name, std::to_string(checks) + " (kernel, offset) pairs agree exactly");
}

CheckResult kernel_geometric_ratio_check() {
    const std::string name = "kernel/geometric-tail-ratio";
    struct Case {
        Kernel kernel;
        Rational ratio;
    };
    std::vector<Case> cases{{geo32(), make_rational(3, 2)},
                            {Kernel::geometric(make_rational(1, 2), Alphabet(2)), make_rational(1, 2)},
                            {Kernel::geometric(make_rational(5, 3), Alphabet(3)), make_rational(5, 3)}};
    std::size_t checks = 0;
    for (const auto& c : cases)
        for (long k = 0; k <= 20; ++k) {
            if (c.kernel.tail_weight(k + 1) != c.ratio * c.kernel.tail_weight(k))
                return fail(name, c.kernel.describe() + " breaks the ratio law at k = " +
                                      std::to_string(k));
            ++checks;
        }
    return pass(name, std::to_string(checks) + " tail ratios are exact");
}

CheckResult kernel_norm_bound_check() {
    const std::string name = "kernel/norm-bound-soundness";
    std::size_t checks = 0;
    for (const auto& k : survey_kernels()) {
        if (!k.is_amicable()) continue;
        Rational bound = k.norm_bound();
        for (long i = 0; i <= 50; ++i) {
            if (k.eval(i) > bound * k.tail_weight(i + 1))
                return fail(name, k.describe() + " exceeds its certified bound at k = " +
                                      std::to_string(i));
            ++checks;
        }
    }
    // For geometric kernels the bound is attained at every index.
    Kernel g = geo32();
    if (g.eval(7) != g.norm_bound() * g.tail_weight(8))
        return fail(name, "geometric bound is not tight");
    return pass(name, std::to_string(checks) + " ratios below the certified bounds; "
                      "geometric bound attained");
}

CheckResult kernel_tail_partial_sum_check() {
    const std::string name = "kernel/tail-partial-sum";
    std::size_t checks = 0;
    for (const auto& k : survey_kernels()) {
        long b = k.alphabet().size();
        Rational inv_b = make_rational(1, b);
        for (long s = 0; s <= 10; ++s) {
            Rational partial = 0;
            Rational scale_ = 1;
            for (long n = 0; n < 10; ++n) {
                partial += k.eval(n + s) * scale_;
                scale_ *= inv_b;
            }
            if (k.tail_weight(s) != partial + scale_ * k.tail_weight(s + 10))
                return fail(name, k.describe() + " breaks the partial-sum identity at k = " +
                                      std::to_string(s));
            ++checks;
        }
    }
    return pass(name, std::to_string(checks) + " ten-term partial sums close exactly");
}

// ---------------------------------------------------------------------------
// Measure checks
// ---------------------------------------------------------------------------

CheckResult measure_additivity_check() {
    const std::string name = "measure/cylinder-additivity";
    std::mt19937_64 rng(0x5eed0001);
    std::size_t checks = 0;
    for (int iter = 0; iter < 100; ++iter) {
        Alphabet ab(iter % 3 == 0 ? 3 : 2);
        TrieMeasure mu = random_measure(rng, ab, 4, true);
        mu.validate();
        TrieMeasure nu = mu.scaled(random_positive_rational(rng));
        nu.validate();
        // mu[w] must equal the sum of the children's masses for every w.
        std::vector<Word> frontier{Word()};
        for (int d = 0; d < 3; ++d) {
            std::vector<Word> next;
            for (const auto& w : frontier) {
                Rational sum = 0;
                for (int i = 0; i < ab.size(); ++i) {
                    next.push_back(w.appended(i));
                    sum += mu.cylinder_mass(next.back());
                }
                if (mu.cylinder_mass(w) != sum)
                    return fail(name, "mass of [" + word_text(w) + "] differs from its children");
                ++checks;
            }
            frontier = std::move(next);
        }
    }
    return pass(name, std::to_string(checks) + " cylinders split exactly across children");
}

CheckResult energy_identities_check() {
    const std::string name = "measure/energy-identities";
    std::mt19937_64 rng(0x5eed0002);
    std::vector<Kernel> kernels{geo32(), poly_linear(),
                                Kernel::geometric(make_rational(1, 2), Alphabet(2)),
                                Kernel::table({Rational(2), Rational(1)}, Alphabet(2))};
    const ExtValue one{Rational(1)};
    std::size_t iterations = 100;
    for (std::size_t iter = 0; iter < iterations; ++iter) {
        const Kernel& kernel = kernels[iter % kernels.size()];
        Alphabet ab = kernel.alphabet();
        TrieMeasure mu = random_measure(rng, ab, 4, true);
        TrieMeasure smooth_a = random_measure(rng, ab, 3, false);
        TrieMeasure smooth_b = random_measure(rng, ab, 3, false);
        Rational c = random_positive_rational(rng);

        ExtValue e = energy(kernel, mu);
        if (e != mutual_energy(kernel, mu, mu))
            return fail(name, "energy differs from self mutual energy (" + kernel.describe() + ")");
        if (energy(kernel, mu.scaled(c)) != scale(Rational(c * c), e))
            return fail(name, "energy does not scale quadratically (" + kernel.describe() + ")");
        Rational m = mu.total_mass();
        if (!(e >= ExtValue(Rational(m * m * kernel.tail_weight(0)))))
            return fail(name, "energy drops below the mean-mass lower bound");
        if (mutual_energy(kernel, mu, smooth_a) != mutual_energy(kernel, smooth_a, mu))
            return fail(name, "mutual energy is not symmetric");

        // Bilinearity in the first argument against a possibly atomic second.
        TrieMeasure combined = add(smooth_a.scaled(c), smooth_b);
        ExtValue lhs = mutual_energy(kernel, combined, mu);
        ExtValue rhs = scale(c, mutual_energy(kernel, smooth_a, mu)) +
                       mutual_energy(kernel, smooth_b, mu);
        if (lhs != rhs) return fail(name, "mutual energy is not bilinear");

        // Potential is linear in the measure at any point.
        EventuallyPeriodicSequence x = random_atom(rng, ab.size());
        ExtValue pl = potential(kernel, combined, x);
        ExtValue pr = scale(c, potential(kernel, smooth_a, x)) + potential(kernel, smooth_b, x);
        if (pl != pr) return fail(name, "potential is not linear in the measure");
    }
    return pass(name, std::to_string(iterations) +
                          " random measures: self-mutual, quadratic scaling, lower bound, "
                          "symmetry, bilinearity, linearity all exact");
}

CheckResult riesz_identity_check() {
    const std::string name = "measure/distance-energy-identity";
    Rational r32 = make_rational(3, 2);
    TrieMeasure flat = TrieMeasure::uniform(Rational(1), Alphabet(2));
    const ExtValue two{Rational(2)};
    if (riesz_energy(flat, r32) != two)
        return fail(name, "uniform probability energy is " + riesz_energy(flat, r32).str() +
                              ", expected 2");
    if (riesz_energy_reference(flat, r32) != two)
        return fail(name, "profile reference disagrees on the uniform measure");
    for (const char* point : {":0", ":1", ":01", "10:1"}) {
        auto x = EventuallyPeriodicSequence::parse(point, Alphabet(2));
        if (riesz_potential(flat, x, r32) != two)
            return fail(name, "uniform probability potential at a point is not 2");
        if (riesz_potential_reference(flat, x, r32) != two)
            return fail(name, "profile potential reference disagrees at a point");
    }
    if (!riesz_energy(TrieMeasure::point_mass(EventuallyPeriodicSequence::constant(0),
                                              Rational(1), Alphabet(2)),
                      r32)
             .is_infinite())
        return fail(name, "an atom must have infinite distance-based energy");

    std::mt19937_64 rng(0x5eed0003);
    std::vector<Rational> exponents{r32, make_rational(5, 4), make_rational(9, 8)};
    std::size_t iterations = 100;
    for (std::size_t iter = 0; iter < iterations; ++iter) {
        const Rational& r = exponents[iter % exponents.size()];
        TrieMeasure mu = random_measure(rng, Alphabet(2), 4, false);
        ExtValue re = riesz_energy(mu, r);
        if (re != riesz_energy_reference(mu, r))
            return fail(name, "profile reference disagrees on a random measure (r = " +
                                  rational_str(r) + ")");
        // The defining relation against the geometric-kernel energy.
        ExtValue e = energy(Kernel::geometric(r, Alphabet(2)), mu);
        Rational m = mu.total_mass();
        if (re != ExtValue(Rational(m * m / r)) + scale(1 - 1 / r, e))
            return fail(name, "energy relation broken on a random measure");
        EventuallyPeriodicSequence x = random_atom(rng, 2);
        if (riesz_potential(mu, x, r) != riesz_potential_reference(mu, x, r))
            return fail(name, "potential reference disagrees on a random measure");
    }
    return pass(name, "uniform energy 2 exact; " + std::to_string(iterations) +
                          " random atomless measures match the profile reference");
}

CheckResult json_round_trip_check() {
    const std::string name = "measure/serialization-round-trip";
    std::mt19937_64 rng(0x5eed0004);
    for (int iter = 0; iter < 100; ++iter) {
        Alphabet ab(iter % 4 == 0 ? 3 : 2);
        TrieMeasure mu = random_measure(rng, ab, 4, true);
        nlohmann::json j = mu.to_json();
        TrieMeasure back = TrieMeasure::from_json(j, ab);
        if (back.to_json() != j)
            return fail(name, "measure reserialization differs");
        std::vector<Word> probe{Word()};
        for (int d = 0; d < 5; ++d) probe.push_back(probe.back().appended(d % ab.size()));
        for (const auto& w : probe)
            if (mu.cylinder_mass(w) != back.cylinder_mass(w))
                return fail(name, "round-tripped measure changes a cylinder mass");
    }
    for (const auto& k : survey_kernels()) {
        Kernel back = Kernel::from_json(k.to_json());
        if (back.to_json() != k.to_json()) return fail(name, "kernel reserialization differs");
        for (long i = 0; i <= 8; ++i)
            if (back.eval(i) != k.eval(i) || back.tail_weight(i) != k.tail_weight(i))
                return fail(name, "round-tripped kernel changes values");
    }
    return pass(name, "100 measures and 9 kernels round-trip byte for byte");
}

CheckResult monte_carlo_check() {
    const std::string name = "measure/monte-carlo-distance-energy";
    Rational r = make_rational(3, 2);
    auto fmt = [](const MonteCarloRieszReport& rep) {
        std::ostringstream out;
        out.precision(4);
        out << "estimate " << rep.estimate << " vs exact " << rep.exact << " ("
            << rep.deviation << " stderr units)";
        return out.str();
    };
    MonteCarloRieszReport flat =
        monte_carlo_riesz(TrieMeasure::uniform(Rational(1), Alphabet(2)), r, 100000, 0x5eed0005);
    if (!flat.pass) return fail(name, "uniform measure: " + fmt(flat));
    std::mt19937_64 rng(0x5eed0006);
    MonteCarloRieszReport rough =
        monte_carlo_riesz(random_measure(rng, Alphabet(2), 3, false), r, 100000, 0x5eed0007);
    if (!rough.pass) return fail(name, "random measure: " + fmt(rough));
    return pass(name, "uniform: " + fmt(flat) + "; random: " + fmt(rough));
}

// ---------------------------------------------------------------------------
// Capacity checks
// ---------------------------------------------------------------------------

CheckResult capacity_base_cases_check() {
    const std::string name = "capacity/base-cases";
    struct Case {
        Kernel kernel;
        Rational whole;
    };
    std::vector<Case> cases{{geo32(), make_rational(1, 4)},
                            {geo_unit(), make_rational(1, 2)},
                            {poly_linear(), make_rational(1, 2)}};
    PrefixFreeSet none = PrefixFreeSet::empty(Alphabet(2));
    PrefixFreeSet whole = PrefixFreeSet::from_words({Word()}, Alphabet(2));
    for (const auto& c : cases) {
        if (capacity(c.kernel, none) != 0)
            return fail(name, c.kernel.describe() + ": empty set capacity is not 0");
        if (capacity(c.kernel, whole) != c.whole)
            return fail(name, c.kernel.describe() + ": whole-space capacity is " +
                                  rational_str(capacity(c.kernel, whole)) + ", expected " +
                                  rational_str(c.whole));
        if (!realizing_measure(c.kernel, none).is_zero())
            return fail(name, "empty set realizer is not the zero measure");
        TrieMeasure mu = realizing_measure(c.kernel, whole);
        TrieMeasure flat = TrieMeasure::uniform(c.whole, Alphabet(2));
        for (const auto& w : {Word(), Word::parse("0", Alphabet(2)), Word::parse("10", Alphabet(2)),
                              Word::parse("111", Alphabet(2))})
            if (mu.cylinder_mass(w) != flat.cylinder_mass(w))
                return fail(name, "whole-space realizer is not the uniform measure");
    }
    return pass(name, "empty 0; whole space 1/4, 1/2, 1/2 with uniform realizers");
}

CheckResult distance_capacity_example_check() {
    const std::string name = "capacity/distance-branch-example";
    Alphabet ab(2);
    Rational r = make_rational(3, 2);
    PrefixFreeSet zero_branch = PrefixFreeSet::from_words({Word::parse("0", ab)}, ab);
    Rational expected = make_rational(1, 7);
    if (capacity_s(zero_branch, r) != expected)
        return fail(name, "distance capacity of the 0-branch is " +
                              rational_str(capacity_s(zero_branch, r)) + ", expected 1/7");
    if (capacity_s(PrefixFreeSet::from_words({Word()}, ab), r) != make_rational(1, 4))
        return fail(name, "distance capacity of the whole space is not 1/4");
    if (capacity(geo32(), zero_branch) != expected)
        return fail(name, "kernel route disagrees on the 0-branch");
    if (capacity_lp_oracle(geo32(), zero_branch) != expected)
        return fail(name, "linear program disagrees on the 0-branch");

    TrieMeasure mu = realizing_measure(geo32(), zero_branch);
    if (mu.total_mass() != expected) return fail(name, "realizer mass is not 1/7");
    if (mu.cylinder_mass(Word::parse("0", ab)) != expected ||
        mu.cylinder_mass(Word::parse("1", ab)) != 0 ||
        mu.cylinder_mass(Word::parse("00", ab)) != make_rational(1, 14))
        return fail(name, "realizer masses are wrong");
    if (potential(geo32(), mu, EventuallyPeriodicSequence::constant(0)) != ExtValue(Rational(1)))
        return fail(name, "realizer potential on the branch is not exactly 1");
    if (!(potential(geo32(), mu, EventuallyPeriodicSequence::constant(1)) <=
          ExtValue(Rational(1))))
        return fail(name, "realizer potential off the branch exceeds 1");
    return pass(name, "0-branch capacity 1/7 on all three routes; realizer certified");
}

CheckResult capacity_monotonicity_check() {
    const std::string name = "capacity/monotone-in-the-set";
    std::mt19937_64 rng(0x5eed0010);
    const auto& kernels = bound_kernels();
    std::size_t iterations = 200;
    for (std::size_t iter = 0; iter < iterations; ++iter) {
        const Kernel& kernel = kernels[iter % kernels.size()];
        Alphabet ab = kernel.alphabet();
        PrefixFreeSet big = random_nonempty_prefix_free_set(rng, ab, 3);
        // Shrink the denoted open set: keep, drop, or refine each word.
        std::vector<Word> small;
        std::uniform_int_distribution<int> roll(0, 3);
        for (const auto& w : big.words()) {
            int r = roll(rng);
            if (r <= 1) {
                small.push_back(w);
            } else if (r == 2) {
                for (int i = 0; i < ab.size(); ++i)
                    if (roll(rng) < 2) small.push_back(w.appended(i));
            }
        }
        PrefixFreeSet sub = PrefixFreeSet::from_words(std::move(small), ab);
        if (!(capacity(kernel, sub) <= capacity(kernel, big)))
            return fail(name, kernel.describe() + ": capacity grows when the set shrinks, " +
                                  words_text(sub.words()) + " inside " + words_text(big.words()));
    }
    return pass(name, std::to_string(iterations) + " nested pairs ordered correctly");
}

CheckResult capacity_upper_bound_check() {
    const std::string name = "capacity/bounded-by-whole-space";
    std::size_t checks = 0;
    for (const auto& kernel : bound_kernels()) {
        Rational cap_all = 1 / kernel.tail_weight(0);
        for (const auto& set : all_prefix_free_sets(Alphabet(2), 3)) {
            if (!(capacity(kernel, set) <= cap_all))
                return fail(name, kernel.describe() + " exceeds the whole-space capacity on " +
                                      words_text(set.words()));
            ++checks;
        }
    }
    return pass(name, std::to_string(checks) + " antichains below the whole-space value");
}

CheckResult capacity_shift_scaling_check() {
    const std::string name = "capacity/geometric-shift-scaling";
    std::mt19937_64 rng(0x5eed0011);
    struct Case {
        Kernel kernel;
        Rational ratio;
    };
    std::vector<Case> cases{{geo32(), make_rational(3, 2)},
                            {Kernel::geometric(make_rational(1, 2), Alphabet(2)), make_rational(1, 2)},
                            {Kernel::geometric(make_rational(5, 3), Alphabet(3)), make_rational(5, 3)}};
    std::size_t checks = 0;
    for (const auto& c : cases)
        for (int iter = 0; iter < 50; ++iter) {
            PrefixFreeSet set = random_prefix_free_set(rng, c.kernel.alphabet(), 4);
            Rational base = capacity(c.kernel, set, 0);
            for (long k = 1; k <= 3; ++k) {
                if (capacity(c.kernel, set, k) * rational_pow(c.ratio, k) != base)
                    return fail(name, c.kernel.describe() + " breaks shift scaling on " +
                                          words_text(set.words()));
                ++checks;
            }
        }
    return pass(name, std::to_string(checks) + " shifted capacities scale by the ratio");
}

CheckResult oracle_agreement_check() {
    SweepOutcome sweep = oracle_agreement_sweep();
    return {"capacity/linear-program-agreement", sweep.pass, sweep.detail};
}

CheckResult realizer_certificate_check() {
    SweepOutcome sweep = realizer_certificate_sweep(200, 4, 0x5eed0012);
    return {"capacity/realizer-certificates", sweep.pass, sweep.detail};
}

CheckResult decomposition_invariance_check() {
    const std::string name = "capacity/decomposition-invariance";
    std::mt19937_64 rng(0x5eed0013);
    const auto& kernels = bound_kernels();
    std::size_t iterations = 100;
    for (std::size_t iter = 0; iter < iterations; ++iter) {
        const Kernel& kernel = kernels[iter % kernels.size()];
        Alphabet ab = kernel.alphabet();
        PrefixFreeSet set = random_nonempty_prefix_free_set(rng, ab, 3);

        // Splitting one word into all of its children denotes the same open
        // set, so nothing observable may change.
        std::uniform_int_distribution<std::size_t> pick(0, set.words().size() - 1);
        std::size_t chosen = pick(rng);
        std::vector<Word> split;
        for (std::size_t i = 0; i < set.words().size(); ++i) {
            if (i == chosen)
                for (int s = 0; s < ab.size(); ++s) split.push_back(set.words()[i].appended(s));
            else
                split.push_back(set.words()[i]);
        }
        PrefixFreeSet refined = PrefixFreeSet::from_words(std::move(split), ab);
        if (capacity(kernel, set) != capacity(kernel, refined))
            return fail(name, kernel.describe() + ": capacity changes when " +
                                  words_text(set.words()) + " is refined");
        TrieMeasure a = realizing_measure(kernel, set);
        TrieMeasure b = realizing_measure(kernel, refined);
        std::vector<Word> frontier{Word()};
        for (std::size_t d = 0; d <= set.max_word_length() + 1; ++d) {
            std::vector<Word> next;
            for (const auto& w : frontier) {
                if (a.cylinder_mass(w) != b.cylinder_mass(w))
                    return fail(name, "realizer changes under refinement at [" + word_text(w) + "]");
                for (int s = 0; s < ab.size(); ++s) next.push_back(w.appended(s));
            }
            frontier = std::move(next);
        }

        // Unfolding the recursion two levels by hand gives the same value.
        if (!set.is_whole_space()) {
            Rational top = 0;
            for (int i = 0; i < ab.size(); ++i) {
                PrefixFreeSet branch = set.branch(i);
                Rational ci;
                if (branch.is_whole_space()) {
                    ci = 1 / kernel.tail_weight(1);
                } else if (branch.is_empty()) {
                    ci = 0;
                } else {
                    Rational t = 0;
                    for (int j = 0; j < ab.size(); ++j) t += capacity(kernel, branch.branch(j), 2);
                    Rational denom = 1 + kernel.eval(1) * t;
                    ci = t / denom;
                }
                top += ci;
            }
            Rational denom = 1 + kernel.eval(0) * top;
            if (capacity(kernel, set) != top / denom)
                return fail(name, "manual two-level unfolding disagrees on " +
                                      words_text(set.words()));
        }
    }
    return pass(name, std::to_string(iterations) +
                          " refinements leave capacity and realizer unchanged; manual "
                          "unfolding agrees");
}

CheckResult distance_capacity_agreement_check() {
    const std::string name = "capacity/distance-route-agreement";
    std::vector<Rational> exponents{make_rational(3, 2), make_rational(5, 4), make_rational(9, 8)};
    std::size_t checks = 0;
    std::vector<PrefixFreeSet> sets = all_prefix_free_sets(Alphabet(2), 3);
    for (const auto& r : exponents) {
        Kernel kernel = Kernel::geometric(r, Alphabet(2));
        for (const auto& set : sets) {
            if (capacity_s(set, r) != capacity(kernel, set))
                return fail(name, "routes disagree at r = " + rational_str(r) + " on " +
                                      words_text(set.words()));
            ++checks;
        }
    }
    return pass(name, std::to_string(checks) + " antichains: both recursions agree exactly");
}

// ---------------------------------------------------------------------------
// Enumeration checks
// ---------------------------------------------------------------------------

CheckResult single_word_realization_check() {
    const std::string name = "enumeration/single-word-capacity";
    std::size_t checks = 0;
    auto sweep = [&](const Kernel& kernel, int max_depth) -> std::optional<Word> {
        Alphabet ab = kernel.alphabet();
        std::vector<Word> frontier{Word()};
        for (int d = 0; d <= max_depth; ++d) {
            std::vector<Word> next;
            for (const auto& w : frontier) {
                GoodEnumeration e = GoodEnumeration::from_words({w}, ab);
                Rational ww = dynamic_weight(kernel, e).final_ww;
                if (ww != capacity(kernel, e.set())) return w;
                ++checks;
                for (int s = 0; s < ab.size(); ++s) next.push_back(w.appended(s));
            }
            frontier = std::move(next);
        }
        return std::nullopt;
    };
    for (const auto& kernel : bound_kernels())
        if (auto w = sweep(kernel, 4))
            return fail(name, kernel.describe() + " misses the capacity on [" + word_text(*w) + "]");
    if (auto w = sweep(Kernel::geometric(Rational(2), Alphabet(3)), 3))
        return fail(name, "ternary kernel misses the capacity on [" + word_text(*w) + "]");
    return pass(name, std::to_string(checks) + " single-word enumerations hit the capacity exactly");
}

CheckResult stage_locality_check() {
    const std::string name = "enumeration/stage-locality";
    std::mt19937_64 rng(0x5eed0020);
    const auto& kernels = bound_kernels();
    std::size_t checks = 0;
    for (int iter = 0; iter < 100; ++iter) {
        const Kernel& kernel = kernels[iter % kernels.size()];
        Alphabet ab = kernel.alphabet();
        PrefixFreeSet set = random_nonempty_prefix_free_set(rng, ab, 4);
        std::vector<Word> order = set.words();
        std::shuffle(order.begin(), order.end(), rng);
        GoodEnumeration e = GoodEnumeration::from_words(order, ab);
        DynamicWeightTrace trace = dynamic_weight(kernel, e);
        for (std::size_t t = 1; t <= e.stages(); ++t) {
            if (dynamic_weight(kernel, e.prefix(t)).final_ww != trace.stages[t - 1].ww)
                return fail(name, "truncated replay diverges at stage " + std::to_string(t) +
                                      " of " + words_text(order));
            ++checks;
        }
    }
    return pass(name, std::to_string(checks) + " truncated replays reproduce their trace prefix");
}

CheckResult monotone_increment_check() {
    const std::string name = "enumeration/strictly-positive-increments";
    std::mt19937_64 rng(0x5eed0021);
    std::vector<Kernel> kernels{geo32(), geo_unit(), poly_linear(),
                                Kernel::geometric(Rational(2), Alphabet(3))};
    std::size_t checks = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const Kernel& kernel = kernels[iter % kernels.size()];
        Alphabet ab = kernel.alphabet();
        PrefixFreeSet set = random_nonempty_prefix_free_set(rng, ab, 4);
        std::vector<Word> order = set.words();
        std::shuffle(order.begin(), order.end(), rng);
        GoodEnumeration e = GoodEnumeration::from_words(order, ab);
        DynamicWeightTrace trace = dynamic_weight(kernel, e);
        Rational prev = 0;
        for (const auto& s : trace.stages) {
            if (sgn(s.increment) <= 0 || s.ww <= prev)
                return fail(name, kernel.describe() + ": non-increasing weight in " +
                                      words_text(order));
            prev = s.ww;
            ++checks;
        }
        if (staged_measure(kernel, e).total_mass() != trace.final_ww)
            return fail(name, "staged measure mass differs from the final weight");
    }
    return pass(name, std::to_string(checks) + " stages all strictly increasing; "
                      "masses match the final weight");
}

CheckResult order_dependence_check() {
    const std::string name = "enumeration/order-dependence-witness";
    OrderDependenceWitness w = order_dependence_witness(geo32(), 3);
    if (!w.found)
        return fail(name, "no order dependence among " + std::to_string(w.orders_searched) +
                              " orders of " + std::to_string(w.sets_searched) + " sets");
    std::vector<Word> sa = w.order_a, sb = w.order_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb || w.ww_a == w.ww_b) return fail(name, "malformed witness");
    return pass(name, "order " + words_text(w.order_a) + " gives " + rational_str(w.ww_a) +
                          ", order " + words_text(w.order_b) + " gives " + rational_str(w.ww_b));
}

CheckResult enumeration_symmetry_check() {
    const std::string name = "enumeration/alphabet-symmetry";
    Alphabet ab(2);
    // The recursion treats branches symmetrically, so relabeling 0 <-> 1
    // everywhere must preserve the weight of every stage.
    auto mirrored = [&](const std::vector<Word>& order) {
        std::vector<Word> out;
        for (const auto& w : order) {
            std::vector<std::uint8_t> syms;
            for (std::size_t i = 0; i < w.size(); ++i)
                syms.push_back(static_cast<std::uint8_t>(1 - w.at(i)));
            out.emplace_back(std::move(syms));
        }
        return out;
    };
    std::mt19937_64 rng(0x5eed0022);
    const auto& kernels = bound_kernels();
    for (int iter = 0; iter < 50; ++iter) {
        const Kernel& kernel = kernels[iter % kernels.size()];
        PrefixFreeSet set = random_nonempty_prefix_free_set(rng, ab, 4);
        std::vector<Word> order = set.words();
        std::shuffle(order.begin(), order.end(), rng);
        DynamicWeightTrace a = dynamic_weight(kernel, GoodEnumeration::from_words(order, ab));
        DynamicWeightTrace b =
            dynamic_weight(kernel, GoodEnumeration::from_words(mirrored(order), ab));
        for (std::size_t t = 0; t < a.stages.size(); ++t)
            if (a.stages[t].ww != b.stages[t].ww)
                return fail(name, "relabeled enumeration diverges at stage " + std::to_string(t + 1));
    }
    // In particular the two orders of the symmetric pair {0, 1} agree.
    GoodEnumeration fwd = GoodEnumeration::from_words(
        {Word::parse("0", ab), Word::parse("1", ab)}, ab);
    GoodEnumeration rev = GoodEnumeration::from_words(
        {Word::parse("1", ab), Word::parse("0", ab)}, ab);
    if (dynamic_weight(geo32(), fwd).final_ww != dynamic_weight(geo32(), rev).final_ww)
        return fail(name, "the symmetric pair {0, 1} depends on its order");
    return pass(name, "50 relabeled enumerations and the symmetric pair agree stage by stage");
}

CheckResult calc_inequality_suite_check() {
    const std::string name = "enumeration/log-inequality-sweep";
    std::ostringstream detail;
    detail.precision(3);
    bool first = true;
    for (const auto& a : {Rational(2), make_rational(7, 3), Rational(4), Rational(10)}) {
        CalcInequalityReport report = calc_inequality_check(a, 1000);
        if (!report.pass) {
            std::ostringstream why;
            why.precision(6);
            why << "a = " << rational_str(a) << ": worst margin " << report.worst_margin;
            return fail(name, why.str());
        }
        if (!first) detail << ", ";
        detail << "a=" << rational_str(a) << " margin " << report.worst_margin;
        first = false;
    }
    return pass(name, detail.str());
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

std::vector<CheckResult> enumeration_sweep_results() {
    EnumerationSweepOutcome exhaustive = enumeration_exhaustive_sweep(3);
    EnumerationSweepOutcome randomized = enumeration_random_sweep(1000, 5, 0x5eed0030);
    auto describe = [](const EnumerationSweepOutcome& o, const char* what) {
        return o.detail.empty() ? std::to_string(o.instances) + std::string(" ") + what : o.detail;
    };
    return {
        {"enumeration/sandwich-exhaustive", exhaustive.sandwich_ok,
         describe(exhaustive, "orders of depth <= 3 antichains stay inside the sandwich")},
        {"enumeration/staged-measure-exhaustive", exhaustive.potential_ok && exhaustive.mass_ok,
         describe(exhaustive, "staged measures reach potential 1 with mass = ww")},
        {"enumeration/sandwich-random", randomized.sandwich_ok,
         describe(randomized, "random deeper instances stay inside the sandwich")},
        {"enumeration/staged-measure-random", randomized.potential_ok && randomized.mass_ok,
         describe(randomized, "random staged measures reach potential 1 with mass = ww")},
    };
}

}  // namespace

std::vector<CheckResult> measure_suite() {
    return {
        kernel_tail_shift_check(),  kernel_geometric_ratio_check(), kernel_norm_bound_check(),
        kernel_tail_partial_sum_check(), measure_additivity_check(), energy_identities_check(),
        riesz_identity_check(),     json_round_trip_check(),        monte_carlo_check(),
    };
}

std::vector<CheckResult> capacity_suite() {
    return {
        capacity_base_cases_check(),    distance_capacity_example_check(),
        capacity_monotonicity_check(),  capacity_upper_bound_check(),
        capacity_shift_scaling_check(), oracle_agreement_check(),
        realizer_certificate_check(),   decomposition_invariance_check(),
        distance_capacity_agreement_check(),
    };
}

std::vector<CheckResult> enumeration_suite() {
    std::vector<CheckResult> results{
        single_word_realization_check(), stage_locality_check(), monotone_increment_check(),
        order_dependence_check(),        enumeration_symmetry_check(),
        calc_inequality_suite_check(),
    };
    for (auto& r : enumeration_sweep_results()) results.push_back(std::move(r));
    return results;
}

std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "measure") return measure_suite();
    if (name == "capacity") return capacity_suite();
    if (name == "enumeration") return enumeration_suite();
    if (name == "all") {
        std::vector<CheckResult> all = measure_suite();
        for (auto& r : capacity_suite()) all.push_back(std::move(r));
        for (auto& r : enumeration_suite()) all.push_back(std::move(r));
        return all;
    }
    throw DomainError("unknown suite '" + name + "'; expected measure, capacity, enumeration or all");
}

std::vector<std::string> suite_names() {
    return {"measure", "capacity", "enumeration", "all"};
}

}  // namespace cantor::verify
