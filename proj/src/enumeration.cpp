#include "cantor/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cantor {

namespace {

std::string word_display(const Word& w) {
    return w.empty() ? "-" : w.str();
}

// Weight timeline of one subtree: entry t is the subtree's running weight
// after stage t of the full enumeration (entry 0 is the start). Items carry
// the stage at which their word enters and the word's suffix below this
// subtree. Prefix-freeness guarantees an exhausted suffix is alone.
void ww_timeline(const Kernel& f, std::vector<std::pair<std::size_t, Word>> items, long k,
                 std::size_t total_stages, int b, std::vector<Rational>& out) {
    out.assign(total_stages + 1, Rational(0));
    if (items.empty()) return;
    if (items.size() == 1 && items[0].second.empty()) {
        // This subtree's own root enters: its weight jumps to the capacity of
        // the whole branch and stays there.
        Rational w = 1 / f.tail_weight(k);
        for (std::size_t t = items[0].first; t <= total_stages; ++t) out[t] = w;
        return;
    }
    std::vector<std::vector<Rational>> child(b);
    for (int i = 0; i < b; ++i) {
        std::vector<std::pair<std::size_t, Word>> sub;
        for (const auto& [stage, w] : items)
            if (w.at(0) == i) sub.emplace_back(stage, w.suffix_from(1));
        ww_timeline(f, std::move(sub), k + 1, total_stages, b, child[i]);
    }
    Rational fk = f.eval(k);
    Rational prev_sum = 0;
    for (std::size_t t = 1; t <= total_stages; ++t) {
        Rational sum = 0;
        for (int i = 0; i < b; ++i) sum += child[i][t];
        if (sum == prev_sum) {
            out[t] = out[t - 1];
        } else {
            Rational denom = 1 + fk * sum;
            out[t] = out[t - 1] + (sum - prev_sum) / denom;
        }
        prev_sum = std::move(sum);
    }
}

}  // namespace

GoodEnumeration GoodEnumeration::from_words(std::vector<Word> order, Alphabet ab) {
    for (std::size_t t = 0; t < order.size(); ++t) {
        for (std::size_t i = 0; i < order[t].size(); ++i)
            if (order[t].at(i) < 0 || order[t].at(i) >= ab.size())
                throw DomainError("stage " + std::to_string(t + 1) + ": word '" +
                                  word_display(order[t]) + "' uses a symbol outside the alphabet");
        for (std::size_t s = 0; s < t; ++s) {
            if (order[s] == order[t])
                throw DomainError("stage " + std::to_string(t + 1) + ": word '" +
                                  word_display(order[t]) + "' already entered at stage " +
                                  std::to_string(s + 1));
            if (order[s].is_prefix_of(order[t]) || order[t].is_prefix_of(order[s]))
                throw DomainError("stage " + std::to_string(t + 1) + ": word '" +
                                  word_display(order[t]) + "' overlaps word '" +
                                  word_display(order[s]) + "' from stage " + std::to_string(s + 1));
        }
    }
    return GoodEnumeration(std::move(order), ab);
}

GoodEnumeration GoodEnumeration::parse_lines(std::istream& in, Alphabet ab) {
    std::vector<Word> order;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t");
        std::string token = line.substr(first, last - first + 1);
        order.push_back(token == "-" ? Word() : Word::parse(token, ab));
    }
    try {
        return from_words(std::move(order), ab);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

GoodEnumeration GoodEnumeration::load_file(const std::string& path, Alphabet ab) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open enumeration file '" + path + "'");
    return parse_lines(in, ab);
}

PrefixFreeSet GoodEnumeration::set_after(std::size_t t) const {
    return PrefixFreeSet::from_words(
        std::vector<Word>(order_.begin(), order_.begin() + std::min(t, order_.size())), alphabet_);
}

GoodEnumeration GoodEnumeration::prefix(std::size_t t) const {
    return GoodEnumeration(
        std::vector<Word>(order_.begin(), order_.begin() + std::min(t, order_.size())), alphabet_);
}

DynamicWeightTrace dynamic_weight(const Kernel& kernel, const GoodEnumeration& enumeration,
                                  long shift) {
    if (!(kernel.alphabet() == enumeration.alphabet()))
        throw DomainError("online weight: kernel and enumeration alphabets do not match");
    if (!kernel.is_amicable())
        throw DomainError("online weight needs an amicable kernel; finite-support kernels "
                          "admit no two-sided capacity bound");
    if (shift < 0) throw DomainError("kernel shift must be nonnegative");

    std::size_t total = enumeration.stages();
    std::vector<std::pair<std::size_t, Word>> items;
    items.reserve(total);
    for (std::size_t t = 0; t < total; ++t) items.emplace_back(t + 1, enumeration.order()[t]);

    std::vector<Rational> timeline;
    ww_timeline(kernel, std::move(items), shift, total, kernel.alphabet().size(), timeline);

    DynamicWeightTrace trace;
    trace.stages.reserve(total);
    for (std::size_t t = 1; t <= total; ++t)
        trace.stages.push_back(DynamicWeightStage{t, enumeration.order()[t - 1],
                                                  Rational(timeline[t] - timeline[t - 1]),
                                                  timeline[t]});
    trace.final_ww = timeline[total];
    return trace;
}

TrieMeasure staged_measure(const Kernel& kernel, const GoodEnumeration& enumeration, long shift) {
    DynamicWeightTrace trace = dynamic_weight(kernel, enumeration, shift);
    TrieMeasure mu = TrieMeasure::zero(enumeration.alphabet());
    for (const auto& stage : trace.stages)
        mu = add(mu, TrieMeasure::uniform_on(stage.word, stage.increment, enumeration.alphabet()));
    return mu;
}

SandwichReport check_sandwich(const Kernel& kernel, const GoodEnumeration& enumeration,
                              long shift) {
    SandwichReport report;
    report.ww = dynamic_weight(kernel, enumeration, shift).final_ww;
    report.capacity_value = capacity(kernel, enumeration.set(), shift);
    report.bound_constant = 2 * kernel.norm_bound() + 2;
    report.lower_ok = report.capacity_value <= report.ww;
    report.upper_ok = report.ww <= report.bound_constant * report.capacity_value;
    return report;
}

OrderDependenceWitness order_dependence_witness(const Kernel& kernel, int max_depth) {
    OrderDependenceWitness witness;
    Alphabet ab = kernel.alphabet();
    for (const auto& set : all_prefix_free_sets(ab, max_depth)) {
        if (set.words().size() < 2) continue;
        ++witness.sets_searched;
        std::vector<Word> order = set.words();
        Rational first =
            dynamic_weight(kernel, GoodEnumeration::from_words(order, ab)).final_ww;
        ++witness.orders_searched;
        std::vector<Word> perm = order;
        while (std::next_permutation(perm.begin(), perm.end())) {
            ++witness.orders_searched;
            Rational ww = dynamic_weight(kernel, GoodEnumeration::from_words(perm, ab)).final_ww;
            if (ww != first) {
                witness.found = true;
                witness.order_a = order;
                witness.order_b = perm;
                witness.ww_a = first;
                witness.ww_b = ww;
                return witness;
            }
        }
    }
    return witness;
}

CalcInequalityReport calc_inequality_check(const Rational& a, std::size_t samples) {
    if (a < 2) throw DomainError("inequality domain is empty for a < 2, got " + rational_str(a));
    if (samples == 0) throw DomainError("inequality check needs at least one sample");

    using float50 = boost::multiprecision::cpp_bin_float_50;
    auto to_float50 = [](const Rational& q) {
        return float50(q.get_num().get_str()) / float50(q.get_den().get_str());
    };

    float50 af = to_float50(a);
    float50 upper = af - 2;
    float50 worst = std::numeric_limits<float50>::infinity();
    std::size_t steps = samples > 1 ? samples - 1 : 1;
    for (std::size_t i = 0; i < samples; ++i) {
        float50 y = upper * static_cast<unsigned long>(i) / static_cast<unsigned long>(steps);
        float50 lhs = log(1 + af * y);
        float50 rhs = af * y / (1 + y);
        float50 margin = rhs - lhs;
        if (margin < worst) worst = margin;
    }

    CalcInequalityReport report;
    report.a = a;
    report.samples = samples;
    report.worst_margin = worst.convert_to<double>();
    report.pass = worst >= float50(-1.0e-12);
    return report;
}

void write_trace_csv(std::ostream& out, const Kernel& kernel, const GoodEnumeration& enumeration,
                     const DynamicWeightTrace& trace, long shift) {
    Rational bound_a = 2 * kernel.norm_bound() + 2;
    out << "stage,word,increment,ww,capacity,bound_A,ratio\n";
    for (const auto& s : trace.stages) {
        Rational cap = capacity(kernel, enumeration.set_after(s.stage), shift);
        out << s.stage << ',' << word_display(s.word) << ',' << rational_str(s.increment) << ','
            << rational_str(s.ww) << ',' << rational_str(cap) << ',' << rational_str(bound_a)
            << ',';
        if (sgn(cap) > 0) out << rational_str(Rational(s.ww / cap));
        out << '\n';
    }
    Rational cap = capacity(kernel, enumeration.set(), shift);
    bool pass = cap <= trace.final_ww && trace.final_ww <= bound_a * cap;
    out << "final," << (pass ? "PASS" : "FAIL") << ",," << rational_str(trace.final_ww) << ','
        << rational_str(cap) << ',' << rational_str(bound_a) << ',';
    if (sgn(cap) > 0) out << rational_str(Rational(trace.final_ww / cap));
    out << '\n';
}

}  // namespace cantor
