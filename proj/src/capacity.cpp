#include "cantor/capacity.hpp"

#include <span>

#include "simplex.hpp"

namespace cantor {

namespace {

using Node = TrieMeasure::Node;
using NodePtr = TrieMeasure::NodePtr;

void require_capacity_kernel(const Kernel& kernel, const PrefixFreeSet& set) {
    if (!(kernel.alphabet() == set.alphabet()))
        throw DomainError("capacity: kernel and set alphabets do not match");
    if (kernel.has_finite_support())
        throw DomainError(
            "capacity is undefined for finite-support kernels: no finite mass reaches "
            "potential 1 below their support");
}

// The words() array is sorted, so every slice sharing a prefix is contiguous
// and a slice containing its own root word contains nothing else.
Rational cap_rec(const Kernel& f, std::span<const Word> words, std::size_t depth, long k) {
    if (words.empty()) return 0;
    if (words.front().size() == depth) return 1 / f.tail_weight(k);
    Rational branch_sum = 0;
    std::size_t i = 0;
    while (i < words.size()) {
        std::size_t j = i;
        while (j < words.size() && words[j].at(depth) == words[i].at(depth)) ++j;
        branch_sum += cap_rec(f, words.subspan(i, j - i), depth + 1, k + 1);
        i = j;
    }
    return branch_sum / (1 + f.eval(k) * branch_sum);
}

NodePtr scale_subtree(const NodePtr& n, const Rational& c) {
    if (!n) return nullptr;
    Node out{Rational(n->mass * c), n->below};
    if (auto* children = std::get_if<std::vector<NodePtr>>(&out.below))
        for (auto& child : *children) child = scale_subtree(child, c);
    return std::make_shared<const Node>(std::move(out));
}

struct RealizePart {
    Rational cap;
    NodePtr node;
};

RealizePart realize_rec(const Kernel& f, std::span<const Word> words, std::size_t depth, long k,
                        int b) {
    if (words.empty()) return {Rational(0), nullptr};
    if (words.front().size() == depth) {
        Rational cap = 1 / f.tail_weight(k);
        return {cap, std::make_shared<const Node>(Node{cap, TrieMeasure::UniformTail{}})};
    }
    std::vector<NodePtr> children(b);
    Rational branch_sum = 0;
    std::size_t i = 0;
    while (i < words.size()) {
        std::size_t j = i;
        while (j < words.size() && words[j].at(depth) == words[i].at(depth)) ++j;
        RealizePart part = realize_rec(f, words.subspan(i, j - i), depth + 1, k + 1, b);
        children[words[i].at(depth)] = part.node;
        branch_sum += part.cap;
        i = j;
    }
    Rational denom = 1 + f.eval(k) * branch_sum;
    for (auto& child : children) child = scale_subtree(child, 1 / denom);
    Rational cap = branch_sum / denom;
    return {cap, std::make_shared<const Node>(Node{cap, std::move(children)})};
}

Rational capacity_s_rec(const Rational& r, std::span<const Word> words, std::size_t depth) {
    if (words.empty()) return 0;
    if (words.front().size() == depth) return 1 - r / 2;
    Rational branch_sum = 0;
    std::size_t i = 0;
    while (i < words.size()) {
        std::size_t j = i;
        while (j < words.size() && words[j].at(depth) == words[i].at(depth)) ++j;
        branch_sum += capacity_s_rec(r, words.subspan(i, j - i), depth + 1);
        i = j;
    }
    return branch_sum / (r + branch_sum);
}

std::vector<Word> all_words_of_length(std::size_t d, int b) {
    std::vector<Word> out;
    std::vector<std::uint8_t> digits(d, 0);
    for (;;) {
        out.emplace_back(digits);
        std::size_t i = d;
        while (i > 0 && digits[i - 1] == b - 1) digits[--i] = 0;
        if (i == 0) return out;
        ++digits[i - 1];
    }
}

}  // namespace

Rational capacity(const Kernel& kernel, const PrefixFreeSet& set, long shift) {
    require_capacity_kernel(kernel, set);
    if (shift < 0) throw DomainError("kernel shift must be nonnegative");
    return cap_rec(kernel, set.words(), 0, shift);
}

TrieMeasure realizing_measure(const Kernel& kernel, const PrefixFreeSet& set, long shift) {
    require_capacity_kernel(kernel, set);
    if (shift < 0) throw DomainError("kernel shift must be nonnegative");
    RealizePart part = realize_rec(kernel, set.words(), 0, shift, set.alphabet().size());
    return TrieMeasure::from_root(part.node, set.alphabet());
}

Rational capacity_s(const PrefixFreeSet& set, const Rational& r) {
    if (set.alphabet().size() != 2)
        throw DomainError("distance-based capacity is defined over a binary alphabet");
    if (r <= 1 || r >= 2)
        throw DomainError("distance exponent must satisfy 1 < r < 2, got " + rational_str(r));
    return capacity_s_rec(r, set.words(), 0);
}

Rational capacity_lp_oracle(const Kernel& kernel, const PrefixFreeSet& set, int max_depth) {
    require_capacity_kernel(kernel, set);
    if (set.is_empty()) throw DomainError("capacity oracle needs a nonempty set");
    if (max_depth < 0) throw DomainError("capacity oracle depth limit must be nonnegative");

    const int b = set.alphabet().size();
    const std::size_t d = set.max_word_length();
    if (d > static_cast<std::size_t>(max_depth))
        throw DomainError("capacity oracle instance too deep: words of length " +
                          std::to_string(d) + " exceed the limit " + std::to_string(max_depth));
    mpz_class cylinders, limit;
    mpz_ui_pow_ui(cylinders.get_mpz_t(), static_cast<unsigned long>(b),
                  static_cast<unsigned long>(d));
    mpz_ui_pow_ui(limit.get_mpz_t(), 2, static_cast<unsigned long>(max_depth));
    if (cylinders > limit)
        throw DomainError("capacity oracle instance too wide: " + cylinders.get_str() +
                          " cylinders exceed the limit " + limit.get_str());

    // The primal program minimizes total mass over all depth-d cylinder
    // masses subject to: for each depth-d cylinder inside the set, the
    // potential it receives is at least 1. We solve the dual (a maximization
    // with nonnegative right-hand sides) and read the value off by strong
    // duality. Coefficient between cylinders u (in the set) and w:
    //   sum of f over their common prefixes, plus the full tail weight at
    //   depth d when u = w (mass below w keeps feeding every deeper prefix
    //   of u).
    std::vector<Word> all = all_words_of_length(d, b);
    std::vector<std::size_t> inside;
    for (std::size_t idx = 0; idx < all.size(); ++idx)
        if (set.covers(all[idx])) inside.push_back(idx);

    std::vector<Rational> cum(d + 1);  // cum[t] = sum_{n < t} f(n)
    cum[0] = 0;
    for (std::size_t t = 0; t < d; ++t) cum[t + 1] = cum[t] + kernel.eval(static_cast<long>(t));
    Rational tail = kernel.tail_weight(static_cast<long>(d));

    std::vector<std::vector<Rational>> M(all.size(), std::vector<Rational>(inside.size()));
    for (std::size_t row = 0; row < all.size(); ++row) {
        for (std::size_t col = 0; col < inside.size(); ++col) {
            const Word& u = all[inside[col]];
            const Word& w = all[row];
            std::size_t cpl = u.common_prefix_length(w);
            long top = std::min<long>(static_cast<long>(cpl), static_cast<long>(d) - 1);
            M[row][col] = top >= 0 ? cum[top + 1] : Rational(0);
            if (inside[col] == row) M[row][col] += tail;
        }
    }
    std::vector<Rational> rhs(all.size(), Rational(1));
    std::vector<Rational> objective(inside.size(), Rational(1));
    return detail::simplex_max(M, rhs, objective);
}

CfTestReport cf_test_check(const Kernel& kernel, const std::vector<PrefixFreeSet>& levels) {
    CfTestReport report;
    report.pass = true;
    for (std::size_t n = 0; n < levels.size(); ++n) {
        CfTestLevel level;
        level.index = n;
        level.capacity_value = capacity(kernel, levels[n]);
        level.bound = rational_pow(make_rational(1, 2), static_cast<unsigned long>(n));
        level.pass = level.capacity_value <= level.bound;
        report.pass = report.pass && level.pass;
        report.levels.push_back(std::move(level));
    }
    return report;
}

}  // namespace cantor
