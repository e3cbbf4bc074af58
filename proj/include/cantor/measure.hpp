#pragma once

#include <memory>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cantor/kernel.hpp"
#include "cantor/rational.hpp"
#include "cantor/word.hpp"

namespace cantor {

/// A finite nonnegative Borel measure on the space of infinite words,
/// represented by a finite trie of cylinder masses. Every leaf carries a
/// closing rule for the mass below it:
///
///   uniform tail — the mass splits equally among children forever
///   point tail   — the mass sits on a single eventually periodic sequence
///
/// Internal nodes carry explicit children whose masses must sum to the
/// node's mass (exact additivity). Nodes are immutable and shared, so
/// measures are cheap to copy.
class TrieMeasure {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct UniformTail {};
    struct PointTail {
        EventuallyPeriodicSequence atom;
    };
    struct Node {
        Rational mass;
        // Children vector has exactly alphabet-size entries; a null entry is
        // an empty subtree.
        std::variant<UniformTail, PointTail, std::vector<NodePtr>> below;
    };

    /// The zero measure.
    static TrieMeasure zero(Alphabet ab);

    /// total * (uniform coin-flipping measure).
    static TrieMeasure uniform(const Rational& total, Alphabet ab);

    /// Mass `total` spread uniformly over the cylinder [word].
    static TrieMeasure uniform_on(const Word& word, const Rational& total, Alphabet ab);

    /// An atom of the given mass at one point.
    static TrieMeasure point_mass(const EventuallyPeriodicSequence& atom, const Rational& mass,
                                  Alphabet ab);

    /// Wraps an explicitly built trie (null means zero) and validates it.
    static TrieMeasure from_root(NodePtr root, Alphabet ab);

    Alphabet alphabet() const { return alphabet_; }
    const NodePtr& root() const { return root_; }

    /// mu[empty word] — the measure of the whole space.
    const Rational& total_mass() const;

    /// mu[word], exact.
    Rational cylinder_mass(const Word& word) const;

    bool is_zero() const { return sgn(total_mass()) == 0; }

    /// True when some point tail carries positive mass.
    bool has_atoms() const;

    /// Largest depth of an explicit trie node.
    std::size_t depth() const;

    /// c * mu for a positive rational c.
    TrieMeasure scaled(const Rational& c) const;

    /// Checks exact node additivity and alphabet consistency; DomainError on
    /// violation. Parsing validates automatically; this re-checks built values.
    void validate() const;

    nlohmann::json to_json() const;
    static TrieMeasure from_json(const nlohmann::json& j, Alphabet ab);
    static TrieMeasure load_file(const std::string& path, Alphabet ab);

private:
    TrieMeasure(NodePtr root, Alphabet ab) : root_(std::move(root)), alphabet_(ab) {}

    NodePtr root_;
    Alphabet alphabet_;

    friend TrieMeasure add(const TrieMeasure& a, const TrieMeasure& b);
};

/// mu + nu. Point tails merge when their atoms are provably the same
/// sequence; distinct atoms force the trie to materialize down to their first
/// disagreement (DomainError past depth 64). A point tail meeting a uniform
/// tail below one cylinder has no trie representation and is a DomainError.
TrieMeasure add(const TrieMeasure& a, const TrieMeasure& b);

/// Potential of mu at the point x under the k-shifted kernel:
///   sum_{n >= 0} f(n + k) mu[x restricted to n]
/// Exact; +inf exactly when x is an atom of mu and the kernel has infinite
/// support.
ExtValue potential(const Kernel& kernel, const TrieMeasure& mu, const EventuallyPeriodicSequence& x,
                   long shift = 0);

/// Energy  sum_words f(|w| + k) mu[w]^2  (sum over all finite words).
ExtValue energy(const Kernel& kernel, const TrieMeasure& mu, long shift = 0);

/// Mutual energy  sum_words f(|w| + k) mu[w] nu[w]; symmetric, bilinear.
ExtValue mutual_energy(const Kernel& kernel, const TrieMeasure& mu, const TrieMeasure& nu,
                       long shift = 0);

/// Riesz s-energy with 2^s = r on a binary alphabet, via the exact identity
///   RE(mu) = (1/r) mu[root]^2 + (1 - 1/r) E(mu)
/// where E is the energy under the geometric(r) kernel. Requires 1 < r < 2.
ExtValue riesz_energy(const TrieMeasure& mu, const Rational& r);

/// Riesz s-potential at x: (1/r) mu[root] + (1 - 1/r) P(mu, x) under the
/// geometric(r) kernel. Requires 1 < r < 2 and a binary alphabet.
ExtValue riesz_potential(const TrieMeasure& mu, const EventuallyPeriodicSequence& x,
                         const Rational& r);

}  // namespace cantor
