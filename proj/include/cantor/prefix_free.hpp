#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cantor/word.hpp"

namespace cantor {

/// A finite antichain of words: no word is a prefix of another. It denotes
/// the open set that is the disjoint union of its cylinders. Words are kept
/// sorted, so equal sets compare equal.
class PrefixFreeSet {
public:
    static PrefixFreeSet empty(Alphabet ab) { return PrefixFreeSet({}, ab); }

    /// Sorts and validates; DomainError on duplicates or prefix violations.
    static PrefixFreeSet from_words(std::vector<Word> words, Alphabet ab);

    /// One word per line, '-' for the empty word, blank lines ignored.
    static PrefixFreeSet parse_lines(std::istream& in, Alphabet ab);
    static PrefixFreeSet load_file(const std::string& path, Alphabet ab);

    const std::vector<Word>& words() const { return words_; }
    Alphabet alphabet() const { return alphabet_; }

    bool is_empty() const { return words_.empty(); }

    /// True when the set is {empty word}, i.e. the whole space.
    bool is_whole_space() const { return words_.size() == 1 && words_[0].empty(); }

    std::size_t max_word_length() const;

    /// True when some word of the set is a prefix of w (so [w] lies inside
    /// the denoted open set).
    bool covers(const Word& w) const;

    /// The derived set { w : symbol w in this } — the antichain seen below
    /// one root branch.
    PrefixFreeSet branch(int symbol) const;

    /// The minimal words whose cylinders avoid the denoted open set. Together
    /// with this set's words they partition the space; empty when the set is
    /// the whole space.
    std::vector<Word> complement_antichain() const;

    bool operator==(const PrefixFreeSet&) const = default;

private:
    PrefixFreeSet(std::vector<Word> words, Alphabet ab)
        : words_(std::move(words)), alphabet_(ab) {}

    std::vector<Word> words_;  // sorted
    Alphabet alphabet_;
};

/// Every antichain of words of length <= max_depth, the empty one included.
/// The count grows doubly exponentially (binary: 2, 5, 26, 677, ...); meant
/// for exhaustive sweeps at small depth.
std::vector<PrefixFreeSet> all_prefix_free_sets(Alphabet ab, int max_depth);

}  // namespace cantor
