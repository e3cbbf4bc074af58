#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

/// Alphabet {0, ..., size-1}. Words are serialized as digit strings, which
/// caps the size at 10.
class Alphabet {
public:
    explicit Alphabet(int size) : size_(size) {
        if (size < 2 || size > 10)
            throw DomainError("alphabet size must be between 2 and 10");
    }
    int size() const { return size_; }
    bool operator==(const Alphabet&) const = default;

private:
    int size_;
};

/// Finite word over a digit alphabet. The empty word is the root cylinder.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {}

    /// Parses a digit string; "" is the empty word. Symbols must be < ab.size().
    static Word parse(std::string_view digits, Alphabet ab);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    int at(std::size_t i) const { return symbols_[i]; }

    bool is_prefix_of(const Word& other) const;
    std::size_t common_prefix_length(const Word& other) const;

    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t n) const;
    Word prepended(int symbol) const;
    Word appended(int symbol) const;

    /// Digit string; empty for the empty word.
    std::string str() const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<std::uint8_t> symbols_;
};

/// Eventually periodic infinite sequence head . period period period ...
/// The period is nonempty; the representation is not required to be minimal,
/// and equality of the underlying sequences is decided exactly.
class EventuallyPeriodicSequence {
public:
    EventuallyPeriodicSequence(Word head, Word period);

    /// Parses "HEAD:PERIOD" (either side may be empty digits, period must
    /// parse nonempty). Symbols must be < ab.size().
    static EventuallyPeriodicSequence parse(std::string_view text, Alphabet ab);

    /// symbol^omega
    static EventuallyPeriodicSequence constant(int symbol);

    /// word . symbol^omega — the canonical representative point of [word].
    static EventuallyPeriodicSequence cylinder_point(const Word& word, int symbol = 0);

    int at(std::size_t n) const;

    /// The sequence with its first n symbols removed.
    EventuallyPeriodicSequence drop(std::size_t n) const;

    const Word& head() const { return head_; }
    const Word& period() const { return period_; }

    /// First n symbols as a word.
    Word prefix(std::size_t n) const;

    /// "HEAD:PERIOD"
    std::string str() const;

    /// Index of the first position where the sequences differ, or nullopt if
    /// they are equal. Exact: two eventually periodic sequences agreeing on
    /// max(head lengths) + lcm(period lengths) symbols agree everywhere.
    static std::optional<std::size_t> first_disagreement(
        const EventuallyPeriodicSequence& a, const EventuallyPeriodicSequence& b);

    bool same_sequence(const EventuallyPeriodicSequence& other) const {
        return !first_disagreement(*this, other).has_value();
    }

private:
    Word head_;
    Word period_;
};

}  // namespace cantor
