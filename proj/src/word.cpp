#include "cantor/word.hpp"

#include <algorithm>
#include <numeric>

namespace cantor {

Word Word::parse(std::string_view digits, Alphabet ab) {
    std::vector<std::uint8_t> syms;
    syms.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw ParseError("word '" + std::string(digits) + "' contains non-digit '" +
                             std::string(1, c) + "'");
        int s = c - '0';
        if (s >= ab.size())
            throw ParseError("word '" + std::string(digits) + "' uses symbol " +
                             std::to_string(s) + " outside alphabet of size " +
                             std::to_string(ab.size()));
        syms.push_back(static_cast<std::uint8_t>(s));
    }
    return Word(std::move(syms));
}

bool Word::is_prefix_of(const Word& other) const {
    if (size() > other.size()) return false;
    return std::equal(symbols_.begin(), symbols_.end(), other.symbols_.begin());
}

std::size_t Word::common_prefix_length(const Word& other) const {
    std::size_t n = std::min(size(), other.size());
    std::size_t i = 0;
    while (i < n && symbols_[i] == other.symbols_[i]) ++i;
    return i;
}

Word Word::prefix(std::size_t n) const {
    return Word(std::vector<std::uint8_t>(symbols_.begin(), symbols_.begin() + n));
}

Word Word::suffix_from(std::size_t n) const {
    return Word(std::vector<std::uint8_t>(symbols_.begin() + n, symbols_.end()));
}

Word Word::prepended(int symbol) const {
    std::vector<std::uint8_t> syms;
    syms.reserve(size() + 1);
    syms.push_back(static_cast<std::uint8_t>(symbol));
    syms.insert(syms.end(), symbols_.begin(), symbols_.end());
    return Word(std::move(syms));
}

Word Word::appended(int symbol) const {
    std::vector<std::uint8_t> syms = symbols_;
    syms.push_back(static_cast<std::uint8_t>(symbol));
    return Word(std::move(syms));
}

std::string Word::str() const {
    std::string out;
    out.reserve(size());
    for (auto s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
}

EventuallyPeriodicSequence::EventuallyPeriodicSequence(Word head, Word period)
    : head_(std::move(head)), period_(std::move(period)) {
    if (period_.empty()) throw DomainError("eventually periodic sequence needs a nonempty period");
}

EventuallyPeriodicSequence EventuallyPeriodicSequence::parse(std::string_view text, Alphabet ab) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("sequence '" + std::string(text) + "' is missing ':' between head and period");
    Word head = Word::parse(text.substr(0, colon), ab);
    Word period = Word::parse(text.substr(colon + 1), ab);
    if (period.empty())
        throw ParseError("sequence '" + std::string(text) + "' has an empty period");
    return EventuallyPeriodicSequence(std::move(head), std::move(period));
}

EventuallyPeriodicSequence EventuallyPeriodicSequence::constant(int symbol) {
    return EventuallyPeriodicSequence(Word(), Word({static_cast<std::uint8_t>(symbol)}));
}

EventuallyPeriodicSequence EventuallyPeriodicSequence::cylinder_point(const Word& word, int symbol) {
    return EventuallyPeriodicSequence(word, Word({static_cast<std::uint8_t>(symbol)}));
}

int EventuallyPeriodicSequence::at(std::size_t n) const {
    if (n < head_.size()) return head_.at(n);
    return period_.at((n - head_.size()) % period_.size());
}

EventuallyPeriodicSequence EventuallyPeriodicSequence::drop(std::size_t n) const {
    if (n <= head_.size()) return EventuallyPeriodicSequence(head_.suffix_from(n), period_);
    std::size_t shift = (n - head_.size()) % period_.size();
    if (shift == 0) return EventuallyPeriodicSequence(Word(), period_);
    std::vector<std::uint8_t> rotated;
    rotated.reserve(period_.size());
    for (std::size_t i = 0; i < period_.size(); ++i)
        rotated.push_back(static_cast<std::uint8_t>(period_.at((i + shift) % period_.size())));
    return EventuallyPeriodicSequence(Word(), Word(std::move(rotated)));
}

Word EventuallyPeriodicSequence::prefix(std::size_t n) const {
    std::vector<std::uint8_t> syms;
    syms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) syms.push_back(static_cast<std::uint8_t>(at(i)));
    return Word(std::move(syms));
}

std::string EventuallyPeriodicSequence::str() const {
    return head_.str() + ":" + period_.str();
}

std::optional<std::size_t> EventuallyPeriodicSequence::first_disagreement(
    const EventuallyPeriodicSequence& a, const EventuallyPeriodicSequence& b) {
    std::size_t heads = std::max(a.head_.size(), b.head_.size());
    std::size_t bound = heads + std::lcm(a.period_.size(), b.period_.size());
    for (std::size_t i = 0; i < bound; ++i)
        if (a.at(i) != b.at(i)) return i;
    return std::nullopt;
}

}  // namespace cantor
