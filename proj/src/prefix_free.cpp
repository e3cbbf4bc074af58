#include "cantor/prefix_free.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cantor {

PrefixFreeSet PrefixFreeSet::from_words(std::vector<Word> words, Alphabet ab) {
    for (const auto& w : words)
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w.at(i) < 0 || w.at(i) >= ab.size())
                throw DomainError("word '" + w.str() + "' uses a symbol outside the alphabet");
    std::sort(words.begin(), words.end());
    // In sorted order a prefix pair must be adjacent: anything between a word
    // and its extension shares the word as a prefix too.
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        if (words[i] == words[i + 1])
            throw DomainError("duplicate word '" + words[i].str() + "' in prefix-free set");
        if (words[i].is_prefix_of(words[i + 1]))
            throw DomainError("word '" + words[i].str() + "' is a prefix of '" +
                              words[i + 1].str() + "'");
    }
    return PrefixFreeSet(std::move(words), ab);
}

PrefixFreeSet PrefixFreeSet::parse_lines(std::istream& in, Alphabet ab) {
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t");
        std::string token = line.substr(first, last - first + 1);
        words.push_back(token == "-" ? Word() : Word::parse(token, ab));
    }
    try {
        return from_words(std::move(words), ab);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

PrefixFreeSet PrefixFreeSet::load_file(const std::string& path, Alphabet ab) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open set file '" + path + "'");
    return parse_lines(in, ab);
}

std::size_t PrefixFreeSet::max_word_length() const {
    std::size_t d = 0;
    for (const auto& w : words_) d = std::max(d, w.size());
    return d;
}

bool PrefixFreeSet::covers(const Word& w) const {
    for (const auto& s : words_)
        if (s.is_prefix_of(w)) return true;
    return false;
}

PrefixFreeSet PrefixFreeSet::branch(int symbol) const {
    std::vector<Word> words;
    for (const auto& w : words_)
        if (!w.empty() && w.at(0) == symbol) words.push_back(w.suffix_from(1));
    return PrefixFreeSet(std::move(words), alphabet_);  // still sorted and prefix-free
}

std::vector<Word> PrefixFreeSet::complement_antichain() const {
    if (is_empty()) return {Word()};
    if (is_whole_space()) return {};
    std::vector<Word> out;
    for (int i = 0; i < alphabet_.size(); ++i)
        for (const auto& w : branch(i).complement_antichain()) out.push_back(w.prepended(i));
    return out;
}

namespace {

// A(0) = {empty, {root}}; A(d) = {{root}} plus every way of choosing one
// member of A(d-1) below each branch. Distinct choices give distinct sets, so
// no deduplication is needed.
std::vector<std::vector<Word>> antichains_to_depth(int d, int b) {
    if (d == 0) return {{}, {Word()}};
    auto sub = antichains_to_depth(d - 1, b);
    std::vector<std::vector<Word>> out;
    out.push_back({Word()});
    std::vector<std::size_t> pick(b, 0);
    for (;;) {
        std::vector<Word> set;
        for (int i = 0; i < b; ++i)
            for (const auto& w : sub[pick[i]]) set.push_back(w.prepended(i));
        out.push_back(std::move(set));
        int i = b;
        while (i > 0 && pick[i - 1] == sub.size() - 1) pick[--i] = 0;
        if (i == 0) break;
        ++pick[i - 1];
    }
    return out;
}

}  // namespace

std::vector<PrefixFreeSet> all_prefix_free_sets(Alphabet ab, int max_depth) {
    if (max_depth < 0) throw DomainError("antichain sweep depth must be nonnegative");
    std::vector<PrefixFreeSet> out;
    for (auto& words : antichains_to_depth(max_depth, ab.size()))
        out.push_back(PrefixFreeSet::from_words(std::move(words), ab));
    return out;
}

}  // namespace cantor
