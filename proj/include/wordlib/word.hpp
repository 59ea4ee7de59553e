#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordlib {

// Ordered set of symbol tokens.  At most 64 symbols so extension sets fit
// in a bitmask.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
        if (tokens_.empty()) throw std::invalid_argument("alphabet: empty");
        if (tokens_.size() > 64) throw std::invalid_argument("alphabet: more than 64 symbols");
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            if (tokens_[i].empty()) throw std::invalid_argument("alphabet: empty token");
            if (!index_.emplace(tokens_[i], i).second)
                throw std::invalid_argument("alphabet: duplicate token " + tokens_[i]);
        }
    }

    std::size_t size() const { return tokens_.size(); }
    const std::string& token(std::size_t i) const { return tokens_.at(i); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    bool has(std::string_view tok) const { return index_.find(std::string(tok)) != index_.end(); }

    std::size_t index_of(std::string_view tok) const {
        auto it = index_.find(std::string(tok));
        if (it == index_.end()) throw std::invalid_argument("alphabet: unknown token " + std::string(tok));
        return it->second;
    }

    // True when every token is a single character, so words can be printed
    // without separators.
    bool single_char() const {
        for (const auto& t : tokens_)
            if (t.size() != 1) return false;
        return true;
    }

    bool operator==(const Alphabet& o) const { return tokens_ == o.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::map<std::string, std::size_t> index_;
};

// Finite word: a sequence of symbol indices over an alphabet.
class Word {
public:
    Word() = default;
    Word(Alphabet alphabet, std::vector<uint8_t> data) : alphabet_(std::move(alphabet)), data_(std::move(data)) {
        for (uint8_t s : data_)
            if (s >= alphabet_.size()) throw std::invalid_argument("word: symbol index out of range");
    }

    // Builds a word from text.  Tokens are comma-separated when a comma is
    // present, otherwise one character each.  The alphabet is the sorted set
    // of distinct tokens unless one is supplied.
    static Word parse(std::string_view text);
    static Word parse(std::string_view text, const Alphabet& alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    uint8_t operator[](std::size_t i) const { return data_[i]; }
    const std::vector<uint8_t>& data() const { return data_; }

    Word subword(std::size_t pos, std::size_t len) const {
        if (pos + len > data_.size()) throw std::out_of_range("word: subword out of range");
        return Word(alphabet_, std::vector<uint8_t>(data_.begin() + pos, data_.begin() + pos + len));
    }

    Word prefix(std::size_t len) const { return subword(0, len); }

    Word reversed() const {
        std::vector<uint8_t> d(data_.rbegin(), data_.rend());
        return Word(alphabet_, std::move(d));
    }

    Word operator+(const Word& o) const {
        if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("word: alphabet mismatch");
        std::vector<uint8_t> d = data_;
        d.insert(d.end(), o.data_.begin(), o.data_.end());
        return Word(alphabet_, std::move(d));
    }

    Word append(uint8_t sym) const {
        std::vector<uint8_t> d = data_;
        d.push_back(sym);
        return Word(alphabet_, std::move(d));
    }

    bool is_palindrome() const {
        for (std::size_t i = 0, j = data_.size(); i + 1 < j; ++i, --j)
            if (data_[i] != data_[j - 1]) return false;
        return true;
    }

    // Number of occurrences of symbol `sym`.
    std::size_t count(uint8_t sym) const {
        std::size_t c = 0;
        for (uint8_t s : data_) c += (s == sym);
        return c;
    }

    // Occurrence positions of `pattern` in this word (naive scan).
    std::vector<std::size_t> occurrences(const Word& pattern) const;
    bool contains(const Word& pattern) const { return !occurrences(pattern).empty(); }

    // Text form: concatenated for single-char alphabets, comma-separated
    // otherwise.
    std::string str() const;

    bool operator==(const Word& o) const { return alphabet_ == o.alphabet_ && data_ == o.data_; }
    bool operator<(const Word& o) const { return data_ < o.data_; }

private:
    Alphabet alphabet_;
    std::vector<uint8_t> data_;
};

// Common alphabets.
Alphabet binary_ab();
Alphabet binary_01();
Alphabet letters(std::size_t k); // a, b, c, ...

// Re-expresses a word over a different alphabet of the same size,
// symbol index i mapping to symbol index i.
Word relabel(const Word& w, const Alphabet& target);

} // namespace wordlib
