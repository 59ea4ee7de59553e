#include "wordlib/word.hpp"

#include <algorithm>
#include <set>

namespace wordlib {

static std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> toks;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            std::string t(text.substr(start, end - start));
            if (!t.empty()) toks.push_back(t);
            start = end + 1;
        }
    } else {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) toks.emplace_back(1, c);
    }
    return toks;
}

Word Word::parse(std::string_view text) {
    auto toks = split_tokens(text);
    std::set<std::string> distinct(toks.begin(), toks.end());
    Alphabet alph(std::vector<std::string>(distinct.begin(), distinct.end()));
    std::vector<uint8_t> data;
    data.reserve(toks.size());
    for (const auto& t : toks) data.push_back(static_cast<uint8_t>(alph.index_of(t)));
    return Word(std::move(alph), std::move(data));
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
    auto toks = split_tokens(text);
    std::vector<uint8_t> data;
    data.reserve(toks.size());
    for (const auto& t : toks) data.push_back(static_cast<uint8_t>(alphabet.index_of(t)));
    return Word(alphabet, std::move(data));
}

std::vector<std::size_t> Word::occurrences(const Word& pattern) const {
    std::vector<std::size_t> pos;
    if (pattern.size() == 0 || pattern.size() > data_.size()) return pos;
    for (std::size_t i = 0; i + pattern.size() <= data_.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < pattern.size(); ++j)
            if (data_[i + j] != pattern.data_[j]) { ok = false; break; }
        if (ok) pos.push_back(i);
    }
    return pos;
}

std::string Word::str() const {
    std::string out;
    bool sep = !alphabet_.single_char();
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (sep && i) out += ',';
        out += alphabet_.token(data_[i]);
    }
    return out;
}

Alphabet binary_ab() { return Alphabet({"a", "b"}); }
Alphabet binary_01() { return Alphabet({"0", "1"}); }

Alphabet letters(std::size_t k) {
    if (k == 0 || k > 26) throw std::invalid_argument("letters: k out of range");
    std::vector<std::string> toks;
    for (std::size_t i = 0; i < k; ++i) toks.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(std::move(toks));
}

Word relabel(const Word& w, const Alphabet& target) {
    if (target.size() < w.alphabet().size()) throw std::invalid_argument("relabel: target alphabet too small");
    return Word(target, w.data());
}

} // namespace wordlib
