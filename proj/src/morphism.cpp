#include "wordlib/morphism.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wordlib {

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (images_.size() != alphabet_.size())
        throw std::invalid_argument("morphism: need exactly one image per symbol");
    for (const Word& im : images_) {
        if (im.empty()) throw std::invalid_argument("morphism: empty image");
        if (!(im.alphabet() == alphabet_)) throw std::invalid_argument("morphism: image over a different alphabet");
    }
}

Morphism Morphism::parse(std::string_view text) {
    struct Rule { std::string lhs, rhs; };
    std::vector<Rule> rules;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::size_t arrow = line.find("->");
        if (arrow == std::string::npos) {
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (blank) continue;
            throw std::invalid_argument("morphism: bad rule line: " + line);
        }
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t\r");
            std::size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        Rule r{trim(line.substr(0, arrow)), trim(line.substr(arrow + 2))};
        if (r.lhs.empty() || r.rhs.empty()) throw std::invalid_argument("morphism: bad rule line: " + line);
        rules.push_back(std::move(r));
    }
    if (rules.empty()) throw std::invalid_argument("morphism: no rules");

    std::set<std::string> lhs;
    for (const auto& r : rules)
        if (!lhs.insert(r.lhs).second) throw std::invalid_argument("morphism: duplicate rule for " + r.lhs);
    Alphabet alph{std::vector<std::string>(lhs.begin(), lhs.end())};

    std::vector<Word> images(alph.size());
    for (const auto& r : rules) images[alph.index_of(r.lhs)] = Word::parse(r.rhs, alph);
    return Morphism(std::move(alph), std::move(images));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
    std::vector<Word> images;
    for (std::size_t s = 0; s < alphabet.size(); ++s)
        images.emplace_back(alphabet, std::vector<uint8_t>{static_cast<uint8_t>(s)});
    return Morphism(alphabet, std::move(images));
}

std::string Morphism::str() const {
    std::string out;
    for (std::size_t s = 0; s < alphabet_.size(); ++s) {
        out += alphabet_.token(s);
        out += " -> ";
        out += images_[s].str();
        out += '\n';
    }
    return out;
}

Word apply(const Morphism& m, const Word& w) {
    if (!(w.alphabet() == m.alphabet())) throw std::invalid_argument("apply: word over a different alphabet");
    std::vector<uint8_t> out;
    for (uint8_t s : w.data()) {
        const auto& im = m.image(s).data();
        out.insert(out.end(), im.begin(), im.end());
    }
    return Word(m.alphabet(), std::move(out));
}

Word fixed_point_prefix(const Morphism& m, uint8_t seed, std::size_t len) {
    if (!m.prolongable_on(seed)) throw std::invalid_argument("fixed point: morphism is not prolongable on the seed");
    Word u(m.alphabet(), {seed});
    // Each pass maps a prefix to a strictly longer prefix of the fixed point,
    // so truncating to len keeps memory bounded.
    while (u.size() < len) {
        Word v = apply(m, u);
        u = v.size() > len ? v.prefix(len) : std::move(v);
    }
    return u.prefix(len);
}

SturmianMorphismEvidence is_sturmian_morphism(const Morphism& m) {
    if (m.alphabet().size() != 2) throw std::invalid_argument("sturmian test: binary morphisms only");
    Word test = Word::parse("abbabababbaba", m.alphabet());
    SturmianMorphismEvidence ev;
    ev.image = apply(m, test);
    BalanceResult r = is_m_balanced(ev.image, 1);
    ev.sturmian = r.ok();
    ev.witness = r.witness;
    return ev;
}

DirectiveSequence::DirectiveSequence(std::vector<unsigned> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("directive sequence: empty");
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i] == 0) throw std::invalid_argument("directive sequence: entries past the first must be positive");
}

DirectiveSequence DirectiveSequence::parse(std::string_view text) {
    std::vector<unsigned> entries;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.find_last_not_of(" \t\r\n") + 1 || v < 0)
            throw std::invalid_argument("directive sequence: bad entry: " + tok);
        entries.push_back(static_cast<unsigned>(v));
    }
    return DirectiveSequence(std::move(entries));
}

Word standard_word(const DirectiveSequence& d, std::size_t len) {
    if (len == 0) throw std::invalid_argument("standard word: len must be positive");
    if (d.entries().size() == 1 && d.entries()[0] == 0 && len > 1)
        throw std::invalid_argument("standard word: the directive (0) generates no growth");
    Alphabet alph = binary_ab();
    std::vector<uint8_t> prev = {1}; // s_{-1} = b
    std::vector<uint8_t> cur = {0};  // s_0 = a
    for (std::size_t n = 0; cur.size() < len; ++n) {
        std::vector<uint8_t> next;
        for (unsigned i = 0; i < d.entry(n); ++i) next.insert(next.end(), cur.begin(), cur.end());
        next.insert(next.end(), prev.begin(), prev.end());
        if (next.size() > len + prev.size()) next.resize(len); // cap growth; prefixes are stable
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(len);
    return Word(alph, std::move(cur));
}

mpq_class directive_convergent(const DirectiveSequence& d) {
    // Standard convergent recurrences for [0; 1+d_0, d_1, ..., d_m].
    mpz_class h_prev = 1, h = 0; // h_{-1}, h_0 with a_0 = 0
    mpz_class k_prev = 0, k = 1;
    for (std::size_t i = 0; i < d.entries().size(); ++i) {
        mpz_class a = d.entries()[i] + (i == 0 ? 1 : 0);
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
    }
    mpq_class q(h, k);
    q.canonicalize();
    return q;
}

Word rauzy_rules_word(const Word& directive, uint8_t a) {
    if (a >= directive.alphabet().size()) throw std::invalid_argument("rauzy rules: symbol out of range");
    std::vector<uint8_t> cur = {a};
    for (std::size_t i = directive.size(); i-- > 0;) {
        uint8_t x = directive[i];
        std::vector<uint8_t> next;
        for (uint8_t y : cur) {
            next.push_back(x);
            if (y != x) next.push_back(y);
        }
        cur = std::move(next);
    }
    return Word(directive.alphabet(), std::move(cur));
}

Word closure_word(const Word& delta, std::size_t len) {
    if (delta.empty()) throw std::invalid_argument("closure word: empty delta");
    Word u(delta.alphabet(), {});
    for (std::size_t n = 0; u.size() < len; ++n)
        u = palindromic_closure(u.append(delta[n % delta.size()]));
    return u.prefix(len);
}

Word fraenkel_word(std::size_t k, std::size_t len) {
    if (k < 3 || k > 8) throw std::invalid_argument("fraenkel word: k must be in [3, 8]");
    Alphabet alph = letters(k);
    std::vector<uint8_t> u = {0}; // U_1 = a
    for (std::size_t i = 2; i <= k; ++i) {
        std::vector<uint8_t> next = u;
        next.push_back(static_cast<uint8_t>(i - 1));
        next.insert(next.end(), u.begin(), u.end());
        u = std::move(next);
    }
    std::vector<uint8_t> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(u[i % u.size()]);
    return Word(alph, std::move(out));
}

Morphism fibonacci_morphism() { return Morphism::parse("a -> ab\nb -> a"); }
Morphism thue_morse_morphism() { return Morphism::parse("a -> ab\nb -> ba"); }
Morphism tribonacci_morphism() { return Morphism::parse("a -> ab\nb -> ac\nc -> a"); }

} // namespace wordlib
