#include "wordlib/analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace wordlib {

std::vector<std::size_t> complexity_profile(const FactorIndex& idx) {
    std::vector<std::size_t> t;
    t.reserve(idx.max_len());
    for (std::size_t n = 1; n <= idx.max_len(); ++n) t.push_back(idx.factor_count(n));
    return t;
}

std::vector<SpecialFactor> special_factors(const FactorIndex& idx, std::size_t n, Side side) {
    std::vector<SpecialFactor> out;
    for (std::size_t id = 0; id < idx.level_size(n); ++id) {
        uint64_t mask = side == Side::Left ? idx.factor(n, id).left_mask : idx.factor(n, id).right_mask;
        int val = FactorIndex::popcount(mask);
        if (val < 2) continue;
        SpecialFactor sf;
        sf.factor = idx.factor_word(n, id);
        for (uint8_t s = 0; s < 64; ++s)
            if (mask & (uint64_t{1} << s)) sf.extensions.push_back(s);
        sf.valence = static_cast<std::size_t>(val);
        out.push_back(std::move(sf));
    }
    std::sort(out.begin(), out.end(),
              [](const SpecialFactor& x, const SpecialFactor& y) { return x.factor < y.factor; });
    return out;
}

// Per-symbol prefix sums; pre[i] = number of `sym` among the first i symbols.
static std::vector<std::size_t> prefix_counts(const Word& w, uint8_t sym) {
    std::vector<std::size_t> pre(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) pre[i + 1] = pre[i] + (w[i] == sym);
    return pre;
}

BalanceResult is_m_balanced(const Word& w, std::size_t m, std::optional<uint8_t> symbol,
                            std::size_t max_factor_len) {
    const std::size_t N = w.size();
    std::size_t L = max_factor_len == 0 ? N : std::min(max_factor_len, N);

    std::vector<uint8_t> syms;
    if (symbol)
        syms.push_back(*symbol);
    else
        for (std::size_t s = 0; s < w.alphabet().size(); ++s) syms.push_back(static_cast<uint8_t>(s));

    std::vector<std::vector<std::size_t>> pre;
    pre.reserve(syms.size());
    for (uint8_t s : syms) pre.push_back(prefix_counts(w, s));

    // The spread between window counts grows by at most one per extra window
    // length, so scanning lengths in ascending order finds a shortest witness.
    for (std::size_t n = 1; n <= L; ++n) {
        for (std::size_t si = 0; si < syms.size(); ++si) {
            const auto& p = pre[si];
            std::size_t cmin = std::numeric_limits<std::size_t>::max(), cmax = 0;
            std::size_t imin = 0, imax = 0;
            for (std::size_t i = 0; i + n <= N; ++i) {
                std::size_t c = p[i + n] - p[i];
                if (c < cmin) { cmin = c; imin = i; }
                if (c > cmax) { cmax = c; imax = i; }
            }
            if (cmax - cmin >= m + 1) {
                BalanceWitness wit;
                wit.u = w.subword(imax, n);
                wit.v = w.subword(imin, n);
                wit.symbol = syms[si];
                wit.delta = cmax - cmin;
                return BalanceResult{wit};
            }
        }
    }
    return BalanceResult{std::nullopt};
}

std::optional<Word> unbalance_core(const Word& w) {
    if (w.alphabet().size() != 2) throw std::invalid_argument("unbalance core: binary words only");
    BalanceResult r = is_m_balanced(w, 1);
    if (r.ok()) return std::nullopt;

    // At the minimal violating length the witness pair has the shape
    // (x u x, y u y) with x != y; recover u by scanning the factor level.
    std::size_t n = r.witness->u.size();
    FactorIndex idx(w, n);
    for (std::size_t id = 0; id < idx.level_size(n); ++id) {
        Word f = idx.factor_word(n, id);
        if (f[0] != f[n - 1]) continue;
        uint8_t other = static_cast<uint8_t>(1 - f[0]);
        Word mid = f.subword(1, n - 2);
        Word single(w.alphabet(), {other});
        if (idx.find(single + mid + single)) return mid;
    }
    throw std::logic_error("unbalance core: witness shape not found");
}

std::optional<Reduction> reduce_balanced(const Word& w) {
    if (w.alphabet().size() != 2) throw std::invalid_argument("reduction: binary words only");
    std::vector<std::size_t> bs;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 1) bs.push_back(i);
    if (bs.empty()) return std::nullopt;

    std::size_t head = bs.front();                 // leading run of a's
    std::size_t tail = w.size() - 1 - bs.back();   // trailing run of a's
    std::vector<std::size_t> gaps;
    for (std::size_t j = 0; j + 1 < bs.size(); ++j) gaps.push_back(bs[j + 1] - bs[j] - 1);

    std::size_t n;
    if (!gaps.empty()) {
        auto [mn, mx] = std::minmax_element(gaps.begin(), gaps.end());
        if (*mx - *mn >= 2) return std::nullopt;
        n = *mn;
    } else {
        std::size_t run = std::max(head, tail);
        n = run == 0 ? 0 : run - 1;
    }
    if (head > n + 1 || tail > n + 1) return std::nullopt;

    std::vector<uint8_t> red;
    if (head == n + 1) red.push_back(1);
    for (std::size_t g : gaps) red.push_back(g == n ? 0 : 1);
    if (tail == n + 1) red.push_back(1);
    return Reduction{n, Word(w.alphabet(), std::move(red))};
}

std::vector<uint8_t> balanced_extensions(const Word& w, Side side) {
    if (!is_m_balanced(w, 1).ok()) throw std::invalid_argument("balanced extensions: word is not balanced");
    std::vector<uint8_t> out;
    for (std::size_t s = 0; s < w.alphabet().size(); ++s) {
        uint8_t sym = static_cast<uint8_t>(s);
        Word ext = side == Side::Right ? w.append(sym) : Word(w.alphabet(), {sym}) + w;
        if (is_m_balanced(ext, 1).ok()) out.push_back(sym);
    }
    return out;
}

std::vector<Word> palindrome_census(const FactorIndex& idx, std::size_t n) {
    std::vector<Word> out;
    for (std::size_t id = 0; id < idx.level_size(n); ++id) {
        Word f = idx.factor_word(n, id);
        if (f.is_palindrome()) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Word palindromic_closure(const Word& w) {
    for (std::size_t k = w.size();; --k) {
        if (w.subword(w.size() - k, k).is_palindrome())
            return w + w.prefix(w.size() - k).reversed();
        if (k == 0) break; // unreachable: the empty suffix is a palindrome
    }
    return w;
}

std::set<Word> return_words(const FactorIndex& idx, const Word& v) {
    const Word& w = idx.source();
    auto occ = w.occurrences(v);
    if (occ.size() < 2) throw std::invalid_argument("return words: need at least two occurrences");

    // The word between two consecutive occurrences; when they overlap there
    // is nothing in between and the spanning word (a proper prefix of v)
    // stands in for it.  Either way v is never a factor of the result.
    std::set<Word> out;
    for (std::size_t a = 0; a + 1 < occ.size(); ++a) {
        std::size_t p = occ[a], q = occ[a + 1];
        if (q - p >= v.size())
            out.insert(w.subword(p + v.size(), q - p - v.size()));
        else
            out.insert(w.subword(p, q - p));
    }
    return out;
}

PeriodicityReport periodicity_check(const FactorIndex& idx) {
    PeriodicityReport rep;
    rep.checked_up_to = idx.max_len();
    if (idx.max_len() < 2) throw std::invalid_argument("periodicity: need maxLen >= 2");

    for (std::size_t n = 1; n + 1 <= idx.max_len(); ++n) {
        if (idx.factor_count(n) != idx.factor_count(n + 1)) continue;
        rep.plateau_at = n;
        // At a plateau every factor extends right uniquely, so the successor
        // map is a function; the cycle reached from the final factor has the
        // minimal period as its length.
        std::size_t id = idx.id_at(n, idx.source().size() - n);
        std::unordered_map<std::size_t, std::size_t> seen;
        for (std::size_t step = 0;; ++step) {
            auto [it, fresh] = seen.emplace(id, step);
            if (!fresh) { rep.period = step - it->second; break; }
            uint64_t mask = idx.factor(n, id).right_mask;
            if (FactorIndex::popcount(mask) != 1) break; // truncated at the end of the prefix
            uint8_t sym = static_cast<uint8_t>(__builtin_ctzll(mask));
            auto child = idx.child(n + 1, id, sym);
            if (!child) break;
            id = idx.factor(n + 1, *child).suffix_id;
        }
        break;
    }

    const Word& w = idx.source();
    std::vector<std::vector<std::size_t>> pre;
    for (std::size_t s = 0; s < w.alphabet().size(); ++s) pre.push_back(prefix_counts(w, static_cast<uint8_t>(s)));
    for (std::size_t k = 1; k <= idx.max_len(); ++k) {
        bool uniform = true;
        std::vector<std::size_t> ref;
        for (std::size_t id = 0; id < idx.level_size(k) && uniform; ++id) {
            std::size_t pos = idx.factor(k, id).rep_pos;
            std::vector<std::size_t> counts;
            for (const auto& p : pre) counts.push_back(p[pos + k] - p[pos]);
            if (id == 0)
                ref = std::move(counts);
            else if (counts != ref)
                uniform = false;
        }
        if (uniform) { rep.zero_balance_length = k; break; }
    }
    return rep;
}

mpq_class frequency(const FactorIndex& idx, const Word& v) {
    if (v.size() == 0 || v.size() > idx.max_len())
        throw std::invalid_argument("frequency: factor length outside the indexed range");
    std::size_t windows = idx.source().size() - v.size() + 1;
    auto id = idx.find(v);
    std::size_t c = id ? idx.factor(v.size(), *id).count : 0;
    mpq_class q(static_cast<unsigned long>(c), static_cast<unsigned long>(windows));
    q.canonicalize();
    return q;
}

SpectrumVerdict frequency_spectrum_check(const FactorIndex& idx, std::size_t n, const mpq_class& tolerance) {
    std::vector<std::size_t> counts;
    for (std::size_t id = 0; id < idx.level_size(n); ++id) counts.push_back(idx.factor(n, id).count);
    std::sort(counts.begin(), counts.end());
    unsigned long windows = static_cast<unsigned long>(idx.source().size() - n + 1);

    SpectrumVerdict v;
    std::vector<std::pair<std::size_t, std::size_t>> clusters; // (sum, size)
    for (std::size_t i = 0; i < counts.size(); ++i) {
        bool fresh = i == 0;
        if (!fresh) {
            mpq_class gap(static_cast<unsigned long>(counts[i] - counts[i - 1]), windows);
            gap.canonicalize();
            fresh = gap > tolerance;
        }
        if (fresh)
            clusters.emplace_back(counts[i], 1);
        else {
            clusters.back().first += counts[i];
            clusters.back().second++;
        }
    }
    v.cluster_count = clusters.size();
    for (auto [sum, size] : clusters) {
        mpq_class mean(static_cast<unsigned long>(sum), windows * static_cast<unsigned long>(size));
        mean.canonicalize();
        v.cluster_means.push_back(mean);
    }
    if (clusters.size() == 3) {
        mpq_class diff = v.cluster_means[2] - (v.cluster_means[0] + v.cluster_means[1]);
        v.sum_property = abs(diff) <= tolerance;
    }
    return v;
}

mpq_class mismatch_density(const Word& w1, const Word& w2) {
    std::size_t lo = std::min(w1.size(), w2.size());
    std::size_t hi = std::max(w1.size(), w2.size());
    if (hi == 0) return mpq_class(0);
    std::size_t mism = hi - lo;
    for (std::size_t i = 0; i < lo; ++i)
        mism += (w1.alphabet().token(w1[i]) != w2.alphabet().token(w2[i]));
    mpq_class q(static_cast<unsigned long>(mism), static_cast<unsigned long>(hi));
    q.canonicalize();
    return q;
}

bool equivalent_up_to(const FactorIndex& idx1, const FactorIndex& idx2, std::size_t n) {
    if (n > idx1.max_len() || n > idx2.max_len())
        throw std::invalid_argument("equivalence: n exceeds an indexed range");
    for (std::size_t k = 1; k <= n; ++k) {
        if (idx1.factor_count(k) != idx2.factor_count(k)) return false;
        std::set<std::string> s1, s2;
        for (std::size_t id = 0; id < idx1.level_size(k); ++id) s1.insert(idx1.factor_word(k, id).str());
        for (std::size_t id = 0; id < idx2.level_size(k); ++id) s2.insert(idx2.factor_word(k, id).str());
        if (s1 != s2) return false;
    }
    return true;
}

} // namespace wordlib
