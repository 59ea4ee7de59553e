#include "wordlib/iet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wordlib {

static const QuadraticReal kZero = QuadraticReal::integer(0);
static const QuadraticReal kOne = QuadraticReal::integer(1);

static std::vector<std::pair<Arc, uint8_t>> default_charsets(const std::vector<QuadraticReal>& endpoints) {
    std::vector<std::pair<Arc, uint8_t>> cs;
    for (std::size_t i = 0; i + 1 < endpoints.size(); ++i)
        cs.push_back({{endpoints[i], endpoints[i + 1]}, static_cast<uint8_t>(i)});
    return cs;
}

IntervalExchange::IntervalExchange(std::vector<QuadraticReal> lengths, std::vector<std::size_t> perm,
                                   std::vector<bool> flips, Alphabet alphabet,
                                   std::vector<std::pair<Arc, uint8_t>> charsets)
    : lengths_(std::move(lengths)), perm_(std::move(perm)), flips_(std::move(flips)),
      alphabet_(std::move(alphabet)), charsets_(std::move(charsets)) {
    const std::size_t k = lengths_.size();
    if (k == 0) throw std::invalid_argument("iet: no intervals");
    if (alphabet_.size() == 0) alphabet_ = letters(k);
    if (perm_.size() != k) throw std::invalid_argument("iet: permutation size mismatch");
    if (flips_.empty()) flips_.assign(k, false);
    if (flips_.size() != k) throw std::invalid_argument("iet: flips size mismatch");

    std::vector<bool> seen(k, false);
    for (std::size_t j : perm_) {
        if (j >= k || seen[j]) throw std::invalid_argument("iet: not a permutation");
        seen[j] = true;
    }

    endpoints_.push_back(kZero);
    for (const auto& l : lengths_) {
        if (!(l > kZero)) throw std::invalid_argument("iet: interval lengths must be positive");
        endpoints_.push_back(endpoints_.back() + l);
    }
    if (endpoints_.back() != kOne) throw std::invalid_argument("iet: lengths must sum to 1");

    image_endpoints_.push_back(kZero);
    for (std::size_t j = 0; j < k; ++j)
        image_endpoints_.push_back(image_endpoints_.back() + lengths_[perm_[j]]);

    std::vector<std::size_t> inv(k);
    for (std::size_t j = 0; j < k; ++j) inv[perm_[j]] = j;
    for (std::size_t i = 0; i < k; ++i)
        trans_.push_back(image_endpoints_[inv[i]] - endpoints_[i]);

    if (charsets_.empty()) charsets_ = default_charsets(endpoints_);
    for (auto& [arc, sym] : charsets_) {
        if (sym >= alphabet_.size()) throw std::invalid_argument("iet: charset symbol out of range");
        if (!(arc.lo < arc.hi)) throw std::invalid_argument("iet: empty or inverted charset interval");
    }
    std::sort(charsets_.begin(), charsets_.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    if (charsets_.front().first.lo != kZero || charsets_.back().first.hi != kOne)
        throw std::invalid_argument("iet: charsets do not cover [0,1)");
    for (std::size_t i = 0; i + 1 < charsets_.size(); ++i)
        if (charsets_[i].first.hi != charsets_[i + 1].first.lo)
            throw std::invalid_argument("iet: charsets overlap or leave a gap");
}

IntervalExchange::IntervalExchange(std::vector<QuadraticReal> lengths, std::vector<std::size_t> perm,
                                   std::vector<bool> flips)
    : IntervalExchange(std::move(lengths), std::move(perm), std::move(flips), Alphabet{}, {}) {}

QuadraticReal IntervalExchange::map(const QuadraticReal& x) const {
    if (x < kZero || x >= kOne) throw std::invalid_argument("iet: point outside [0,1)");
    std::size_t i = k() - 1;
    while (x < endpoints_[i]) --i;
    if (!flips_[i]) return x + trans_[i];
    // reflection about the image midpoint; the left endpoint wraps to the
    // image's left end to keep the interval half-open
    std::size_t j = 0;
    while (perm_[j] != i) ++j;
    if (x == endpoints_[i]) return image_endpoints_[j];
    return image_endpoints_[j] + (endpoints_[i + 1] - x);
}

QuadraticReal IntervalExchange::inverse(const QuadraticReal& y) const {
    if (y < kZero || y >= kOne) throw std::invalid_argument("iet: point outside [0,1)");
    std::size_t j = k() - 1;
    while (y < image_endpoints_[j]) --j;
    std::size_t i = perm_[j];
    if (!flips_[i]) return y - trans_[i];
    if (y == image_endpoints_[j]) return endpoints_[i];
    return endpoints_[i + 1] - (y - image_endpoints_[j]);
}

std::vector<QuadraticReal> IntervalExchange::breakpoints() const {
    std::vector<QuadraticReal> pts;
    for (std::size_t i = 1; i < k(); ++i) pts.push_back(endpoints_[i]);
    for (const auto& [arc, sym] : charsets_)
        if (arc.lo != kZero) pts.push_back(arc.lo);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a == b; }),
              pts.end());
    return pts;
}

uint8_t IntervalExchange::symbol_at(const QuadraticReal& x, bool* on_boundary) const {
    if (on_boundary) *on_boundary = false;
    for (const auto& [arc, sym] : charsets_) {
        int c = x.cmp(arc.lo);
        if (c < 0) break;
        if (on_boundary && c == 0) *on_boundary = true;
        if (x < arc.hi) return sym;
    }
    throw std::logic_error("iet: point escaped the charsets");
}

CodedOrbit iet_code(const IntervalExchange& iet, const QuadraticReal& x0, std::size_t n,
                    BoundaryPolicy policy) {
    if (x0 < kZero || x0 >= kOne) throw std::invalid_argument("iet: start outside [0,1)");
    CodedOrbit out;
    out.policy = policy;
    std::vector<uint8_t> syms;
    QuadraticReal x = x0;
    for (std::size_t i = 0; i < n; ++i) {
        bool hit = false;
        uint8_t s = iet.symbol_at(x, &hit);
        if (hit) {
            out.boundary_hits.push_back({i, x});
            if (policy == BoundaryPolicy::Strict) { out.truncated = true; break; }
        }
        syms.push_back(s);
        x = iet.map(x);
    }
    out.word = Word(iet.alphabet(), std::move(syms));
    return out;
}

std::optional<RegularityViolation> iet_regularity(const IntervalExchange& iet, std::size_t N) {
    if (N == 0) throw std::invalid_argument("iet regularity: N must be positive");
    // interior endpoints a_2 .. a_k in the 1-based numbering
    std::vector<QuadraticReal> disc;
    for (std::size_t i = 1; i < iet.k(); ++i) disc.push_back(iet.endpoints()[i]);

    std::vector<QuadraticReal> orbit = disc;
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            orbit[i] = iet.map(orbit[i]);
            for (std::size_t j = 0; j < disc.size(); ++j)
                if (orbit[i] == disc[j]) return RegularityViolation{n, i + 2, j + 2};
        }
    }
    return std::nullopt;
}

IntervalExchange as_interval_exchange(const RotationSystem& sys) {
    QuadraticReal alpha = sys.alpha();
    if (!(alpha > kZero)) throw std::invalid_argument("iet view: alpha must be positive");
    std::vector<QuadraticReal> lengths = {kOne - alpha, alpha};
    return IntervalExchange(std::move(lengths), {1, 0}, {}, sys.alphabet(), sys.arcs());
}

FactorIntervals factor_interval_lengths(const IntervalExchange& iet, std::size_t n,
                                        std::size_t max_cells) {
    if (n == 0) throw std::invalid_argument("factor intervals: n must be positive");
    std::set<QuadraticReal> bounds;
    bounds.insert(kZero);

    // The coding c_j(x) = charset(T^j(x)), j < n, changes only across
    // pullbacks of charset boundaries (depth up to n-1) and pullbacks of the
    // map's discontinuities (depth up to n-2, since T^{n-1} is the deepest
    // iterate applied).
    auto pull_back = [&](std::set<QuadraticReal> gen, std::size_t depth) {
        for (std::size_t j = 0; j <= depth; ++j) {
            std::set<QuadraticReal> next;
            for (const auto& p : gen) {
                bounds.insert(p);
                if (j < depth) next.insert(iet.inverse(p));
            }
            if (bounds.size() > max_cells) throw std::length_error("factor intervals: cell cap exceeded");
            gen.swap(next);
        }
    };

    std::set<QuadraticReal> charset_bnds;
    for (const auto& [arc, sym] : iet.charsets()) charset_bnds.insert(arc.lo);
    pull_back(std::move(charset_bnds), n - 1);
    if (n >= 2) {
        std::set<QuadraticReal> disc;
        for (std::size_t i = 1; i < iet.k(); ++i) disc.insert(iet.endpoints()[i]);
        pull_back(std::move(disc), n - 2);
    }

    std::vector<QuadraticReal> pts(bounds.begin(), bounds.end());
    FactorIntervals out;
    out.cell_count = pts.size();
    for (std::size_t t = 0; t < pts.size(); ++t) {
        const QuadraticReal& lo = pts[t];
        QuadraticReal hi = t + 1 < pts.size() ? pts[t + 1] : kOne;
        std::vector<uint8_t> code;
        QuadraticReal x = lo;
        for (std::size_t j = 0; j < n; ++j) {
            code.push_back(iet.symbol_at(x));
            x = iet.map(x);
        }
        Word f(iet.alphabet(), std::move(code));
        auto [it, fresh] = out.lengths.emplace(std::move(f), hi - lo);
        if (!fresh) it->second = it->second + (hi - lo);
    }
    return out;
}

FactorIntervals factor_interval_lengths(const RotationSystem& sys, std::size_t n,
                                        std::size_t max_cells) {
    return factor_interval_lengths(as_interval_exchange(sys), n, max_cells);
}

} // namespace wordlib
