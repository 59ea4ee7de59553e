#include "wordlib/rotation.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordlib {

static const QuadraticReal kZero = QuadraticReal::integer(0);
static const QuadraticReal kOne = QuadraticReal::integer(1);

RotationSystem::RotationSystem(QuadraticReal alpha, Alphabet alphabet,
                               std::vector<std::pair<Arc, uint8_t>> arcs, QuadraticReal start)
    : alpha_(std::move(alpha)), alphabet_(std::move(alphabet)), arcs_(std::move(arcs)), start_(std::move(start)) {
    if (alpha_ < kZero || alpha_ >= kOne) throw std::invalid_argument("rotation: alpha outside [0,1)");
    if (start_ < kZero || start_ >= kOne) throw std::invalid_argument("rotation: start outside [0,1)");
    if (arcs_.empty()) throw std::invalid_argument("rotation: no arcs");
    for (auto& [arc, sym] : arcs_) {
        if (sym >= alphabet_.size()) throw std::invalid_argument("rotation: arc symbol out of range");
        if (!(arc.lo < arc.hi)) throw std::invalid_argument("rotation: empty or inverted arc");
    }
    std::sort(arcs_.begin(), arcs_.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    if (arcs_.front().first.lo != kZero || arcs_.back().first.hi != kOne)
        throw std::invalid_argument("rotation: arcs do not cover [0,1)");
    for (std::size_t i = 0; i + 1 < arcs_.size(); ++i)
        if (arcs_[i].first.hi != arcs_[i + 1].first.lo)
            throw std::invalid_argument("rotation: arcs overlap or leave a gap");
}

uint8_t RotationSystem::symbol_at(const QuadraticReal& x, bool* on_boundary) const {
    if (on_boundary) *on_boundary = false;
    for (const auto& [arc, sym] : arcs_) {
        int c = x.cmp(arc.lo);
        if (c < 0) break;
        if (on_boundary && c == 0) *on_boundary = true;
        if (x < arc.hi) return sym;
    }
    throw std::logic_error("rotation: point escaped the partition");
}

CodedOrbit rotation_code(const RotationSystem& sys, std::size_t n, BoundaryPolicy policy) {
    CodedOrbit out;
    out.policy = policy;
    std::vector<uint8_t> syms;
    QuadraticReal x = sys.start();
    for (std::size_t i = 0; i < n; ++i) {
        bool hit = false;
        uint8_t s = sys.symbol_at(x, &hit);
        if (hit) {
            out.boundary_hits.push_back({i, x});
            if (policy == BoundaryPolicy::Strict) { out.truncated = true; break; }
        }
        syms.push_back(s);
        x = (x + sys.alpha()).frac_mod1();
    }
    out.word = Word(sys.alphabet(), std::move(syms));
    return out;
}

Word mechanical_word(const QuadraticReal& alpha, const QuadraticReal& beta, std::size_t n) {
    std::vector<uint8_t> syms;
    syms.reserve(n);
    QuadraticReal cur = beta;          // alpha * i + beta
    mpz_class prev_floor = cur.floor();
    for (std::size_t i = 0; i < n; ++i) {
        cur = cur + alpha;
        mpz_class f = cur.floor();
        mpz_class diff = f - prev_floor;
        if (diff < 0 || diff > 1) throw std::invalid_argument("mechanical word: alpha outside [0,1]");
        syms.push_back(static_cast<uint8_t>(diff.get_ui()));
        prev_floor = f;
    }
    return Word(binary_01(), std::move(syms));
}

RotationSystem q_multiply(const RotationSystem& sys, unsigned long q, long r) {
    if (q == 0) throw std::invalid_argument("q-multiply: q must be positive");
    mpq_class inv_q(1, q);
    QuadraticReal beta = ((sys.alpha() + QuadraticReal::integer(r)) * inv_q).frac_mod1();
    std::vector<std::pair<Arc, uint8_t>> arcs;
    for (const auto& [arc, sym] : sys.arcs())
        for (unsigned long j = 0; j < q; ++j) {
            QuadraticReal shift = QuadraticReal::integer(static_cast<long>(j));
            arcs.push_back({{(arc.lo + shift) * inv_q, (arc.hi + shift) * inv_q}, sym});
        }
    return RotationSystem(beta, sys.alphabet(), std::move(arcs), sys.start() * inv_q);
}

RotationSystem sturmian_rotation(const QuadraticReal& alpha, const QuadraticReal& start) {
    Alphabet ab = binary_ab();
    std::vector<std::pair<Arc, uint8_t>> arcs = {
        {{kZero, alpha}, 0},
        {{alpha, kOne}, 1},
    };
    return RotationSystem(alpha, ab, std::move(arcs), start);
}

} // namespace wordlib
