#include "wordlib/roulette.hpp"

#include <stdexcept>

namespace wordlib {

static const QuadraticReal kZero = QuadraticReal::integer(0);
static const QuadraticReal kOne = QuadraticReal::integer(1);

// Assign each hue a residue class of slots {s, s + m/k, ...}; offsets are
// searched in ascending order so the layout is the lexicographically
// smallest feasible one.
static bool assign_slots(std::size_t m, const std::vector<std::size_t>& orders,
                         std::size_t hue, std::vector<uint8_t>& slot_of, uint8_t base,
                         std::vector<bool>& used) {
    if (hue == orders.size()) return true;
    std::size_t spacing = m / orders[hue];
    for (std::size_t s = 0; s < spacing; ++s) {
        bool free = true;
        for (std::size_t j = s; j < m; j += spacing)
            if (used[j]) { free = false; break; }
        if (!free) continue;
        for (std::size_t j = s; j < m; j += spacing) {
            used[j] = true;
            slot_of[j] = static_cast<uint8_t>(base + hue);
        }
        if (assign_slots(m, orders, hue + 1, slot_of, base, used)) return true;
        for (std::size_t j = s; j < m; j += spacing) used[j] = false;
    }
    return false;
}

static std::vector<uint8_t> hue_layout(std::size_t m, const std::vector<std::size_t>& orders,
                                       uint8_t base, const char* color) {
    std::size_t total = 0;
    for (std::size_t k : orders) {
        if (k == 0 || m % k != 0)
            throw std::invalid_argument(std::string("roulette: ") + color +
                                        " polygon order must divide the component count");
        total += k;
    }
    if (total != m)
        throw std::invalid_argument(std::string("roulette: ") + color +
                                    " polygon orders must sum to the component count");
    std::vector<uint8_t> slot_of(m, 0);
    std::vector<bool> used(m, false);
    if (!assign_slots(m, orders, 0, slot_of, base, used))
        throw std::invalid_argument(std::string("roulette: no feasible ") + color + " hue layout");
    return slot_of;
}

RouletteSystem::RouletteSystem(std::size_t m, QuadraticReal alpha,
                               std::vector<std::size_t> red_orders, std::vector<std::size_t> blue_orders,
                               std::size_t start_component, QuadraticReal start_x, Alphabet alphabet)
    : m_(m), alpha_(std::move(alpha)), red_orders_(std::move(red_orders)), blue_orders_(std::move(blue_orders)),
      start_component_(start_component), start_x_(std::move(start_x)), alphabet_(std::move(alphabet)) {
    if (m_ == 0) throw std::invalid_argument("roulette: need at least one component");
    if (!(alpha_ > kZero) || !(alpha_ < kOne)) throw std::invalid_argument("roulette: alpha outside (0,1)");
    if (start_component_ >= m_) throw std::invalid_argument("roulette: start component out of range");
    if (start_x_ < kZero || start_x_ >= kOne) throw std::invalid_argument("roulette: start outside [0,1)");
    if (alphabet_.size() == 0) alphabet_ = letters(red_orders_.size() + blue_orders_.size());
    if (alphabet_.size() < red_orders_.size() + blue_orders_.size())
        throw std::invalid_argument("roulette: alphabet smaller than the hue count");
    red_of_slot_ = hue_layout(m_, red_orders_, 0, "red");
    blue_of_slot_ = hue_layout(m_, blue_orders_, static_cast<uint8_t>(red_orders_.size()), "blue");
}

CodedOrbit roulette_code(const RouletteSystem& sys, std::size_t n, BoundaryPolicy policy) {
    CodedOrbit out;
    out.policy = policy;
    std::vector<uint8_t> syms;
    const std::size_t m = sys.m();
    mpq_class mq(static_cast<unsigned long>(m));
    QuadraticReal x = sys.start_x();
    QuadraticReal step = sys.alpha() * mpq_class(1, static_cast<unsigned long>(m));
    std::size_t c = sys.start_component();
    for (std::size_t i = 0; i < n; ++i) {
        QuadraticReal scaled = x * mq;
        mpz_class slot_z = scaled.floor();
        std::size_t slot = static_cast<std::size_t>(slot_z.get_ui());
        QuadraticReal offset = scaled - QuadraticReal(slot_z, 0, 1, 0);
        int color_cmp = offset.cmp(sys.alpha()); // < 0: red arc
        if (offset == kZero || color_cmp == 0) {
            out.boundary_hits.push_back({i, x});
            if (policy == BoundaryPolicy::Strict) { out.truncated = true; break; }
        }
        if (color_cmp < 0)
            syms.push_back(sys.red_hue(slot));
        else
            syms.push_back(sys.blue_hue((slot + m - c) % m));
        x = (x + step).frac_mod1();
        c = (c + 1) % m;
    }
    out.word = Word(sys.alphabet(), std::move(syms));
    return out;
}

Word collapse_to_colors(const RouletteSystem& sys, const Word& w) {
    Alphabet rs({"r", "s"});
    std::vector<uint8_t> d;
    d.reserve(w.size());
    for (uint8_t s : w.data()) d.push_back(s < sys.red_hue_count() ? 0 : 1);
    return Word(rs, std::move(d));
}

} // namespace wordlib
