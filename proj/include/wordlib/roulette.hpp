#pragma once

#include <vector>

#include "wordlib/coding.hpp"
#include "wordlib/quadratic.hpp"
#include "wordlib/word.hpp"

namespace wordlib {

// Roulette: m copies of a circle, each split into 2m alternating arcs (m red
// of length alpha, m blue of length 1 - alpha after scaling the
// circumference-m circle to 1).  Red arcs carry red hues whose arc midpoints
// form regular k_i-gons; blue hues likewise, but the blue layout advances by
// one slot per component.  The map rotates by alpha (1/m of the scaled
// circle per step) and moves to the next component.
class RouletteSystem {
public:
    // red_orders / blue_orders: polygon order k_i per hue; each k_i must
    // divide m and each color's orders must sum to m.  Symbols: red hues
    // first, then blue hues; default alphabet a, b, c, ...
    RouletteSystem(std::size_t m, QuadraticReal alpha,
                   std::vector<std::size_t> red_orders, std::vector<std::size_t> blue_orders,
                   std::size_t start_component, QuadraticReal start_x,
                   Alphabet alphabet = Alphabet{});

    std::size_t m() const { return m_; }
    const QuadraticReal& alpha() const { return alpha_; }
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t red_hue_count() const { return red_orders_.size(); }

    // Hue layout: slot j of every component carries red hue red_hue(j);
    // slot j of component c carries blue hue blue_hue((j - c) mod m).
    uint8_t red_hue(std::size_t slot) const { return red_of_slot_.at(slot); }
    uint8_t blue_hue(std::size_t slot) const { return blue_of_slot_.at(slot); }

    const std::vector<std::size_t>& red_orders() const { return red_orders_; }
    const std::vector<std::size_t>& blue_orders() const { return blue_orders_; }
    std::size_t start_component() const { return start_component_; }
    const QuadraticReal& start_x() const { return start_x_; }

private:
    std::size_t m_;
    QuadraticReal alpha_;
    std::vector<std::size_t> red_orders_, blue_orders_;
    std::size_t start_component_;
    QuadraticReal start_x_;
    Alphabet alphabet_;
    std::vector<uint8_t> red_of_slot_, blue_of_slot_;
};

CodedOrbit roulette_code(const RouletteSystem& sys, std::size_t n,
                         BoundaryPolicy policy = BoundaryPolicy::LeftLimit);

// Forgets hues, keeping only red (symbol 0, "r") vs blue (symbol 1, "s").
Word collapse_to_colors(const RouletteSystem& sys, const Word& w);

} // namespace wordlib
