#pragma once

#include <string>

#include "wordlib/marking.hpp"
#include "wordlib/rauzy.hpp"

namespace wordlib {

// Graphviz text form.  Vertices are labeled by their factors (plain ids
// for hand-built graphs) and emitted in sorted label order, edges sorted
// by (tail, head, label), so the output is stable and diffable.
std::string to_dot(const RauzyGraph& g);

// Adds the l/r annotations on fork edges and draws "-" vertices boxed.
std::string to_dot(const MarkedRauzyGraph& mg);

} // namespace wordlib
