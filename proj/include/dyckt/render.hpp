#pragma once

#include <string>

#include "dyckt/paren.hpp"
#include "dyckt/tiling.hpp"

namespace dyckt {

// Diagram of diamonds in the Russian convention; edges interior to a tile
// are omitted, so tile boundaries stand out.
std::string render(const Tiling& t);
std::string render(const SkewShape& shape);

// Parenthesis word with the pair-numbering line (closes numbered left to
// right, each open carrying the number of its close).
std::string render_pairs(const Partition& lambda);

}  // namespace dyckt
