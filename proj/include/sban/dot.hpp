#pragma once

#include <string>

#include "sban/confusability.hpp"

namespace sban {

// Graphviz rendering. Nodes carry the configuration as the bit string
// x_0 x_1 ... x_{n-1}; edges optionally carry their confusable step range.
std::string necc_to_dot(const ConfusabilityGraph& g);
std::string quotient_to_dot(const ImageQuotientGraph& g);

} // namespace sban
