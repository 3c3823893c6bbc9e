#pragma once

#include <string>

#include "brauer/ribbon.hpp"

namespace brauer {

/// Graphviz rendering: vertices carry their multiplicity, edges their id,
/// and each vertex's clockwise dart order is kept as a comment.
std::string to_dot(const RibbonBrauerGraph& g);

} // namespace brauer
