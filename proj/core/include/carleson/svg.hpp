#pragma once

#include <string>

#include "carleson/sparse.hpp"

namespace carleson {

// Renders a two-dimensional box realization: the original boxes as
// outlines, each set's pieces filled in the set's color, with exact
// measures in tooltips. Only d = 2 collections are supported.
std::string realization_svg(const Collection& c, const BoxRealization& w);

}  // namespace carleson
