#pragma once

#include <string>

namespace swgraph {

/// "%.10g" -- ten significant digits, locale-independent.
std::string fmt_double(double x);

}  // namespace swgraph
