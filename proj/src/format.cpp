#include "swgraph/format.hpp"

#include <cstdio>

namespace swgraph {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

}  // namespace swgraph
