#pragma once

#include <string>
#include <vector>

#include "swgraph/magnon_states.hpp"

namespace swgraph {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // worst deviation or the first failure found
};

/// Runs every cross-check in the library for all ring sizes 2..n_max:
/// counting identities, orthonormality, the RS bijection, the density
/// fast/oracle pair, the three concurrence routes and the graph structure.
/// Throws ResourceLimitError when n_max exceeds cap.
std::vector<Check> run_verification(int n_max, int cap = kDefaultBruteForceCap);

}  // namespace swgraph
