#pragma once

#include <nlohmann/json_fwd.hpp>
#include <span>

#include "swgraph/hermitian_eig.hpp"
#include "swgraph/magnon_states.hpp"
#include "swgraph/mat4.hpp"

namespace swgraph {

/// Two-qubit reduced density matrix of nodes (j, k), j < k, over the basis
/// (00, 01, 10, 11) with the lower-numbered node in the left slot.
/// Construction validates Hermiticity and unit trace to 1e-12 and positive
/// semidefiniteness to -1e-10.
struct TwoQubitDensity {
    int j = 0;
    int k = 0;
    Mat4 matrix;

    TwoQubitDensity(int j_, int k_, const Mat4& m);
};

/// Analytic path: assembles the four nonzero entries directly from the
/// amplitudes (the 11 row and column vanish for one-magnon input).
TwoQubitDensity reduced_density_fast(const OneMagnonState& state, int j, int k);
TwoQubitDensity reduced_density_fast(int n, std::span<const double> amplitudes, int j, int k);

/// Oracle path: literal partial trace of the full 2^n vector, summing over
/// every assignment of the other n-2 qubits.
TwoQubitDensity reduced_density_oracle(const FullStateVector& full, int j, int k,
                                       int cap = kDefaultBruteForceCap);

void to_json(nlohmann::json& j, const TwoQubitDensity& rho);
/// Reads {"pair":[j,k],"matrix":[[[re,im],...x4],...x4]} back (revalidates).
TwoQubitDensity parse_density_json(const nlohmann::json& j);

}  // namespace swgraph
