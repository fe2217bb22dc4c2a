#pragma once

#include <complex>
#include <nlohmann/json_fwd.hpp>
#include <span>
#include <vector>

#include "swgraph/radical.hpp"
#include "swgraph/tableaux.hpp"

namespace swgraph {

/// Full 2^n tensor-space paths refuse to run above this size unless the
/// caller raises the cap (CLI: --cap / SWGRAPH_CAP).
inline constexpr int kDefaultBruteForceCap = 14;

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Second-row entry of a one-magnon label, or 0 for the single-row tableau.
/// Throws if y is not a valid one-magnon label for an n-node ring.
int label_second_row(int n, const StandardYoungTableau& y);

/// Amplitude <j|y> of the one-magnon state labelled by y at node j, as an
/// exact radical: 1/sqrt(n) on the single-row label; for second-row entry s,
/// -1/sqrt((s-1)s) below s, sqrt((s-1)/s) at s, and 0 above s.
Radical amplitude(int n, const StandardYoungTableau& y, int j);

/// Unit vector over the node basis |1..n>, tagged by its tableau label.
/// Amplitudes are exact; the squared norm is checked to be exactly 1.
struct OneMagnonState {
    int n = 0;
    StandardYoungTableau label;
    std::vector<Radical> amplitudes;  // index j-1 holds <j|y>

    double amp(int j) const { return amplitudes[j - 1].value(); }
    std::vector<double> amp_values() const;
};

OneMagnonState build_state(int n, const StandardYoungTableau& y);

/// Amplitudes over the full 2^n computational basis, ordered by the binary
/// value of the configuration word with node 1 as the most significant bit.
struct FullStateVector {
    int n = 0;
    std::vector<std::complex<double>> entries;

    double norm() const;
};

FullStateVector embed_full(const OneMagnonState& state, int cap = kDefaultBruteForceCap);
/// Same embedding for a raw one-magnon amplitude vector.
FullStateVector embed_full(int n, std::span<const double> amplitudes,
                           int cap = kDefaultBruteForceCap);

/// Pairwise inner products of all n one-magnon states (should be the
/// identity; the verify command asserts it).
std::vector<std::vector<double>> gram_matrix(int n);

void to_json(nlohmann::json& j, const Radical& r);
void from_json(const nlohmann::json& j, Radical& r);
void to_json(nlohmann::json& j, const OneMagnonState& s);
void from_json(const nlohmann::json& j, OneMagnonState& s);

}  // namespace swgraph
