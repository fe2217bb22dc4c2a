#pragma once

#include <map>
#include <nlohmann/json_fwd.hpp>
#include <string_view>
#include <vector>

#include "swgraph/tableaux.hpp"

namespace swgraph {

/// Finite word over a totally ordered alphabet of non-negative letters.
/// Magnetic configurations are the special case over {0,1}.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> l);

    /// Parses "00100"; anything but '0'/'1' is rejected.
    static Word parse_binary(std::string_view text);

    int size() const { return static_cast<int>(letters.size()); }
    bool operator==(const Word& o) const = default;
    bool operator<(const Word& o) const { return letters < o.letters; }
    std::string str() const;
};

/// One row-insertion snapshot: tableaux after the letter was inserted.
struct RSStep {
    int letter = 0;
    WeylTableau p;
    StandardYoungTableau q;
};

/// Result of the Robinson-Schensted map: the semistandard insertion
/// tableau P, the standard recording tableau Q (same shape), and the
/// per-step trace when it was requested.
struct RSPair {
    WeylTableau p;
    StandardYoungTableau q;
    std::vector<RSStep> trace;
};

/// Schensted row insertion. An inserted letter replaces the leftmost entry
/// strictly greater than it; the displaced entry is inserted into the next
/// row; with nothing greater the letter appends at the row end. Q records
/// each newly created box with the step index. Trace retention is opt-in;
/// bulk classification runs without it.
RSPair rs_insert_word(const Word& w, bool with_trace = false);

/// The one-deviation configuration of length n with the 1 at node j.
Word one_magnon_word(int n, int j);

/// Closed form of RS on one_magnon_word(n, j): for j < n the shape is
/// (n-1,1) with Q second-row entry j+1; for j = n both tableaux are single
/// rows. (The deviated node j maps to second-row entry j+1 -- the bump
/// happens one step after the 1 was inserted.)
RSPair rs_one_magnon(int n, int j);

/// RS over all n one-deviation words; the image is exactly the n-element
/// label set returned by one_magnon_tableaux(n).
std::map<Word, StandardYoungTableau> classify_all_configurations(int n);

void to_json(nlohmann::json& j, const RSStep& s);
void to_json(nlohmann::json& j, const RSPair& r);

}  // namespace swgraph
