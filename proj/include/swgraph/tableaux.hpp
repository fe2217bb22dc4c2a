#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace swgraph {

/// Shapes with three or more rows are outside what this library supports.
struct OutOfScopeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Weakly decreasing positive parts; the empty partition is allowed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int boxes() const;
    int row_count() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition& o) const = default;
};

/// Filling of a partition shape with 1..n, strictly increasing along rows
/// and down columns. The shape is stored redundantly and checked against
/// the rows on construction.
struct StandardYoungTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    StandardYoungTableau() = default;  // the empty tableau
    explicit StandardYoungTableau(std::vector<std::vector<int>> r);
    StandardYoungTableau(std::initializer_list<std::vector<int>> r)
        : StandardYoungTableau(std::vector<std::vector<int>>(r)) {}
    StandardYoungTableau(Partition s, std::vector<std::vector<int>> r);

    int n() const { return shape.boxes(); }
    bool operator==(const StandardYoungTableau& o) const { return rows == o.rows; }
    bool operator<(const StandardYoungTableau& o) const { return rows < o.rows; }

    /// "(1235/4)" -- rows joined by '/', entries concatenated while every
    /// entry is a single digit, space-separated otherwise. Empty: "∅".
    std::string inline_str() const;
    /// Diagram layout, one row per line.
    std::string block_str() const;
};

/// Semistandard filling over an ordered alphabet of non-negative letters:
/// rows weakly increase, columns strictly increase. Over the two-letter
/// alphabet {0,1} column strictness already limits the shape to two rows.
struct WeylTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    WeylTableau() = default;
    explicit WeylTableau(std::vector<std::vector<int>> r);
    WeylTableau(std::initializer_list<std::vector<int>> r)
        : WeylTableau(std::vector<std::vector<int>>(r)) {}
    WeylTableau(Partition s, std::vector<std::vector<int>> r);

    int n() const { return shape.boxes(); }
    bool operator==(const WeylTableau& o) const { return rows == o.rows; }

    std::string inline_str() const;
    std::string block_str() const;
};

/// Exact binomial coefficient (Pascal recurrence, long long range).
long long binomial(int n, int k);

/// The n labels of the one-magnon sector: the single-row tableau of shape
/// (n) first, then the shape (n-1,1) tableau with second-row entry s for
/// s = 2..n in ascending order.
std::vector<StandardYoungTableau> one_magnon_tableaux(int n);

/// |SYT(shape)| for a shape with at most two rows. The hook-length value is
/// cross-checked against exhaustive enumeration whenever the shape is small
/// enough to enumerate (<= 18 boxes).
long long count_syt_two_row(const Partition& shape);
long long count_syt_two_row_hook(const Partition& shape);
long long count_syt_two_row_enumerate(const Partition& shape);

/// Number of semistandard fillings of a two-row shape with weight.first
/// zeros and weight.second ones, by explicit enumeration of all fillings.
long long kostka_two_letter(const Partition& shape, std::pair<long long, long long> weight);

/// binomial(n, r): dimension of the r-deviation sector of an n-qubit ring.
long long sector_dimension(int n, int r);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);
void to_json(nlohmann::json& j, const StandardYoungTableau& t);
void from_json(const nlohmann::json& j, StandardYoungTableau& t);
void to_json(nlohmann::json& j, const WeylTableau& t);
void from_json(const nlohmann::json& j, WeylTableau& t);

}  // namespace swgraph
