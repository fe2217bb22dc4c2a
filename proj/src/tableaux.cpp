#include "swgraph/tableaux.hpp"

#include <algorithm>
#include <bit>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>

namespace swgraph {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(parts);
}

std::string render_inline(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return "∅";
    bool wide = false;
    for (const auto& r : rows)
        for (int e : r)
            if (e > 9) wide = true;
    std::string s = "(";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) s += "/";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (wide && j > 0) s += " ";
            s += std::to_string(rows[i][j]);
        }
    }
    return s + ")";
}

std::string render_block(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return "∅\n";
    std::string s;
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j > 0) s += " ";
            s += std::to_string(r[j]);
        }
        s += "\n";
    }
    return s;
}

void check_standard(const Partition& shape, const std::vector<std::vector<int>>& rows) {
    if (shape_of(rows) != shape)
        throw std::invalid_argument("StandardYoungTableau: shape does not match rows");
    const int n = shape.boxes();
    std::set<int> seen;
    for (const auto& r : rows)
        for (int e : r) {
            if (e < 1 || e > n || !seen.insert(e).second)
                throw std::invalid_argument("StandardYoungTableau: entries must be 1..n, each once");
        }
    for (const auto& r : rows)
        for (std::size_t j = 0; j + 1 < r.size(); ++j)
            if (r[j] >= r[j + 1])
                throw std::invalid_argument("StandardYoungTableau: rows must strictly increase");
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i + 1].size(); ++j)
            if (rows[i][j] >= rows[i + 1][j])
                throw std::invalid_argument("StandardYoungTableau: columns must strictly increase");
}

void check_semistandard(const Partition& shape, const std::vector<std::vector<int>>& rows) {
    if (shape_of(rows) != shape)
        throw std::invalid_argument("WeylTableau: shape does not match rows");
    for (const auto& r : rows)
        for (int e : r)
            if (e < 0) throw std::invalid_argument("WeylTableau: letters must be non-negative");
    for (const auto& r : rows)
        for (std::size_t j = 0; j + 1 < r.size(); ++j)
            if (r[j] > r[j + 1])
                throw std::invalid_argument("WeylTableau: rows must weakly increase");
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i + 1].size(); ++j)
            if (rows[i][j] >= rows[i + 1][j])
                throw std::invalid_argument("WeylTableau: columns must strictly increase");
}

void require_two_rows(const Partition& shape) {
    if (shape.row_count() > 2)
        throw OutOfScopeError("shape has more than two rows; only the one-deviation sector is supported");
}

// Up to 18 boxes the subset enumeration stays cheap; beyond that only the
// hook-length path runs.
constexpr int kEnumerationCrossCheckMax = 18;

}  // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts must weakly decrease");
    }
}

int Partition::boxes() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> r)
    : shape(shape_of(r)), rows(std::move(r)) {
    check_standard(shape, rows);
}

StandardYoungTableau::StandardYoungTableau(Partition s, std::vector<std::vector<int>> r)
    : shape(std::move(s)), rows(std::move(r)) {
    check_standard(shape, rows);
}

std::string StandardYoungTableau::inline_str() const { return render_inline(rows); }
std::string StandardYoungTableau::block_str() const { return render_block(rows); }

WeylTableau::WeylTableau(std::vector<std::vector<int>> r) : shape(shape_of(r)), rows(std::move(r)) {
    check_semistandard(shape, rows);
}

WeylTableau::WeylTableau(Partition s, std::vector<std::vector<int>> r)
    : shape(std::move(s)), rows(std::move(r)) {
    check_semistandard(shape, rows);
}

std::string WeylTableau::inline_str() const { return render_inline(rows); }
std::string WeylTableau::block_str() const { return render_block(rows); }

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

std::vector<StandardYoungTableau> one_magnon_tableaux(int n) {
    if (n < 2) throw std::invalid_argument("one_magnon_tableaux: requires n >= 2");
    std::vector<StandardYoungTableau> out;
    out.reserve(n);
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 1);
    out.emplace_back(std::vector<std::vector<int>>{full});
    for (int s = 2; s <= n; ++s) {
        std::vector<int> first;
        first.reserve(n - 1);
        for (int e = 1; e <= n; ++e)
            if (e != s) first.push_back(e);
        out.emplace_back(std::vector<std::vector<int>>{first, {s}});
    }
    return out;
}

long long count_syt_two_row_hook(const Partition& shape) {
    require_two_rows(shape);
    const int n = shape.boxes();
    if (n == 0) return 1;
    if (n > 33) throw std::invalid_argument("count_syt_two_row_hook: factorial exceeds exact range");
    const int a = shape.parts[0];
    const int b = shape.row_count() == 2 ? shape.parts[1] : 0;
    unsigned __int128 fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<unsigned>(i);
    unsigned __int128 hooks = 1;
    for (int j = 0; j < a; ++j) hooks *= static_cast<unsigned>((a - 1 - j) + (j < b ? 1 : 0) + 1);
    for (int j = 0; j < b; ++j) hooks *= static_cast<unsigned>(b - j);
    return static_cast<long long>(fact / hooks);
}

long long count_syt_two_row_enumerate(const Partition& shape) {
    require_two_rows(shape);
    const int n = shape.boxes();
    const int b = shape.row_count() == 2 ? shape.parts[1] : 0;
    // Choose which entries sit in row 2 and test standardness.
    long long count = 0;
    std::vector<int> pick(b);
    std::iota(pick.begin(), pick.end(), 0);
    auto advance = [&]() {
        int i = b - 1;
        while (i >= 0 && pick[i] == n - b + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < b; ++j) pick[j] = pick[j - 1] + 1;
        return true;
    };
    if (b == 0) return 1;
    do {
        std::vector<int> row2;
        std::vector<int> row1;
        std::vector<bool> in2(n, false);
        for (int i : pick) in2[i] = true;
        for (int e = 1; e <= n; ++e) (in2[e - 1] ? row2 : row1).push_back(e);
        bool ok = true;
        for (int j = 0; j < b && ok; ++j) ok = row1[j] < row2[j];
        if (ok) ++count;
    } while (advance());
    return count;
}

long long count_syt_two_row(const Partition& shape) {
    require_two_rows(shape);
    const long long fast = count_syt_two_row_hook(shape);
    if (shape.boxes() <= kEnumerationCrossCheckMax) {
        const long long ref = count_syt_two_row_enumerate(shape);
        if (ref != fast)
            throw std::logic_error("count_syt_two_row: hook-length and enumeration disagree");
    }
    return fast;
}

long long kostka_two_letter(const Partition& shape, std::pair<long long, long long> weight) {
    require_two_rows(shape);
    const int n = shape.boxes();
    if (weight.first < 0 || weight.second < 0 || weight.first + weight.second != n)
        throw std::invalid_argument("kostka_two_letter: weight must be non-negative and sum to the box count");
    if (n > 24) throw std::invalid_argument("kostka_two_letter: shape too large to enumerate");
    long long count = 0;
    // Every two-letter filling is a bit pattern laid into the shape row-major.
    for (long long bits = 0; bits < (1LL << n); ++bits) {
        if (std::popcount(static_cast<unsigned long long>(bits)) != weight.second) continue;
        std::vector<std::vector<int>> rows(shape.row_count());
        int pos = 0;
        for (int r = 0; r < shape.row_count(); ++r)
            for (int c = 0; c < shape.parts[r]; ++c) rows[r].push_back((bits >> pos++) & 1);
        bool ok = true;
        for (const auto& r : rows)
            for (std::size_t j = 0; ok && j + 1 < r.size(); ++j) ok = r[j] <= r[j + 1];
        for (std::size_t j = 0; ok && shape.row_count() == 2 && j < rows[1].size(); ++j)
            ok = rows[0][j] < rows[1][j];
        if (ok) ++count;
    }
    return count;
}

long long sector_dimension(int n, int r) {
    if (n < 0 || r < 0 || r > n)
        throw std::invalid_argument("sector_dimension: requires 0 <= r <= n");
    return binomial(n, r);
}

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts; }

void from_json(const nlohmann::json& j, Partition& p) {
    p = Partition(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const StandardYoungTableau& t) {
    j = nlohmann::json{{"shape", t.shape}, {"rows", t.rows}};
}

void from_json(const nlohmann::json& j, StandardYoungTableau& t) {
    t = StandardYoungTableau(j.at("shape").get<Partition>(),
                             j.at("rows").get<std::vector<std::vector<int>>>());
}

void to_json(nlohmann::json& j, const WeylTableau& t) {
    j = nlohmann::json{{"shape", t.shape}, {"rows", t.rows}};
}

void from_json(const nlohmann::json& j, WeylTableau& t) {
    t = WeylTableau(j.at("shape").get<Partition>(),
                    j.at("rows").get<std::vector<std::vector<int>>>());
}

}  // namespace swgraph
