#include "swgraph/rs.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>

namespace swgraph {

Word::Word(std::vector<int> l) : letters(std::move(l)) {
    for (int x : letters)
        if (x < 0) throw std::invalid_argument("Word: letters must be non-negative");
}

Word Word::parse_binary(std::string_view text) {
    std::vector<int> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("Word: expected a string over {0,1}");
        letters.push_back(c - '0');
    }
    return Word(std::move(letters));
}

std::string Word::str() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0 && letters[i - 1] > 9) s += " ";
        s += std::to_string(letters[i]);
    }
    return s;
}

RSPair rs_insert_word(const Word& w, bool with_trace) {
    std::vector<std::vector<int>> p_rows;
    std::vector<std::vector<int>> q_rows;
    RSPair out;
    if (with_trace) out.trace.reserve(w.letters.size());

    for (std::size_t step = 0; step < w.letters.size(); ++step) {
        int carry = w.letters[step];
        std::size_t row = 0;
        for (;;) {
            if (row == p_rows.size()) {
                p_rows.emplace_back();
                q_rows.emplace_back();
            }
            auto& r = p_rows[row];
            auto it = std::upper_bound(r.begin(), r.end(), carry);
            if (it == r.end()) {
                r.push_back(carry);
                q_rows[row].push_back(static_cast<int>(step) + 1);
                break;
            }
            std::swap(carry, *it);
            ++row;
        }
        if (with_trace)
            out.trace.push_back(
                {w.letters[step], WeylTableau(p_rows), StandardYoungTableau(q_rows)});
    }
    out.p = WeylTableau(p_rows);
    out.q = StandardYoungTableau(q_rows);
    return out;
}

Word one_magnon_word(int n, int j) {
    if (n < 1 || j < 1 || j > n)
        throw std::invalid_argument("one_magnon_word: requires 1 <= j <= n");
    std::vector<int> letters(n, 0);
    letters[j - 1] = 1;
    return Word(std::move(letters));
}

RSPair rs_one_magnon(int n, int j) {
    if (n < 1 || j < 1 || j > n)
        throw std::invalid_argument("rs_one_magnon: requires 1 <= j <= n");
    RSPair out;
    if (j == n) {
        std::vector<int> p_row(n, 0);
        p_row.back() = 1;
        std::vector<int> q_row(n);
        std::iota(q_row.begin(), q_row.end(), 1);
        out.p = WeylTableau({p_row});
        out.q = StandardYoungTableau({q_row});
        return out;
    }
    std::vector<int> q_first;
    q_first.reserve(n - 1);
    for (int e = 1; e <= n; ++e)
        if (e != j + 1) q_first.push_back(e);
    out.p = WeylTableau({std::vector<int>(n - 1, 0), {1}});
    out.q = StandardYoungTableau({q_first, {j + 1}});
    return out;
}

std::map<Word, StandardYoungTableau> classify_all_configurations(int n) {
    if (n < 2) throw std::invalid_argument("classify_all_configurations: requires n >= 2");
    std::map<Word, StandardYoungTableau> out;
    for (int j = 1; j <= n; ++j) out.emplace(one_magnon_word(n, j), rs_one_magnon(n, j).q);
    return out;
}

void to_json(nlohmann::json& j, const RSStep& s) {
    j = nlohmann::json{{"letter", s.letter}, {"p", s.p}, {"q", s.q}};
}

void to_json(nlohmann::json& j, const RSPair& r) {
    j = nlohmann::json{{"p", r.p}, {"q", r.q}};
    if (!r.trace.empty()) j["steps"] = r.trace;
}

}  // namespace swgraph
