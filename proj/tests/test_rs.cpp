#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "swgraph/rs.hpp"

using namespace swgraph;

TEST_CASE("word parsing") {
    CHECK(Word::parse_binary("00100") == Word({0, 0, 1, 0, 0}));
    CHECK(Word::parse_binary("") == Word());
    CHECK_THROWS_AS(Word::parse_binary("0012"), std::invalid_argument);
    CHECK_THROWS_AS(Word(std::vector<int>{0, -1}), std::invalid_argument);
}

TEST_CASE("the 00100 insertion trace") {
    const auto pair = rs_insert_word(Word::parse_binary("00100"), true);
    REQUIRE(pair.trace.size() == 5);
    CHECK(pair.trace[0].p == WeylTableau({{0}}));
    CHECK(pair.trace[0].q == StandardYoungTableau({{1}}));
    CHECK(pair.trace[1].p == WeylTableau({{0, 0}}));
    CHECK(pair.trace[1].q == StandardYoungTableau({{1, 2}}));
    CHECK(pair.trace[2].p == WeylTableau({{0, 0, 1}}));
    CHECK(pair.trace[2].q == StandardYoungTableau({{1, 2, 3}}));
    CHECK(pair.trace[3].p == WeylTableau({{0, 0, 0}, {1}}));
    CHECK(pair.trace[3].q == StandardYoungTableau({{1, 2, 3}, {4}}));
    CHECK(pair.trace[4].p == WeylTableau({{0, 0, 0, 0}, {1}}));
    CHECK(pair.trace[4].q == StandardYoungTableau({{1, 2, 3, 5}, {4}}));
    CHECK(pair.p == pair.trace.back().p);
    CHECK(pair.q == pair.trace.back().q);
}

TEST_CASE("edge words") {
    const auto empty = rs_insert_word(Word());
    CHECK(empty.p.rows.empty());
    CHECK(empty.q.rows.empty());
    CHECK(empty.trace.empty());

    // terminal 1 appends after the zeros; no bump, single rows
    const auto tail = rs_insert_word(Word::parse_binary("00001"));
    CHECK(tail.p == WeylTableau({{0, 0, 0, 0, 1}}));
    CHECK(tail.q == StandardYoungTableau({{1, 2, 3, 4, 5}}));

    // hand-run: 01010 ends at shape (3,2)
    const auto mid = rs_insert_word(Word::parse_binary("01010"));
    CHECK(mid.p == WeylTableau({{0, 0, 0}, {1, 1}}));
    CHECK(mid.q == StandardYoungTableau({{1, 2, 4}, {3, 5}}));
}

TEST_CASE("trace retention is opt-in") {
    CHECK(rs_insert_word(Word::parse_binary("0101")).trace.empty());
    CHECK(rs_insert_word(Word::parse_binary("0101"), true).trace.size() == 4);
}

TEST_CASE("rs_one_magnon closed form") {
    CHECK(rs_one_magnon(5, 3).q == StandardYoungTableau({{1, 2, 3, 5}, {4}}));
    CHECK(rs_one_magnon(5, 5).q == StandardYoungTableau({{1, 2, 3, 4, 5}}));
    CHECK(rs_one_magnon(5, 1).q == StandardYoungTableau({{1, 3, 4, 5}, {2}}));
    CHECK_THROWS_AS(rs_one_magnon(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(rs_one_magnon(5, 6), std::invalid_argument);

    SUBCASE("agrees with the insertion engine for every n <= 12") {
        for (int n = 2; n <= 12; ++n)
            for (int j = 1; j <= n; ++j) {
                const auto closed = rs_one_magnon(n, j);
                const auto engine = rs_insert_word(one_magnon_word(n, j));
                CHECK(closed.p == engine.p);
                CHECK(closed.q == engine.q);
            }
    }

    SUBCASE("one-magnon P is all zeros with a 1 below, or the single row") {
        for (int n = 2; n <= 12; ++n)
            for (int j = 1; j <= n; ++j) {
                const auto& p = rs_one_magnon(n, j).p;
                if (j == n) {
                    REQUIRE(p.rows.size() == 1);
                } else {
                    REQUIRE(p.rows.size() == 2);
                    CHECK(p.rows[1] == std::vector<int>{1});
                    for (int letter : p.rows[0]) CHECK(letter == 0);
                }
            }
    }
}

TEST_CASE("classification is a bijection onto the label set") {
    for (int n : {2, 5, 10, 12}) {
        const auto classified = classify_all_configurations(n);
        REQUIRE(classified.size() == static_cast<std::size_t>(n));
        std::set<StandardYoungTableau> image;
        for (const auto& [word, q] : classified) image.insert(q);
        CHECK(image.size() == static_cast<std::size_t>(n));  // injective
        const auto labels = one_magnon_tableaux(n);
        CHECK(image == std::set<StandardYoungTableau>(labels.begin(), labels.end()));
    }
    CHECK_THROWS_AS(classify_all_configurations(1), std::invalid_argument);

    // the n=5 image is exactly the five example labels
    const auto c5 = classify_all_configurations(5);
    CHECK(c5.at(Word::parse_binary("10000")) == StandardYoungTableau({{1, 3, 4, 5}, {2}}));
    CHECK(c5.at(Word::parse_binary("00100")) == StandardYoungTableau({{1, 2, 3, 5}, {4}}));
    CHECK(c5.at(Word::parse_binary("00001")) == StandardYoungTableau({{1, 2, 3, 4, 5}}));

    // smallest case: 10 maps to the column, 01 to the row
    const auto c2 = classify_all_configurations(2);
    CHECK(c2.at(Word::parse_binary("10")) == StandardYoungTableau({{1}, {2}}));
    CHECK(c2.at(Word::parse_binary("01")) == StandardYoungTableau({{1, 2}}));
}

TEST_CASE("property: P and Q share shape after every step") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> len(0, 16);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> letters(len(rng));
        for (auto& x : letters) x = bit(rng);
        const auto pair = rs_insert_word(Word(letters), true);
        for (const auto& step : pair.trace) CHECK(step.p.shape == step.q.shape);
        CHECK(pair.p.shape == pair.q.shape);
    }
}

TEST_CASE("property: engine stays valid on larger alphabets") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> letter(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> letters(len(rng));
        for (auto& x : letters) x = letter(rng);
        // construction revalidates semistandard/standard invariants
        const auto pair = rs_insert_word(Word(letters), true);
        CHECK(pair.p.n() == static_cast<int>(letters.size()));
        CHECK(pair.q.n() == static_cast<int>(letters.size()));
    }
}
