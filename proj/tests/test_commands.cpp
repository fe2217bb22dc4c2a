#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "swgraph/commands.hpp"
#include "swgraph/magnon_states.hpp"

using namespace swgraph;

namespace {

LabelSelector second_row(int s) {
    LabelSelector sel;
    sel.second_row = s;
    return sel;
}

LabelSelector row_label() {
    LabelSelector sel;
    sel.row = true;
    return sel;
}

LabelSelector all_labels() {
    LabelSelector sel;
    sel.all = true;
    return sel;
}

}  // namespace

TEST_CASE("cmd_state text output") {
    const auto r = cmd_state(5, second_row(4), OutputFormat::text);
    CHECK(r.status == 0);
    CHECK(r.output ==
          "|(1235/4)⟩ = √3/2 |4⟩ - √3/6 (|1⟩+|2⟩+|3⟩)\n");

    const auto row2 = cmd_state(2, row_label(), OutputFormat::text);
    CHECK(row2.output == "|(12)⟩ = √2/2 (|1⟩+|2⟩)\n");

    const auto all = cmd_state(5, all_labels(), OutputFormat::text);
    CHECK(all.status == 0);
    // one line per label, first is the row state
    CHECK(all.output.find("|(12345)⟩ = √5/5") != std::string::npos);
    CHECK(all.output.find("2√5/5 |5⟩ - √5/10") != std::string::npos);
}

TEST_CASE("cmd_state json matches the amplitude formula") {
    const auto r = cmd_state(6, second_row(3), OutputFormat::json);
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("n") == 6);
    const auto st = j.get<OneMagnonState>();
    const auto labels = one_magnon_tableaux(6);
    for (int node = 1; node <= 6; ++node)
        CHECK(st.amplitudes[node - 1] == amplitude(6, labels[2], node));
}

TEST_CASE("cmd_state usage errors") {
    CHECK(cmd_state(5, LabelSelector{}, OutputFormat::text).status == 2);
    LabelSelector both;
    both.all = true;
    both.row = true;
    CHECK(cmd_state(5, both, OutputFormat::text).status == 2);
    CHECK(cmd_state(5, second_row(7), OutputFormat::text).status == 2);
    CHECK(cmd_state(1, row_label(), OutputFormat::text).status == 2);
    CHECK(cmd_state(5, row_label(), OutputFormat::dot).status == 2);
}

TEST_CASE("cmd_rs reproduces the worked example") {
    const auto r = cmd_rs("00100", OutputFormat::text);
    CHECK(r.status == 0);
    CHECK(r.output ==
          "step 1: insert 0 → P = (0), Q = (1)\n"
          "step 2: insert 0 → P = (00), Q = (12)\n"
          "step 3: insert 1 → P = (001), Q = (123)\n"
          "step 4: insert 0 → P = (000/1), Q = (123/4)\n"
          "step 5: insert 0 → P = (0000/1), Q = (1235/4)\n"
          "final: P = (0000/1), Q = (1235/4)\n");
}

TEST_CASE("cmd_rs edge cases") {
    const auto empty = cmd_rs("", OutputFormat::text);
    CHECK(empty.status == 0);
    CHECK(empty.output == "final: P = ∅, Q = ∅\n");

    const auto bad = cmd_rs("01x", OutputFormat::text);
    CHECK(bad.status == 2);

    const auto j = nlohmann::json::parse(cmd_rs("01010", OutputFormat::json).output);
    CHECK(j.at("word") == "01010");
    CHECK(j.at("steps").size() == 5);
    CHECK(j.at("q").at("shape") == nlohmann::json({3, 2}));
}

TEST_CASE("cmd_graph formats") {
    const auto text = cmd_graph(5, second_row(4), GraphMode::closed_form, OutputFormat::text);
    CHECK(text.status == 0);
    CHECK(text.output.find("1 -- 4  C2  1/2 (0.5)") != std::string::npos);
    CHECK(text.output.find("isolated: 5") != std::string::npos);

    const auto dot = cmd_graph(5, second_row(4), GraphMode::closed_form, OutputFormat::dot);
    CHECK(dot.output.find("style=dashed") != std::string::npos);

    const auto json = cmd_graph(5, all_labels(), GraphMode::numeric, OutputFormat::json);
    const auto j = nlohmann::json::parse(json.output);
    REQUIRE(j.is_array());
    CHECK(j.size() == 5);
    CHECK(j[4].at("edges").size() == 10);

    CHECK(cmd_graph(5, LabelSelector{}, GraphMode::closed_form, OutputFormat::text).status == 2);
}

TEST_CASE("cmd_table lists the five n=5 rows") {
    const auto r = cmd_table(5, OutputFormat::text);
    CHECK(r.status == 0);
    CHECK(r.output.find("(1345/2)") != std::string::npos);
    CHECK(r.output.find("C2 = 1 (1)") != std::string::npos);
    CHECK(r.output.find("C1 = 1/3 (0.3333333333), C2 = 2/3 (0.6666666667)") != std::string::npos);
    CHECK(r.output.find("C1 = 1/6 (0.1666666667), C2 = 1/2 (0.5)") != std::string::npos);
    CHECK(r.output.find("C1 = 1/10 (0.1), C2 = 2/5 (0.4)") != std::string::npos);
    CHECK(r.output.find("C = 2/5 (0.4)") != std::string::npos);

    // delta column stays below 1e-9 for every row
    const auto j = nlohmann::json::parse(cmd_table(5, OutputFormat::json).output);
    REQUIRE(j.size() == 5);
    for (const auto& row : j) CHECK(row.at("max_delta").get<double>() < 1e-9);

    CHECK(cmd_table(1, OutputFormat::text).status == 2);
}

TEST_CASE("cmd_table at n=2: two rows, both a single weight-1 edge") {
    const auto j = nlohmann::json::parse(cmd_table(2, OutputFormat::json).output);
    REQUIRE(j.size() == 2);
    CHECK(j[0].at("structure") == "K2 on 1..2");
    CHECK(j[1].at("structure") == "K2 on 1..2");
    CHECK(j[0].at("concurrence").at("C").at("float") == 1.0);
    CHECK(j[1].at("concurrence").at("C2").at("float") == 1.0);
}

TEST_CASE("cmd_verify") {
    const auto ok = cmd_verify(6, kDefaultBruteForceCap);
    CHECK(ok.status == 0);
    CHECK(ok.output.find("[FAIL]") == std::string::npos);
    CHECK(ok.output.find("14/14 checks passed") != std::string::npos);

    CHECK(cmd_verify(2, kDefaultBruteForceCap).status == 0);  // smallest instance

    const auto capped = cmd_verify(15, 14);
    CHECK(capped.status == 1);
    CHECK(capped.output.find("cap") != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
    for (int rep = 0; rep < 2; ++rep) {
        CHECK(cmd_state(7, all_labels(), OutputFormat::json).output ==
              cmd_state(7, all_labels(), OutputFormat::json).output);
        CHECK(cmd_table(6, OutputFormat::text).output == cmd_table(6, OutputFormat::text).output);
        CHECK(cmd_graph(6, all_labels(), GraphMode::numeric, OutputFormat::dot).output ==
              cmd_graph(6, all_labels(), GraphMode::numeric, OutputFormat::dot).output);
    }
}
