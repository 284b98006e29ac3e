#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "permbp/report.hpp"

using namespace permbp;
using nlohmann::json;

namespace {

std::string golden_path() { return std::string(PERMBP_TEST_DATA_DIR) + "/check_s4_golden.json"; }

json all_s4_checks() {
    json out = json::array();
    oracles::for_each_permutation(4, [&](std::span<const int> word) {
        out.push_back(check_to_json(build_check(Permutation::from_one_line(word), true)));
    });
    return out;
}

}  // namespace

TEST_CASE("check output round-trips through its JSON schema") {
    for (const char* text : {"3241", "4231", "3412", "1", "123456789", "936174285"}) {
        const CheckOutput out = build_check(parse_permutation(text), true);
        const json j = check_to_json(out);
        const CheckOutput back = check_from_json(j);
        CHECK(back == out);
        CHECK(check_to_json(back).dump() == j.dump());
    }
    // comma text form for n > 9
    std::vector<int> big(11);
    for (int i = 0; i < 11; ++i) big[static_cast<std::size_t>(i)] = (i + 5) % 11 + 1;
    const CheckOutput out = build_check(Permutation::from_one_line(big), false);
    CHECK(check_from_json(check_to_json(out)) == out);
}

TEST_CASE("check fields match the library calls they summarize") {
    const CheckOutput out = build_check(parse_permutation("3241"), true);
    CHECK(out.len == 4);  // inversions 32, 31, 21, 41
    CHECK(out.support_set == support(parse_permutation("3241")));
    CHECK(out.bp.positions.size() == 3);
    REQUIRE(out.complete.has_value());
    CHECK(out.complete->sigma == parse_permutation("123"));
    bool contains_4231 = true;
    for (const auto& [p, verdict] : out.classical_patterns)
        if (to_text(p) == "4231") contains_4231 = verdict;
    CHECK_FALSE(contains_4231);
}

TEST_CASE("check on all of S_4 matches the committed golden file") {
    const json produced = all_s4_checks();
    if (std::getenv("PERMBP_REGEN_GOLDEN") != nullptr) {
        std::ofstream out(golden_path());
        REQUIRE(out.good());
        out << produced.dump(2) << "\n";
        return;
    }
    std::ifstream in(golden_path());
    REQUIRE_MESSAGE(in.good(), "missing golden file; run with PERMBP_REGEN_GOLDEN=1 to create");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CHECK(produced.dump(2) + "\n" == buffer.str());
}

TEST_CASE("count table formats carry identical data") {
    const std::vector<Permutation> patterns = {parse_permutation("3412"),
                                               parse_permutation("52341"),
                                               parse_permutation("635241")};
    const CountTable table = series(6, patterns);

    const json j = count_table_to_json(table);
    CHECK(j.at("schema_version").get<int>() == kSchemaVersion);
    CHECK(j.at("pattern_set") == json({"3412", "52341", "635241"}));
    CHECK(j.at("method").get<std::string>() == "pruned");

    // csv: header then one row per n, same values as the json rows
    std::istringstream csv(count_table_to_csv(table));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "n,count");
    std::size_t row = 0;
    while (std::getline(csv, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::stoi(line.substr(0, comma)) == j.at("rows")[row].at("n").get<int>());
        CHECK(std::stoull(line.substr(comma + 1)) ==
              j.at("rows")[row].at("count").get<std::uint64_t>());
        ++row;
    }
    CHECK(row == table.rows.size());

    // plain rendering mentions every count
    const std::string plain = render_count_table_plain(table);
    for (const CountRow& r : table.rows)
        CHECK(plain.find(": " + std::to_string(r.count)) != std::string::npos);
}

TEST_CASE("sweep and tower reports serialize stably") {
    const SweepReport report = sweep_theorem_main(4);
    const json j = sweep_to_json(report, "main");
    CHECK(j.at("theorem") == "main");
    CHECK(j.at("checks_performed").get<std::uint64_t>() == 72);
    CHECK(j.at("mismatches").empty());
    CHECK_FALSE(j.contains("successes"));

    const json j2 = sweep_to_json(sweep_theorem_main2(4), "main2");
    CHECK(j2.at("successes").get<std::uint64_t>() == 23);

    const Permutation w = parse_permutation("4231");
    const std::vector<int> order = {2, 1, 3};
    const TowerTrace trace = run_tower(w, order);
    const json jt = tower_to_json(w, order, trace);
    CHECK(jt.at("success").get<bool>());
    CHECK(jt.at("stages").size() == 3);
    CHECK(jt.at("complete_bp").at("sigma") == "213");
    const std::string plain = render_tower_plain(w, order, trace);
    CHECK(plain.find("success") != std::string::npos);
}
