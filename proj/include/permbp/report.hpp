#pragma once

#include <json.hpp>

#include "permbp/bp.hpp"
#include "permbp/enumeration.hpp"

namespace permbp {

inline constexpr int kSchemaVersion = 1;

// Everything the check command reports about one permutation; every field
// is recomputable from w alone.
struct CheckOutput {
    Permutation w;
    int len = 0;
    GeneratorSet support_set;
    GeneratorSet left_descent_set;
    GeneratorSet right_descent_set;
    std::optional<RankMatrix> ranks;
    BPReport bp;
    // Containment verdicts for 3412, 52341, 635241 and 4231, in that order.
    std::vector<std::pair<Permutation, bool>> classical_patterns;
    std::optional<CompleteBP> complete;

    friend bool operator==(const CheckOutput&, const CheckOutput&) = default;
};

CheckOutput build_check(const Permutation& w, bool with_rank_matrix);

nlohmann::json check_to_json(const CheckOutput& out);
CheckOutput check_from_json(const nlohmann::json& j);
std::string render_check_plain(const CheckOutput& out);

nlohmann::json count_table_to_json(const CountTable& table);
std::string count_table_to_csv(const CountTable& table);
std::string render_count_table_plain(const CountTable& table);

nlohmann::json sweep_to_json(const SweepReport& report, std::string_view theorem);
std::string render_sweep_plain(const SweepReport& report, std::string_view theorem);

nlohmann::json tower_to_json(const Permutation& w, std::span<const int> order,
                             const TowerTrace& trace);
std::string render_tower_plain(const Permutation& w, std::span<const int> order,
                               const TowerTrace& trace);

}  // namespace permbp
