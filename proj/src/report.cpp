#include "permbp/report.hpp"

#include <algorithm>
#include <sstream>

namespace permbp {

using nlohmann::json;

namespace {

json set_to_json(const GeneratorSet& s) { return json(s.members()); }

GeneratorSet set_from_json(const json& j, int ambient) {
    GeneratorSet out(ambient);
    for (int i : j.get<std::vector<int>>()) out.insert(i);
    return out;
}

std::string join(std::span<const int> values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string set_to_text(const GeneratorSet& s) {
    return "{" + join(s.members(), ",") + "}";
}

json violation_to_json(const SplitViolation& v) {
    return json{{"pattern", to_text(v.pattern)}, {"indices", v.witness}};
}

json complete_bp_to_json(const CompleteBP& c) {
    json factors = json::array();
    json words = json::array();
    for (const Permutation& f : c.factors) {
        factors.push_back(to_text(f));
        words.push_back(reduced_word(f));
    }
    return json{{"factors", factors},
                {"factor_words", words},
                {"positions", c.positions},
                {"sigma", to_text(c.sigma)}};
}

CompleteBP complete_bp_from_json(const json& j) {
    CompleteBP out;
    for (const auto& f : j.at("factors")) out.factors.push_back(parse_permutation(f.get<std::string>()));
    out.positions = j.at("positions").get<std::vector<int>>();
    const std::string sigma = j.at("sigma").get<std::string>();
    if (!sigma.empty()) out.sigma = parse_permutation(sigma);
    return out;
}

}  // namespace

CheckOutput build_check(const Permutation& w, bool with_rank_matrix) {
    CheckOutput out;
    out.w = w;
    out.len = length(w);
    out.support_set = support(w);
    out.left_descent_set = left_descents(w);
    out.right_descent_set = right_descents(w);
    if (with_rank_matrix) out.ranks = rank_matrix(w);
    out.bp = bp_report(w);
    for (const Permutation& p : complete_structure_patterns())
        out.classical_patterns.emplace_back(p, contains_pattern(w, p).has_value());
    const Permutation smooth_extra = Permutation::from_one_line({4, 2, 3, 1});
    out.classical_patterns.emplace_back(smooth_extra,
                                        contains_pattern(w, smooth_extra).has_value());
    // Canonical text order, matching the key order of the JSON emission.
    std::sort(out.classical_patterns.begin(), out.classical_patterns.end(),
              [](const auto& a, const auto& b) { return to_text(a.first) < to_text(b.first); });
    out.complete = complete_bp(w);
    return out;
}

json check_to_json(const CheckOutput& out) {
    json positions = json::array();
    for (const PositionVerdict& v : out.bp.positions) {
        json entry{{"r", v.r},
                   {"bp_by_descent", v.bp_by_descent},
                   {"bp_by_pattern", v.bp_by_pattern},
                   {"witness", v.violation ? violation_to_json(*v.violation) : json(nullptr)}};
        positions.push_back(std::move(entry));
    }
    json bp_pos = json::array();
    for (const PositionVerdict& v : out.bp.positions)
        if (v.bp_by_descent) bp_pos.push_back(v.r);

    json contains = json::object();
    for (const auto& [p, verdict] : out.classical_patterns) contains[to_text(p)] = verdict;

    json j{{"schema_version", kSchemaVersion},
           {"w", to_text(out.w)},
           {"n", out.w.size()},
           {"length", out.len},
           {"support", set_to_json(out.support_set)},
           {"left_descents", set_to_json(out.left_descent_set)},
           {"right_descents", set_to_json(out.right_descent_set)},
           {"positions", positions},
           {"bp_positions", bp_pos},
           {"contains", contains},
           {"complete_bp", out.complete ? complete_bp_to_json(*out.complete) : json(nullptr)}};
    if (out.ranks) {
        json rows = json::array();
        for (int i = 1; i <= out.ranks->n; ++i) {
            json row = json::array();
            for (int jj = 1; jj <= out.ranks->n; ++jj) row.push_back(out.ranks->at(i, jj));
            rows.push_back(std::move(row));
        }
        j["rank_matrix"] = rows;
    }
    return j;
}

CheckOutput check_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("check report: unsupported schema_version");
    CheckOutput out;
    out.w = parse_permutation(j.at("w").get<std::string>());
    const int n = out.w.size();
    out.len = j.at("length").get<int>();
    out.support_set = set_from_json(j.at("support"), n);
    out.left_descent_set = set_from_json(j.at("left_descents"), n);
    out.right_descent_set = set_from_json(j.at("right_descents"), n);
    if (j.contains("rank_matrix")) {
        RankMatrix m;
        m.n = n;
        for (const auto& row : j.at("rank_matrix"))
            for (const auto& entry : row) m.entries.push_back(entry.get<int>());
        out.ranks = std::move(m);
    }
    out.bp.w = out.w;
    for (const auto& entry : j.at("positions")) {
        PositionVerdict v;
        v.r = entry.at("r").get<int>();
        v.bp_by_descent = entry.at("bp_by_descent").get<bool>();
        v.bp_by_pattern = entry.at("bp_by_pattern").get<bool>();
        if (!entry.at("witness").is_null()) {
            const auto& wit = entry.at("witness");
            PatternSpec spec = parse_pattern(wit.at("pattern").get<std::string>());
            v.violation = SplitViolation{std::get<SplitPattern>(spec),
                                         wit.at("indices").get<std::vector<int>>()};
        }
        out.bp.positions.push_back(std::move(v));
    }
    for (const auto& [key, value] : j.at("contains").items())
        out.classical_patterns.emplace_back(parse_permutation(key), value.get<bool>());
    if (!j.at("complete_bp").is_null()) out.complete = complete_bp_from_json(j.at("complete_bp"));
    return out;
}

std::string render_check_plain(const CheckOutput& out) {
    std::ostringstream os;
    os << "w = " << to_text(out.w) << "  (n = " << out.w.size() << ")\n";
    os << "length: " << out.len << "\n";
    os << "support: " << set_to_text(out.support_set) << "\n";
    os << "left descents: " << set_to_text(out.left_descent_set) << "\n";
    os << "right descents: " << set_to_text(out.right_descent_set) << "\n";
    if (out.ranks) {
        os << "rank matrix:\n";
        for (int i = 1; i <= out.ranks->n; ++i) {
            os << " ";
            for (int j = 1; j <= out.ranks->n; ++j) os << " " << out.ranks->at(i, j);
            os << "\n";
        }
    }
    os << "bundle positions:";
    bool any = false;
    for (const PositionVerdict& v : out.bp.positions)
        if (v.bp_by_descent) {
            os << " " << v.r;
            any = true;
        }
    if (!any) os << " none";
    os << "\n";
    for (const PositionVerdict& v : out.bp.positions) {
        os << "  r = " << v.r << ": " << (v.bp_by_descent ? "fiber bundle" : "not a bundle");
        if (v.violation)
            os << "  (contains " << to_text(v.violation->pattern) << " at positions "
               << join(v.violation->witness, ",") << ")";
        os << "\n";
    }
    os << "classical patterns:";
    for (const auto& [p, verdict] : out.classical_patterns)
        os << " " << to_text(p) << (verdict ? ":contained" : ":avoided");
    os << "\n";
    if (out.complete) {
        os << "complete factorization: ";
        if (out.complete->factors.empty()) {
            os << "trivial (identity)\n";
        } else {
            for (std::size_t i = 0; i < out.complete->factors.size(); ++i) {
                if (i > 0) os << " * ";
                os << to_text(out.complete->factors[i]);
            }
            os << "\n  reduced words:";
            for (const Permutation& f : out.complete->factors) {
                os << " (";
                os << join(reduced_word(f), " ");
                os << ")";
            }
            os << "\n";
        }
        os << "  positions: [" << join(out.complete->positions, ",") << "]\n";
        os << "  sigma: " << (out.complete->sigma.empty() ? "-" : to_text(out.complete->sigma))
           << "\n";
    } else {
        os << "complete factorization: none\n";
    }
    return os.str();
}

json count_table_to_json(const CountTable& table) {
    json patterns = json::array();
    for (const Permutation& p : table.pattern_set) patterns.push_back(to_text(p));
    json rows = json::array();
    for (const CountRow& row : table.rows) rows.push_back(json{{"n", row.n}, {"count", row.count}});
    return json{{"schema_version", kSchemaVersion},
                {"pattern_set", patterns},
                {"method", table.method},
                {"rows", rows}};
}

std::string count_table_to_csv(const CountTable& table) {
    std::string out = "n,count\n";
    for (const CountRow& row : table.rows)
        out += std::to_string(row.n) + "," + std::to_string(row.count) + "\n";
    return out;
}

std::string render_count_table_plain(const CountTable& table) {
    std::ostringstream os;
    os << "patterns:";
    if (table.pattern_set.empty()) os << " (none)";
    for (const Permutation& p : table.pattern_set) os << " " << to_text(p);
    os << "   method: " << table.method << "\n";
    for (const CountRow& row : table.rows)
        os << "  n = " << row.n << ": " << row.count << "\n";
    return os.str();
}

json sweep_to_json(const SweepReport& report, std::string_view theorem) {
    json mismatches = json::array();
    for (const SweepMismatch& m : report.mismatches) {
        json entry{{"w", m.w}, {"detail", m.detail}};
        entry["r"] = m.r ? json(*m.r) : json(nullptr);
        mismatches.push_back(std::move(entry));
    }
    json j{{"schema_version", kSchemaVersion},
           {"theorem", std::string(theorem)},
           {"n", report.n},
           {"checks_performed", report.checks_performed},
           {"mismatches", mismatches}};
    if (report.successes) j["successes"] = *report.successes;
    if (report.greedy_fallbacks > 0) j["greedy_fallbacks"] = report.greedy_fallbacks;
    return j;
}

std::string render_sweep_plain(const SweepReport& report, std::string_view theorem) {
    std::ostringstream os;
    os << "sweep " << theorem << " over S_" << report.n << ": " << report.checks_performed
       << " checks, " << report.mismatches.size() << " mismatches";
    if (report.successes) os << ", " << *report.successes << " successes";
    os << "\n";
    for (const SweepMismatch& m : report.mismatches) {
        os << "  mismatch";
        if (!m.w.empty()) os << " w = " << m.w;
        if (m.r) os << " r = " << *m.r;
        os << ": " << m.detail << "\n";
    }
    return os.str();
}

json tower_to_json(const Permutation& w, std::span<const int> order, const TowerTrace& trace) {
    json stages = json::array();
    for (const TowerStage& s : trace.stages) {
        stages.push_back(json{{"r", s.r},
                              {"trivial", s.trivial},
                              {"bp", s.bp_ok},
                              {"factor", to_text(s.factor)},
                              {"remainder", to_text(s.remainder)}});
    }
    json j{{"schema_version", kSchemaVersion},
           {"w", to_text(w)},
           {"order", std::vector<int>(order.begin(), order.end())},
           {"stages", stages},
           {"success", trace.success}};
    j["complete_bp"] = trace.result ? complete_bp_to_json(*trace.result) : json(nullptr);
    return j;
}

std::string render_tower_plain(const Permutation& w, std::span<const int> order,
                               const TowerTrace& trace) {
    std::ostringstream os;
    os << "w = " << to_text(w) << ", order = [" << join(order, ",") << "]\n";
    for (const TowerStage& s : trace.stages) {
        os << "  r = " << s.r << ": ";
        if (s.trivial)
            os << "trivial (generator outside support)";
        else if (s.bp_ok)
            os << "peeled factor " << to_text(s.factor) << ", remainder " << to_text(s.remainder);
        else
            os << "not a fiber bundle position - peel stops";
        os << "\n";
    }
    os << (trace.success ? "success" : "failure") << "\n";
    return os.str();
}

}  // namespace permbp
