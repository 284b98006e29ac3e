// Command-line front end: check / enumerate / verify / tower.
//
// Exit codes: 0 success, 1 usage or parse error, 2 internal consistency
// failure (the two BP criteria or the two counters disagreeing).

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "permbp/report.hpp"

namespace {

using namespace permbp;

std::vector<Permutation> parse_pattern_list(const std::string& text) {
    std::vector<Permutation> out;
    if (text.empty()) return out;
    // Semicolons allow comma-form entries; otherwise commas separate
    // compact-form patterns.
    const char sep = text.find(';') != std::string::npos ? ';' : ',';
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string::npos) end = text.size();
        const std::string tok = text.substr(start, end - start);
        if (tok.empty()) throw std::invalid_argument("patterns: empty list entry");
        PatternSpec spec = parse_pattern(tok);
        if (!std::holds_alternative<Permutation>(spec))
            throw std::invalid_argument("patterns: split patterns are not countable classes: '" +
                                        tok + "'");
        out.push_back(std::get<Permutation>(std::move(spec)));
        start = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

int cmd_check(const std::string& perm_text, const std::string& format, bool with_ranks) {
    const Permutation w = parse_permutation(perm_text);
    const CheckOutput out = build_check(w, with_ranks);
    if (format == "json")
        std::cout << check_to_json(out).dump(2) << "\n";
    else
        std::cout << render_check_plain(out);
    return 0;
}

int cmd_enumerate(int n_max, const std::string& patterns_text, const std::string& method,
                  const std::string& format, int jobs, int scan_ceiling) {
    const std::vector<Permutation> patterns = parse_pattern_list(patterns_text);
    CountTable table;
    if (method == "scan") {
        table.pattern_set = patterns;
        table.method = "scan";
        for (int n = 1; n <= n_max; ++n)
            table.rows.push_back(CountRow{n, count_avoiders_scan(n, patterns, jobs)});
    } else {
        EnumerateOptions opts;
        opts.jobs = jobs;
        opts.scan_ceiling = scan_ceiling;
        table = series(n_max, patterns, opts);
    }
    if (format == "json")
        std::cout << count_table_to_json(table).dump(2) << "\n";
    else if (format == "plain")
        std::cout << render_count_table_plain(table);
    else
        std::cout << count_table_to_csv(table);
    return 0;
}

int cmd_verify(const std::string& theorem, int n, int jobs, bool force,
               const std::string& format) {
    SweepOptions opts;
    opts.jobs = jobs;
    if (force) opts.max_n = n;
    const SweepReport report =
        theorem == "main" ? sweep_theorem_main(n, opts) : sweep_theorem_main2(n, opts);
    if (format == "plain")
        std::cout << render_sweep_plain(report, theorem);
    else
        std::cout << sweep_to_json(report, theorem).dump(2) << "\n";
    return report.mismatches.empty() ? 0 : 2;
}

int cmd_tower(const std::string& perm_text, const std::string& sigma_text,
              const std::string& format) {
    const Permutation w = parse_permutation(perm_text);
    std::vector<int> order;
    if (!sigma_text.empty()) {
        const Permutation sigma = parse_permutation(sigma_text);
        order.assign(sigma.one_line().begin(), sigma.one_line().end());
    }
    const TowerTrace trace = permbp::run_tower(w, order);
    if (format == "json")
        std::cout << tower_to_json(w, order, trace).dump(2) << "\n";
    else
        std::cout << render_tower_plain(w, order, trace);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Billey-Postnikov decompositions of permutations: fiber-bundle position checks, "
        "complete factorizations, and pattern-avoidance counting"};
    app.require_subcommand(1);

    std::string check_perm, tower_perm, sigma_text, patterns_text, theorem, method;
    std::string check_format, enum_format, verify_format, tower_format;
    int n_max = 0, n = 0, enum_jobs = 0, verify_jobs = 0, scan_ceiling = 8;
    bool with_ranks = false, force = false;

    auto* check = app.add_subcommand("check", "Full report for one permutation");
    check->add_option("permutation", check_perm, "one-line form, e.g. 4231 or 10,3,1,...")
        ->required();
    check->add_option("--format", check_format, "plain|json")->default_val("plain");
    check->add_flag("--rank-matrix", with_ranks, "include the rank matrix");

    auto* enumerate = app.add_subcommand("enumerate", "Count pattern avoiders for n = 1..n-max");
    enumerate->add_option("--n-max", n_max, "largest n")->required();
    enumerate->add_option("--patterns", patterns_text,
                          "comma-separated classical patterns, e.g. 3412,52341,635241");
    enumerate->add_option("--method", method, "pruned|scan")->default_val("pruned")
        ->check(CLI::IsMember({"pruned", "scan"}));
    enumerate->add_option("--format", enum_format, "csv|json|plain")->default_val("csv");
    enumerate->add_option("--jobs", enum_jobs, "worker count (0 = all cores)")->default_val(0);
    enumerate->add_option("--scan-ceiling", scan_ceiling,
                          "cross-check pruned rows against the scan up to this n")
        ->default_val(8);

    auto* verify = app.add_subcommand("verify", "Exhaustive equivalence sweep over S_n");
    verify->add_option("--theorem", theorem, "main (per-position criteria) | main2 (complete structure)")
        ->required()
        ->check(CLI::IsMember({"main", "main2"}));
    verify->add_option("--n", n, "sweep S_n")->required();
    verify->add_option("--jobs", verify_jobs, "worker count (0 = all cores)")->default_val(0);
    verify->add_flag("--force", force, "allow n beyond the default ceiling of 7");
    verify->add_option("--format", verify_format, "json|plain")->default_val("json");

    auto* tower = app.add_subcommand("tower", "Peel a permutation along a prescribed sigma");
    tower->add_option("permutation", tower_perm, "one-line form")->required();
    tower->add_option("--sigma", sigma_text, "peel order, a permutation of [n-1]")->required();
    tower->add_option("--format", tower_format, "plain|json")->default_val("plain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(check_perm, check_format, with_ranks);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(n_max, patterns_text, method, enum_format, enum_jobs,
                                 scan_ceiling);
        if (app.got_subcommand(verify)) return cmd_verify(theorem, n, verify_jobs, force, verify_format);
        if (app.got_subcommand(tower)) return cmd_tower(tower_perm, sigma_text, tower_format);
    } catch (const permbp::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
