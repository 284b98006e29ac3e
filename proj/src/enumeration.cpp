#include "permbp/enumeration.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "permbp/bp.hpp"
#include "permbp/patterns.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permbp {

namespace {

constexpr int kMaxCountedN = 20;  // n! fits in 64 bits up to here

constexpr std::array<std::uint64_t, 10> kCompleteStructureCounts = {
    1, 2, 6, 23, 102, 492, 2492, 13008, 69267, 374019};

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void check_counting_n(int n) {
    if (n < 1) throw std::invalid_argument("enumeration: n must be >= 1");
    if (n > kMaxCountedN)
        throw std::invalid_argument("enumeration: n > " + std::to_string(kMaxCountedN) +
                                    " would overflow 64-bit counts");
}

std::vector<std::vector<int>> pattern_words(std::span<const Permutation> patterns) {
    std::vector<std::vector<int>> out;
    out.reserve(patterns.size());
    for (const Permutation& p : patterns)
        out.emplace_back(p.one_line().begin(), p.one_line().end());
    return out;
}

bool avoids_all(std::span<const int> word, const std::vector<std::vector<int>>& patterns) {
    for (const auto& p : patterns)
        if (detail::has_occurrence(word, p)) return false;
    return true;
}

// No pattern acquires an occurrence using the just-appended entry.  Since a
// contained prefix is abandoned immediately, occurrences not touching the
// back cannot exist, so this is a full containment check for the prefix.
bool prefix_still_avoids(std::span<const int> prefix, const std::vector<std::vector<int>>& patterns) {
    for (const auto& p : patterns)
        if (detail::occurrence_ending_at_back(prefix, p)) return false;
    return true;
}

// All permutations of [n] with first entry `first`, lexicographic in the
// remaining positions.
template <typename Fn>
void for_each_in_first_block(int n, int first, Fn&& fn) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    word.push_back(first);
    for (int v = 1; v <= n; ++v)
        if (v != first) word.push_back(v);
    do {
        fn(std::span<const int>(word));
    } while (std::next_permutation(word.begin() + 1, word.end()));
}

std::uint64_t scan_block(int n, int first, const std::vector<std::vector<int>>& patterns) {
    std::uint64_t count = 0;
    for_each_in_first_block(n, first, [&](std::span<const int> word) {
        if (avoids_all(word, patterns)) ++count;
    });
    return count;
}

std::uint64_t pruned_dfs(int n, const std::vector<std::vector<int>>& patterns,
                         std::vector<int>& word, std::uint32_t used) {
    if (static_cast<int>(word.size()) == n) return 1;
    std::uint64_t total = 0;
    for (int v = 1; v <= n; ++v) {
        const std::uint32_t bit = 1u << v;
        if (used & bit) continue;
        word.push_back(v);
        if (prefix_still_avoids(word, patterns)) total += pruned_dfs(n, patterns, word, used | bit);
        word.pop_back();
    }
    return total;
}

std::uint64_t pruned_pair_task(int n, int a, int b, const std::vector<std::vector<int>>& patterns) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    word.push_back(a);
    if (!prefix_still_avoids(word, patterns)) return 0;
    word.push_back(b);
    if (!prefix_still_avoids(word, patterns)) return 0;
    return pruned_dfs(n, patterns, word, (1u << a) | (1u << b));
}

}  // namespace

std::uint64_t count_avoiders_scan_serial(int n, std::span<const Permutation> patterns) {
    check_counting_n(n);
    const auto pats = pattern_words(patterns);
    std::uint64_t total = 0;
    for (int first = 1; first <= n; ++first) total += scan_block(n, first, pats);
    return total;
}

std::uint64_t count_avoiders_scan(int n, std::span<const Permutation> patterns, int jobs) {
    check_counting_n(n);
    const int threads = resolve_jobs(jobs);
    if (threads == 1 || n < 2) return count_avoiders_scan_serial(n, patterns);
    const auto pats = pattern_words(patterns);
    std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) reduction(+ : total)
#endif
    for (int first = 1; first <= n; ++first) total += scan_block(n, first, pats);
    return total;
}

std::uint64_t count_avoiders_pruned_serial(int n, std::span<const Permutation> patterns) {
    check_counting_n(n);
    const auto pats = pattern_words(patterns);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    return pruned_dfs(n, pats, word, 0);
}

std::uint64_t count_avoiders_pruned(int n, std::span<const Permutation> patterns, int jobs) {
    check_counting_n(n);
    const int threads = resolve_jobs(jobs);
    if (threads == 1 || n < 3) return count_avoiders_pruned_serial(n, patterns);
    const auto pats = pattern_words(patterns);
    const int tasks = n * (n - 1);  // ordered first pairs
    std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads) reduction(+ : total)
#endif
    for (int t = 0; t < tasks; ++t) {
        const int a = t / (n - 1) + 1;
        int b = t % (n - 1) + 1;
        if (b >= a) ++b;
        total += pruned_pair_task(n, a, b, pats);
    }
    return total;
}

std::uint64_t count_avoiders_pruned_witnessed(
    int n, std::span<const Permutation> patterns,
    const std::function<void(std::span<const int>)>& on_avoider) {
    check_counting_n(n);
    const auto pats = pattern_words(patterns);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    std::uint64_t total = 0;
    // Same traversal as pruned_dfs, with the completion hook.
    auto dfs = [&](auto&& self, std::uint32_t used) -> void {
        if (static_cast<int>(word.size()) == n) {
            ++total;
            on_avoider(word);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            const std::uint32_t bit = 1u << v;
            if (used & bit) continue;
            word.push_back(v);
            if (prefix_still_avoids(word, pats)) self(self, used | bit);
            word.pop_back();
        }
    };
    dfs(dfs, 0);
    return total;
}

CountTable series(int n_max, std::span<const Permutation> patterns, EnumerateOptions opts) {
    check_counting_n(n_max);
    CountTable table;
    table.pattern_set.assign(patterns.begin(), patterns.end());
    table.method = "pruned";
    for (int n = 1; n <= n_max; ++n) {
        const std::uint64_t pruned = count_avoiders_pruned(n, patterns, opts.jobs);
        if (n <= opts.scan_ceiling) {
            const std::uint64_t scanned = count_avoiders_scan(n, patterns, opts.jobs);
            if (scanned != pruned)
                throw ConsistencyError("scan and pruned counters disagree at n = " +
                                       std::to_string(n) + ": " + std::to_string(scanned) +
                                       " vs " + std::to_string(pruned));
        }
        table.rows.push_back(CountRow{n, pruned});
    }
    return table;
}

namespace {

struct SweepBlock {
    std::uint64_t checks = 0;
    std::uint64_t successes = 0;
    std::uint64_t fallbacks = 0;
    std::vector<SweepMismatch> mismatches;
};

void check_sweep_n(int n, const SweepOptions& opts) {
    if (n < 1) throw std::invalid_argument("sweep: n must be >= 1");
    if (n > opts.max_n)
        throw std::invalid_argument("sweep: n = " + std::to_string(n) +
                                    " exceeds the configured ceiling " +
                                    std::to_string(opts.max_n));
}

struct SweepTotals {
    std::uint64_t checks = 0;
    std::uint64_t successes = 0;
    std::uint64_t fallbacks = 0;
    std::vector<SweepMismatch> mismatches;
};

// Partitions S_n by first entry, runs per_word over each block, and merges
// block results in block order, so the outcome is independent of how the
// blocks were scheduled across threads.
template <typename PerWord>
SweepTotals run_sweep(int n, const SweepOptions& opts, PerWord&& per_word) {
    const int threads = resolve_jobs(opts.jobs);
    std::vector<SweepBlock> blocks(static_cast<std::size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int first = 1; first <= n; ++first) {
        SweepBlock& block = blocks[static_cast<std::size_t>(first - 1)];
        for_each_in_first_block(n, first, [&](std::span<const int> word) {
            per_word(word, block);
        });
    }
#ifndef _OPENMP
    (void)threads;
#endif
    SweepTotals totals;
    for (const SweepBlock& block : blocks) {
        totals.checks += block.checks;
        totals.successes += block.successes;
        totals.fallbacks += block.fallbacks;
        totals.mismatches.insert(totals.mismatches.end(), block.mismatches.begin(),
                                 block.mismatches.end());
    }
    return totals;
}

}  // namespace

SweepReport sweep_theorem_main(int n, SweepOptions opts) {
    check_sweep_n(n, opts);
    SweepTotals totals = run_sweep(n, opts, [](std::span<const int> word, SweepBlock& block) {
        const Permutation w =
            Permutation::unchecked(std::vector<int>(word.begin(), word.end()));
        for (int r = 1; r < w.size(); ++r) {
            const bool by_descent = is_bp_by_descent(w, r);
            const bool by_pattern = is_bp_by_pattern(w, r);
            ++block.checks;
            if (by_descent != by_pattern)
                block.mismatches.push_back(
                    SweepMismatch{to_text(w), r,
                                  std::string("descent criterion ") +
                                      (by_descent ? "true" : "false") + ", pattern criterion " +
                                      (by_pattern ? "true" : "false")});
        }
    });
    SweepReport report;
    report.n = n;
    report.checks_performed = totals.checks;
    report.mismatches = std::move(totals.mismatches);
    return report;
}

SweepReport sweep_theorem_main2(int n, SweepOptions opts) {
    check_sweep_n(n, opts);
    SweepTotals totals = run_sweep(n, opts, [](std::span<const int> word, SweepBlock& block) {
        const Permutation w =
            Permutation::unchecked(std::vector<int>(word.begin(), word.end()));
        CompleteBPSearchStats stats;
        const bool found = complete_bp(w, stats).has_value();
        const bool expected = has_complete_structure_by_pattern(w);
        ++block.checks;
        if (found) {
            ++block.successes;
            if (stats.backtracked) ++block.fallbacks;
        }
        if (found != expected)
            block.mismatches.push_back(SweepMismatch{
                to_text(w), std::nullopt,
                std::string("search ") + (found ? "found" : "missed") +
                    " a complete factorization, pattern test says " +
                    (expected ? "one exists" : "none exists")});
    });
    SweepReport report;
    report.n = n;
    report.checks_performed = totals.checks;
    report.mismatches = std::move(totals.mismatches);
    report.successes = totals.successes;
    report.greedy_fallbacks = totals.fallbacks;
    if (auto expected = complete_structure_count_reference(n);
        expected && *expected != totals.successes)
        report.mismatches.push_back(SweepMismatch{
            "", std::nullopt,
            "success count " + std::to_string(totals.successes) +
                " differs from the pinned reference " + std::to_string(*expected)});
    return report;
}

std::optional<std::uint64_t> complete_structure_count_reference(int n) {
    if (n < 1 || n > static_cast<int>(kCompleteStructureCounts.size())) return std::nullopt;
    return kCompleteStructureCounts[static_cast<std::size_t>(n - 1)];
}

}  // namespace permbp
