#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "permbp/permutation.hpp"

namespace permbp {

struct CountRow {
    int n = 0;
    std::uint64_t count = 0;

    friend bool operator==(const CountRow&, const CountRow&) = default;
};

// Per-n avoider counts for a set of classical patterns, tagged with the
// method that produced them.
struct CountTable {
    std::vector<CountRow> rows;
    std::vector<Permutation> pattern_set;
    std::string method;  // "scan" or "pruned"

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

struct SweepMismatch {
    std::string w;           // offending permutation; empty for aggregate checks
    std::optional<int> r;    // position, when the check is per-position
    std::string detail;

    friend bool operator==(const SweepMismatch&, const SweepMismatch&) = default;
};

// Result of an exhaustive verification sweep over S_n.  mismatches is empty
// iff the swept equivalence holds.  All fields are deterministic: the same
// report is produced for any worker count.
struct SweepReport {
    int n = 0;
    std::uint64_t checks_performed = 0;
    std::vector<SweepMismatch> mismatches;
    std::optional<std::uint64_t> successes;         // complete-structure sweep only
    std::uint64_t greedy_fallbacks = 0;             // searches that needed backtracking

    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

// jobs <= 0 selects the available hardware parallelism; jobs == 1 runs the
// serial reference path.  Identical results for any jobs value.
std::uint64_t count_avoiders_scan(int n, std::span<const Permutation> patterns, int jobs = 0);
std::uint64_t count_avoiders_pruned(int n, std::span<const Permutation> patterns, int jobs = 0);

// Serial reference implementations, kept as the baseline the parallel
// kernels are tested and benchmarked against.
std::uint64_t count_avoiders_scan_serial(int n, std::span<const Permutation> patterns);
std::uint64_t count_avoiders_pruned_serial(int n, std::span<const Permutation> patterns);

// Serial pruned count that hands every counted word to `on_avoider`; lets
// tests re-verify a sample of counted words against the full matcher.
std::uint64_t count_avoiders_pruned_witnessed(
    int n, std::span<const Permutation> patterns,
    const std::function<void(std::span<const int>)>& on_avoider);

struct EnumerateOptions {
    int jobs = 0;
    int scan_ceiling = 8;  // rows with n <= this are cross-checked against the scan
};

// Rows for n = 1..n_max via the pruned counter; every row with
// n <= scan_ceiling is recomputed by the full scan and must agree
// (ConsistencyError otherwise).  n_max is capped at 20 so counts can never
// leave 64 bits.
CountTable series(int n_max, std::span<const Permutation> patterns, EnumerateOptions opts = {});

struct SweepOptions {
    int jobs = 0;
    int max_n = 7;  // refuse larger sweeps unless raised explicitly
};

// For every w in S_n and every r: the descent criterion must equal the
// split-pattern criterion.  checks_performed = n! * (n-1).
SweepReport sweep_theorem_main(int n, SweepOptions opts = {});

// For every w in S_n: the complete-factorization search must succeed exactly
// when w avoids 3412, 52341 and 635241.  successes is additionally compared
// against the pinned reference series when one exists for this n.
SweepReport sweep_theorem_main2(int n, SweepOptions opts = {});

// Pinned counts of permutations in S_n with a complete factorization
// (equivalently, avoiding 3412, 52341 and 635241), available for n = 1..10.
// Frozen from exhaustive runs; sweep_theorem_main2 self-checks against them.
std::optional<std::uint64_t> complete_structure_count_reference(int n);

}  // namespace permbp
