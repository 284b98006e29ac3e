#pragma once

#include <cstdint>
#include <optional>

#include "permbp/parabolic.hpp"
#include "permbp/patterns.hpp"
#include "permbp/permutation.hpp"

namespace permbp {

// The two split patterns whose avoidance at position r characterizes the
// projection at r being a fiber bundle: 3|12 and 23|1.
std::span<const SplitPattern> bundle_split_patterns();

// The classical patterns whose avoidance characterizes the existence of a
// complete factorization: 3412, 52341, 635241.
std::span<const Permutation> complete_structure_patterns();

// Descent-side criterion: with w = v * u the parabolic decomposition at r,
// true iff support(v) \ {r} is contained in the left descents of u.
bool is_bp_by_descent(const Permutation& w, int r);

// Pattern-side criterion: true iff w avoids both 3|12 and 23|1 with respect
// to position r.  Shares no code with is_bp_by_descent; the two are checked
// against each other wherever both are computed.
bool is_bp_by_pattern(const Permutation& w, int r);

// The split occurrence demonstrating that position r is not a bundle
// position.
struct SplitViolation {
    SplitPattern pattern;
    PatternWitness witness;

    friend bool operator==(const SplitViolation&, const SplitViolation&) = default;
};

struct PositionVerdict {
    int r = 0;
    bool bp_by_descent = false;
    bool bp_by_pattern = false;
    std::optional<SplitViolation> violation;  // present iff not a bundle position

    friend bool operator==(const PositionVerdict&, const PositionVerdict&) = default;
};

// Per-position verdicts for every r in [1, n-1], both criteria evaluated
// independently.  Throws ConsistencyError if they ever disagree.
struct BPReport {
    Permutation w;
    std::vector<PositionVerdict> positions;

    friend bool operator==(const BPReport&, const BPReport&) = default;
};

BPReport bp_report(const Permutation& w);

// {r : the parabolic decomposition of w at r is a BP decomposition}.
// Cross-checks the two criteria at every r (ConsistencyError on mismatch).
GeneratorSet bp_positions(const Permutation& w);

// A complete factorization w = v_k * ... * v_1 where every stage is a BP
// decomposition that enlarges the support by exactly one generator.
// factors and positions are stored in peel order v_k, ..., v_1 and
// r_k, ..., r_1; sigma(i) = r_{k+1-i} with the unused indices appended
// ascending.  k equals |support(w)|; sigma is empty when n = 1.
struct CompleteBP {
    std::vector<Permutation> factors;
    std::vector<int> positions;
    Permutation sigma;

    friend bool operator==(const CompleteBP&, const CompleteBP&) = default;
};

struct CompleteBPSearchStats {
    std::uint64_t nodes = 0;   // recursion nodes visited
    bool backtracked = false;  // a failed branch was abandoned for a later r
};

// Finds a complete factorization, or certifies that none exists by
// exhausting every admissible position at every level.  The search is
// greedy-first (smallest r with s_r in the support of the remainder and a BP
// decomposition there); backtracking only engages if the greedy branch dies,
// which stats.backtracked records.
std::optional<CompleteBP> complete_bp(const Permutation& w);
std::optional<CompleteBP> complete_bp(const Permutation& w, CompleteBPSearchStats& stats);

// sigma(i) = positions[i-1] for i <= k, then the unused indices of [1, n-1]
// in ascending order.  positions must be pairwise distinct within [1, n-1].
Permutation sigma_from_positions(std::span<const int> positions, int n);

// One stage of peeling w along a prescribed position order.
struct TowerStage {
    int r = 0;
    bool trivial = false;  // s_r absent from the remainder's support: nothing to peel
    bool bp_ok = false;
    Permutation factor;     // identity for trivial stages
    Permutation remainder;  // after the stage

    friend bool operator==(const TowerStage&, const TowerStage&) = default;
};

struct TowerTrace {
    std::vector<TowerStage> stages;
    bool success = false;
    std::optional<CompleteBP> result;  // present iff success

    friend bool operator==(const TowerTrace&, const TowerTrace&) = default;
};

// Peels w position by position in the given order (a permutation of
// [1, n-1], first entry peeled first).  Trivial stages are skipped in the
// factor list; a failed BP check stops the peel.  Succeeds iff every
// non-trivial stage is BP and the final remainder is the identity.
TowerTrace run_tower(const Permutation& w, std::span<const int> order);

// Same peel, reporting only the resulting factorization.
std::optional<CompleteBP> complete_bp_with_order(const Permutation& w,
                                                 std::span<const int> order);

// True iff w avoids 3412, 52341 and 635241.  Independent of the search in
// complete_bp; the two routes are cross-checked by the verification sweeps.
bool has_complete_structure_by_pattern(const Permutation& w);

}  // namespace permbp
