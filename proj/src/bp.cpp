#include "permbp/bp.hpp"

#include <algorithm>

namespace permbp {

namespace {

const std::vector<SplitPattern>& split_patterns_storage() {
    static const std::vector<SplitPattern> patterns = {
        SplitPattern::of(Permutation::from_one_line({3, 1, 2}), 1),
        SplitPattern::of(Permutation::from_one_line({2, 3, 1}), 2),
    };
    return patterns;
}

const std::vector<Permutation>& structure_patterns_storage() {
    static const std::vector<Permutation> patterns = {
        Permutation::from_one_line({3, 4, 1, 2}),
        Permutation::from_one_line({5, 2, 3, 4, 1}),
        Permutation::from_one_line({6, 3, 5, 2, 4, 1}),
    };
    return patterns;
}

}  // namespace

std::span<const SplitPattern> bundle_split_patterns() { return split_patterns_storage(); }

std::span<const Permutation> complete_structure_patterns() { return structure_patterns_storage(); }

bool is_bp_by_descent(const Permutation& w, int r) {
    const ParabolicDecomposition d = parabolic_decompose(w, r);
    return support(d.v).without(r).subset_of(left_descents(d.u));
}

bool is_bp_by_pattern(const Permutation& w, int r) {
    for (const SplitPattern& sp : bundle_split_patterns())
        if (!avoids_split_at(w, sp, r)) return false;
    return true;
}

BPReport bp_report(const Permutation& w) {
    BPReport report;
    report.w = w;
    for (int r = 1; r < w.size(); ++r) {
        PositionVerdict verdict;
        verdict.r = r;
        verdict.bp_by_descent = is_bp_by_descent(w, r);
        verdict.bp_by_pattern = is_bp_by_pattern(w, r);
        if (verdict.bp_by_descent != verdict.bp_by_pattern)
            throw ConsistencyError("BP criteria disagree at w = " + to_text(w) +
                                   ", r = " + std::to_string(r));
        if (!verdict.bp_by_pattern) {
            for (const SplitPattern& sp : bundle_split_patterns()) {
                if (auto witness = contains_split_at(w, sp, r)) {
                    verdict.violation = SplitViolation{sp, *witness};
                    break;
                }
            }
        }
        report.positions.push_back(std::move(verdict));
    }
    return report;
}

GeneratorSet bp_positions(const Permutation& w) {
    GeneratorSet out(w.size());
    for (const PositionVerdict& verdict : bp_report(w).positions)
        if (verdict.bp_by_descent) out.insert(verdict.r);
    return out;
}

namespace {

// Depth-first peel.  Admissible positions at each level are those r with
// s_r in the support of the remainder whose parabolic decomposition there is
// BP; tried ascending, so the first branch is the greedy choice.  Exhausting
// every admissible r at every level certifies that no complete factorization
// exists.
bool complete_bp_dfs(const Permutation& x, std::vector<Permutation>& factors,
                     std::vector<int>& positions, CompleteBPSearchStats& stats) {
    ++stats.nodes;
    if (x.is_identity()) return true;
    bool tried_before = false;
    const GeneratorSet sup = support(x);
    for (int r : sup.members()) {
        if (!is_bp_by_descent(x, r)) continue;
        if (tried_before) stats.backtracked = true;
        tried_before = true;
        ParabolicDecomposition d = parabolic_decompose(x, r);
        factors.push_back(std::move(d.v));
        positions.push_back(r);
        if (complete_bp_dfs(d.u, factors, positions, stats)) return true;
        factors.pop_back();
        positions.pop_back();
    }
    return false;
}

}  // namespace

std::optional<CompleteBP> complete_bp(const Permutation& w) {
    CompleteBPSearchStats stats;
    return complete_bp(w, stats);
}

std::optional<CompleteBP> complete_bp(const Permutation& w, CompleteBPSearchStats& stats) {
    CompleteBP out;
    if (!complete_bp_dfs(w, out.factors, out.positions, stats)) return std::nullopt;
    out.sigma = sigma_from_positions(out.positions, w.size());
    return out;
}

Permutation sigma_from_positions(std::span<const int> positions, int n) {
    if (n < 1) throw std::invalid_argument("sigma_from_positions: n must be >= 1");
    std::vector<char> used(static_cast<std::size_t>(n), 0);  // indices 1..n-1
    std::vector<int> sigma;
    sigma.reserve(static_cast<std::size_t>(n) - 1);
    for (int r : positions) {
        if (r < 1 || r >= n)
            throw std::invalid_argument("sigma_from_positions: position " + std::to_string(r) +
                                        " outside [1," + std::to_string(n - 1) + "]");
        if (used[static_cast<std::size_t>(r)])
            throw std::invalid_argument("sigma_from_positions: duplicate position " +
                                        std::to_string(r));
        used[static_cast<std::size_t>(r)] = 1;
        sigma.push_back(r);
    }
    for (int r = 1; r < n; ++r)
        if (!used[static_cast<std::size_t>(r)]) sigma.push_back(r);
    return Permutation::unchecked(std::move(sigma));
}

TowerTrace run_tower(const Permutation& w, std::span<const int> order) {
    const int n = w.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    if (static_cast<int>(order.size()) != n - 1)
        throw std::invalid_argument("tower: order must list each position of [1," +
                                    std::to_string(n - 1) + "] exactly once");
    for (int r : order) {
        if (r < 1 || r >= n || seen[static_cast<std::size_t>(r)])
            throw std::invalid_argument("tower: order is not a permutation of [1," +
                                        std::to_string(n - 1) + "]");
        seen[static_cast<std::size_t>(r)] = 1;
    }

    TowerTrace trace;
    CompleteBP result;
    Permutation x = w;
    bool failed = false;
    for (int r : order) {
        TowerStage stage;
        stage.r = r;
        if (!support(x).contains(r)) {
            stage.trivial = true;
            stage.bp_ok = true;
            stage.factor = Permutation::identity(n);
            stage.remainder = x;
        } else if (is_bp_by_descent(x, r)) {
            ParabolicDecomposition d = parabolic_decompose(x, r);
            stage.bp_ok = true;
            stage.factor = d.v;
            stage.remainder = d.u;
            result.factors.push_back(std::move(d.v));
            result.positions.push_back(r);
            x = std::move(d.u);
        } else {
            stage.bp_ok = false;
            stage.factor = Permutation::identity(n);
            stage.remainder = x;
            failed = true;
        }
        trace.stages.push_back(std::move(stage));
        if (failed) break;
    }

    trace.success = !failed && x.is_identity();
    if (trace.success) {
        result.sigma = sigma_from_positions(result.positions, n);
        trace.result = std::move(result);
    }
    return trace;
}

std::optional<CompleteBP> complete_bp_with_order(const Permutation& w,
                                                 std::span<const int> order) {
    return run_tower(w, order).result;
}

bool has_complete_structure_by_pattern(const Permutation& w) {
    for (const Permutation& p : complete_structure_patterns())
        if (contains_pattern(w, p)) return false;
    return true;
}

}  // namespace permbp
