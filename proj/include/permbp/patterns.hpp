#pragma once

#include <optional>
#include <variant>

#include "permbp/permutation.hpp"

namespace permbp {

// Positions i_1 < ... < i_k (1-based) whose entries realize a pattern.
using PatternWitness = std::vector<int>;

// A pattern permutation with a bar after entry `split`: the first `split`
// matched positions must land at or before the straddle position r, the rest
// strictly after it.  split is restricted to [1, k-1]; a bar at either end is
// rejected (classical matching has its own entry point).
struct SplitPattern {
    Permutation pattern;
    int split = 0;

    static SplitPattern of(Permutation pattern, int split);
    int size() const { return pattern.size(); }

    friend bool operator==(const SplitPattern&, const SplitPattern&) = default;
};

// "23|1" <-> SplitPattern(231, 2).
std::string to_text(const SplitPattern& sp);

// Replaces distinct integers by the consecutive run starting at
// target_offset + 1 with the same relative order.  flatten([6,2,3], 3) =
// [6,4,5]; with target_offset 0 this is classical standardization.
std::vector<int> flatten(std::span<const int> values, int target_offset);

// Standardization straight to a Permutation (target_offset 0).
Permutation flatten_to_permutation(std::span<const int> values);

// Classical containment.  Returns the lexicographically smallest witness, or
// nullopt when w avoids p (including the trivial case len(p) > len(w)).
std::optional<PatternWitness> contains_pattern(const Permutation& w, const Permutation& p);

// Split containment with respect to position r (1 <= r <= n-1): a classical
// occurrence whose first sp.split entries sit at positions <= r and the rest
// after r.  Lexicographically smallest witness, or nullopt.
std::optional<PatternWitness> contains_split_at(const Permutation& w, const SplitPattern& sp,
                                                int r);

bool avoids_split_at(const Permutation& w, const SplitPattern& sp, int r);

// True iff w avoids sp with respect to every r in [1, n-1].
bool avoids_split_everywhere(const Permutation& w, const SplitPattern& sp);

// Parses "3412" (classical), "23|1" (split), or the comma forms
// "5,2,3,4|1" / "10,3,1,...".
using PatternSpec = std::variant<Permutation, SplitPattern>;
PatternSpec parse_pattern(std::string_view text);

namespace detail {

// Classical containment on raw words (entries need only be distinct);
// allocation-light entry point for the enumeration loops.
bool has_occurrence(std::span<const int> word, std::span<const int> pattern);

// Is there an occurrence of `pattern` in `word` whose last matched position
// is exactly the last entry of `word`?  Entries of both spans need only be
// distinct; relative order is all that matters.  Used by the incremental
// enumerator, which appends one value at a time.
bool occurrence_ending_at_back(std::span<const int> word, std::span<const int> pattern);

}  // namespace detail

}  // namespace permbp
