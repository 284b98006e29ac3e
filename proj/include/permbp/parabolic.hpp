#pragma once

#include "permbp/permutation.hpp"

namespace permbp {

// The unique factorization w = v * u with respect to J = S \ {s_r}: v is the
// minimal coset representative (all entries within each block of w sorted
// ascending), u the block-wise standardization of w.  Invariants:
// compose(v, u) == w, length(v) + length(u) == length(w), every right
// descent of v equals r, and u maps [1, r] onto itself.
struct ParabolicDecomposition {
    Permutation v;
    Permutation u;
    int r = 0;
    int n = 0;

    friend bool operator==(const ParabolicDecomposition&, const ParabolicDecomposition&) = default;
};

// Requires 1 <= r <= n-1.  When s_r is not in support(w) the decomposition
// degenerates to v = identity, u = w; that is legal and returned as such.
ParabolicDecomposition parabolic_decompose(const Permutation& w, int r);

// True iff every right descent of v equals r, i.e. v is the shortest element
// of its coset v * W_{S \ {s_r}}.
bool is_min_coset_rep(const Permutation& v, int r);

// Support of a minimal coset representative by the interval formula
// {k : v(r+1) <= k < v(r)}; empty for the identity.  Always equals
// support(v); the generic scan is kept as the cross-check in tests.
// Throws if v is not a minimal coset representative for r.
GeneratorSet coset_rep_support(const Permutation& v, int r);

}  // namespace permbp
