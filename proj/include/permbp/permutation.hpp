#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permbp {

// Raised when two routes that must agree (e.g. the descent and pattern BP
// criteria, or the scan and pruned counters) disagree.  This signals a defect
// in the library, never bad user input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// A permutation of [n] in one-line notation.  Positions and values are
// 1-based at the interface: w(i) is the image of i.  Immutable once built.
//
// The default-constructed value is the unique permutation of the empty set;
// it only arises internally (the sigma of a trivial factorization on S_1).
// from_one_line and identity reject n = 0.
class Permutation {
public:
    Permutation() = default;

    static Permutation from_one_line(std::span<const int> values);
    static Permutation from_one_line(std::initializer_list<int> values);
    static Permutation identity(int n);

    // Wraps an image vector that is already known to be a bijection on [n].
    // Hot enumeration loops use this to skip re-validation.
    static Permutation unchecked(std::vector<int> images);

    int size() const { return static_cast<int>(img_.size()); }
    bool empty() const { return img_.empty(); }

    // w(i) for 1 <= i <= n.
    int operator()(int i) const { return img_[static_cast<std::size_t>(i) - 1]; }

    std::span<const int> one_line() const { return img_; }

    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {}
    std::vector<int> img_;
};

// A set of simple-transposition indices {i : s_i in S}, 1 <= i <= n-1, inside
// the symmetric group on n letters.  Members are kept sorted ascending.
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(int ambient_n);
    static GeneratorSet of(int ambient_n, std::initializer_list<int> members);

    int ambient() const { return ambient_n_; }
    bool empty() const { return members_.empty(); }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int i) const;
    void insert(int i);
    const std::vector<int>& members() const { return members_; }

    bool subset_of(const GeneratorSet& other) const;
    GeneratorSet without(int i) const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    int ambient_n_ = 1;
    std::vector<int> members_;
};

// The rank table r_w[i,j] = #{k <= j : w(k) <= i}, 1-based in both arguments.
struct RankMatrix {
    int n = 0;
    std::vector<int> entries;  // row-major, (i-1)*n + (j-1)

    int at(int i, int j) const {
        return entries[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }

    friend bool operator==(const RankMatrix&, const RankMatrix&) = default;
};

// (x * y)(i) = x(y(i)).  This orientation makes parabolic factorizations
// w = v * u verify pointwise.  Requires x.size() == y.size().
Permutation compose(const Permutation& x, const Permutation& y);

Permutation inverse(const Permutation& w);

// Coxeter length = number of inversions.
int length(const Permutation& w);

// {i : w(i) > w(i+1)}.
GeneratorSet right_descents(const Permutation& w);

// {k : the value k+1 sits left of the value k}, i.e. D_R of the inverse.
GeneratorSet left_descents(const Permutation& w);

// Generators appearing in any reduced word for w, computed in O(n) as
// {i : max(w(1..i)) > i} (w fails to stabilize [1,i]).
GeneratorSet support(const Permutation& w);

// Reduced word by greedy left-descent stripping (smallest descent first):
// composing the returned generators left to right under compose() yields w,
// and the word length equals length(w).  Deterministic.
std::vector<int> reduced_word(const Permutation& w);

RankMatrix rank_matrix(const Permutation& w);

// Text form: compact digit string ("4231") when n <= 9, comma-separated
// ("10,3,1,...") otherwise.  parse_permutation accepts both.
std::string to_text(const Permutation& w);
Permutation parse_permutation(std::string_view text);

}  // namespace permbp
