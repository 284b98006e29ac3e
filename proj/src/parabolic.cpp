#include "permbp/parabolic.hpp"

#include <algorithm>

#include "permbp/patterns.hpp"

namespace permbp {

ParabolicDecomposition parabolic_decompose(const Permutation& w, int r) {
    const int n = w.size();
    if (r < 1 || r >= n)
        throw std::invalid_argument("parabolic decomposition: position " + std::to_string(r) +
                                    " outside [1," + std::to_string(n - 1) + "]");
    const auto word = w.one_line();
    const auto left = word.first(static_cast<std::size_t>(r));
    const auto right = word.subspan(static_cast<std::size_t>(r));

    std::vector<int> v_img(word.begin(), word.end());
    std::sort(v_img.begin(), v_img.begin() + r);
    std::sort(v_img.begin() + r, v_img.end());

    std::vector<int> u_img = flatten(left, 0);
    for (int x : flatten(right, r)) u_img.push_back(x);

    return ParabolicDecomposition{Permutation::unchecked(std::move(v_img)),
                                  Permutation::unchecked(std::move(u_img)), r, n};
}

bool is_min_coset_rep(const Permutation& v, int r) {
    const int n = v.size();
    if (r < 1 || r >= n)
        throw std::invalid_argument("minimal coset test: position " + std::to_string(r) +
                                    " outside [1," + std::to_string(n - 1) + "]");
    for (int i = 1; i < n; ++i)
        if (v(i) > v(i + 1) && i != r) return false;
    return true;
}

GeneratorSet coset_rep_support(const Permutation& v, int r) {
    if (!is_min_coset_rep(v, r))
        throw std::invalid_argument("coset_rep_support: permutation has a descent other than " +
                                    std::to_string(r));
    GeneratorSet out(v.size());
    if (v.is_identity()) return out;
    for (int k = v(r + 1); k < v(r); ++k) out.insert(k);
    return out;
}

}  // namespace permbp
