#include "permbp/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace permbp {

namespace {

void validate_one_line(std::span<const int> values) {
    if (values.empty())
        throw std::invalid_argument("permutation: empty one-line word");
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : values) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                        " out of range [1," + std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("permutation: repeated value " + std::to_string(v));
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

}  // namespace

Permutation Permutation::from_one_line(std::span<const int> values) {
    validate_one_line(values);
    return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation Permutation::from_one_line(std::initializer_list<int> values) {
    return from_one_line(std::span<const int>(values.begin(), values.size()));
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("identity: n must be >= 1");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::unchecked(std::vector<int> images) {
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

Permutation compose(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("compose: mismatched sizes " + std::to_string(x.size()) +
                                    " and " + std::to_string(y.size()));
    const int n = x.size();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = x(y(i));
    return Permutation::unchecked(std::move(img));
}

Permutation inverse(const Permutation& w) {
    const int n = w.size();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(w(i) - 1)] = i;
    return Permutation::unchecked(std::move(img));
}

int length(const Permutation& w) {
    const int n = w.size();
    int inversions = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inversions;
    return inversions;
}

GeneratorSet right_descents(const Permutation& w) {
    GeneratorSet out(std::max(w.size(), 1));
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) out.insert(i);
    return out;
}

GeneratorSet left_descents(const Permutation& w) {
    const int n = w.size();
    GeneratorSet out(std::max(n, 1));
    if (n < 2) return out;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(w(i))] = i;
    for (int k = 1; k < n; ++k)
        if (pos[static_cast<std::size_t>(k + 1)] < pos[static_cast<std::size_t>(k)]) out.insert(k);
    return out;
}

GeneratorSet support(const Permutation& w) {
    const int n = w.size();
    GeneratorSet out(std::max(n, 1));
    int prefix_max = 0;
    for (int i = 1; i < n; ++i) {
        prefix_max = std::max(prefix_max, w(i));
        if (prefix_max > i) out.insert(i);
    }
    return out;
}

std::vector<int> reduced_word(const Permutation& w) {
    const int n = w.size();
    std::vector<int> word;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(w(i))] = i;
    // Stripping the left descent s_k swaps the values k and k+1.
    while (true) {
        int k = 0;
        for (int c = 1; c < n; ++c) {
            if (pos[static_cast<std::size_t>(c + 1)] < pos[static_cast<std::size_t>(c)]) {
                k = c;
                break;
            }
        }
        if (k == 0) break;
        word.push_back(k);
        std::swap(pos[static_cast<std::size_t>(k)], pos[static_cast<std::size_t>(k + 1)]);
    }
    return word;
}

RankMatrix rank_matrix(const Permutation& w) {
    const int n = w.size();
    RankMatrix m;
    m.n = n;
    m.entries.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        for (int j = 1; j <= n; ++j) {
            if (w(j) <= i) ++count;
            m.entries[static_cast<std::size_t>(i - 1) * n + (j - 1)] = count;
        }
    }
    return m;
}

std::string to_text(const Permutation& w) {
    std::string out;
    if (w.size() <= 9) {
        for (int v : w.one_line()) out += static_cast<char>('0' + v);
    } else {
        for (int i = 0; i < w.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(w.one_line()[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("permutation: empty text");
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view tok = text.substr(start, end - start);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw std::invalid_argument("permutation: bad entry '" + std::string(tok) + "'");
            values.push_back(v);
            start = end + 1;
            if (end == text.size()) break;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(
                    "permutation: bad character '" + std::string(1, c) +
                    "' (compact form uses digits 1-9; use commas for larger entries)");
            values.push_back(c - '0');
        }
    }
    return Permutation::from_one_line(values);
}

GeneratorSet::GeneratorSet(int ambient_n) : ambient_n_(ambient_n) {
    if (ambient_n < 1) throw std::invalid_argument("GeneratorSet: ambient n must be >= 1");
}

GeneratorSet GeneratorSet::of(int ambient_n, std::initializer_list<int> members) {
    GeneratorSet out(ambient_n);
    for (int i : members) out.insert(i);
    return out;
}

bool GeneratorSet::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

void GeneratorSet::insert(int i) {
    if (i < 1 || i >= ambient_n_)
        throw std::invalid_argument("GeneratorSet: index " + std::to_string(i) +
                                    " outside [1," + std::to_string(ambient_n_ - 1) + "]");
    auto it = std::lower_bound(members_.begin(), members_.end(), i);
    if (it == members_.end() || *it != i) members_.insert(it, i);
}

bool GeneratorSet::subset_of(const GeneratorSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

GeneratorSet GeneratorSet::without(int i) const {
    GeneratorSet out(ambient_n_);
    for (int m : members_)
        if (m != i) out.members_.push_back(m);
    return out;
}

}  // namespace permbp
