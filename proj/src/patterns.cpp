#include "permbp/patterns.hpp"

#include <algorithm>
#include <limits>

namespace permbp {

namespace {

// DFS over word positions for the pattern slots, candidates tried in
// ascending position order, so the first complete match is the
// lexicographically smallest witness.  Feasibility pruning: each slot leaves
// room for the rest of its segment (remaining-length bound) and each
// candidate value must fall inside the window forced by the slots already
// placed (value-window bound).  split == 0 requests classical matching;
// otherwise slots [0, split) map to 1-based positions <= r and the rest to
// positions > r.
bool find_from(std::span<const int> word, std::span<const int> pat, int split, int r, int slot,
               int from, std::vector<int>& pos) {
    const int n = static_cast<int>(word.size());
    const int k = static_cast<int>(pat.size());
    if (slot == k) return true;

    const bool left_segment = split > 0 && slot < split;
    int lo = from;
    if (split > 0 && slot == split) lo = std::max(lo, r);  // first slot past the bar
    const int hi = left_segment ? r - split + slot : n - k + slot;

    // Entries are only assumed distinct, not bounded by the word length.
    long long lo_val = std::numeric_limits<long long>::min();
    long long hi_val = std::numeric_limits<long long>::max();
    for (int s = 0; s < slot; ++s) {
        if (pat[s] < pat[slot])
            lo_val = std::max<long long>(lo_val, word[static_cast<std::size_t>(pos[s])]);
        else
            hi_val = std::min<long long>(hi_val, word[static_cast<std::size_t>(pos[s])]);
    }

    for (int p = lo; p <= hi; ++p) {
        const int v = word[static_cast<std::size_t>(p)];
        if (v <= lo_val || v >= hi_val) continue;
        pos[static_cast<std::size_t>(slot)] = p;
        if (find_from(word, pat, split, r, slot + 1, p + 1, pos)) return true;
    }
    return false;
}

// Variant with the final slot pinned to the last word position; used to test
// whether appending that entry created a new occurrence.
bool find_ending_from(std::span<const int> word, std::span<const int> pat, int slot, int from,
                      std::vector<int>& pos) {
    const int n = static_cast<int>(word.size());
    const int k = static_cast<int>(pat.size());
    if (slot == k - 1) return true;  // pinned slot already placed

    const int hi = n - k + slot;
    long long lo_val = std::numeric_limits<long long>::min();
    long long hi_val = std::numeric_limits<long long>::max();
    auto tighten = [&](int s) {
        if (pat[s] < pat[slot])
            lo_val = std::max<long long>(lo_val, word[static_cast<std::size_t>(pos[s])]);
        else
            hi_val = std::min<long long>(hi_val, word[static_cast<std::size_t>(pos[s])]);
    };
    for (int s = 0; s < slot; ++s) tighten(s);
    tighten(k - 1);

    for (int p = from; p <= hi; ++p) {
        const int v = word[static_cast<std::size_t>(p)];
        if (v <= lo_val || v >= hi_val) continue;
        pos[static_cast<std::size_t>(slot)] = p;
        if (find_ending_from(word, pat, slot + 1, p + 1, pos)) return true;
    }
    return false;
}

PatternWitness to_witness(const std::vector<int>& pos) {
    PatternWitness out(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) out[i] = pos[i] + 1;
    return out;
}

std::vector<int> parse_entry_list(std::string_view text) {
    // Reuses the permutation grammar but without the bijection requirement:
    // a bar side is only a fragment.
    if (text.empty()) throw std::invalid_argument("pattern: empty segment");
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view tok = text.substr(start, end - start);
            if (tok.empty()) throw std::invalid_argument("pattern: empty entry");
            int v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("pattern: bad character '" + std::string(1, c) + "'");
                v = v * 10 + (c - '0');
            }
            values.push_back(v);
            start = end + 1;
            if (end == text.size()) break;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("pattern: bad character '" + std::string(1, c) + "'");
            values.push_back(c - '0');
        }
    }
    return values;
}

}  // namespace

SplitPattern SplitPattern::of(Permutation pattern, int split) {
    if (split < 1 || split >= pattern.size())
        throw std::invalid_argument("split pattern: bar index " + std::to_string(split) +
                                    " outside [1," + std::to_string(pattern.size() - 1) + "]");
    return SplitPattern{std::move(pattern), split};
}

std::string to_text(const SplitPattern& sp) {
    const bool compact = sp.pattern.size() <= 9;
    std::string out;
    for (int i = 1; i <= sp.pattern.size(); ++i) {
        if (i > 1 && !compact) out += ',';
        if (compact)
            out += static_cast<char>('0' + sp.pattern(i));
        else
            out += std::to_string(sp.pattern(i));
        if (i == sp.split) out += '|';
    }
    return out;
}

std::vector<int> flatten(std::span<const int> values, int target_offset) {
    const int k = static_cast<int>(values.size());
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int rank = 0; rank < k; ++rank) {
        if (rank > 0 && values[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] ==
                            values[static_cast<std::size_t>(order[static_cast<std::size_t>(rank - 1)])])
            throw std::invalid_argument("flatten: repeated value " +
                                        std::to_string(values[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])]));
        out[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = target_offset + rank + 1;
    }
    return out;
}

Permutation flatten_to_permutation(std::span<const int> values) {
    if (values.empty()) throw std::invalid_argument("flatten: empty sequence");
    return Permutation::unchecked(flatten(values, 0));
}

std::optional<PatternWitness> contains_pattern(const Permutation& w, const Permutation& p) {
    const int k = p.size();
    if (k > w.size()) return std::nullopt;
    std::vector<int> pos(static_cast<std::size_t>(k));
    if (!find_from(w.one_line(), p.one_line(), 0, 0, 0, 0, pos)) return std::nullopt;
    return to_witness(pos);
}

std::optional<PatternWitness> contains_split_at(const Permutation& w, const SplitPattern& sp,
                                                int r) {
    const int n = w.size();
    if (r < 1 || r >= n)
        throw std::invalid_argument("split containment: position " + std::to_string(r) +
                                    " outside [1," + std::to_string(n - 1) + "]");
    const int k = sp.size();
    if (k > n) return std::nullopt;
    std::vector<int> pos(static_cast<std::size_t>(k));
    if (!find_from(w.one_line(), sp.pattern.one_line(), sp.split, r, 0, 0, pos))
        return std::nullopt;
    return to_witness(pos);
}

bool avoids_split_at(const Permutation& w, const SplitPattern& sp, int r) {
    return !contains_split_at(w, sp, r).has_value();
}

bool avoids_split_everywhere(const Permutation& w, const SplitPattern& sp) {
    for (int r = 1; r < w.size(); ++r)
        if (contains_split_at(w, sp, r)) return false;
    return true;
}

PatternSpec parse_pattern(std::string_view text) {
    const std::size_t bar = text.find('|');
    if (bar == std::string_view::npos) return parse_permutation(text);
    if (text.find('|', bar + 1) != std::string_view::npos)
        throw std::invalid_argument("pattern: more than one bar");
    if (bar == 0 || bar + 1 == text.size())
        throw std::invalid_argument("pattern: bar may not sit at either end");
    std::vector<int> values = parse_entry_list(text.substr(0, bar));
    const int split = static_cast<int>(values.size());
    for (int v : parse_entry_list(text.substr(bar + 1))) values.push_back(v);
    return SplitPattern::of(Permutation::from_one_line(values), split);
}

namespace detail {

bool has_occurrence(std::span<const int> word, std::span<const int> pattern) {
    const int k = static_cast<int>(pattern.size());
    if (k == 0) return true;
    if (k > static_cast<int>(word.size())) return false;
    std::vector<int> pos(static_cast<std::size_t>(k));
    return find_from(word, pattern, 0, 0, 0, 0, pos);
}

bool occurrence_ending_at_back(std::span<const int> word, std::span<const int> pattern) {
    const int n = static_cast<int>(word.size());
    const int k = static_cast<int>(pattern.size());
    if (k == 0) return true;
    if (k > n) return false;
    std::vector<int> pos(static_cast<std::size_t>(k));
    pos[static_cast<std::size_t>(k - 1)] = n - 1;
    return find_ending_from(word, pattern, 0, 0, pos);
}

}  // namespace detail

}  // namespace permbp
