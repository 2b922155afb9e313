#pragma once

// Test-only brute-force oracle for admissible-word counting. Independent of
// the library's follower automaton: it tracks the exact set of active
// agreement lengths of every suffix against the d-prefix by direct
// comparison, for the word and its reflection, and certifies extendability
// by finding a repeated configuration (a lasso). Riding beyond the d-prefix
// aborts the branch, matching the automaton's pruned saturation states.

#include "okamoto/beta.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace okamoto::testing {

using Config = std::pair<std::set<int>, std::set<int>>;

struct BruteCounter {
    std::vector<std::uint8_t> d;
    std::map<Config, int> memo;  // -1 = in progress (hitting it is a lasso)

    explicit BruteCounter(std::vector<std::uint8_t> digits) : d(std::move(digits)) {}

    std::optional<std::set<int>> step_side(const std::set<int>& active, int b) const {
        std::set<int> out;
        for (int i : active) {
            if (i >= static_cast<int>(d.size())) return std::nullopt;
            if (b == d[i])
                out.insert(i + 1);
            else if (b > d[i])
                return std::nullopt;
        }
        if (b == d[0])
            out.insert(1);
        else if (b > d[0])
            return std::nullopt;
        return out;
    }

    std::optional<Config> step(const Config& c, int b) const {
        auto a = step_side(c.first, b);
        if (!a) return std::nullopt;
        auto r = step_side(c.second, 1 - b);
        if (!r) return std::nullopt;
        return Config{std::move(*a), std::move(*r)};
    }

    bool extendable(const Config& c) {
        auto it = memo.find(c);
        if (it != memo.end()) return it->second != 0;
        memo[c] = -1;
        bool ok = false;
        for (int b = 0; b < 2 && !ok; ++b) {
            auto nc = step(c, b);
            if (nc) ok = extendable(*nc);
        }
        memo[c] = ok ? 1 : 0;
        return ok;
    }

    std::int64_t count(int n) {
        std::int64_t total = 0;
        std::vector<Config> frontier{Config{}};
        for (int k = 0; k < n; ++k) {
            std::vector<Config> next;
            for (const auto& c : frontier)
                for (int b = 0; b < 2; ++b)
                    if (auto nc = step(c, b)) next.push_back(std::move(*nc));
            frontier = std::move(next);
        }
        for (const auto& c : frontier)
            if (extendable(c)) ++total;
        return total;
    }
};

inline std::int64_t brute_force_count(const Rat& lam, int n, int d_depth) {
    GreedyOne g = greedy_expansion_of_one(lam, d_depth);
    return BruteCounter(g.digits).count(n);
}

}  // namespace okamoto::testing
