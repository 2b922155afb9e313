#pragma once

#include "okamoto/rational.hpp"

#include <optional>
#include <vector>

namespace okamoto {

// Canonical ternary expansion of a rational in [0,1]: a finite preperiod word
// followed by a primitive period word, both over {0,1,2}.
//
// Conventions: when a point has two expansions, the one ending in all zeros is
// stored (period "0"); the single exception is x = 1, stored with empty
// preperiod and period "2". The stored form is minimal: the preperiod cannot
// be shortened by rotating the period, and the period is not a power of a
// shorter word.
class TernaryExpansion {
public:
    // Canonical expansion of x in [0,1]. Throws std::domain_error outside.
    static TernaryExpansion expand(const Rat& x);

    // Digit-string grammar: "0." digit* ( "(" digit+ ")" )? over {0,1,2};
    // "1" and "0" are accepted as literals. An unparenthesized terminating
    // string denotes a zero tail. Throws ParseError on malformed input.
    static TernaryExpansion parse(std::string_view s);

    const std::vector<std::uint8_t>& preperiod() const { return pre_; }
    const std::vector<std::uint8_t>& period() const { return per_; }

    int digit(std::int64_t k) const;  // xi_k, 1-based
    Rat value() const;
    std::string format() const;

    std::int64_t ones_in_prefix(std::int64_t n) const;  // i(n)
    // Total count of digit 1; nullopt when the period contains a 1.
    std::optional<std::int64_t> total_ones() const;
    // Run length of digit d starting at position n+1; nullopt when the tail
    // from that position is constantly d.
    std::optional<std::int64_t> run_length(std::int64_t n, int d) const;
    // Frequency of digit 1 over one period (limit of i(n)/n).
    Rat one_frequency() const;

    bool in_cantor() const;  // no digit equals 1
    bool is_triadic() const { return per_.size() == 1 && per_[0] == 0; }
    bool is_one() const { return pre_.empty() && per_.size() == 1 && per_[0] == 2; }

    // Expansion of 1 - x.
    TernaryExpansion reflected() const { return expand(Rat(1) - value()); }

    bool operator==(const TernaryExpansion&) const = default;

private:
    TernaryExpansion(std::vector<std::uint8_t> pre, std::vector<std::uint8_t> per)
        : pre_(std::move(pre)), per_(std::move(per)) {}

    std::vector<std::uint8_t> pre_, per_;
};

}  // namespace okamoto
