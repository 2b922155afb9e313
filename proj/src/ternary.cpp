#include "okamoto/ternary.hpp"

#include <map>
#include <stdexcept>

namespace okamoto {

TernaryExpansion TernaryExpansion::expand(const Rat& x) {
    if (x < 0 || x > 1) throw std::domain_error("ternary expansion requires x in [0,1]");
    if (x == 1) return TernaryExpansion({}, {2});

    // Long division base 3. Remainders determine the digit tail uniquely, so
    // the first repeated remainder yields the minimal preperiod and a
    // primitive period.
    const Int q = denominator(x);
    Int r = numerator(x);
    std::vector<std::uint8_t> digits;
    std::map<Int, std::size_t> seen;
    std::size_t start = 0;
    for (;;) {
        auto it = seen.find(r);
        if (it != seen.end()) {
            start = it->second;
            break;
        }
        seen.emplace(r, digits.size());
        r *= 3;
        Int d = r / q;
        r -= d * q;
        digits.push_back(static_cast<std::uint8_t>(d));
    }
    std::vector<std::uint8_t> pre(digits.begin(), digits.begin() + start);
    std::vector<std::uint8_t> per(digits.begin() + start, digits.end());
    return TernaryExpansion(std::move(pre), std::move(per));
}

TernaryExpansion TernaryExpansion::parse(std::string_view s) {
    if (s == "1") return expand(Rat(1));
    if (s == "0") return expand(Rat(0));
    if (s.size() < 2 || s[0] != '0' || s[1] != '.')
        throw ParseError("expected \"0.\" prefix, \"0\", or \"1\"", 0);
    std::size_t pos = 2;
    std::vector<std::uint8_t> pre, per;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '2') pre.push_back(s[pos++] - '0');
    if (pos < s.size()) {
        if (s[pos] != '(') throw ParseError("expected ternary digit or '('", pos);
        ++pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '2') per.push_back(s[pos++] - '0');
        if (per.empty()) throw ParseError("empty period", pos);
        if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ternary digit or ')'", pos);
        ++pos;
    }
    if (pos != s.size()) throw ParseError("trailing characters after digit string", pos);

    // Re-expanding the reconstructed value normalizes everything: digit
    // carries from all-2 tails, absorbable preperiod suffixes, period powers.
    Rat v(0);
    Int p3 = 1;
    for (std::uint8_t d : pre) {
        p3 *= 3;
        if (d) v += Rat(d, p3);
    }
    if (!per.empty()) {
        Int pv = 0;
        Int scale = 1;
        for (std::size_t i = per.size(); i-- > 0;) {
            pv += per[i] * scale;
            scale *= 3;
        }
        v += Rat(pv, p3 * (scale - 1));
    }
    return expand(v);
}

int TernaryExpansion::digit(std::int64_t k) const {
    if (k < 1) throw std::domain_error("digit index is 1-based");
    const std::int64_t p = static_cast<std::int64_t>(pre_.size());
    if (k <= p) return pre_[k - 1];
    return per_[(k - 1 - p) % per_.size()];
}

Rat TernaryExpansion::value() const {
    Rat v(0);
    Int p3 = 1;
    for (std::uint8_t d : pre_) {
        p3 *= 3;
        if (d) v += Rat(d, p3);
    }
    Int pv = 0;
    Int scale = 1;
    for (std::size_t i = per_.size(); i-- > 0;) {
        pv += per_[i] * scale;
        scale *= 3;
    }
    if (pv != 0) v += Rat(pv, p3 * (scale - 1));
    return v;
}

std::string TernaryExpansion::format() const {
    if (is_one()) return "1";
    std::string s = "0.";
    for (std::uint8_t d : pre_) s += static_cast<char>('0' + d);
    if (!is_triadic()) {
        s += '(';
        for (std::uint8_t d : per_) s += static_cast<char>('0' + d);
        s += ')';
    }
    return s;
}

std::int64_t TernaryExpansion::ones_in_prefix(std::int64_t n) const {
    if (n < 0) throw std::domain_error("prefix length must be nonnegative");
    const std::int64_t p = static_cast<std::int64_t>(pre_.size());
    const std::int64_t m = static_cast<std::int64_t>(per_.size());
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < std::min(n, p); ++i)
        if (pre_[i] == 1) ++count;
    if (n <= p) return count;
    std::int64_t ones_per = 0;
    for (std::uint8_t d : per_)
        if (d == 1) ++ones_per;
    const std::int64_t tail = n - p;
    count += (tail / m) * ones_per;
    for (std::int64_t i = 0; i < tail % m; ++i)
        if (per_[i] == 1) ++count;
    return count;
}

std::optional<std::int64_t> TernaryExpansion::total_ones() const {
    for (std::uint8_t d : per_)
        if (d == 1) return std::nullopt;
    std::int64_t count = 0;
    for (std::uint8_t d : pre_)
        if (d == 1) ++count;
    return count;
}

std::optional<std::int64_t> TernaryExpansion::run_length(std::int64_t n, int d) const {
    if (n < 0) throw std::domain_error("run start must be nonnegative");
    if (d < 0 || d > 2) throw std::domain_error("digit must be 0, 1 or 2");
    const std::int64_t p = static_cast<std::int64_t>(pre_.size());
    const std::int64_t m = static_cast<std::int64_t>(per_.size());
    std::int64_t k = n + 1;
    while (k <= p) {
        if (pre_[k - 1] != d) return k - n - 1;
        ++k;
    }
    // Periodic tail from position k: scanning one full period settles it.
    for (std::int64_t c = 0; c < m; ++c) {
        if (per_[(k - 1 - p + c) % m] != d) return (k + c) - n - 1;
    }
    return std::nullopt;
}

Rat TernaryExpansion::one_frequency() const {
    std::int64_t ones = 0;
    for (std::uint8_t d : per_)
        if (d == 1) ++ones;
    return Rat(ones, static_cast<std::int64_t>(per_.size()));
}

bool TernaryExpansion::in_cantor() const {
    for (std::uint8_t d : pre_)
        if (d == 1) return false;
    for (std::uint8_t d : per_)
        if (d == 1) return false;
    return true;
}

}  // namespace okamoto
