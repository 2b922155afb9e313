#include "okamoto/beta.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace okamoto {

namespace {

bool is_power_of_shorter_word(const std::vector<std::uint8_t>& w) {
    const std::size_t m = w.size();
    for (std::size_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        bool pow = true;
        for (std::size_t i = d; i < m && pow; ++i) pow = (w[i] == w[i % d]);
        if (pow) return true;
    }
    return false;
}

inline int tm_symbol(std::uint64_t j) { return std::popcount(j) & 1; }

}  // namespace

BinarySeq::BinarySeq(std::vector<std::uint8_t> pre, std::vector<std::uint8_t> per)
    : pre_(std::move(pre)), per_(std::move(per)) {
    for (auto d : pre_)
        if (d > 1) throw std::invalid_argument("binary digit out of range");
    for (auto d : per_)
        if (d > 1) throw std::invalid_argument("binary digit out of range");

    // primitive period
    while (is_power_of_shorter_word(per_)) {
        std::size_t d = 1;
        while (per_.size() % d != 0 ||
               !std::equal(per_.begin() + d, per_.end(), per_.begin()))
            ++d;
        per_.resize(d);
    }
    if (per_.size() == 1 && per_[0] == 0) per_.clear();
    if (per_.empty()) {
        while (!pre_.empty() && pre_.back() == 0) pre_.pop_back();
        return;
    }
    // absorb preperiod suffix into a rotation of the period
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    }
}

BinarySeq BinarySeq::parse(std::string_view s) {
    std::size_t pos = 0;
    std::vector<std::uint8_t> pre, per;
    while (pos < s.size() && (s[pos] == '0' || s[pos] == '1')) pre.push_back(s[pos++] - '0');
    if (pos < s.size()) {
        if (s[pos] != '(') throw ParseError("expected binary digit or '('", pos);
        ++pos;
        while (pos < s.size() && (s[pos] == '0' || s[pos] == '1')) per.push_back(s[pos++] - '0');
        if (per.empty()) throw ParseError("empty period", pos);
        if (pos >= s.size() || s[pos] != ')') throw ParseError("expected binary digit or ')'", pos);
        ++pos;
    }
    if (pos != s.size()) throw ParseError("trailing characters after binary word", pos);
    return BinarySeq(std::move(pre), std::move(per));
}

int BinarySeq::digit(std::int64_t k) const {
    if (k < 1) throw std::domain_error("digit index is 1-based");
    const std::int64_t p = static_cast<std::int64_t>(pre_.size());
    if (k <= p) return pre_[k - 1];
    if (per_.empty()) return 0;
    return per_[(k - 1 - p) % per_.size()];
}

BinarySeq BinarySeq::reflected() const {
    auto flip = [](std::vector<std::uint8_t> w) {
        for (auto& d : w) d ^= 1;
        return w;
    };
    std::vector<std::uint8_t> per = per_.empty() ? std::vector<std::uint8_t>{0} : per_;
    return BinarySeq(flip(pre_), flip(std::move(per)));
}

BinarySeq BinarySeq::shifted(std::int64_t k) const {
    if (k < 0) throw std::domain_error("shift must be nonnegative");
    const std::int64_t p = static_cast<std::int64_t>(pre_.size());
    if (k <= p)
        return BinarySeq({pre_.begin() + k, pre_.end()}, per_);
    if (per_.empty()) return BinarySeq({}, {});
    std::vector<std::uint8_t> per = per_;
    std::rotate(per.begin(), per.begin() + (k - p) % per.size(), per.end());
    return BinarySeq({}, std::move(per));
}

std::string BinarySeq::format() const {
    std::string s;
    for (auto d : pre_) s += static_cast<char>('0' + d);
    if (!per_.empty()) {
        s += '(';
        for (auto d : per_) s += static_cast<char>('0' + d);
        s += ')';
    }
    return s;
}

Rat pi_lambda(const Rat& lam, const BinarySeq& w) {
    if (!(lam > 0 && lam < 1)) throw std::domain_error("pi_lambda requires lambda in (0,1)");
    Rat acc(0);
    Rat pw(1);
    for (auto d : w.preperiod()) {
        pw *= lam;
        if (d) acc += pw;
    }
    if (!w.period().empty()) {
        Rat per_sum(0);
        Rat ppw(1);
        for (auto d : w.period()) {
            ppw *= lam;
            if (d) per_sum += ppw;
        }
        // pw = lam^P, ppw = lam^m
        acc += pw * per_sum / (1 - ppw);
    }
    return acc;
}

namespace {

constexpr int kGreedyDepthCap = 1 << 16;

// Greedy digits of a value v in [0, lam/(1-lam)] in base 1/lam. Returns the
// digit prefix plus exact termination/cycle information.
GreedyOne greedy_digits(Rat v, const Rat& lam, int depth) {
    if (depth < 1) throw std::domain_error("depth must be positive");
    if (depth > kGreedyDepthCap) throw ResourceError("greedy expansion depth exceeds cap");
    GreedyOne out;
    std::map<Rat, std::size_t> seen;
    for (int n = 0; n < depth; ++n) {
        if (v == 0) {
            out.terminated = true;
            break;
        }
        auto [it, fresh] = seen.emplace(v, out.digits.size());
        if (!fresh) {
            out.cycle = true;
            out.cycle_start = it->second;
            break;
        }
        v /= lam;
        if (v >= 1) {
            out.digits.push_back(1);
            v -= 1;
        } else {
            out.digits.push_back(0);
        }
    }
    return out;
}

}  // namespace

GreedyOne greedy_expansion_of_one(const Rat& a, int depth) {
    if (!(a > Rat(1, 2) && a < 1))
        throw std::domain_error("greedy expansion of 1 requires a in (1/2, 1)");
    GreedyOne out = greedy_digits(Rat(1), a, depth);
    if (out.terminated) {
        out.exact = true;
        out.expansion = quasi_greedy_rewrite(out.digits);
    } else if (out.cycle) {
        out.exact = true;
        out.expansion = BinarySeq(
            {out.digits.begin(), out.digits.begin() + out.cycle_start},
            {out.digits.begin() + out.cycle_start, out.digits.end()});
    }
    return out;
}

GreedyOne lazy_expansion_of_one(const Rat& a, int depth) {
    if (!(a > Rat(1, 2) && a < 1))
        throw std::domain_error("lazy expansion of 1 requires a in (1/2, 1)");
    // lazy(x) is the reflection of greedy(M - x), M = a/(1-a).
    GreedyOne out = greedy_digits(Rat(2 * a - 1) / (1 - a), a, depth);
    for (auto& d : out.digits) d ^= 1;
    if (out.terminated) {
        out.exact = true;
        out.expansion = BinarySeq(out.digits, {1});  // reflected zero tail
    } else if (out.cycle) {
        out.exact = true;
        out.expansion = BinarySeq(
            {out.digits.begin(), out.digits.begin() + out.cycle_start},
            {out.digits.begin() + out.cycle_start, out.digits.end()});
    }
    return out;
}

BinarySeq quasi_greedy_rewrite(const std::vector<std::uint8_t>& terminating_digits) {
    if (terminating_digits.size() < 2 || terminating_digits.back() != 1)
        throw std::domain_error("quasi-greedy rewrite needs a terminating word d_1..d_n, d_n = 1, n >= 2");
    std::vector<std::uint8_t> period(terminating_digits.begin(), terminating_digits.end() - 1);
    period.push_back(0);
    return BinarySeq({}, std::move(period));
}

UniqueVerdict is_unique_expansion(const Rat& lam, const BinarySeq& w) {
    if (!(lam > Rat(1, 2) && lam < 1))
        throw std::domain_error("unique-expansion membership requires lambda in (1/2, 1)");
    const std::int64_t p = static_cast<std::int64_t>(w.preperiod().size());
    const std::int64_t m = static_cast<std::int64_t>(std::max<std::size_t>(w.period().size(), 1));
    for (std::int64_t k = 0; k < p + m; ++k) {
        BinarySeq shift = w.shifted(k);
        if (pi_lambda(lam, shift) >= 1) return UniqueVerdict::NotInU;
        if (pi_lambda(lam, shift.reflected()) >= 1) return UniqueVerdict::NotInU;
    }
    return UniqueVerdict::InU;
}

std::vector<std::uint8_t> thue_morse(int n) {
    if (n < 1) throw std::domain_error("need n >= 1 Thue-Morse symbols");
    std::vector<std::uint8_t> t(n);
    for (int j = 0; j < n; ++j) t[j] = static_cast<std::uint8_t>(tm_symbol(j));
    return t;
}

int thue_morse_series_sign(const Rat& a, std::uint64_t max_terms) {
    if (!(a > 0 && a <= 1)) throw std::domain_error("series sign requires a in (0, 1]");
    constexpr std::uint64_t kTermCap = std::uint64_t(1) << 22;
    Rat sum(0);
    Rat pw(1);
    std::uint64_t j = 0;
    for (std::uint64_t target = 64;; target *= 2) {
        const std::uint64_t upto = std::min(target, max_terms);
        while (j < upto) {
            ++j;
            pw *= a;
            if (tm_symbol(j)) sum += pw;
        }
        if (j == max_terms) return sign_of(sum - 1);  // full polynomial, exact
        if (sum > 1) return 1;
        // remaining terms are bounded by a^{j+1} / (1 - a)
        if (sum + pw * a / (1 - a) < 1) return -1;
        if (target > kTermCap)
            throw ResourceError("Thue-Morse series sign undecided within term cap");
    }
}

Bracket komornik_loreti(const Rat& tol) {
    return bisect(
        [](const Rat& x) { return thue_morse_series_sign(x, std::uint64_t(-1)); },
        Rat(1, 2), Rat(2, 3), tol);
}

int compare_with_komornik_loreti(const Rat& a) {
    if (!(a > 0 && a < 1)) throw std::domain_error("comparison requires a in (0,1)");
    return thue_morse_series_sign(a, std::uint64_t(-1));
}

Bracket a_hat_n(int n, const Rat& tol) {
    if (n < 1) throw std::domain_error("a_hat_n requires n >= 1");
    if (n > 62) throw ResourceError("a_hat_n term count exceeds representable range");
    const std::uint64_t terms = std::uint64_t(1) << n;
    return bisect([terms](const Rat& x) { return thue_morse_series_sign(x, terms); },
                  Rat(1, 2), Rat(1), tol);
}

Multinacci multinacci(int k, const Rat& tol) {
    if (k < 1) throw std::domain_error("multinacci index must be positive");
    Multinacci out;
    if (k == 1) {
        out.kind = Multinacci::Kind::ExactOne;
        out.exact_value = 1;
        out.bracket = Bracket{Rat(1), Rat(1), 0, 0};
        return out;
    }
    std::vector<Rat> coeffs(k + 1, Rat(1));
    coeffs[0] = Rat(-1);
    out.kind = (k == 2) ? Multinacci::Kind::GoldenRatio : Multinacci::Kind::Bracketed;
    out.exact_value = 0;
    out.bracket = bisect_poly(coeffs, Rat(1, 2), Rat(1), tol);
    return out;
}

int compare_with_multinacci(const Rat& a, int k) {
    if (k < 1) throw std::domain_error("multinacci index must be positive");
    Rat sum(0);
    Rat pw(1);
    for (int j = 0; j < k; ++j) {
        pw *= a;
        sum += pw;
    }
    return sign_of(sum - 1);
}

std::vector<TailCycle> countable_regime_tails(const Rat& a) {
    if (compare_with_multinacci(a, 2) >= 0)
        throw std::domain_error("tails exist only below the golden ratio");
    if (compare_with_komornik_loreti(a) <= 0)
        throw std::domain_error("tails exist only above the Komornik-Loreti reciprocal");
    // locate n with a in [a_hat_{n+1}, a_hat_n)
    int n = 1;
    while (thue_morse_series_sign(a, std::uint64_t(1) << (n + 1)) < 0) {
        ++n;
        if (n > 16) throw ResourceError("tail regime index exceeds cap");
    }
    std::vector<TailCycle> out;
    for (int m = 0; m < n; ++m) {
        TailCycle tc;
        tc.m = m;
        const std::uint64_t len = std::uint64_t(1) << m;
        for (std::uint64_t j = 1; j <= len; ++j)
            tc.binary_cycle.push_back(static_cast<std::uint8_t>(tm_symbol(j)));
        for (std::uint64_t j = 1; j <= len; ++j)
            tc.binary_cycle.push_back(static_cast<std::uint8_t>(1 - tm_symbol(j)));
        tc.ternary_cycle = tc.binary_cycle;
        for (auto& d : tc.ternary_cycle) d *= 2;
        out.push_back(std::move(tc));
    }
    return out;
}

}  // namespace okamoto
