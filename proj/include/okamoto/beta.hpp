#pragma once

#include "okamoto/numerics.hpp"
#include "okamoto/rational.hpp"

#include <optional>
#include <vector>

namespace okamoto {

// Eventually periodic binary word: preperiod + period over {0,1}. An empty
// period encodes a tail of zeros. Normalized like TernaryExpansion: primitive
// period, no preperiod suffix absorbable into a rotation of the period, an
// all-zero period collapses to the empty one.
class BinarySeq {
public:
    BinarySeq() = default;  // all zeros
    BinarySeq(std::vector<std::uint8_t> pre, std::vector<std::uint8_t> per);

    // Grammar: "w1...wk(p1...pm)" over {0,1}; both parts optional, period
    // nonempty when parenthesized. "" and plain words denote zero tails.
    static BinarySeq parse(std::string_view s);

    const std::vector<std::uint8_t>& preperiod() const { return pre_; }
    const std::vector<std::uint8_t>& period() const { return per_; }
    bool zero_tail() const { return per_.empty(); }

    int digit(std::int64_t k) const;  // omega_k, 1-based
    BinarySeq reflected() const;      // 0 <-> 1
    BinarySeq shifted(std::int64_t k) const;
    std::string format() const;

    bool operator==(const BinarySeq&) const = default;

private:
    std::vector<std::uint8_t> pre_, per_;
};

// Pi_lambda(omega) = sum omega_n lambda^n, exactly (geometric series on the
// periodic tail).
Rat pi_lambda(const Rat& lam, const BinarySeq& w);

// Greedy beta-expansion of 1 in base beta = 1/a with digits {0,1}, computed by
// the exact remainder recursion r_{n+1} = r_n/a - d_{n+1}. Termination and
// remainder repetition are detected exactly; either yields an exact eventually
// periodic quasi-greedy form. For reduced a = p/q in (1/2,1) with p >= 2 the
// remainders s_n / p^n have s_n coprime to p, so neither event can occur and
// the result is a truncated prefix of an aperiodic expansion.
struct GreedyOne {
    std::vector<std::uint8_t> digits;     // d_1 .. (up to depth, or fewer on termination)
    bool terminated = false;              // finite greedy expansion found
    bool cycle = false;                   // remainder repetition found
    std::size_t cycle_start = 0;          // preperiod length when cycle
    bool exact = false;                   // expansion below is the full infinite word
    std::optional<BinarySeq> expansion;   // quasi-greedy form; present iff exact
};

GreedyOne greedy_expansion_of_one(const Rat& a, int depth);

// Lazy expansion of 1: reflection of the greedy expansion of a/(1-a) - 1.
GreedyOne lazy_expansion_of_one(const Rat& a, int depth);

// The quasi-greedy rewrite of a terminating greedy expansion d_1..d_n (d_n=1):
// (d_1 ... d_{n-1} 0) repeated. Requires n >= 2.
BinarySeq quasi_greedy_rewrite(const std::vector<std::uint8_t>& terminating_digits);

// Membership in U_lambda = { omega : Pi(sigma^k omega) < 1 and
// Pi(sigma^k reflected(omega)) < 1 for every k }. For eventually periodic
// omega the distinct shifts form a finite set, so the verdict is exact;
// Undetermined is reserved for inputs outside that class and is never
// produced here.
enum class UniqueVerdict { InU, NotInU, Undetermined };

UniqueVerdict is_unique_expansion(const Rat& lam, const BinarySeq& w);

// First n Thue-Morse symbols t_0 .. t_{n-1}, t_j = parity of ones in binary j.
std::vector<std::uint8_t> thue_morse(int n);

// Certified sign of sum_{j=1}^{max_terms} t_j a^j - 1 for a in (0,1). Partial
// sums are extended until the tail bound a^{J+1}/(1-a) resolves the sign;
// when max_terms is reached the sum is a polynomial and the sign is exact.
int thue_morse_series_sign(const Rat& a, std::uint64_t max_terms);

// Reciprocal of the Komornik-Loreti constant: the root of
// sum_{j>=1} t_j a^j = 1 in (1/2, 2/3).
Bracket komornik_loreti(const Rat& tol);

// Sign of a - a_hat, decided by the certified series sign.
int compare_with_komornik_loreti(const Rat& a);

// a_hat_n: root in (1/2, 1) of sum_{j=1}^{2^n} t_j a^j = 1. a_hat_1 is the
// golden ratio; the sequence decreases to a_hat.
Bracket a_hat_n(int n, const Rat& tol);

// k-th multinacci number: root in (1/2, 1] of a + a^2 + ... + a^k = 1.
// a_1 = 1 exactly; a_2 is the golden ratio (bracketed, flagged symbolic).
struct Multinacci {
    enum class Kind { ExactOne, GoldenRatio, Bracketed };
    Kind kind;
    Rat exact_value;  // meaningful for ExactOne
    Bracket bracket;  // meaningful for k >= 2
};

Multinacci multinacci(int k, const Rat& tol);

// Sign of sum_{j<=k} a^j - 1, i.e. the side of a relative to multinacci a_k.
int compare_with_multinacci(const Rat& a, int k);

// For a_hat < a < rho: the periodic tail cycles (v_m reflected(v_m)) for
// m < n, where n is fixed by a in [a_hat_{n+1}, a_hat_n) and
// v_m = t_1 .. t_{2^m}.
struct TailCycle {
    int m;
    std::vector<std::uint8_t> binary_cycle;
    std::vector<std::uint8_t> ternary_cycle;  // ones doubled to twos
};

std::vector<TailCycle> countable_regime_tails(const Rat& a);

}  // namespace okamoto
