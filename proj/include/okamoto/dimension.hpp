#pragma once

#include "okamoto/numerics.hpp"
#include "okamoto/rational.hpp"

#include <cstdint>
#include <optional>

namespace okamoto {

// phi(a) = log(3a) / (log a - log|2a-1|) on [0, 2/3], extended continuously:
// phi(0) = 1, phi(1/3) = 1/3, phi(1/2) = 0.
double phi(double a);

// h(p) = (-p log p - (1-p) log(1-p) + (1-p) log 2) / log 3 with 0 log 0 = 0.
// The maximum h(1/3) = 1 is returned exactly.
double entropy_h(double p);

// d(a) = h(phi(a)).
double dim_d(double a);

// Digit-1 frequency sets: R^p / R-bar^p compare the upper frequency from
// below, R_p / R-bar_p the lower frequency from above, S families are the
// complements, and Intersection is S_p meet S^p.
enum class FreqFamily {
    RUpper,
    RUpperClosed,
    RLower,
    RLowerClosed,
    SUpper,
    SUpperClosed,
    SLower,
    SLowerClosed,
    Intersection,
};

double dim_frequency_set(double p, FreqFamily family);

// Piecewise closed forms. The position of a relative to a0 is decided exactly
// by the sign of 54 a^3 - 27 a^2 - 1.
double dim_D0(const Rat& a);          // (0,1) minus 1/3
double dim_Dinf_closed(const Rat& a); // 0 < a <= 1/2, a != 1/3
double dim_N(const Rat& a);           // (0,1) minus 1/3
double box_dimension_graph(double a); // 1, or 1 + log_3(4a - 1) above 1/2

inline constexpr int kEntropyDepthCap = 40;

// N_n(lambda): number of binary words of length n extendable to an infinite
// sequence all of whose shifts, and reflected shifts, stay lexicographically
// below the quasi-greedy expansion d of 1 in base 1/lambda. The decision
// automaton tracks the pair of comparison-progress lengths against a
// d-prefix of d_depth digits (exact greedy recursion) and is pruned to
// states that reach a cycle. d_depth must comfortably exceed n; words whose
// only extensions ride d beyond the prefix are not counted.
std::int64_t count_admissible_words(const Rat& lam, int n, int d_depth = 512);

struct DimEstimate {
    enum class Method { ClosedForm, MultinacciBounds, EntropyCount };

    double lower = 0, upper = 0;
    std::optional<double> point;
    Method method = Method::ClosedForm;
    bool point_outside_bounds = false;  // point left unclamped outside [lower, upper]
};

// Certified bounds for dim_H D_inf(a) on 1/2 < a < a_hat from the multinacci
// sandwich, plus the entropy-count point estimate log N_n / (n log 3) at
// n = entropy_depth (0 skips the point). The point estimate is an upper-
// biased proxy, not a certified value; it is clamped into the bounds only
// when it violates them by less than 1e-9, else reported unclamped and
// flagged.
DimEstimate dim_Dinf_bounds(const Rat& a, int entropy_depth = kEntropyDepthCap);

}  // namespace okamoto
