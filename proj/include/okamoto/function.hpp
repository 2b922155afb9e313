#pragma once

#include "okamoto/rational.hpp"
#include "okamoto/ternary.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace okamoto {

// Parameter of the self-affine family F_a. eps is consulted only where a
// decision must be made against a non-rational threshold; every other
// computation is exact.
struct Param {
    Rat a;
    double eps = 1e-12;

    explicit Param(Rat value, double eps_ = 1e-12) : a(std::move(value)), eps(eps_) {
        if (!(a > 0 && a < 1)) throw std::domain_error("parameter a must lie in (0,1)");
        if (!(eps > 0)) throw std::domain_error("eps must be positive");
    }
};

// n-th piecewise-linear approximant at x in [0,1], exactly. f_0 is the
// identity; each level refines a segment [u,v] through the interior values
// u + a(v-u) and u + (1-a)(v-u) at its interior third points.
Rat fn_eval(const Param& p, int n, const Rat& x);

// Right-hand slope of f_n at x in [0,1): 3^n a^(n-i(n)) (1-2a)^i(n) where
// i(n) counts ones among the first n ternary digits, with 0^0 = 1.
Rat fn_slope_right(const Param& p, int n, const TernaryExpansion& x);

// Exact limit value from the digit series
//   F_a(x) = sum_k a^(k-1-i(k-1)) (1-2a)^i(k-1) q(xi_k),
// q(0) = 0, q(1) = a, q(2) = 1 - a; the periodic tail is summed in closed
// form, so the result is an exact rational.
Rat eval_exact(const Param& p, const TernaryExpansion& x);
Rat eval_exact(const Param& p, const Rat& x);

// Truncated series; the cutoff depth n satisfies max(a, |1-2a|)^n <= tol.
double eval_approx(const Param& p, const TernaryExpansion& x, double tol);

// Breakpoints of f_depth: 3^depth + 1 exact points from (0,0) to (1,1).
struct GraphSample {
    int depth = 0;
    std::vector<std::pair<Rat, Rat>> points;
};

inline constexpr int kGraphDepthCap = 12;

// Level-by-level refinement. sample_graph parallelizes each level's segment
// loop when built with OpenMP; sample_graph_serial is the plain reference
// kept for testing and benchmarking. Both produce identical exact output.
GraphSample sample_graph(const Param& p, int depth, int depth_cap = kGraphDepthCap);
GraphSample sample_graph_serial(const Param& p, int depth, int depth_cap = kGraphDepthCap);

}  // namespace okamoto
