#pragma once

#include "okamoto/rational.hpp"

#include <array>
#include <functional>
#include <vector>

namespace okamoto {

// Sign-certified enclosure of a root of a strictly monotone function.
struct Bracket {
    Rat lo, hi;
    int f_lo_sign = 0, f_hi_sign = 0;

    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    double mid_double() const { return to_double(mid()); }
};

// Exact (or tail-bound-certified) sign of the bracketed function at a rational
// point. Implementations must never guess: a power-series evaluator extends
// its partial sum until the sign is certain.
using CertifiedSign = std::function<int(const Rat&)>;

// Shrinks [lo, hi] to width <= tol by bisection. Endpoint signs must be
// nonzero and differ; throws std::invalid_argument otherwise. An exact root
// hit at a midpoint yields a degenerate bracket lo == hi with zero signs.
Bracket bisect(const CertifiedSign& f, const Rat& lo, const Rat& hi, const Rat& tol);

// Dense polynomial c[0] + c[1] x + ... evaluated by Horner's rule, exactly.
Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x);

Bracket bisect_poly(const std::vector<Rat>& coeffs, const Rat& lo, const Rat& hi,
                    const Rat& tol);

// Sum of a^j over a sparse exponent list (the side-condition polynomials).
Rat eval_power_sum(const std::vector<int>& exponents, const Rat& a);

// The named constants, each enclosed to tol: a0 (root of 54a^3 - 27a^2 = 1),
// rho (golden ratio, root of a + a^2 = 1), a_hat (reciprocal Komornik-Loreti
// constant, root of the Thue-Morse power series sum t_j a^j = 1), and the
// multinacci numbers a_2..a_8 (roots of a + ... + a^k = 1).
struct ConstantsTable {
    Bracket a0;
    Bracket rho;
    Bracket a_hat;
    std::array<Bracket, 7> multinacci;  // a_2 .. a_8

    const Bracket& multinacci_k(int k) const { return multinacci.at(k - 2); }
};

ConstantsTable constants(const Rat& tol);
ConstantsTable constants();  // tol = 10^-12

}  // namespace okamoto
