#pragma once

#include "okamoto/function.hpp"
#include "okamoto/numerics.hpp"
#include "okamoto/ternary.hpp"

#include <optional>
#include <string>
#include <vector>

namespace okamoto {

// Derivative behavior of F_a at a point. Cusps have one-sided derivatives of
// opposite infinite signs (CuspUp: F+ = -F- = +inf); cliffs have one flat
// side (CliffRight: F+ = +inf, F- = 0; CliffLeft the mirror). FiniteNonzero
// occurs only for a = 1/3, where F is the identity.
enum class DerivTag {
    Zero,
    PlusInfinity,
    MinusInfinity,
    CuspUp,
    CuspDown,
    CliffLeft,
    CliffRight,
    FiniteNonzero,
    NotDifferentiable,
    Unknown,
};

enum class Side { Right, Left };
enum class Verdict { Holds, Fails, Boundary };

const char* to_string(DerivTag t);
const char* to_string(Side s);
const char* to_string(Verdict v);

// One-sided periodic-tail test at a point whose expansion has finitely many
// ones. The period of the side-adjusted expansion (the expansion of 1-x for
// the left side) is rotated to its lexicographically largest cyclic shift
// zeta; eta_j = zeta_j / 2; the test polynomial is
//   P(a) = sum_{j < m, eta_j = 1} a^j + a^m,
// and the side condition holds iff P(a) < 1. Equality counts as Fails: the
// tail hits the extremal shift infinitely often, so the one-sided derivative
// cannot diverge. Boundary is reserved for parameters known only to within
// eps of the root and is never produced for exact rational a.
struct SideCondition {
    Side side = Side::Right;
    std::vector<std::uint8_t> eta;
    std::vector<int> exponents;  // exponents of P
    Rat value;                   // P(a)
    Verdict verdict = Verdict::Boundary;

    std::string polynomial_text() const;  // "a + a^2 + a^6 + a^7"
};

SideCondition side_condition(const Param& p, const TernaryExpansion& x, Side side);

// Critical parameter a*(x): the smaller of the two side-condition roots.
// Both side conditions hold for a below a*, at least one fails above.
// Degenerate for triadic x, where both conditions hold for every a in (0,1).
struct CriticalParameter {
    enum class Binding { Right, Left, Both };

    bool degenerate = false;
    Binding binding = Binding::Both;
    Bracket a_star;  // meaningless when degenerate
    std::vector<int> right_exponents, left_exponents;
};

CriticalParameter critical_parameter(const TernaryExpansion& x, const Rat& tol);
CriticalParameter critical_parameter(const TernaryExpansion& x);  // tol = 10^-12

struct Classification {
    DerivTag tag = DerivTag::Unknown;
    std::optional<Rat> finite_value;           // FiniteNonzero only
    std::string rule;                          // stable identifier of the deciding rule
    std::optional<SideCondition> right, left;  // populated on the periodic-tail path
    std::optional<Rat> one_frequency;          // digit-1 frequency p, when the growth test ran
    int growth_sign = 0;  // sign of log 3 + (1-p) log a + p log|1-2a|, decided exactly
};

// Decide the derivative behavior of F_a at a rational x in (0,1).
Classification classify(const Param& p, const TernaryExpansion& x);

// One-sided behavior at the interval endpoints: infinite for a > 1/3, zero
// for a < 1/3, slope one at a = 1/3.
struct EndpointBehavior {
    DerivTag at0;
    DerivTag at1;
};

EndpointBehavior endpoint_behavior(const Param& p);

// Size regime of the infinite-derivative set for a > 1/2: empty at and above
// the golden ratio, countable between the Komornik-Loreti reciprocal and the
// golden ratio, uncountable with positive dimension below it. Parameters
// within eps of the Komornik-Loreti reciprocal report CriticalUnknown.
enum class DinfRegime { Empty, CountableRational, UncountablePositiveDim, CriticalUnknown };

const char* to_string(DinfRegime r);

DinfRegime dinf_membership_regime(const Param& p);

}  // namespace okamoto
