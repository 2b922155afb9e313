#include "okamoto/classify.hpp"

#include "okamoto/beta.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace okamoto {

const char* to_string(DerivTag t) {
    switch (t) {
        case DerivTag::Zero: return "Zero";
        case DerivTag::PlusInfinity: return "PlusInfinity";
        case DerivTag::MinusInfinity: return "MinusInfinity";
        case DerivTag::CuspUp: return "CuspUp";
        case DerivTag::CuspDown: return "CuspDown";
        case DerivTag::CliffLeft: return "CliffLeft";
        case DerivTag::CliffRight: return "CliffRight";
        case DerivTag::FiniteNonzero: return "FiniteNonzero";
        case DerivTag::NotDifferentiable: return "NotDifferentiable";
        case DerivTag::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(Side s) { return s == Side::Right ? "Right" : "Left"; }

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::Fails: return "Fails";
        case Verdict::Boundary: return "Boundary";
    }
    return "?";
}

const char* to_string(DinfRegime r) {
    switch (r) {
        case DinfRegime::Empty: return "Empty";
        case DinfRegime::CountableRational: return "CountableRational";
        case DinfRegime::UncountablePositiveDim: return "UncountablePositiveDim";
        case DinfRegime::CriticalUnknown: return "CriticalUnknown";
    }
    return "?";
}

namespace {

// eta word and P-exponents for one side: period of the side-adjusted
// expansion rotated to its lexicographically largest cyclic shift.
struct SidePolynomial {
    std::vector<std::uint8_t> eta;
    std::vector<int> exponents;
};

SidePolynomial side_polynomial(const TernaryExpansion& x, Side side) {
    const TernaryExpansion t = (side == Side::Right) ? x : x.reflected();
    if (!t.total_ones())
        throw std::domain_error("side condition requires finitely many ones in the expansion");
    const auto& period = t.period();
    const std::size_t m = period.size();

    std::size_t best = 0;
    for (std::size_t r = 1; r < m; ++r) {
        for (std::size_t i = 0; i < m; ++i) {
            int lhs = period[(r + i) % m], rhs = period[(best + i) % m];
            if (lhs != rhs) {
                if (lhs > rhs) best = r;
                break;
            }
        }
    }

    SidePolynomial out;
    out.eta.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.eta[i] = period[(best + i) % m] / 2;
    assert(m == 1 || out.eta.back() == 0);
    for (std::size_t j = 1; j < m; ++j)
        if (out.eta[j - 1]) out.exponents.push_back(static_cast<int>(j));
    out.exponents.push_back(static_cast<int>(m));
    return out;
}

}  // namespace

std::string SideCondition::polynomial_text() const {
    std::string s;
    for (int e : exponents) {
        if (!s.empty()) s += " + ";
        s += (e == 1) ? "a" : "a^" + std::to_string(e);
    }
    return s;
}

SideCondition side_condition(const Param& p, const TernaryExpansion& x, Side side) {
    SidePolynomial poly = side_polynomial(x, side);
    SideCondition out;
    out.side = side;
    out.eta = std::move(poly.eta);
    out.exponents = std::move(poly.exponents);
    out.value = eval_power_sum(out.exponents, p.a);
    out.verdict = out.value < 1 ? Verdict::Holds : Verdict::Fails;
    return out;
}

namespace {

Bracket bisect_side_root(const std::vector<int>& exponents, const Rat& tol) {
    return bisect(
        [&](const Rat& a) { return sign_of(eval_power_sum(exponents, a) - 1); },
        Rat(1, 3), Rat(1), tol);
}

}  // namespace

CriticalParameter critical_parameter(const TernaryExpansion& x, const Rat& tol) {
    CriticalParameter out;
    out.right_exponents = side_polynomial(x, Side::Right).exponents;
    out.left_exponents = side_polynomial(x, Side::Left).exponents;
    if (x.is_triadic()) {
        out.degenerate = true;  // P(a) = a on both sides: holds for every a < 1
        out.binding = CriticalParameter::Binding::Both;
        return out;
    }
    if (out.right_exponents == out.left_exponents) {
        out.binding = CriticalParameter::Binding::Both;
        out.a_star = bisect_side_root(out.right_exponents, tol);
        return out;
    }
    Rat t = tol;
    Bracket r = bisect_side_root(out.right_exponents, t);
    Bracket l = bisect_side_root(out.left_exponents, t);
    for (int round = 0; round < 4 && !(r.hi < l.lo) && !(l.hi < r.lo); ++round) {
        t /= 1024;
        r = bisect_side_root(out.right_exponents, t);
        l = bisect_side_root(out.left_exponents, t);
    }
    if (r.hi < l.lo) {
        out.binding = CriticalParameter::Binding::Right;
        out.a_star = r;
    } else if (l.hi < r.lo) {
        out.binding = CriticalParameter::Binding::Left;
        out.a_star = l;
    } else {
        // distinct polynomials sharing a root to within the refined tolerance
        out.binding = CriticalParameter::Binding::Both;
        out.a_star = r;
    }
    return out;
}

CriticalParameter critical_parameter(const TernaryExpansion& x) {
    return critical_parameter(x, Rat(1, Int("1000000000000")));
}

namespace {

// Exact sign of log 3 + (1-p) log a + p log|1-2a| for rational a and p = u/v:
// compare 3^v num^(v-u) |den-2num|^u against den^v over the integers.
int growth_sign_exact(const Rat& a, const Rat& p) {
    const Int pnum = numerator(p), pden = denominator(p);
    const std::uint64_t u = pnum.convert_to<std::uint64_t>();
    const std::uint64_t v = pden.convert_to<std::uint64_t>();
    Int num = numerator(a), den = denominator(a);
    Int w = den - 2 * num;
    if (w < 0) w = -w;
    const Int lhs = int_pow(3, v) * int_pow(num, v - u) * int_pow(w, u);
    const Int rhs = int_pow(den, v);
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

}  // namespace

Classification classify(const Param& p, const TernaryExpansion& x) {
    const Rat v = x.value();
    if (v <= 0 || v >= 1)
        throw std::domain_error("classification is for interior points x in (0,1)");
    const Rat& a = p.a;
    Classification c;

    if (a == Rat(1, 3)) {
        c.tag = DerivTag::FiniteNonzero;
        c.finite_value = Rat(1);
        c.rule = "identity-map";
        return c;
    }

    if (x.is_triadic()) {
        if (a > Rat(1, 2)) {
            const bool even = (*x.total_ones() % 2) == 0;
            c.tag = even ? DerivTag::CuspUp : DerivTag::CuspDown;
            c.rule = "triadic-cusp-parity";
        } else if (a == Rat(1, 2)) {
            // Canonical triadic preperiod ends with its last nonzero digit.
            const auto& pre = x.preperiod();
            std::size_t first_one = pre.size();
            for (std::size_t i = 0; i < pre.size(); ++i)
                if (pre[i] == 1) {
                    first_one = i;
                    break;
                }
            if (first_one == pre.size()) {
                c.tag = DerivTag::CliffRight;
                c.rule = "cantor-gap-right-endpoint";
            } else if (first_one == pre.size() - 1) {
                c.tag = DerivTag::CliffLeft;
                c.rule = "cantor-gap-left-endpoint";
            } else {
                c.tag = DerivTag::Zero;
                c.rule = "cantor-gap-interior";
            }
        } else if (a > Rat(1, 3)) {
            c.tag = DerivTag::PlusInfinity;
            c.rule = "triadic-expanding-slopes";
        } else {
            c.tag = DerivTag::Zero;
            c.rule = "triadic-contracting-slopes";
        }
        return c;
    }

    if (a == Rat(1, 2)) {
        if (!x.in_cantor()) {
            c.tag = DerivTag::Zero;
            c.rule = "cantor-gap-interior";
        } else {
            // eventually periodic, not triadic: run lengths are bounded
            c.tag = DerivTag::PlusInfinity;
            c.rule = "cantor-bounded-runs";
        }
        return c;
    }

    const Rat freq = x.one_frequency();
    c.one_frequency = freq;
    c.growth_sign = growth_sign_exact(a, freq);

    if (c.growth_sign < 0) {
        c.tag = DerivTag::Zero;
        c.rule = "slope-product-vanishes";
        return c;
    }
    if (c.growth_sign == 0) {
        if (a >= Rat(2, 3)) {
            c.tag = DerivTag::NotDifferentiable;
            c.rule = "nowhere-differentiable-regime";
        } else {
            c.tag = DerivTag::Unknown;
            c.rule = "critical-growth-undecided";
        }
        return c;
    }
    if (a < Rat(1, 2)) {
        c.tag = DerivTag::PlusInfinity;
        c.rule = "slope-product-grows-increasing";
        return c;
    }

    // a > 1/2, diverging slope products
    if (!x.total_ones()) {
        c.tag = DerivTag::NotDifferentiable;
        c.rule = "recurring-ones-oscillation";
        return c;
    }
    c.right = side_condition(p, x, Side::Right);
    c.left = side_condition(p, x, Side::Left);
    const Verdict rv = c.right->verdict, lv = c.left->verdict;
    if (rv == Verdict::Holds && lv == Verdict::Holds) {
        const bool even = (*x.total_ones() % 2) == 0;
        c.tag = even ? DerivTag::PlusInfinity : DerivTag::MinusInfinity;
        c.rule = even ? "tail-condition-holds-even-ones" : "tail-condition-holds-odd-ones";
    } else if (rv == Verdict::Fails || lv == Verdict::Fails) {
        c.tag = DerivTag::NotDifferentiable;
        c.rule = "tail-condition-fails";
    } else {
        c.tag = DerivTag::Unknown;
        c.rule = "tail-condition-boundary";
    }
    return c;
}

EndpointBehavior endpoint_behavior(const Param& p) {
    if (p.a == Rat(1, 3)) return {DerivTag::FiniteNonzero, DerivTag::FiniteNonzero};
    if (p.a > Rat(1, 3)) return {DerivTag::PlusInfinity, DerivTag::PlusInfinity};
    return {DerivTag::Zero, DerivTag::Zero};
}

DinfRegime dinf_membership_regime(const Param& p) {
    if (!(p.a > Rat(1, 2))) throw std::domain_error("regime query requires a > 1/2");
    if (compare_with_multinacci(p.a, 2) >= 0) return DinfRegime::Empty;
    const Rat eps(p.eps);
    Bracket kl = komornik_loreti(eps / 4);
    if (p.a >= kl.mid() - eps && p.a <= kl.mid() + eps) return DinfRegime::CriticalUnknown;
    return p.a < kl.lo ? DinfRegime::UncountablePositiveDim : DinfRegime::CountableRational;
}

}  // namespace okamoto
