#include "okamoto/function.hpp"

#include <cmath>

namespace okamoto {

Rat fn_eval(const Param& p, int n, const Rat& x) {
    if (x < 0 || x > 1) throw std::domain_error("fn_eval requires x in [0,1]");
    if (n < 0) throw std::domain_error("approximant index must be nonnegative");
    // Descend the trisection: f_k(x) = A_s + B_s f_{k-1}(3x - s) with
    // (A,B) = (0,a), (a,1-2a), (1-a,a) on the three thirds.
    Rat offset(0), scale(1), t = x;
    const Rat& a = p.a;
    const Rat b = 1 - 2 * p.a;
    for (int k = 0; k < n; ++k) {
        t *= 3;
        int s = t >= 2 ? 2 : (t >= 1 ? 1 : 0);
        t -= s;
        switch (s) {
            case 0:
                scale *= a;
                break;
            case 1:
                offset += scale * a;
                scale *= b;
                break;
            default:
                offset += scale * (1 - a);
                scale *= a;
                break;
        }
    }
    return offset + scale * t;
}

Rat fn_slope_right(const Param& p, int n, const TernaryExpansion& x) {
    if (n < 0) throw std::domain_error("approximant index must be nonnegative");
    if (x.is_one()) throw std::domain_error("right-hand slope requires x in [0,1)");
    const std::uint64_t ones = static_cast<std::uint64_t>(x.ones_in_prefix(n));
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    return Rat(int_pow(3, un)) * rat_pow(p.a, un - ones) * rat_pow(1 - 2 * p.a, ones);
}

namespace {

inline Rat q_of(int digit, const Rat& a) {
    switch (digit) {
        case 0: return Rat(0);
        case 1: return a;
        default: return 1 - a;
    }
}

inline const Rat& g_of(int digit, const Rat& a, const Rat& b) { return digit == 1 ? b : a; }

}  // namespace

Rat eval_exact(const Param& p, const TernaryExpansion& x) {
    const Rat& a = p.a;
    const Rat b = 1 - 2 * p.a;
    Rat total(0), coeff(1);
    for (auto d : x.preperiod()) {
        if (d) total += coeff * q_of(d, a);
        coeff *= g_of(d, a, b);
    }
    // periodic tail: per-period block B and multiplier M, |M| < 1
    Rat block(0), mult(1);
    for (auto d : x.period()) {
        if (d) block += mult * q_of(d, a);
        mult *= g_of(d, a, b);
    }
    if (block != 0) total += coeff * block / (1 - mult);
    return total;
}

Rat eval_exact(const Param& p, const Rat& x) { return eval_exact(p, TernaryExpansion::expand(x)); }

double eval_approx(const Param& p, const TernaryExpansion& x, double tol) {
    if (!(tol > 0)) throw std::domain_error("tolerance must be positive");
    const double base = std::max(to_double(p.a), std::abs(1 - 2 * to_double(p.a)));
    int depth = static_cast<int>(std::ceil(std::log(tol) / std::log(base))) + 1;
    if (depth < 1) depth = 1;
    if (depth > 200000) throw ResourceError("truncation depth exceeds cap");
    const Rat& a = p.a;
    const Rat b = 1 - 2 * p.a;
    Rat total(0), coeff(1);
    for (int k = 1; k <= depth; ++k) {
        int d = x.digit(k);
        if (d) total += coeff * q_of(d, a);
        coeff *= g_of(d, a, b);
    }
    return to_double(total);
}

namespace {

GraphSample refine_graph(const Param& p, int depth, int depth_cap, bool parallel) {
    if (depth < 1) throw std::domain_error("graph depth must be positive");
    if (depth > depth_cap) throw ResourceError("graph depth exceeds cap");
    const Rat& a = p.a;
    std::vector<Rat> y{Rat(0), Rat(1)};
    for (int level = 0; level < depth; ++level) {
        const std::int64_t segs = static_cast<std::int64_t>(y.size()) - 1;
        std::vector<Rat> next(3 * segs + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && segs >= 243)
#endif
        for (std::int64_t j = 0; j < segs; ++j) {
            const Rat d = y[j + 1] - y[j];
            next[3 * j] = y[j];
            next[3 * j + 1] = y[j] + a * d;
            next[3 * j + 2] = y[j] + (1 - a) * d;
        }
        next.back() = y.back();
        y = std::move(next);
    }
    GraphSample g;
    g.depth = depth;
    g.points.reserve(y.size());
    const Int den = int_pow(3, static_cast<std::uint64_t>(depth));
    for (std::size_t k = 0; k < y.size(); ++k)
        g.points.emplace_back(Rat(Int(k), den), std::move(y[k]));
    return g;
}

}  // namespace

GraphSample sample_graph(const Param& p, int depth, int depth_cap) {
    return refine_graph(p, depth, depth_cap, true);
}

GraphSample sample_graph_serial(const Param& p, int depth, int depth_cap) {
    return refine_graph(p, depth, depth_cap, false);
}

}  // namespace okamoto
