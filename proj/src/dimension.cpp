#include "okamoto/dimension.hpp"

#include "okamoto/beta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace okamoto {

double phi(double a) {
    if (a < 0 || a > 2.0 / 3.0) throw std::domain_error("phi is defined on [0, 2/3]");
    if (a == 0) return 1.0;
    if (a == 1.0 / 3.0) return 1.0 / 3.0;
    if (a == 0.5) return 0.0;
    return std::log(3 * a) / (std::log(a) - std::log(std::abs(2 * a - 1)));
}

double entropy_h(double p) {
    if (p < 0 || p > 1) throw std::domain_error("entropy_h is defined on [0,1]");
    if (p == 1.0 / 3.0) return 1.0;
    const double log3 = std::log(3.0);
    double s = (1 - p) * std::log(2.0);
    if (p > 0) s -= p * std::log(p);
    if (p < 1) s -= (1 - p) * std::log(1 - p);
    return s / log3;
}

double dim_d(double a) { return entropy_h(phi(a)); }

double dim_frequency_set(double p, FreqFamily family) {
    if (p < 0 || p > 1) throw std::domain_error("frequency must lie in [0,1]");
    switch (family) {
        case FreqFamily::RUpper:
        case FreqFamily::RUpperClosed:
        case FreqFamily::SLower:
        case FreqFamily::SLowerClosed:
            return p <= 1.0 / 3.0 ? entropy_h(p) : 1.0;
        case FreqFamily::RLower:
        case FreqFamily::RLowerClosed:
        case FreqFamily::SUpper:
        case FreqFamily::SUpperClosed:
            return p <= 1.0 / 3.0 ? 1.0 : entropy_h(p);
        case FreqFamily::Intersection:
            return entropy_h(p);
    }
    throw std::logic_error("unreachable");
}

namespace {

// sign of 54 a^3 - 27 a^2 - 1, i.e. the side of a relative to a0
int a0_side(const Rat& a) { return sign_of(eval_poly({-1, 0, -27, 54}, a)); }

}  // namespace

double dim_D0(const Rat& a) {
    if (!(a > 0 && a < 1)) throw std::domain_error("dim_D0 requires a in (0,1)");
    if (a == Rat(1, 3)) throw std::domain_error("F at a = 1/3 is the identity");
    if (a0_side(a) <= 0) return 1.0;
    if (a >= Rat(2, 3)) return 0.0;
    return dim_d(to_double(a));
}

double dim_Dinf_closed(const Rat& a) {
    if (!(a > 0 && a <= Rat(1, 2)))
        throw std::domain_error("closed form covers 0 < a <= 1/2; use dim_Dinf_bounds above 1/2");
    if (a == Rat(1, 3)) throw std::domain_error("F at a = 1/3 is the identity");
    return dim_d(to_double(a));
}

double dim_N(const Rat& a) {
    if (!(a > 0 && a < 1)) throw std::domain_error("dim_N requires a in (0,1)");
    if (a == Rat(1, 3)) throw std::domain_error("F at a = 1/3 is the identity");
    if (a == Rat(1, 2)) {
        const double l = std::log(2.0) / std::log(3.0);
        return l * l;
    }
    if (a0_side(a) <= 0) return dim_d(to_double(a));
    return 1.0;
}

double box_dimension_graph(double a) {
    if (!(a > 0 && a < 1)) throw std::domain_error("box dimension requires a in (0,1)");
    if (a <= 0.5) return 1.0;
    return 1.0 + std::log(4 * a - 1) / std::log(3.0);
}

namespace {

// Left-to-right comparison automaton against a d-prefix: state is the length
// of the longest word suffix matching a prefix of d. Self-admissibility of d
// makes the longest match sufficient.
struct PrefixAutomaton {
    std::vector<std::uint8_t> d;
    std::vector<int> fail;  // KMP failure links

    explicit PrefixAutomaton(std::vector<std::uint8_t> digits) : d(std::move(digits)) {
        const int D = static_cast<int>(d.size());
        fail.assign(D + 1, 0);
        for (int i = 1; i < D; ++i) {
            int l = fail[i];
            while (l > 0 && d[i] != d[l]) l = fail[l];
            fail[i + 1] = (d[i] == d[l]) ? l + 1 : 0;
        }
    }

    int size() const { return static_cast<int>(d.size()); }

    // -1: strict exceedance (word not admissible). size(): rode off the
    // prefix, undecidable from the available digits.
    int advance(int i, int b) const {
        if (i >= size()) return size();
        if (b == d[i]) return i + 1;
        if (b > d[i]) return -1;
        int l = i;
        while (l > 0 && d[l] != b) l = fail[l];
        return (d[l] == b) ? l + 1 : 0;
    }
};

}  // namespace

std::int64_t count_admissible_words(const Rat& lam, int n, int d_depth) {
    if (n < 1) throw std::domain_error("word length must be positive");
    if (n > kEntropyDepthCap) throw ResourceError("word length exceeds entropy depth cap");
    if (!(lam > Rat(1, 2)) || compare_with_multinacci(lam, 2) >= 0)
        throw std::domain_error("admissible-word counting requires 1/2 < lambda < golden ratio");
    d_depth = std::max(d_depth, 4 * n + 64);
    if (d_depth > (1 << 16)) throw ResourceError("d-prefix depth exceeds cap");

    GreedyOne g = greedy_expansion_of_one(lam, d_depth);
    std::vector<std::uint8_t> d = g.digits;
    if (g.exact) {
        d.resize(d_depth);
        for (int k = 0; k < d_depth; ++k)
            d[k] = static_cast<std::uint8_t>(g.expansion->digit(k + 1));
    }
    const PrefixAutomaton aut(std::move(d));
    const int D = aut.size();

    // Reachable (i, j) states; j tracks the reflected word against d.
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> states;
    std::vector<std::array<int, 2>> next;  // -1 = no edge
    auto intern = [&](int i, int j) {
        auto [it, fresh] = id.emplace(std::make_pair(i, j), static_cast<int>(states.size()));
        if (fresh) {
            states.emplace_back(i, j);
            next.push_back({-1, -1});
        }
        return it->second;
    };
    intern(0, 0);
    for (std::size_t s = 0; s < states.size(); ++s) {
        auto [i, j] = states[s];
        if (i >= D || j >= D) continue;  // rode off the prefix: no certified extension
        for (int b = 0; b < 2; ++b) {
            const int ni = aut.advance(i, b);
            const int nj = aut.advance(j, 1 - b);
            if (ni < 0 || nj < 0) continue;
            next[s][b] = intern(ni, nj);
        }
        if (states.size() > (1u << 20)) throw ResourceError("automaton state count exceeds cap");
    }

    // Survivors: states with an infinite path, i.e. dead ends removed to a
    // fixpoint. Saturated states have no edges and fall out first.
    std::vector<bool> alive(states.size(), true);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t s = 0; s < states.size(); ++s) {
            if (!alive[s]) continue;
            bool has_out = false;
            for (int b = 0; b < 2; ++b)
                if (next[s][b] >= 0 && alive[next[s][b]]) has_out = true;
            if (!has_out) {
                alive[s] = false;
                changed = true;
            }
        }
    }

    if (!alive[0]) return 0;
    std::vector<std::int64_t> cur(states.size(), 0);
    cur[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<std::int64_t> nxt(states.size(), 0);
        for (std::size_t s = 0; s < states.size(); ++s) {
            if (cur[s] == 0) continue;
            for (int b = 0; b < 2; ++b) {
                const int t = next[s][b];
                if (t >= 0 && alive[t]) nxt[t] += cur[s];
            }
        }
        cur = std::move(nxt);
    }
    std::int64_t total = 0;
    for (std::size_t s = 0; s < states.size(); ++s) total += cur[s];
    return total;
}

DimEstimate dim_Dinf_bounds(const Rat& a, int entropy_depth) {
    if (!(a > Rat(1, 2)))
        throw std::domain_error("bounds cover 1/2 < a < a_hat; use dim_Dinf_closed below");
    if (compare_with_komornik_loreti(a) >= 0)
        throw std::domain_error("bounds cover 1/2 < a < a_hat");
    // locate k with a in [a_{k+1}, a_k)
    int k = 2;
    while (compare_with_multinacci(a, k + 1) < 0) {
        ++k;
        if (k > 64) throw ResourceError("multinacci index exceeds cap");
    }
    const Rat tol(1, Int("10000000000000"));
    const double log3 = std::log(3.0);
    DimEstimate e;
    e.method = DimEstimate::Method::MultinacciBounds;
    e.lower = (k == 2) ? 0.0 : -std::log(multinacci(k - 1, tol).bracket.mid_double()) / log3;
    e.upper = -std::log(multinacci(k, tol).bracket.mid_double()) / log3;
    if (entropy_depth > 0) {
        const std::int64_t count = count_admissible_words(a, entropy_depth);
        double pt = std::log(static_cast<double>(count)) / (entropy_depth * log3);
        if (pt < e.lower) {
            if (e.lower - pt < 1e-9)
                pt = e.lower;
            else
                e.point_outside_bounds = true;
        } else if (pt > e.upper) {
            if (pt - e.upper < 1e-9)
                pt = e.upper;
            else
                e.point_outside_bounds = true;
        }
        e.point = pt;
        e.method = DimEstimate::Method::EntropyCount;
    }
    return e;
}

}  // namespace okamoto
