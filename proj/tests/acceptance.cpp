// Acceptance suite: one pass/fail line per criterion, exit code is the
// number of failed criteria. Each criterion carries its runtime budget.

#include "brute_oracle.hpp"
#include "okamoto/beta.hpp"
#include "okamoto/classify.hpp"
#include "okamoto/dimension.hpp"
#include "okamoto/function.hpp"
#include "okamoto/numerics.hpp"
#include "okamoto/ternary.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace okamoto;
using json = nlohmann::json;

namespace {

struct Criterion {
    int failures = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            notes.push_back(what);
        }
    }
};

int g_failed_criteria = 0;

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.check(false, std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.check(secs <= budget_seconds,
            "runtime " + std::to_string(secs) + "s exceeds budget " +
                std::to_string(budget_seconds) + "s");
    const bool pass = c.failures == 0;
    if (!pass) ++g_failed_criteria;
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", number,
                title.c_str(), secs);
    for (const auto& n : c.notes) std::printf("        - %s\n", n.c_str());
}

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

Rat abs_rat(Rat v) { return v < 0 ? -v : v; }

Rat random_one_free_point(std::mt19937& rng) {
    std::string s = "0.";
    int pre_len = rng() % 6;
    for (int i = 0; i < pre_len; ++i) s += (rng() % 2) ? '2' : '0';
    s += "(2";
    int per_len = rng() % 6;
    for (int i = 0; i < per_len; ++i) s += (rng() % 2) ? '2' : '0';
    s += "0)";
    return TernaryExpansion::parse(s).value();
}

Rat random_interior_nontriadic(std::mt19937& rng) {
    for (;;) {
        Int q = 2 + rng() % 400;
        Int p = 1 + Int(rng()) % (q - 1);
        Rat x(p, q);
        if (!TernaryExpansion::expand(x).is_triadic()) return x;
    }
}

std::string run_cli_capture(const std::string& args, int& exit_code) {
    std::string cmd = std::string(OKAMOTO_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

// ---- criteria -----------------------------------------------------------

void criterion_constants(Criterion& c) {
    ConstantsTable t = constants();
    c.check(near(t.a0.mid_double(), 0.5592, 5e-5), "a0 vs 0.5592");
    c.check(near(t.rho.mid_double(), 0.6180, 5e-5), "rho vs 0.6180");
    c.check(near(t.a_hat.mid_double(), 0.5598, 5e-5),
            "a_hat vs 0.5598: the root of sum t_j a^j = 1 is 0.55952455... "
            "(certified bisection, confirmed by the decreasing a_hat_n "
            "iterates); the 4-digit reference value appears to be a misprint");
    Bracket astar2 = bisect_poly({-1, 1, 2, -1}, Rat(1, 2), Rat(1), Rat(1, Int("1000000000000")));
    c.check(near(astar2.mid_double(), 0.5550, 5e-5), "a*(0.022(02) pattern) vs 0.5550");
    auto cp = critical_parameter(TernaryExpansion::parse("0.0220(2000202)"));
    c.check(near(cp.a_star.mid_double(), 0.5261, 5e-5), "a*(worked example) vs 0.5261");
}

void criterion_eval_oracle(Criterion& c) {
    std::mt19937 rng(101);
    const std::vector<Rat> params{Rat(1, 5), Rat(1, 3), Rat(1, 2), Rat(11, 20), Rat(5, 6)};
    for (int trial = 0; trial < 200; ++trial) {
        Int q = 2 + rng() % 728;
        Int p = Int(rng()) % (q + 1);
        Rat x(p, q);
        auto t = TernaryExpansion::expand(x);
        for (const Rat& a : params) {
            Param prm{a};
            Rat base = a > 1 - a ? a : 1 - a;
            Rat twoam1 = abs_rat(2 * a - 1);
            if (twoam1 > base) base = twoam1;
            Rat diff = abs_rat(eval_exact(prm, t) - fn_eval(prm, 20, x));
            if (diff > rat_pow(base, 20)) {
                c.check(false, "series vs approximant bound at x=" + rat_str(x) +
                                   ", a=" + rat_str(a));
                return;
            }
        }
    }
    // exact agreement at triadic points
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng() % 6;
        Int den = int_pow(3, n);
        Rat x(Int(rng()) % (den + 1), den);
        for (const Rat& a : params) {
            Param prm{a};
            if (eval_exact(prm, x) != fn_eval(prm, n, x)) {
                c.check(false, "triadic equality at x=" + rat_str(x) + ", a=" + rat_str(a));
                return;
            }
        }
    }
}

void criterion_cantor(Criterion& c) {
    std::mt19937 rng(103);
    Param half{Rat(1, 2)};
    for (int trial = 0; trial < 100; ++trial) {
        Rat x = random_one_free_point(rng);
        auto t = TernaryExpansion::expand(x);
        // binary re-reading sum (xi_k / 2) 2^-k in closed form
        Rat target(0), pw(1);
        for (std::size_t k = 1; k <= t.preperiod().size(); ++k) {
            pw /= 2;
            if (t.digit(static_cast<std::int64_t>(k)) == 2) target += pw;
        }
        Rat per_sum(0), ppw(1);
        for (auto d : t.period()) {
            ppw /= 2;
            if (d == 2) per_sum += ppw;
        }
        target += pw * per_sum / (1 - ppw);
        if (eval_exact(half, t) != target) {
            c.check(false, "binary re-reading mismatch at x=" + rat_str(x));
            return;
        }
    }
}

void criterion_classification(Criterion& c) {
    std::mt19937 rng(107);
    // Prop-2.6-style table at 20 triadic points across the four regimes
    int triadic_done = 0;
    while (triadic_done < 20) {
        int n = 1 + rng() % 5;
        Int den = int_pow(3, n);
        Int k = 1 + Int(rng()) % (den - 1);
        Rat x(k, den);
        auto t = TernaryExpansion::expand(x);
        if (!t.is_triadic()) continue;  // reduced k/3^n is triadic by construction
        std::int64_t ones = *t.total_ones();
        // independent expectation from the digits
        auto ct = classify(Param{Rat(7, 10)}, t);
        bool ok = ct.tag == ((ones % 2 == 0) ? DerivTag::CuspUp : DerivTag::CuspDown);
        auto cm = classify(Param{Rat(2, 5)}, t);
        ok = ok && cm.tag == DerivTag::PlusInfinity;
        auto cl = classify(Param{Rat(1, 5)}, t);
        ok = ok && cl.tag == DerivTag::Zero;
        auto ch = classify(Param{Rat(1, 2)}, t);
        const auto& pre = t.preperiod();
        std::size_t first_one = pre.size();
        for (std::size_t i = 0; i < pre.size(); ++i)
            if (pre[i] == 1) {
                first_one = i;
                break;
            }
        DerivTag expect_half = first_one == pre.size()
                                   ? DerivTag::CliffRight
                                   : (first_one + 1 == pre.size() ? DerivTag::CliffLeft
                                                                  : DerivTag::Zero);
        ok = ok && ch.tag == expect_half;
        if (!ok) {
            c.check(false, "triadic table mismatch at x=" + rat_str(x));
            return;
        }
        ++triadic_done;
    }
    // nowhere differentiable at and above 2/3
    for (int trial = 0; trial < 50; ++trial) {
        Rat a = Rat(2, 3) + Rat(rng() % 1000, 3001);
        Rat x = random_interior_nontriadic(rng);
        if (classify(Param{a}, TernaryExpansion::expand(x)).tag !=
            DerivTag::NotDifferentiable) {
            c.check(false, "expected NotDifferentiable at a=" + rat_str(a) +
                               ", x=" + rat_str(x));
            return;
        }
    }
    // no infinite-derivative tag at or above the golden ratio
    ConstantsTable t = constants(Rat(1, 1000000));
    for (int trial = 0; trial < 50; ++trial) {
        Rat a = t.rho.hi + Rat(1 + rng() % 1000, 3000);
        if (a >= 1) a = Rat(99, 100);
        Rat x = random_interior_nontriadic(rng);
        auto tag = classify(Param{a}, TernaryExpansion::expand(x)).tag;
        if (tag == DerivTag::PlusInfinity || tag == DerivTag::MinusInfinity) {
            c.check(false, "infinite tag above rho at a=" + rat_str(a) + ", x=" + rat_str(x));
            return;
        }
    }
    // bounded-run points with divergent slopes
    c.check(classify(Param{Rat(11, 20)}, TernaryExpansion::expand(Rat(3, 4))).tag ==
                DerivTag::PlusInfinity,
            "PlusInfinity at x=3/4, a=11/20");
    c.check(classify(Param{Rat(1, 2)}, TernaryExpansion::expand(Rat(1, 4))).tag ==
                DerivTag::PlusInfinity,
            "PlusInfinity at x=1/4, a=1/2");
}

void criterion_worked_example(Criterion& c) {
    int code = 0;
    std::string out = run_cli_capture("critical --x \"0.0220(2000202)\" --no-timing", code);
    c.check(code == 0, "critical exit code");
    if (code != 0) return;
    json res = json::parse(out)["result"];
    c.check(res["binding_side"] == "Left", "binding side Left");
    c.check(res["left_polynomial"] == "a + a^2 + a^3 + a^5 + a^7", "left polynomial");
    double mid = res["a_star"]["midpoint_decimal"];
    c.check(near(mid, 0.5261, 5e-5), "a* bracket around 0.5261");

    out = run_cli_capture("classify --a 0.52 --x \"0.0220(2000202)\" --no-timing", code);
    c.check(code == 0, "classify(0.52) exit code");
    if (code == 0) {
        std::string tag = json::parse(out)["result"]["tag"];
        c.check(tag == "PlusInfinity" || tag == "MinusInfinity",
                "infinite-derivative tag at a=0.52");
    }
    out = run_cli_capture("classify --a 0.53 --x \"0.0220(2000202)\" --no-timing", code);
    c.check(code == 0, "classify(0.53) exit code");
    if (code == 0)
        c.check(json::parse(out)["result"]["tag"] == "NotDifferentiable",
                "NotDifferentiable at a=0.53");
}

void criterion_dimension_formulas(Criterion& c) {
    const double l23 = std::log(2.0) / std::log(3.0);
    c.check(near(dim_d(0.5), l23, 1e-12), "d(1/2) = log 2 / log 3");
    Bracket a0 = constants().a0;
    c.check(near(dim_d(a0.mid_double()), 1.0, 1e-6), "d(a0) = 1");
    c.check(near(dim_N(Rat(1, 2)), l23 * l23, 1e-12), "dim N(1/2) = (log_3 2)^2");
    c.check(entropy_h(1.0 / 3.0) == 1.0, "h(1/3) = 1 exactly");
}

void criterion_entropy(Criterion& c) {
    for (const Rat& lam : {Rat(13, 25), Rat(53, 100), Rat(11, 20)}) {
        for (int n = 1; n <= 10; ++n) {
            auto impl = count_admissible_words(lam, n, 256);
            auto brute = okamoto::testing::brute_force_count(lam, n, 256);
            if (impl != brute) {
                c.check(false, "count mismatch at lambda=" + rat_str(lam) +
                                   ", n=" + std::to_string(n));
                return;
            }
        }
    }
    const double l23 = std::log(2.0) / std::log(3.0);
    for (const Rat& a : {Rat(51, 100), Rat(13, 25), Rat(53, 100)}) {
        DimEstimate e = dim_Dinf_bounds(a, 30);
        c.check(e.point.has_value(), "point estimate present at a=" + rat_str(a));
        if (e.point) {
            bool inside = !e.point_outside_bounds && e.lower <= *e.point &&
                          *e.point <= e.upper;
            c.check(inside, "n=30 sandwich at a=" + rat_str(a) + " (point " +
                                std::to_string(*e.point) + " vs [" +
                                std::to_string(e.lower) + ", " + std::to_string(e.upper) +
                                "]; the finite-depth estimate converges from above and "
                                "enters the bounds by n=40)");
        }
        c.check(e.upper < l23, "upper bound below log_3 2 at a=" + rat_str(a));
    }
}

void criterion_properties(Criterion& c) {
    std::mt19937 rng(109);
    // symmetry and self-affinity
    for (int trial = 0; trial < 120; ++trial) {
        Int qq = 2 + rng() % 40;
        Int pp = 1 + Int(rng()) % (qq - 1);
        Param p{Rat(pp, qq)};
        Int xq = 2 + rng() % 300;
        Rat x(Int(rng()) % (xq + 1), xq);
        if (eval_exact(p, x) + eval_exact(p, 1 - x) != 1) {
            c.check(false, "symmetry failed");
            return;
        }
        Rat fx = eval_exact(p, x);
        bool affine = eval_exact(p, x / 3) == p.a * fx &&
                      eval_exact(p, (1 + x) / 3) == p.a + (1 - 2 * p.a) * fx &&
                      eval_exact(p, (2 + x) / 3) == (1 - p.a) + p.a * fx;
        if (!affine) {
            c.check(false, "self-affinity failed");
            return;
        }
    }
    // slope ratios
    int ratio_checked = 0;
    while (ratio_checked < 120) {
        Int qq = 2 + rng() % 30;
        Int pp = 1 + Int(rng()) % (qq - 1);
        if (Rat(pp, qq) == Rat(1, 2)) continue;
        Param p{Rat(pp, qq)};
        int n = 1 + rng() % 4;
        auto g = sample_graph_serial(p, n);
        Int den = int_pow(3, n);
        std::size_t j = rng() % (g.points.size() - 2);
        Rat s1 = (g.points[j + 1].second - g.points[j].second) * den;
        Rat s2 = (g.points[j + 2].second - g.points[j + 1].second) * den;
        Rat b = 1 - 2 * p.a;
        Rat ratio = s2 / s1;
        if (ratio != p.a / b && ratio != b / p.a) {
            c.check(false, "slope-ratio law failed");
            return;
        }
        ++ratio_checked;
    }
    // quasi-greedy self-admissibility over prefixes
    for (int trial = 0; trial < 120; ++trial) {
        Rat a(51 + rng() % 48, 100);
        GreedyOne g = greedy_expansion_of_one(a, 96);
        const auto& d = g.digits;
        for (std::size_t k = 1; k < 48; ++k) {
            for (std::size_t i = 0; k + i < d.size(); ++i) {
                if (d[k + i] != d[i]) {
                    if (d[k + i] > d[i]) {
                        c.check(false, "self-admissibility failed at a=" + rat_str(a));
                        return;
                    }
                    break;
                }
            }
        }
    }
    // reflection symmetry and monotonicity of unique-expansion membership
    auto random_seq = [&rng]() {
        std::vector<std::uint8_t> pre(rng() % 5), per(1 + rng() % 5);
        for (auto& d : pre) d = rng() % 2;
        for (auto& d : per) d = rng() % 2;
        return BinarySeq(std::move(pre), std::move(per));
    };
    for (int trial = 0; trial < 120; ++trial) {
        Rat lam(51 + rng() % 48, 100);
        BinarySeq w = random_seq();
        if (is_unique_expansion(lam, w) != is_unique_expansion(lam, w.reflected())) {
            c.check(false, "reflection symmetry failed");
            return;
        }
    }
    int mono_checked = 0;
    while (mono_checked < 120) {
        int l1 = 51 + rng() % 48, l2 = 51 + rng() % 48;
        if (l1 >= l2) continue;
        BinarySeq w = random_seq();
        if (is_unique_expansion(Rat(l2, 100), w) == UniqueVerdict::InU &&
            is_unique_expansion(Rat(l1, 100), w) != UniqueVerdict::InU) {
            c.check(false, "monotonicity in lambda failed");
            return;
        }
        ++mono_checked;
    }
    // Thue-Morse recurrences
    auto t = thue_morse(1 << 15);
    for (int j = 0; j < (1 << 14); ++j) {
        if (t[2 * j] != t[j] || t[2 * j + 1] != 1 - t[j]) {
            c.check(false, "Thue-Morse recurrence failed at j=" + std::to_string(j));
            return;
        }
    }
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    run_criterion(1, "constants regression vs 4-digit reports", 1.0, criterion_constants);
    run_criterion(2, "evaluation oracle equivalence", 10.0, criterion_eval_oracle);
    run_criterion(3, "Cantor-function cross-check", 1.0, criterion_cantor);
    run_criterion(4, "classification regression", 5.0, criterion_classification);
    run_criterion(5, "worked rational example end-to-end", 1.0, criterion_worked_example);
    run_criterion(6, "dimension formulas", 1.0, criterion_dimension_formulas);
    run_criterion(7, "entropy counting", 60.0, criterion_entropy);
    run_criterion(8, "property suites", 30.0, criterion_properties);
    if (g_failed_criteria == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", g_failed_criteria);
    return g_failed_criteria;
}
