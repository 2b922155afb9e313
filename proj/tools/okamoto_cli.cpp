// Command-line front door: every library operation behind one of the
// subcommands eval, graph, classify, critical, constants, dim, beta, with
// machine-readable JSON envelopes (CSV where tabular output makes sense).

#include "okamoto/beta.hpp"
#include "okamoto/classify.hpp"
#include "okamoto/cli_registry.hpp"
#include "okamoto/dimension.hpp"
#include "okamoto/function.hpp"
#include "okamoto/numerics.hpp"
#include "okamoto/ternary.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace okamoto;

namespace {

constexpr const char* kVersion = "0.1.0";

const Rat kDefaultTol = Rat(1, Int("1000000000000"));

struct RatInput {
    Rat value;
    std::string given;
    bool decimal_converted = false;
};

RatInput parse_rat_arg(const std::string& s) {
    RatInput in;
    in.given = s;
    in.value = parse_rational(s);
    in.decimal_converted = s.find('.') != std::string::npos;
    return in;
}

struct XInput {
    TernaryExpansion t;
    std::string given;
    bool from_digits = false;
    bool decimal_converted = false;
};

// --x accepts a rational ("3/4", "0.75" as an exact decimal) or a ternary
// digit string, recognized by its parenthesized period ("0.0220(2000202)").
XInput parse_x_arg(const std::string& s) {
    if (s.find('(') != std::string::npos)
        return XInput{TernaryExpansion::parse(s), s, true, false};
    Rat v = parse_rational(s);
    return XInput{TernaryExpansion::expand(v), s, false,
                  s.find('.') != std::string::npos};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json bracket_json(const Bracket& b) {
    return json{{"lo", rat_str(b.lo)},
                {"hi", rat_str(b.hi)},
                {"midpoint_decimal", b.mid_double()}};
}

std::string word_str(const std::vector<std::uint8_t>& w) {
    std::string s;
    for (auto d : w) s += static_cast<char>('0' + d);
    return s;
}

json side_condition_json(const SideCondition& sc) {
    return json{{"side", to_string(sc.side)},
                {"eta", word_str(sc.eta)},
                {"polynomial", sc.polynomial_text()},
                {"value", rat_str(sc.value)},
                {"value_decimal", to_double(sc.value)},
                {"verdict", to_string(sc.verdict)}};
}

const char* binding_str(CriticalParameter::Binding b) {
    switch (b) {
        case CriticalParameter::Binding::Right: return "Right";
        case CriticalParameter::Binding::Left: return "Left";
        case CriticalParameter::Binding::Both: return "Both";
    }
    return "?";
}

json critical_json(const CriticalParameter& cp) {
    json j;
    j["degenerate"] = cp.degenerate;
    json polys;
    auto poly_text = [](const std::vector<int>& exps) {
        std::string s;
        for (int e : exps) {
            if (!s.empty()) s += " + ";
            s += (e == 1) ? "a" : "a^" + std::to_string(e);
        }
        return s;
    };
    j["right_polynomial"] = poly_text(cp.right_exponents);
    j["left_polynomial"] = poly_text(cp.left_exponents);
    j["right_exponents"] = cp.right_exponents;
    j["left_exponents"] = cp.left_exponents;
    if (cp.degenerate) {
        j["note"] = "triadic point: both side conditions hold for every a in (0,1)";
    } else {
        j["binding_side"] = binding_str(cp.binding);
        j["a_star"] = bracket_json(cp.a_star);
    }
    return j;
}

// ---------------------------------------------------------------------------

struct App {
    bool no_timing = false;

    int run(int argc, char** argv);
};

void emit_envelope(const std::string& command, const json& inputs, const json& result,
                   bool no_timing, double ms) {
    json env;
    env["command"] = command;
    env["inputs"] = inputs;
    env["result"] = result;
    env["version"] = kVersion;
    if (!no_timing) env["timing_ms"] = ms;
    std::cout << env.dump(2) << "\n";
}

int exit_code_for(const std::string& code) {
    if (code == "usage") return 2;
    if (code == "resource") return 4;
    return 3;
}

int emit_error(const std::string& code, const std::string& message) {
    json err{{"error", {{"code", code}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
    return exit_code_for(code);
}

int App::run(int argc, char** argv) {
    CLI::App app{"Exact evaluation, derivative classification and dimension "
                 "formulas for the self-affine family F_a"};
    app.set_version_flag("--version", kVersion);
    app.add_flag("--no-timing", no_timing, "omit timing from the output envelope");
    app.require_subcommand(1);

    auto timed = [&](const std::string& command, std::function<std::pair<json, json>()> body) {
        return [&, command, body]() {
            auto start = std::chrono::steady_clock::now();
            auto [inputs, result] = body();
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            emit_envelope(command, inputs, result, no_timing, ms);
        };
    };

    // ---- eval ----
    auto* eval_cmd = app.add_subcommand("eval", "evaluate F_a at a rational point")->fallthrough();
    {
        static std::string a_s, x_s, tol_s;
        static bool exact_flag = false, csv_flag = false, json_flag = false;
        a_s.clear(), x_s.clear(), tol_s.clear();
        eval_cmd->add_option("--a", a_s, "parameter a (p/q or exact decimal)")->required();
        eval_cmd->add_option("--x", x_s, "point (rational or ternary digit string)")->required();
        eval_cmd->add_flag("--exact", exact_flag, "exact rational output (default)");
        eval_cmd->add_option("--tol", tol_s, "truncated-series mode with this tolerance");
        eval_cmd->add_flag("--csv", csv_flag, "emit x,y as CSV instead of the JSON envelope");
        eval_cmd->add_flag("--json", json_flag, "JSON envelope output (default)");
        eval_cmd->callback([&, this]() {
            RatInput a = parse_rat_arg(a_s);
            XInput x = parse_x_arg(x_s);
            Param p{a.value};
            json inputs{{"a", rat_str(a.value)}, {"x", x.t.format()}};
            if (a.decimal_converted)
                inputs["note"] = "decimal input converted exactly to " + rat_str(a.value);
            json result;
            result["x_value"] = rat_str(x.t.value());
            if (!tol_s.empty() && !exact_flag) {
                double tol = std::stod(tol_s);
                double v = eval_approx(p, x.t, tol);
                result["mode"] = "approx";
                result["tol"] = tol;
                result["value_decimal"] = v;
                if (csv_flag) {
                    std::cout << "x,y\n" << rat_str(x.t.value()) << "," << format_double(v) << "\n";
                    return;
                }
            } else {
                Rat v = eval_exact(p, x.t);
                result["mode"] = "exact";
                result["value"] = rat_str(v);
                result["value_decimal"] = to_double(v);
                if (csv_flag) {
                    std::cout << "x,y\n" << rat_str(x.t.value()) << "," << rat_str(v) << "\n";
                    return;
                }
            }
            timed("eval", [&] { return std::make_pair(inputs, result); })();
        });
    }

    // ---- graph ----
    auto* graph_cmd = app.add_subcommand("graph", "sample the approximant breakpoints")->fallthrough();
    {
        static std::string a_s, out_path;
        static int depth = 1;
        static bool csv_flag = false, json_flag = false, decimal_flag = false;
        a_s.clear(), out_path.clear();
        graph_cmd->add_option("--a", a_s)->required();
        graph_cmd->add_option("--depth", depth, "refinement depth (<= 12)")->required();
        graph_cmd->add_option("--out", out_path, "output file path")->required();
        graph_cmd->add_flag("--csv", csv_flag, "CSV file format (default)");
        graph_cmd->add_flag("--json", json_flag, "JSON file format");
        graph_cmd->add_flag("--decimal", decimal_flag, "decimal columns instead of exact rationals");
        graph_cmd->callback([&, this]() {
            RatInput a = parse_rat_arg(a_s);
            Param p{a.value};
            GraphSample g = sample_graph(p, depth);
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot open output file: " + out_path);
            auto cell = [&](const Rat& v) {
                return decimal_flag ? format_double(to_double(v)) : rat_str(v);
            };
            if (json_flag) {
                json rows = json::array();
                for (auto& [x, y] : g.points) rows.push_back({cell(x), cell(y)});
                out << rows.dump() << "\n";
            } else {
                out << "x,y\n";
                for (auto& [x, y] : g.points) out << cell(x) << "," << cell(y) << "\n";
            }
            json inputs{{"a", rat_str(a.value)}, {"depth", depth}, {"out", out_path}};
            json result{{"points", g.points.size()},
                        {"format", json_flag ? "json" : "csv"},
                        {"first", {cell(g.points.front().first), cell(g.points.front().second)}},
                        {"last", {cell(g.points.back().first), cell(g.points.back().second)}}};
            timed("graph", [&] { return std::make_pair(inputs, result); })();
        });
    }

    // ---- classify ----
    auto* classify_cmd = app.add_subcommand("classify", "derivative behavior of F_a at x")->fallthrough();
    {
        static std::string a_s, x_s, eps_s;
        a_s.clear(), x_s.clear(), eps_s.clear();
        classify_cmd->add_option("--a", a_s)->required();
        classify_cmd->add_option("--x", x_s)->required();
        classify_cmd->add_option("--eps", eps_s, "tolerance against non-rational thresholds");
        classify_cmd->callback(timed("classify", [&]() {
            RatInput a = parse_rat_arg(a_s);
            XInput x = parse_x_arg(x_s);
            double eps = eps_s.empty() ? 1e-12 : std::stod(eps_s);
            Param p{a.value, eps};
            json inputs{{"a", rat_str(a.value)}, {"x", x.t.format()}};
            if (a.decimal_converted)
                inputs["note"] = "decimal input converted exactly to " + rat_str(a.value);
            json result;
            result["x"] = rat_str(x.t.value());
            result["a"] = rat_str(a.value);
            Rat xv = x.t.value();
            if (xv == 0 || xv == 1) {
                EndpointBehavior eb = endpoint_behavior(p);
                result["endpoint_behavior"] = {{"at0", to_string(eb.at0)},
                                               {"at1", to_string(eb.at1)}};
                return std::make_pair(inputs, result);
            }
            Classification c = classify(p, x.t);
            result["tag"] = to_string(c.tag);
            result["justification"] = c.rule;
            if (c.finite_value) result["derivative"] = rat_str(*c.finite_value);
            if (c.one_frequency) {
                result["one_frequency"] = rat_str(*c.one_frequency);
                result["growth_sign"] = c.growth_sign;
            }
            json sides = json::array();
            if (c.right) sides.push_back(side_condition_json(*c.right));
            if (c.left) sides.push_back(side_condition_json(*c.left));
            result["side_conditions"] = sides;
            if (x.t.total_ones().has_value())
                result["critical_parameter"] = critical_json(critical_parameter(x.t));
            else
                result["critical_parameter"] = nullptr;
            if (a.value > Rat(1, 2))
                result["dinf_regime"] = to_string(dinf_membership_regime(p));
            return std::make_pair(inputs, result);
        }));
    }

    // ---- critical ----
    auto* critical_cmd = app.add_subcommand("critical", "critical parameter a*(x)")->fallthrough();
    {
        static std::string x_s, tol_s;
        x_s.clear(), tol_s.clear();
        critical_cmd->add_option("--x", x_s)->required();
        critical_cmd->add_option("--tol", tol_s, "bracket width (default 1e-12)");
        critical_cmd->callback(timed("critical", [&]() {
            XInput x = parse_x_arg(x_s);
            Rat tol = tol_s.empty() ? kDefaultTol : parse_rational(tol_s);
            CriticalParameter cp = critical_parameter(x.t, tol);
            json inputs{{"x", x.t.format()}, {"tol", rat_str(tol)}};
            return std::make_pair(inputs, critical_json(cp));
        }));
    }

    // ---- constants ----
    auto* constants_cmd = app.add_subcommand("constants", "named constants as brackets")->fallthrough();
    {
        static std::string tol_s;
        tol_s.clear();
        constants_cmd->add_option("--tol", tol_s, "bracket width (default 1e-12)");
        constants_cmd->callback(timed("constants", [&]() {
            Rat tol = tol_s.empty() ? kDefaultTol : parse_rational(tol_s);
            ConstantsTable t = constants(tol);
            json result;
            result["a0"] = bracket_json(t.a0);
            result["rho"] = bracket_json(t.rho);
            result["a_hat"] = bracket_json(t.a_hat);
            json multi;
            multi["a_1"] = json{{"lo", "1"}, {"hi", "1"}, {"midpoint_decimal", 1.0}};
            for (int k = 2; k <= 8; ++k)
                multi["a_" + std::to_string(k)] = bracket_json(t.multinacci_k(k));
            result["multinacci"] = multi;
            json inputs{{"tol", rat_str(tol)}};
            return std::make_pair(inputs, result);
        }));
    }

    // ---- dim ----
    auto* dim_cmd = app.add_subcommand("dim", "dimension formulas and bounds")->fallthrough();
    {
        static std::string set_s, a_s, sweep_s, p_s, family_s;
        static int entropy_depth = kEntropyDepthCap;
        set_s.clear(), a_s.clear(), sweep_s.clear(), p_s.clear(), family_s.clear();
        entropy_depth = kEntropyDepthCap;
        dim_cmd->add_option("--set", set_s, "D0 | Dinf | N | graph-box | freq")->required();
        dim_cmd->add_option("--a", a_s, "parameter (single-point mode)");
        dim_cmd->add_option("--sweep", sweep_s, "lo:hi:step CSV sweep");
        dim_cmd->add_option("--entropy-depth", entropy_depth, "word length for the point estimate (<= 40)");
        dim_cmd->add_option("--p", p_s, "frequency (set freq)");
        dim_cmd->add_option("--family", family_s,
                            "R^p R-bar^p R_p R-bar_p S^p S-bar^p S_p S-bar_p intersection");
        dim_cmd->callback([&, this]() {
            auto closed_value = [&](const Rat& a) -> double {
                if (set_s == "D0") return dim_D0(a);
                if (set_s == "N") return dim_N(a);
                if (set_s == "graph-box") return box_dimension_graph(to_double(a));
                if (set_s == "Dinf") return dim_Dinf_closed(a);
                throw std::invalid_argument("unknown set: " + set_s);
            };
            if (!sweep_s.empty()) {
                auto c1 = sweep_s.find(':');
                auto c2 = sweep_s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw std::invalid_argument("sweep wants lo:hi:step");
                Rat lo = parse_rational(sweep_s.substr(0, c1));
                Rat hi = parse_rational(sweep_s.substr(c1 + 1, c2 - c1 - 1));
                Rat step = parse_rational(sweep_s.substr(c2 + 1));
                if (!(step > 0) || hi < lo) throw std::invalid_argument("bad sweep range");
                std::vector<Rat> grid;
                for (Rat a = lo; a <= hi; a += step) grid.push_back(a);
                std::vector<double> vals(grid.size());
                std::exception_ptr sweep_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    try {
                        vals[i] = closed_value(grid[i]);
                    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
                        sweep_error = std::current_exception();
                    }
                }
                if (sweep_error) std::rethrow_exception(sweep_error);
                std::cout << "a,value\n";
                for (std::size_t i = 0; i < grid.size(); ++i)
                    std::cout << rat_str(grid[i]) << "," << format_double(vals[i]) << "\n";
                return;
            }
            json inputs{{"set", set_s}};
            json result;
            result["set"] = set_s;
            if (set_s == "freq") {
                if (p_s.empty() || family_s.empty())
                    throw std::invalid_argument("set freq wants --p and --family");
                static const std::map<std::string, FreqFamily> kFam{
                    {"R^p", FreqFamily::RUpper},        {"R-bar^p", FreqFamily::RUpperClosed},
                    {"R_p", FreqFamily::RLower},        {"R-bar_p", FreqFamily::RLowerClosed},
                    {"S^p", FreqFamily::SUpper},        {"S-bar^p", FreqFamily::SUpperClosed},
                    {"S_p", FreqFamily::SLower},        {"S-bar_p", FreqFamily::SLowerClosed},
                    {"intersection", FreqFamily::Intersection}};
                auto it = kFam.find(family_s);
                if (it == kFam.end()) throw std::invalid_argument("unknown family: " + family_s);
                double p = to_double(parse_rational(p_s));
                double v = dim_frequency_set(p, it->second);
                inputs["p"] = p_s;
                inputs["family"] = family_s;
                result["lower"] = v;
                result["upper"] = v;
                result["point"] = v;
                result["method"] = "closed-form";
            } else {
                if (a_s.empty()) throw std::invalid_argument("dim wants --a or --sweep");
                RatInput a = parse_rat_arg(a_s);
                inputs["a"] = rat_str(a.value);
                result["a"] = rat_str(a.value);
                if (set_s == "Dinf" && a.value > Rat(1, 2)) {
                    DimEstimate e = dim_Dinf_bounds(a.value, entropy_depth);
                    result["lower"] = e.lower;
                    result["upper"] = e.upper;
                    if (e.point) {
                        result["point"] = *e.point;
                        result["entropy_count"] =
                            count_admissible_words(a.value, entropy_depth);
                        result["entropy_depth"] = entropy_depth;
                    } else {
                        result["point"] = nullptr;
                    }
                    result["method"] = e.method == DimEstimate::Method::EntropyCount
                                           ? "entropy-count"
                                           : "multinacci-bounds";
                    result["point_outside_bounds"] = e.point_outside_bounds;
                } else {
                    double v = closed_value(a.value);
                    result["lower"] = v;
                    result["upper"] = v;
                    result["point"] = v;
                    result["method"] = "closed-form";
                }
            }
            timed("dim", [&] { return std::make_pair(inputs, result); })();
        });
    }

    // ---- beta ----
    auto* beta_cmd = app.add_subcommand("beta", "beta-expansion toolkit")->fallthrough();
    beta_cmd->require_subcommand(1);
    {
        static std::string a_s, lam_s, omega_s, tol_s;
        static int depth = 64, n_arg = 16;
        a_s.clear(), lam_s.clear(), omega_s.clear(), tol_s.clear();

        auto* greedy = beta_cmd->add_subcommand("greedy-one", "greedy expansion of 1")->fallthrough();
        greedy->add_option("--a", a_s)->required();
        greedy->add_option("--depth", depth, "digit budget (default 64)");
        greedy->callback(timed("beta greedy-one", [&]() {
            RatInput a = parse_rat_arg(a_s);
            GreedyOne g = greedy_expansion_of_one(a.value, depth);
            json inputs{{"a", rat_str(a.value)}, {"depth", depth}};
            json result{{"digits", word_str(g.digits)},
                        {"terminated", g.terminated},
                        {"cycle", g.cycle},
                        {"exact", g.exact}};
            result["quasi_greedy"] = g.expansion ? json(g.expansion->format()) : json(nullptr);
            return std::make_pair(inputs, result);
        }));

        auto* lazy = beta_cmd->add_subcommand("lazy-one", "lazy expansion of 1")->fallthrough();
        lazy->add_option("--a", a_s)->required();
        lazy->add_option("--depth", depth);
        lazy->callback(timed("beta lazy-one", [&]() {
            RatInput a = parse_rat_arg(a_s);
            GreedyOne g = lazy_expansion_of_one(a.value, depth);
            json inputs{{"a", rat_str(a.value)}, {"depth", depth}};
            json result{{"digits", word_str(g.digits)}, {"exact", g.exact}};
            result["expansion"] = g.expansion ? json(g.expansion->format()) : json(nullptr);
            return std::make_pair(inputs, result);
        }));

        auto* unique = beta_cmd->add_subcommand("unique", "unique-expansion membership")->fallthrough();
        unique->add_option("--lambda", lam_s)->required();
        unique->add_option("--omega", omega_s, "binary word w1..wk(p1..pm)")->required();
        unique->callback(timed("beta unique", [&]() {
            RatInput lam = parse_rat_arg(lam_s);
            BinarySeq w = BinarySeq::parse(omega_s);
            UniqueVerdict v = is_unique_expansion(lam.value, w);
            json inputs{{"lambda", rat_str(lam.value)}, {"omega", w.format()}};
            const char* vs = v == UniqueVerdict::InU
                                 ? "InU"
                                 : (v == UniqueVerdict::NotInU ? "NotInU" : "Undetermined");
            json result{{"verdict", vs}};
            return std::make_pair(inputs, result);
        }));

        auto* pi = beta_cmd->add_subcommand("pi", "exact value of Pi_lambda(omega)")->fallthrough();
        pi->add_option("--lambda", lam_s)->required();
        pi->add_option("--omega", omega_s)->required();
        pi->callback(timed("beta pi", [&]() {
            RatInput lam = parse_rat_arg(lam_s);
            BinarySeq w = BinarySeq::parse(omega_s);
            Rat v = pi_lambda(lam.value, w);
            json inputs{{"lambda", rat_str(lam.value)}, {"omega", w.format()}};
            json result{{"value", rat_str(v)}, {"value_decimal", to_double(v)}};
            return std::make_pair(inputs, result);
        }));

        auto* tm = beta_cmd->add_subcommand("thue-morse", "Thue-Morse prefix")->fallthrough();
        tm->add_option("--n", n_arg, "number of symbols")->required();
        tm->callback(timed("beta thue-morse", [&]() {
            json inputs{{"n", n_arg}};
            json result{{"word", word_str(thue_morse(n_arg))}};
            return std::make_pair(inputs, result);
        }));

        auto* ahn = beta_cmd->add_subcommand("ahat-n", "truncated-series root a_hat_n")->fallthrough();
        ahn->add_option("--n", n_arg)->required();
        ahn->add_option("--tol", tol_s);
        ahn->callback(timed("beta ahat-n", [&]() {
            Rat tol = tol_s.empty() ? kDefaultTol : parse_rational(tol_s);
            json inputs{{"n", n_arg}, {"tol", rat_str(tol)}};
            json result{{"a_hat_n", bracket_json(a_hat_n(n_arg, tol))}};
            return std::make_pair(inputs, result);
        }));

        auto* tails = beta_cmd->add_subcommand("tails", "countable-regime tail cycles")->fallthrough();
        tails->add_option("--a", a_s)->required();
        tails->callback(timed("beta tails", [&]() {
            RatInput a = parse_rat_arg(a_s);
            auto cycles = countable_regime_tails(a.value);
            json inputs{{"a", rat_str(a.value)}};
            json arr = json::array();
            for (const auto& c : cycles)
                arr.push_back({{"m", c.m},
                               {"binary", word_str(c.binary_cycle)},
                               {"ternary", word_str(c.ternary_cycle)}});
            json result{{"cycles", arr}};
            return std::make_pair(inputs, result);
        }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("usage", e.what());
    } catch (const ParseError& e) {
        return emit_error("domain", e.what());
    } catch (const ResourceError& e) {
        return emit_error("resource", e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error("usage", e.what());
    } catch (const std::domain_error& e) {
        return emit_error("domain", e.what());
    } catch (const std::exception& e) {
        return emit_error("internal", e.what());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    App app;
    return app.run(argc, argv);
}
