#pragma once

#include <array>
#include <string_view>

namespace okamoto::cli {

// Canonical mapping from every public library operation to the subcommand
// that exposes it. Kept as data so the coverage test can assert the mapping
// stays total and unambiguous.
struct OpRoute {
    std::string_view operation;
    std::string_view subcommand;
};

inline constexpr std::array<OpRoute, 32> kOpRoutes{{
    {"ternary.expand", "eval"},
    {"ternary.parse_digits", "eval"},
    {"ternary.ones_count_prefix", "classify"},
    {"ternary.total_ones", "classify"},
    {"ternary.run_length", "classify"},
    {"ternary.digit_one_frequency", "classify"},
    {"ternary.in_cantor", "classify"},
    {"okamoto.fn_eval", "graph"},
    {"okamoto.fn_slope_right", "classify"},
    {"okamoto.eval", "eval"},
    {"okamoto.sample_graph", "graph"},
    {"classifier.side_condition", "classify"},
    {"classifier.critical_parameter", "critical"},
    {"classifier.classify", "classify"},
    {"classifier.endpoint_behavior", "classify"},
    {"classifier.dinf_membership_regime", "classify"},
    {"beta.pi_lambda", "beta"},
    {"beta.greedy_expansion_of_one", "beta"},
    {"beta.lazy_expansion_of_one", "beta"},
    {"beta.is_unique_expansion", "beta"},
    {"beta.thue_morse", "beta"},
    {"beta.komornik_loreti", "constants"},
    {"beta.a_hat_n", "beta"},
    {"beta.multinacci", "constants"},
    {"beta.countable_regime_tails", "beta"},
    {"dimension.phi", "dim"},
    {"dimension.entropy_h", "dim"},
    {"dimension.d_of_a", "dim"},
    {"dimension.dim_frequency_set", "dim"},
    {"dimension.count_admissible_words", "dim"},
    {"dimension.dim_bounds_and_closed_forms", "dim"},
    {"numerics.bisect_and_constants", "constants"},
}};

inline constexpr std::array<std::string_view, 7> kSubcommands{
    "eval", "graph", "classify", "critical", "constants", "dim", "beta"};

}  // namespace okamoto::cli
