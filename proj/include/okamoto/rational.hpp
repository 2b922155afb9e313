#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace okamoto {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Malformed textual input (rationals, digit strings). Carries the offset of
// the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Request exceeds a configured cap (graph depth, automaton size, ...).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Int int_pow(Int base, std::uint64_t e);
Rat rat_pow(const Rat& base, std::uint64_t e);

double to_double(const Rat& r);

inline int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Accepts "p/q", an integer, or a plain decimal string ("0.55" -> 11/20).
// The conversion is exact; no floating point is involved.
Rat parse_rational(std::string_view s);

// "p/q", or just "p" for integers.
std::string rat_str(const Rat& r);

}  // namespace okamoto
