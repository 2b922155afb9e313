#include "okamoto/rational.hpp"

#include <cctype>

namespace okamoto {

Int int_pow(Int base, std::uint64_t e) {
    Int acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat rat_pow(const Rat& base, std::uint64_t e) {
    return Rat(int_pow(numerator(base), e), int_pow(denominator(base), e));
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

Rat parse_rational(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = (s[pos] == '-');
        ++pos;
    }
    auto read_digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out += s[pos++];
        return pos > start;
    };
    std::string ipart;
    bool has_int = read_digits(ipart);
    if (pos < s.size() && s[pos] == '/') {
        if (!has_int) throw ParseError("missing numerator", pos);
        ++pos;
        std::string qpart;
        if (!read_digits(qpart)) throw ParseError("missing denominator", pos);
        if (pos != s.size()) throw ParseError("trailing characters in rational", pos);
        Int q(qpart);
        if (q == 0) throw ParseError("zero denominator", pos - qpart.size());
        Rat r(Int(ipart), q);
        return negative ? -r : r;
    }
    std::string fpart;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        read_digits(fpart);
        if (!has_int && fpart.empty()) throw ParseError("missing digits", pos);
    }
    if (!has_int && fpart.empty()) throw ParseError("missing digits", pos);
    long exponent = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            exp_neg = (s[pos] == '-');
            ++pos;
        }
        std::string epart;
        if (!read_digits(epart) || epart.size() > 4)
            throw ParseError("bad exponent", pos);
        exponent = std::stol(epart);
        if (exp_neg) exponent = -exponent;
    }
    if (pos != s.size()) throw ParseError("trailing characters in rational", pos);
    Int whole = has_int ? Int(ipart) : Int(0);
    Rat r(whole);
    if (!fpart.empty()) r += Rat(Int(fpart), int_pow(10, fpart.size()));
    if (exponent > 0) r *= Rat(int_pow(10, static_cast<std::uint64_t>(exponent)));
    if (exponent < 0) r /= Rat(int_pow(10, static_cast<std::uint64_t>(-exponent)));
    return negative ? -r : r;
}

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace okamoto
