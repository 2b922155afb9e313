#include "okamoto/numerics.hpp"

#include "okamoto/beta.hpp"

#include <stdexcept>

namespace okamoto {

Bracket bisect(const CertifiedSign& f, const Rat& lo, const Rat& hi, const Rat& tol) {
    if (!(lo < hi)) throw std::invalid_argument("bisect: lo must be < hi");
    if (!(tol > 0)) throw std::invalid_argument("bisect: tol must be positive");
    Bracket b{lo, hi, f(lo), f(hi)};
    if (b.f_lo_sign == 0 || b.f_hi_sign == 0 || b.f_lo_sign == b.f_hi_sign)
        throw std::invalid_argument("bisect: endpoint signs must be nonzero and differ");
    while (b.width() > tol) {
        Rat mid = b.mid();
        int s = f(mid);
        if (s == 0) {
            b.lo = b.hi = mid;
            b.f_lo_sign = b.f_hi_sign = 0;
            break;
        }
        if (s == b.f_lo_sign)
            b.lo = std::move(mid);
        else
            b.hi = std::move(mid);
    }
    return b;
}

Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

Bracket bisect_poly(const std::vector<Rat>& coeffs, const Rat& lo, const Rat& hi,
                    const Rat& tol) {
    return bisect([&](const Rat& x) { return sign_of(eval_poly(coeffs, x)); }, lo, hi, tol);
}

Rat eval_power_sum(const std::vector<int>& exponents, const Rat& a) {
    Rat acc(0);
    for (int e : exponents) acc += rat_pow(a, static_cast<std::uint64_t>(e));
    return acc;
}

ConstantsTable constants(const Rat& tol) {
    ConstantsTable t;
    t.a0 = bisect_poly({-1, 0, -27, 54}, Rat(1, 2), Rat(2, 3), tol);
    t.rho = bisect_poly({-1, 1, 1}, Rat(1, 2), Rat(1), tol);
    t.a_hat = komornik_loreti(tol);
    for (int k = 2; k <= 8; ++k) {
        std::vector<Rat> coeffs(k + 1, Rat(1));
        coeffs[0] = Rat(-1);
        t.multinacci[k - 2] = bisect_poly(coeffs, Rat(1, 2), Rat(1), tol);
    }
    return t;
}

ConstantsTable constants() { return constants(Rat(1, Int("1000000000000"))); }

}  // namespace okamoto
