#pragma once

#include <stdexcept>
#include <vector>

#include "unipoly.hpp"

namespace weakind {

/// q^n * f((X + a)/q) with n = deg f; integer coefficients by construction.
inline UniPoly shift_transform(const UniPoly& f, const Int& q, const Int& a) {
    if (q < 1) throw std::invalid_argument("shift_transform: q must be positive");
    const std::size_t n = f.degree();
    UniPoly shift{0, 1};
    shift = shift + UniPoly::constant(a);
    UniPoly g;
    UniPoly power = UniPoly::constant(1);  // (X + a)^i
    for (std::size_t i = 0; i <= n; ++i) {
        g = g + UniPoly::constant(f.coefficient(i) * pow(q, static_cast<unsigned>(n - i))) * power;
        power = power * shift;
    }
    return g;
}

/// Sign of f(m/q), exact.
inline int sign_at(const UniPoly& f, const Int& m, const Int& q) { return sign(f(Rational(m, q))); }

/// Least c in [a, b) with f(c/q) <= 0 and f((c+1)/q) > 0. Requires
/// f(a/q) <= 0 < f(b/q).
inline Int bracket(const UniPoly& f, const Int& q, const Int& a, const Int& b) {
    if (q < 1) throw std::invalid_argument("bracket: q must be positive");
    if (!(a < b)) throw std::invalid_argument("bracket: need a < b");
    if (sign_at(f, a, q) > 0 || sign_at(f, b, q) <= 0)
        throw std::invalid_argument("bracket: need f(a/q) <= 0 and f(b/q) > 0");
    int prev = sign_at(f, a, q);
    for (Int c = a; c < b; ++c) {
        int next = sign_at(f, c + 1, q);
        if (prev <= 0 && next > 0) return c;
        prev = next;
    }
    throw std::logic_error("bracket: no sign change found");  // unreachable under the precondition
}

/// {m in [lo, hi] : f(m/q) * f((m+1)/q) < 0}, ascending.
inline std::vector<Int> sign_change_set(const UniPoly& f, const Int& q, const Int& lo, const Int& hi) {
    if (q < 1) throw std::invalid_argument("sign_change_set: q must be positive");
    std::vector<Int> out;
    if (hi < lo) return out;
    int prev = sign_at(f, lo, q);
    for (Int m = lo; m <= hi; ++m) {
        int next = sign_at(f, m + 1, q);
        if (prev * next < 0) out.push_back(m);
        prev = next;
    }
    return out;
}

enum class Side { above, below };

/// f(X)((2c + 1) - 2qX) for `above`, f(X)(2qX - (2c + 1)) for `below`. The
/// extra factor vanishes only at X = (c + 1/2)/q, which toggles whether c
/// is a sign change of the product at denominator q.
inline UniPoly multiplier_transform(const UniPoly& f, const Int& q, const Int& c, Side side) {
    if (q < 1) throw std::invalid_argument("multiplier_transform: q must be positive");
    UniPoly lin(std::vector<Int>{2 * c + 1, -2 * q});
    if (side == Side::below) lin = -lin;
    return f * lin;
}

}  // namespace weakind
