#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "numeric.hpp"

namespace weakind {

/// True iff every prime factor of q is in `primes`.
inline bool smooth_denominator_check(Int q, const std::vector<Int>& primes) {
    if (q < 1) throw std::invalid_argument("smooth_denominator_check: q must be positive");
    for (const auto& p : primes) {
        if (p < 2) continue;
        while (q % p == 0) q /= p;
    }
    return q == 1;
}

inline bool smooth_exponent(const Rational& e, const std::vector<Int>& primes) {
    return smooth_denominator_check(boost::multiprecision::denominator(e), primes);
}

/// Finite sum of a * X^e with rational a and e, over a fixed prime set.
class PuiseuxPoly {
public:
    using Terms = std::map<Rational, Rational>;  // exponent -> nonzero coefficient

    PuiseuxPoly() = default;
    explicit PuiseuxPoly(std::vector<Int> primes) : primes_(std::move(primes)) {}

    PuiseuxPoly(std::vector<Int> primes, const std::vector<std::pair<Rational, Rational>>& coeff_exp)
        : primes_(std::move(primes)) {
        for (const auto& [c, e] : coeff_exp) add_term(c, e);
    }

    static PuiseuxPoly constant(std::vector<Int> primes, const Rational& c) {
        PuiseuxPoly p(std::move(primes));
        p.add_term(c, 0);
        return p;
    }

    /// c * X^e, rejecting exponents whose denominator is not smooth.
    void add_term(const Rational& coeff, const Rational& exponent) {
        if (!smooth_exponent(exponent, primes_))
            throw std::invalid_argument("exponent " + to_string(exponent) + " has a non-smooth denominator");
        Rational& slot = terms_[exponent];
        slot += coeff;
        if (slot == 0) terms_.erase(exponent);
    }

    const Terms& terms() const { return terms_; }
    const std::vector<Int>& primes() const { return primes_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Rational& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Largest exponent; throws on zero.
    Rational leading_exponent() const {
        if (terms_.empty()) throw std::domain_error("leading_exponent of zero");
        return terms_.rbegin()->first;
    }

    Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

    /// Element of the difference ring: nonnegative smooth exponents and an
    /// integer constant term.
    bool is_ring_member() const {
        for (const auto& [e, c] : terms_)
            if (e < 0 || !smooth_exponent(e, primes_)) return false;
        return is_integer(coefficient(0));
    }

    /// Ring member with nonnegative leading coefficient.
    bool is_member() const { return is_ring_member() && leading_coefficient() >= 0; }

    friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Int> primes_;
    Terms terms_;
};

namespace detail {

inline void require_same_primes(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    if (a.primes() != b.primes()) throw std::invalid_argument("puiseux operands use different prime sets");
}

}  // namespace detail

inline PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    detail::require_same_primes(a, b);
    PuiseuxPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(c, e);
    return r;
}

inline PuiseuxPoly operator-(const PuiseuxPoly& a) {
    PuiseuxPoly r(a.primes());
    for (const auto& [e, c] : a.terms()) r.add_term(-c, e);
    return r;
}

inline PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }

inline PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    detail::require_same_primes(a, b);
    PuiseuxPoly r(a.primes());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(ca * cb, ea + eb);
    return r;
}

/// `X^(1/2) - 1`, descending exponents.
inline std::string render(const PuiseuxPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += "X";
        if (e != 1) out += is_integer(e) && e > 0 ? "^" + to_string(e) : "^(" + to_string(e) + ")";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Leading-exponent candidates for roots

/// Leading exponents a root of sum_i P_i t^i can have: (k_i - k_j)/(C(j - i))
/// over index pairs j > i with P_i, P_j nonzero, where k_i/C is the leading
/// exponent of P_i written over a common denominator C.
inline std::set<Rational> exponent_candidates(const std::vector<PuiseuxPoly>& coeffs, std::size_t max_degree) {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) nonzero.push_back(i);
    if (nonzero.empty()) throw std::invalid_argument("exponent_candidates: zero polynomial");
    if (nonzero.back() > max_degree) throw std::invalid_argument("exponent_candidates: degree exceeds the cap");
    Int c = 1;
    for (auto i : nonzero) c = boost::integer::lcm(c, Int(boost::multiprecision::denominator(coeffs[i].leading_exponent())));
    std::vector<Int> k(coeffs.size());
    for (auto i : nonzero) {
        Rational scaled = coeffs[i].leading_exponent() * c;
        k[i] = boost::multiprecision::numerator(scaled);
    }
    std::set<Rational> out;
    for (std::size_t a = 0; a < nonzero.size(); ++a)
        for (std::size_t b = a + 1; b < nonzero.size(); ++b) {
            auto i = nonzero[a], j = nonzero[b];
            out.insert(Rational(k[i] - k[j], c * static_cast<long long>(j - i)));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Truncated roots and integer parts

/// Leading part of a descending series sum a_k X^{e_k}; exponents may be
/// negative. `terminates` marks the listed terms as the whole series.
struct TruncatedRoot {
    std::vector<std::pair<Rational, Rational>> terms;  // (exponent, coefficient), exponents strictly decreasing
    bool terminates = false;

    void validate() const {
        for (std::size_t i = 1; i < terms.size(); ++i)
            if (!(terms[i].first < terms[i - 1].first))
                throw std::invalid_argument("truncated root exponents must strictly decrease");
    }
};

/// Raised when the listed terms do not determine the floor of the tail.
class TruncationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The s with s <= r < s + 1: the positive-exponent part of r plus the floor
/// of the remaining tail a_0 + (negative powers).
inline PuiseuxPoly puiseux_integer_part(const TruncatedRoot& r, const std::vector<Int>& primes) {
    r.validate();
    PuiseuxPoly s(primes);
    Rational a0 = 0;
    std::optional<Rational> first_negative;
    for (const auto& [e, c] : r.terms) {
        if (c == 0) continue;
        if (e > 0) {
            if (!smooth_exponent(e, primes))
                throw std::invalid_argument("exponent " + to_string(e) + " has a non-smooth denominator");
            s.add_term(c, e);
        } else if (e == 0) {
            a0 = c;
        } else if (!first_negative) {
            first_negative = c;
        }
    }
    Rational floor_tail;
    if (!is_integer(a0)) {
        floor_tail = floor(a0);
    } else if (first_negative) {
        floor_tail = *first_negative > 0 ? a0 : a0 - 1;
    } else if (r.terminates) {
        floor_tail = a0;
    } else {
        throw TruncationError("integer constant term with unknown tail sign; extend the truncation");
    }
    s.add_term(floor_tail, 0);
    return s;
}

/// Sign of a descending series by its leading nonzero coefficient; nullopt
/// when every listed coefficient vanishes and the series may continue.
inline std::optional<int> series_sign(const std::vector<std::pair<Rational, Rational>>& descending, bool terminates) {
    for (const auto& [e, c] : descending)
        if (c != 0) return sign(c);
    if (terminates) return 0;
    return std::nullopt;
}

/// Descending term list of r - p.
inline std::vector<std::pair<Rational, Rational>> series_minus(const TruncatedRoot& r, const PuiseuxPoly& p) {
    std::map<Rational, Rational> acc;
    for (const auto& [e, c] : r.terms) acc[e] += c;
    for (const auto& [e, c] : p.terms()) acc[e] -= c;
    std::vector<std::pair<Rational, Rational>> out;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.push_back(*it);
    return out;
}

/// Checks s <= r < s + 1 in the order where positivity means a positive
/// leading coefficient.
inline bool verify_integer_part(const TruncatedRoot& r, const PuiseuxPoly& s) {
    auto lower = series_sign(series_minus(r, s), r.terminates);
    auto upper = series_sign(series_minus(r, s + PuiseuxPoly::constant(s.primes(), 1)), r.terminates);
    return lower && upper && *lower >= 0 && *upper < 0;
}

}  // namespace weakind
