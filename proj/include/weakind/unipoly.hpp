#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace weakind {

/// Dense univariate integer polynomial, coefficients stored lowest degree
/// first with no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;

    /// Coefficients lowest degree first.
    explicit UniPoly(std::vector<Int> low_first) : c_(std::move(low_first)) { trim(); }

    UniPoly(std::initializer_list<long long> low_first) {
        for (auto v : low_first) c_.emplace_back(v);
        trim();
    }

    static UniPoly constant(const Int& v) { return UniPoly(std::vector<Int>{v}); }

    /// c * X^k
    static UniPoly monomial(const Int& c, std::size_t k) {
        std::vector<Int> v(k + 1, Int(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    static UniPoly from_high_first(const std::vector<Int>& high_first) {
        return UniPoly(std::vector<Int>(high_first.rbegin(), high_first.rend()));
    }

    std::vector<Int> high_first() const {
        if (c_.empty()) return {Int(0)};
        return std::vector<Int>(c_.rbegin(), c_.rend());
    }

    const std::vector<Int>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

    Int coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Int> r = a.c_;
        for (auto& v : r) v = -v;
        return UniPoly(std::move(r));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }

    Int operator()(const Int& x) const {
        Int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// Human form in variable `var`, e.g. `X^2 - 8`.
inline std::string render(const UniPoly& p, const std::string& var = "X") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = p.degree() + 1; k-- > 0;) {
        Int c = p.coefficient(k);
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

/// `[1,0,-2]`, highest degree first.
inline std::string render_coefficients(const UniPoly& p) {
    std::string out = "[";
    auto hf = p.high_first();
    for (std::size_t i = 0; i < hf.size(); ++i) {
        if (i) out += ",";
        out += hf[i].str();
    }
    return out + "]";
}

}  // namespace weakind
