#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"

namespace weakind {

/// One summand c*X^e of a formal sum.
struct SumTerm {
    Int coeff;
    std::uint32_t exponent = 0;

    friend bool operator==(const SumTerm&, const SumTerm&) = default;
};

/// Order-significant sum a_1 X^{i_1} + ... + a_n X^{i_n}. Any sequence is a
/// valid representative; arithmetic returns normal forms.
class FormalSum {
public:
    FormalSum() = default;
    explicit FormalSum(std::vector<SumTerm> terms) : terms_(std::move(terms)) {}

    FormalSum(std::initializer_list<std::pair<long long, std::uint32_t>> pairs) {
        for (const auto& [c, e] : pairs) terms_.push_back(SumTerm{Int(c), e});
    }

    const std::vector<SumTerm>& terms() const { return terms_; }
    std::vector<SumTerm>& terms() { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

private:
    std::vector<SumTerm> terms_;
};

inline bool is_normal_form(const FormalSum& s) {
    const auto& t = s.terms();
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j].coeff == 0) return false;
        if (j > 0 && t[j].exponent == t[j - 1].exponent) return false;
    }
    return true;
}

/// Applies the leftmost reduction: drop a zero summand, or merge a summand
/// into its left neighbour of equal exponent. nullopt when already in NF.
inline std::optional<FormalSum> reduce_once(const FormalSum& s) {
    const auto& t = s.terms();
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j].coeff == 0) {
            auto r = t;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
            return FormalSum(std::move(r));
        }
        if (j > 0 && t[j].exponent == t[j - 1].exponent) {
            auto r = t;
            r[j - 1].coeff += r[j].coeff;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
            return FormalSum(std::move(r));
        }
    }
    return std::nullopt;
}

namespace detail {

/// Incremental normalizer. The buffer is kept in NF after every push.
class NfBuilder {
public:
    void push(const Int& coeff, std::uint32_t exponent) {
        if (coeff == 0) return;
        if (!out_.empty() && out_.back().exponent == exponent) {
            out_.back().coeff += coeff;
            if (out_.back().coeff == 0) out_.pop_back();
            return;
        }
        out_.push_back(SumTerm{coeff, exponent});
    }

    void push(const FormalSum& s) {
        for (const auto& t : s.terms()) push(t.coeff, t.exponent);
    }

    FormalSum take() { return FormalSum(std::move(out_)); }

private:
    std::vector<SumTerm> out_;
};

}  // namespace detail

/// Unique NF of the equivalence class.
inline FormalSum normal_form(const FormalSum& s) {
    detail::NfBuilder b;
    b.push(s);
    return b.take();
}

inline FormalSum sum_add(const FormalSum& a, const FormalSum& b) {
    detail::NfBuilder nf;
    nf.push(a);
    nf.push(b);
    return nf.take();
}

inline FormalSum sum_succ(const FormalSum& a) { return sum_add(a, FormalSum{{1, 0}}); }

/// Additive inverse: reversed order, negated coefficients.
inline FormalSum sum_negate(const FormalSum& a) {
    std::vector<SumTerm> r;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) r.push_back(SumTerm{-it->coeff, it->exponent});
    return normal_form(FormalSum(std::move(r)));
}

/// A * (b_1 X^{j_1} + ... + b_m X^{j_m}) = A*b_1 X^{j_1} + ... + A*b_m X^{j_m},
/// where A*bX^j repeats the shifted A b times, or repeats the reversed
/// negated shift |b| times when b < 0. Throws length_error when the expansion
/// would push more than `max_work` summands.
inline FormalSum sum_mul(const FormalSum& a, const FormalSum& b, std::uint64_t max_work = 50'000'000) {
    Int work = 0;
    for (const auto& bt : b.terms()) work += (bt.coeff < 0 ? Int(-bt.coeff) : bt.coeff) * a.size();
    if (work > max_work) throw std::length_error("sum_mul: expansion too large");
    detail::NfBuilder nf;
    for (const auto& bt : b.terms()) {
        if (bt.coeff == 0) continue;
        Int reps = bt.coeff < 0 ? Int(-bt.coeff) : bt.coeff;
        auto count = static_cast<std::int64_t>(reps);
        for (std::int64_t r = 0; r < count; ++r) {
            if (bt.coeff > 0) {
                for (const auto& at : a.terms()) nf.push(at.coeff, at.exponent + bt.exponent);
            } else {
                for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
                    nf.push(-it->coeff, it->exponent + bt.exponent);
            }
        }
    }
    return nf.take();
}

/// Sum of NF coefficients at the greatest exponent present is positive.
inline bool is_positive(const FormalSum& s) {
    FormalSum nf = normal_form(s);
    if (nf.empty()) return false;
    std::uint32_t top = 0;
    for (const auto& t : nf.terms()) top = std::max(top, t.exponent);
    Int total = 0;
    for (const auto& t : nf.terms())
        if (t.exponent == top) total += t.coeff;
    return total > 0;
}

inline bool is_nonnegative(const FormalSum& s) { return normal_form(s).empty() || is_positive(s); }

/// The unique r with r + x ~ y, namely y + (-x). Nonnegative iff x <= y.
inline FormalSum leq_residue(const FormalSum& x, const FormalSum& y) { return sum_add(y, sum_negate(x)); }

/// x <= y iff some nonnegative r has r + x ~ y.
inline bool sum_leq(const FormalSum& x, const FormalSum& y) { return is_nonnegative(leq_residue(x, y)); }

/// The y with Sy ~ x: subtract 1 at exponent 0 on the right.
inline FormalSum sum_predecessor(const FormalSum& x) { return sum_add(x, FormalSum{{-1, 0}}); }

/// Commutative shadow: per-exponent coefficient totals, an invariant of ~.
inline std::vector<Int> exponent_totals(const FormalSum& s) {
    std::vector<Int> totals;
    for (const auto& t : s.terms()) {
        if (totals.size() <= t.exponent) totals.resize(t.exponent + 1, Int(0));
        totals[t.exponent] += t.coeff;
    }
    return totals;
}

// ---------------------------------------------------------------------------
// Text and list forms

/// `2X^3 - X^1 + 4X^0`; the empty sum renders as `0`.
inline std::string render(const FormalSum& s) {
    if (s.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < s.terms().size(); ++i) {
        const auto& t = s.terms()[i];
        Int mag = t.coeff < 0 ? Int(-t.coeff) : t.coeff;
        if (i == 0)
            out += t.coeff < 0 ? "-" : "";
        else
            out += t.coeff < 0 ? " - " : " + ";
        if (mag != 1) out += mag.str();
        out += "X^" + std::to_string(t.exponent);
    }
    return out;
}

/// `[(2,3),(-1,0)]`
inline std::string render_pairs(const FormalSum& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.terms().size(); ++i) {
        if (i) out += ",";
        out += "(" + s.terms()[i].coeff.str() + "," + std::to_string(s.terms()[i].exponent) + ")";
    }
    return out + "]";
}

namespace detail {

inline std::uint32_t parse_exponent(std::string_view digits, std::string_view whole) {
    if (digits.empty() || digits.size() > 9) throw std::invalid_argument("bad exponent in '" + std::string(whole) + "'");
    std::uint32_t e = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad exponent in '" + std::string(whole) + "'");
        e = e * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return e;
}

}  // namespace detail

/// Parses the text form order-significantly without normalizing. A bare
/// integer is a degree-0 summand and `X` alone means `X^1`.
inline FormalSum parse_formal_sum(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty formal sum");
    std::vector<SumTerm> terms;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in formal sum '" + std::string(text) + "'");
        }
        first = false;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        Int coeff = i > start ? Int(s.substr(start, i - start)) : Int(1);
        std::uint32_t exponent = 0;
        if (i < s.size() && s[i] == 'X') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t es = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                exponent = detail::parse_exponent(std::string_view(s).substr(es, i - es), text);
            }
        } else if (i == start) {
            throw std::invalid_argument("expected coefficient or X in formal sum '" + std::string(text) + "'");
        }
        terms.push_back(SumTerm{neg ? Int(-coeff) : coeff, exponent});
    }
    return FormalSum(std::move(terms));
}

/// Parses `[(2,3),(-1,0)]`.
inline FormalSum parse_formal_sum_pairs(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&] { return std::invalid_argument("malformed pair list '" + std::string(text) + "'"); };
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw bad();
    std::vector<SumTerm> terms;
    std::size_t i = 1;
    while (i < s.size() - 1) {
        if (s[i] != '(') throw bad();
        auto close = s.find(')', i);
        if (close == std::string::npos) throw bad();
        auto inner = s.substr(i + 1, close - i - 1);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw bad();
        try {
            terms.push_back(SumTerm{Int(inner.substr(0, comma)), detail::parse_exponent(inner.substr(comma + 1), text)});
        } catch (const std::runtime_error&) {
            throw bad();
        }
        i = close + 1;
        if (i < s.size() - 1) {
            if (s[i] != ',') throw bad();
            ++i;
        }
    }
    return FormalSum(std::move(terms));
}

}  // namespace weakind
