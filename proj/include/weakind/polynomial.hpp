#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "term.hpp"

namespace weakind {

/// Product of variables with positive exponents, sorted by variable name.
class Monomial {
public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;

    static Monomial variable(const std::string& name, unsigned exponent = 1) {
        Monomial m;
        if (exponent > 0) m.factors_.emplace_back(name, exponent);
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    unsigned exponent(const std::string& name) const {
        for (const auto& f : factors_)
            if (f.first == name) return f.second;
        return 0;
    }

    /// This monomial with `name` removed.
    Monomial without(const std::string& name) const {
        Monomial m;
        for (const auto& f : factors_)
            if (f.first != name) m.factors_.push_back(f);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() || j != b.factors_.end()) {
            if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
                m.factors_.push_back(*i++);
            } else if (i == a.factors_.end() || j->first < i->first) {
                m.factors_.push_back(*j++);
            } else {
                m.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Total degree descending, then graded-lex with variables in alphabetical
/// order (x^2 before x*y before y^2).
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        std::size_t i = 0, j = 0;
        while (i < fa.size() && j < fb.size()) {
            if (fa[i].first != fb[j].first) return fa[i].first < fb[j].first;
            if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
            ++i;
            ++j;
        }
        return i < fa.size() && j == fb.size();
    }
};

/// Sparse multivariate polynomial with big-integer coefficients.
/// `Signed == false` is the natural-coefficient form of a term;
/// `Signed == true` is used for differences and finite differences.
template <bool Signed>
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, CanonicalOrder>;

    Polynomial() = default;

    static Polynomial constant(const Int& c) {
        Polynomial p;
        p.add_term(Monomial{}, c);
        return p;
    }

    static Polynomial variable(const std::string& name, unsigned exponent = 1) {
        Polynomial p;
        p.add_term(Monomial::variable(name, exponent), 1);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree() == 0; }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int constant_term() const { return coefficient(Monomial{}); }

    /// Max total degree of a nonzero term; 0 for constants including zero.
    unsigned degree() const { return terms_.empty() ? 0u : terms_.begin()->first.degree(); }

    unsigned degree_in(const std::string& name) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(name));
        return d;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& f : m.factors()) vs.insert(f.first);
        return vs;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        if constexpr (!Signed) {
            auto found = terms_.find(m);
            if (found != terms_.end() && found->second < 0)
                throw std::domain_error("negative coefficient in natural polynomial");
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
        requires Signed
    {
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    Polynomial scaled(const Int& k) const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * k);
        return r;
    }

    Int evaluate(const Assignment& env) const {
        Int total = 0;
        for (const auto& [m, c] : terms_) {
            Int v = c;
            for (const auto& [name, e] : m.factors()) {
                auto it = env.find(name);
                if (it == env.end()) throw std::out_of_range("unbound variable '" + name + "'");
                v *= pow(it->second, e);
            }
            total += v;
        }
        return total;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

using NatPoly = Polynomial<false>;
using IntPoly = Polynomial<true>;

inline IntPoly to_signed(const NatPoly& p) {
    IntPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, c);
    return r;
}

/// Canonical natural-coefficient polynomial of a term (commutative semiring laws).
inline NatPoly normalize(const Term& t) {
    switch (t.kind()) {
        case TermKind::zero: return NatPoly{};
        case TermKind::var: return NatPoly::variable(t.name());
        case TermKind::succ: return normalize(t.arg()) + NatPoly::constant(1);
        case TermKind::add: return normalize(t.lhs()) + normalize(t.rhs());
        case TermKind::mul: return normalize(t.lhs()) * normalize(t.rhs());
    }
    return NatPoly{};
}

inline unsigned degree(const NatPoly& p) { return p.degree(); }

/// True iff s = t holds for all natural assignments.
inline bool decide_identity(const Term& s, const Term& t) { return normalize(s) == normalize(t); }

/// `x^2 + 2*x*y + y^2`; `0` for the zero polynomial.
template <bool Signed>
std::string render(const Polynomial<Signed>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (const auto& [name, e] : m.factors()) {
            if (!factors.empty()) factors += "*";
            factors += name;
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += factors;
        }
    }
    return out;
}

/// A term whose normal form is p; powers are written as repeated products.
inline Term poly_to_term(const NatPoly& p) {
    if (p.is_zero()) return Term::zero();
    std::optional<Term> sum;
    for (const auto& [m, c] : p.terms()) {
        std::optional<Term> prod;
        if (c != 1 || m.is_constant()) prod = numeral(static_cast<std::size_t>(c));
        for (const auto& [name, e] : m.factors())
            for (unsigned i = 0; i < e; ++i) prod = prod ? Term::mul(*prod, Term::var(name)) : Term::var(name);
        sum = sum ? Term::add(*sum, *prod) : *prod;
    }
    return *sum;
}

namespace detail {

struct DegreeProfile {
    bool zero = true;
    std::map<std::string, unsigned> per_variable;
};

// Exact per-variable degrees read off the syntax tree. Over the naturals no
// coefficient can cancel, so max/sum rules are exact, not just bounds.
inline DegreeProfile syntactic_degrees(const Term& t) {
    switch (t.kind()) {
        case TermKind::zero: return {};
        case TermKind::var: return {false, {{t.name(), 1u}}};
        case TermKind::succ: {
            auto d = syntactic_degrees(t.arg());
            d.zero = false;
            return d;
        }
        case TermKind::add: {
            auto a = syntactic_degrees(t.lhs());
            auto b = syntactic_degrees(t.rhs());
            for (const auto& [v, e] : b.per_variable) a.per_variable[v] = std::max(a.per_variable[v], e);
            a.zero = a.zero && b.zero;
            return a;
        }
        case TermKind::mul: {
            auto a = syntactic_degrees(t.lhs());
            auto b = syntactic_degrees(t.rhs());
            if (a.zero || b.zero) return {};
            for (const auto& [v, e] : b.per_variable) a.per_variable[v] += e;
            return a;
        }
    }
    return {};
}

}  // namespace detail

/// Identity check by evaluation on a grid, without normalizing. Each variable
/// ranges over {0..d_v}, d_v its degree in s or t; a nonzero polynomial of
/// those per-variable degrees cannot vanish on the whole grid.
inline bool vandermonde_oracle(const Term& s, const Term& t) {
    auto ds = detail::syntactic_degrees(s);
    auto dt = detail::syntactic_degrees(t);
    std::map<std::string, unsigned> bound;
    for (const auto& v : free_variables(s)) bound[v] = 0;
    for (const auto& v : free_variables(t)) bound[v] = 0;
    for (const auto& [v, e] : ds.per_variable) bound[v] = std::max(bound[v], e);
    for (const auto& [v, e] : dt.per_variable) bound[v] = std::max(bound[v], e);

    std::vector<std::string> names;
    for (const auto& [v, e] : bound) names.push_back(v);
    Assignment env;
    for (const auto& v : names) env[v] = 0;

    while (true) {
        if (eval_nat(s, env) != eval_nat(t, env)) return false;
        std::size_t k = 0;
        for (; k < names.size(); ++k) {
            auto& slot = env[names[k]];
            if (slot < bound[names[k]]) {
                slot += 1;
                break;
            }
            slot = 0;
        }
        if (k == names.size()) return true;
    }
}

/// f with `var` replaced by `var + shift`.
inline IntPoly shift_variable(const IntPoly& f, const std::string& var, const Int& shift) {
    IntPoly r;
    for (const auto& [m, c] : f.terms()) {
        unsigned e = m.exponent(var);
        Monomial rest = m.without(var);
        for (unsigned i = 0; i <= e; ++i)
            r.add_term(rest * Monomial::variable(var, i), c * binomial(e, i) * pow(shift, e - i));
    }
    return r;
}

/// g(t) = f(t + 1) - f(t).
inline IntPoly finite_difference(const IntPoly& f, const std::string& var = "t") {
    return shift_variable(f, var, 1) - f;
}

}  // namespace weakind
