#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace weakind {

enum class TermKind { zero, var, succ, add, mul };

/// Immutable arithmetic term over {0, S, +, *} and variables.
/// Subterms are shared; copying a Term is cheap.
class Term {
public:
    Term() : node_(zero_node()) {}

    static Term zero() { return Term(); }

    static Term var(std::string name) {
        if (!is_identifier(name))
            throw std::invalid_argument("invalid variable name '" + name + "'");
        return Term(std::make_shared<const Node>(Node{TermKind::var, std::move(name), {}}));
    }

    static Term succ(Term arg) {
        return Term(std::make_shared<const Node>(Node{TermKind::succ, {}, {std::move(arg)}}));
    }

    static Term add(Term lhs, Term rhs) {
        return Term(std::make_shared<const Node>(Node{TermKind::add, {}, {std::move(lhs), std::move(rhs)}}));
    }

    static Term mul(Term lhs, Term rhs) {
        return Term(std::make_shared<const Node>(Node{TermKind::mul, {}, {std::move(lhs), std::move(rhs)}}));
    }

    TermKind kind() const { return node_->kind; }
    const std::string& name() const { return node_->name; }
    const Term& arg() const { return node_->kids.at(0); }
    const Term& lhs() const { return node_->kids.at(0); }
    const Term& rhs() const { return node_->kids.at(1); }

    friend bool operator==(const Term& a, const Term& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
            case TermKind::zero: return true;
            case TermKind::var: return a.name() == b.name();
            case TermKind::succ: return a.arg() == b.arg();
            default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
        }
    }

    /// `[a-z][a-z0-9_]*`
    static bool is_identifier(std::string_view s) {
        if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
        for (char c : s)
            if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
        return true;
    }

private:
    struct Node {
        TermKind kind;
        std::string name;
        std::vector<Term> kids;
    };

    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static const std::shared_ptr<const Node>& zero_node() {
        static const auto z = std::make_shared<const Node>(Node{TermKind::zero, {}, {}});
        return z;
    }

    std::shared_ptr<const Node> node_;
};

/// S^n(0)
inline Term numeral(std::size_t n) {
    Term t = Term::zero();
    for (std::size_t i = 0; i < n; ++i) t = Term::succ(t);
    return t;
}

/// Value of t if it is a closed numeral S^n(0).
inline std::optional<std::size_t> numeral_value(const Term& t) {
    std::size_t n = 0;
    const Term* cur = &t;
    while (cur->kind() == TermKind::succ) {
        ++n;
        cur = &cur->arg();
    }
    if (cur->kind() != TermKind::zero) return std::nullopt;
    return n;
}

inline void collect_variables(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
        case TermKind::zero: return;
        case TermKind::var: out.insert(t.name()); return;
        case TermKind::succ: collect_variables(t.arg(), out); return;
        default:
            collect_variables(t.lhs(), out);
            collect_variables(t.rhs(), out);
    }
}

inline std::set<std::string> free_variables(const Term& t) {
    std::set<std::string> out;
    collect_variables(t, out);
    return out;
}

inline std::size_t depth(const Term& t) {
    switch (t.kind()) {
        case TermKind::zero:
        case TermKind::var: return 0;
        case TermKind::succ: return 1 + depth(t.arg());
        default: return 1 + std::max(depth(t.lhs()), depth(t.rhs()));
    }
}

inline Term substitute(const Term& t, const std::string& var, const Term& by) {
    switch (t.kind()) {
        case TermKind::zero: return t;
        case TermKind::var: return t.name() == var ? by : t;
        case TermKind::succ: return Term::succ(substitute(t.arg(), var, by));
        case TermKind::add: return Term::add(substitute(t.lhs(), var, by), substitute(t.rhs(), var, by));
        case TermKind::mul: return Term::mul(substitute(t.lhs(), var, by), substitute(t.rhs(), var, by));
    }
    return t;
}

/// Standard interpretation in the natural numbers.
inline Int eval_nat(const Term& t, const Assignment& env) {
    switch (t.kind()) {
        case TermKind::zero: return 0;
        case TermKind::var: {
            auto it = env.find(t.name());
            if (it == env.end()) throw std::out_of_range("unbound variable '" + t.name() + "'");
            return it->second;
        }
        case TermKind::succ: return eval_nat(t.arg(), env) + 1;
        case TermKind::add: return eval_nat(t.lhs(), env) + eval_nat(t.rhs(), env);
        case TermKind::mul: return eval_nat(t.lhs(), env) * eval_nat(t.rhs(), env);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Text form

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Numerals above this are rejected; they desugar into that many nodes.
inline constexpr std::size_t max_numeral = 10000;

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    Term parse_sum() {
        Term t = parse_prod();
        while (peek() == '+') {
            ++pos_;
            t = Term::add(t, parse_prod());
        }
        return t;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool at_end() { return peek() == '\0'; }
    std::size_t position() const { return pos_; }
    std::string_view rest() const { return text_.substr(pos_); }
    void advance(std::size_t n) { pos_ += n; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    Term parse_prod() {
        Term t = parse_atom();
        while (peek() == '*') {
            ++pos_;
            t = Term::mul(t, parse_atom());
        }
        return t;
    }

    Term parse_atom() {
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                n = n * 10 + static_cast<std::size_t>(text_[pos_] - '0');
                if (n > max_numeral) throw ParseError("numeral too large", start);
                ++pos_;
            }
            return numeral(n);
        }
        if (c == 'S') {
            ++pos_;
            expect('(');
            Term inner = parse_sum();
            expect(')');
            return Term::succ(inner);
        }
        if (c == '(') {
            ++pos_;
            Term inner = parse_sum();
            expect(')');
            return inner;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                    std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return Term::var(std::string(text_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    void expect(char c) {
        if (peek() != c) {
            if (at_end()) fail(std::string("expected '") + c + "' but reached end of input");
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

enum class Context { sum, product, atom };

inline void render_into(const Term& t, Context ctx, std::string& out) {
    switch (t.kind()) {
        case TermKind::zero: out += '0'; return;
        case TermKind::var: out += t.name(); return;
        case TermKind::succ:
            out += "S(";
            render_into(t.arg(), Context::sum, out);
            out += ')';
            return;
        case TermKind::add: {
            bool parens = ctx != Context::sum;
            if (parens) out += '(';
            render_into(t.lhs(), Context::sum, out);
            out += " + ";
            render_into(t.rhs(), Context::product, out);
            if (parens) out += ')';
            return;
        }
        case TermKind::mul: {
            bool parens = ctx == Context::atom;
            if (parens) out += '(';
            render_into(t.lhs(), Context::product, out);
            out += '*';
            render_into(t.rhs(), Context::atom, out);
            if (parens) out += ')';
            return;
        }
    }
}

}  // namespace detail

/// Grammar: sum := prod ('+' prod)* ; prod := atom ('*' atom)* ;
/// atom := numeral | ident | 'S' '(' sum ')' | '(' sum ')'.
inline Term parse_term(std::string_view text) {
    detail::TermParser p(text);
    Term t = p.parse_sum();
    if (!p.at_end()) p.fail(std::string("unexpected character '") + p.peek() + "'");
    return t;
}

/// Minimal parenthesization; parse_term(render(t)) == t.
inline std::string render(const Term& t) {
    std::string out;
    detail::render_into(t, detail::Context::sum, out);
    return out;
}

// ---------------------------------------------------------------------------
// Random generation

/// Numeral leaves count as atoms, so depth() may exceed max_depth by max_numeral.
struct TermGenConfig {
    std::size_t max_depth = 4;
    std::vector<std::string> variables = {"x", "y"};
    std::size_t max_numeral = 3;
};

inline Term random_term(Rng& rng, const TermGenConfig& cfg, std::size_t depth_left) {
    if (depth_left == 0 || rng.chance(1, 4)) {
        if (!cfg.variables.empty() && rng.chance(2, 3)) return Term::var(cfg.variables[rng.index(cfg.variables.size())]);
        return numeral(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cfg.max_numeral))));
    }
    switch (rng.uniform(0, 4)) {
        case 0: return Term::succ(random_term(rng, cfg, depth_left - 1));
        case 1:
        case 2: return Term::add(random_term(rng, cfg, depth_left - 1), random_term(rng, cfg, depth_left - 1));
        default: return Term::mul(random_term(rng, cfg, depth_left - 1), random_term(rng, cfg, depth_left - 1));
    }
}

inline Term random_term(Rng& rng, const TermGenConfig& cfg) { return random_term(rng, cfg, cfg.max_depth); }

}  // namespace weakind
