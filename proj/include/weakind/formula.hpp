#pragma once

#include <set>
#include <string>
#include <vector>

#include "term.hpp"

namespace weakind {

enum class Relation { eq, neq, leq, nleq };

inline const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::eq: return "=";
        case Relation::neq: return "!=";
        case Relation::leq: return "<=";
        case Relation::nleq: return "!<=";
    }
    return "?";
}

/// Atomic formula or its negation.
struct Literal {
    Relation rel = Relation::eq;
    Term lhs;
    Term rhs;

    friend bool operator==(const Literal&, const Literal&) = default;
};

inline std::set<std::string> free_variables(const Literal& l) {
    auto vars = free_variables(l.lhs);
    collect_variables(l.rhs, vars);
    return vars;
}

inline std::string render(const Literal& l) {
    return render(l.lhs) + " " + relation_symbol(l.rel) + " " + render(l.rhs);
}

/// `term ('=' | '!=' | '<=' | '!<=') term`
inline Literal parse_literal(std::string_view text) {
    detail::TermParser p(text);
    Literal lit;
    lit.lhs = p.parse_sum();
    p.skip_ws();
    auto rest = p.rest();
    if (rest.starts_with("!<=")) {
        lit.rel = Relation::nleq;
        p.advance(3);
    } else if (rest.starts_with("!=")) {
        lit.rel = Relation::neq;
        p.advance(2);
    } else if (rest.starts_with("<=")) {
        lit.rel = Relation::leq;
        p.advance(2);
    } else if (rest.starts_with("=")) {
        lit.rel = Relation::eq;
        p.advance(1);
    } else if (rest.empty()) {
        p.fail("expected relation but reached end of input");
    } else {
        p.fail("expected relation");
    }
    lit.rhs = p.parse_sum();
    if (!p.at_end()) p.fail(std::string("unexpected character '") + p.peek() + "'");
    return lit;
}

inline Literal substitute(const Literal& l, const std::string& var, const Term& by) {
    return Literal{l.rel, substitute(l.lhs, var, by), substitute(l.rhs, var, by)};
}

// ---------------------------------------------------------------------------
// Formula layer: just enough structure for the Shepherdson scheme and for
// reporting induction instances.

struct Formula {
    enum class Kind { atom, disjunction, implication, forall };

    Kind kind = Kind::atom;
    Literal atom;
    std::vector<Formula> parts;
    std::string bound;

    static Formula literal(Literal l) { return Formula{Kind::atom, std::move(l), {}, {}}; }
    static Formula disjunction(std::vector<Formula> ds) { return Formula{Kind::disjunction, {}, std::move(ds), {}}; }
    static Formula implies(Formula a, Formula b) { return Formula{Kind::implication, {}, {std::move(a), std::move(b)}, {}}; }
    static Formula forall(std::string var, Formula body) { return Formula{Kind::forall, {}, {std::move(body)}, std::move(var)}; }

    friend bool operator==(const Formula&, const Formula&) = default;
};

inline std::string render(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::atom: return render(f.atom);
        case Formula::Kind::disjunction: {
            std::string out;
            for (std::size_t i = 0; i < f.parts.size(); ++i) {
                if (i) out += " | ";
                out += render(f.parts[i]);
            }
            return f.parts.size() > 1 ? "(" + out + ")" : out;
        }
        case Formula::Kind::implication: return render(f.parts[0]) + " -> " + render(f.parts[1]);
        case Formula::Kind::forall: return "forall " + f.bound + " " + render(f.parts[0]);
    }
    return {};
}

/// Induction instance for a literal: phi(0) & forall x (phi(x) -> phi(Sx)) -> forall x phi(x).
struct InductionInstance {
    Literal formula;
    std::string induction_var;
    std::vector<std::string> parameters;

    /// The induction variable does not occur (constant induction).
    bool degenerate() const { return !free_variables(formula).contains(induction_var); }

    Formula as_formula() const {
        Literal base = substitute(formula, induction_var, Term::zero());
        Literal step_to = substitute(formula, induction_var, Term::succ(Term::var(induction_var)));
        Formula step = Formula::forall(induction_var,
                                       Formula::implies(Formula::literal(formula), Formula::literal(step_to)));
        // curried: base -> (step -> conclusion)
        return Formula::implies(Formula::literal(base),
                                Formula::implies(step, Formula::forall(induction_var, Formula::literal(formula))));
    }
};

inline InductionInstance make_induction_instance(Literal formula, std::string var) {
    if (!Term::is_identifier(var)) throw std::invalid_argument("invalid induction variable '" + var + "'");
    InductionInstance inst{std::move(formula), std::move(var), {}};
    for (const auto& v : free_variables(inst.formula))
        if (v != inst.induction_var) inst.parameters.push_back(v);
    return inst;
}

// ---------------------------------------------------------------------------
// Schematic formulas

/// Auxiliary formulas phi(x, y, z, t) used to derive the semiring laws from
/// disequation induction plus additive commutativity.
enum class GadgetKind { add_assoc, right_distr, left_distr, mul_comm, mul_assoc };

inline Literal gadget_formula(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::add_assoc:
            return parse_literal("(x + (y + z)) + ((x + y) + t) != ((x + y) + z) + (x + (y + t))");
        case GadgetKind::right_distr:
            return parse_literal("x*(y + z) + x*y + x*t != x*y + x*z + x*(y + t)");
        case GadgetKind::left_distr:
            // Deliberately not the mirror image of right_distr.
            return parse_literal("(x + y)*z + x*z + y*t != x*y + y*z + (x + y)*t");
        case GadgetKind::mul_comm:
            return parse_literal("x*y + y*t != y*x + t*y");
        case GadgetKind::mul_assoc:
            return parse_literal("x*(y*z) + (x*y)*t != (x*y)*z + x*(y*t)");
    }
    throw std::invalid_argument("unknown gadget kind");
}

/// d*x = d*xp -> forall y OR_{i<d} ((y + i)*x = (y + i)*xp), with d >= 2.
/// The primed variable is spelled `xp`.
inline Formula shepherdson_scheme(std::size_t d) {
    if (d < 2) throw std::invalid_argument("shepherdson_scheme requires d >= 2, got " + std::to_string(d));
    const Term x = Term::var("x");
    const Term xp = Term::var("xp");
    const Term y = Term::var("y");
    Literal premise{Relation::eq, Term::mul(numeral(d), x), Term::mul(numeral(d), xp)};
    std::vector<Formula> disjuncts;
    for (std::size_t i = 0; i < d; ++i) {
        Term factor = i == 0 ? y : Term::add(y, numeral(i));
        disjuncts.push_back(Formula::literal(Literal{Relation::eq, Term::mul(factor, x), Term::mul(factor, xp)}));
    }
    return Formula::implies(Formula::literal(premise), Formula::forall("y", Formula::disjunction(std::move(disjuncts))));
}

}  // namespace weakind
