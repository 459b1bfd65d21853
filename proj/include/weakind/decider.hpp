#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "models.hpp"
#include "polynomial.hpp"
#include "term.hpp"

namespace weakind {

enum class Verdict { sat, unsat };

/// Which degree case decided the equation.
enum class CaseTag { const_const, const_poly, poly_poly };

/// Every variable set to the absorbing point of the one-point model.
struct AllOmega {
    friend bool operator==(const AllOmega&, const AllOmega&) = default;
};

using Witness = std::variant<std::monostate, Assignment, AllOmega>;

struct Decision {
    Verdict verdict = Verdict::unsat;
    Witness witness;
    CaseTag case_tag = CaseTag::const_const;
};

inline const char* case_name(CaseTag c) {
    switch (c) {
        case CaseTag::const_const: return "const-const";
        case CaseTag::const_poly: return "const-poly";
        case CaseTag::poly_poly: return "poly-poly";
    }
    return "?";
}

namespace detail {

// Lexicographic search over {0..bound}^n for p(v) = target. p has natural
// coefficients, so it is monotone in each coordinate: once the value with
// all later coordinates at 0 exceeds the target, larger values of the
// current coordinate cannot help.
inline bool search_box(const NatPoly& p, const Int& target, const std::vector<std::string>& vars, std::size_t k,
                       Assignment& env) {
    if (k == vars.size()) return p.evaluate(env) == target;
    for (Int v = 0; v <= target; ++v) {
        env[vars[k]] = v;
        if (p.evaluate(env) > target) break;
        if (search_box(p, target, vars, k + 1, env)) return true;
    }
    env[vars[k]] = 0;
    return false;
}

}  // namespace detail

/// Decides whether s = t is solvable in some model of open induction for
/// equations. Constant sides compare directly; a constant c against a
/// nonconstant polynomial has a solution iff one exists in {0..c}^n; two
/// nonconstant sides are always solved by setting every variable to omega.
inline Decision decide(const Term& s, const Term& t) {
    NatPoly ps = normalize(s);
    NatPoly pt = normalize(t);
    Assignment all_zero;
    for (const auto& v : free_variables(s)) all_zero[v] = 0;
    for (const auto& v : free_variables(t)) all_zero[v] = 0;

    bool s_const = ps.degree() == 0;
    bool t_const = pt.degree() == 0;
    if (s_const && t_const) {
        if (ps == pt) return {Verdict::sat, all_zero, CaseTag::const_const};
        return {Verdict::unsat, std::monostate{}, CaseTag::const_const};
    }
    if (!s_const && !t_const) return {Verdict::sat, AllOmega{}, CaseTag::poly_poly};

    const NatPoly& p = s_const ? pt : ps;
    Int c = s_const ? ps.constant_term() : pt.constant_term();
    auto vs = p.variables();
    std::vector<std::string> vars(vs.begin(), vs.end());
    Assignment env;
    for (const auto& v : vars) env[v] = 0;
    if (detail::search_box(p, c, vars, 0, env)) {
        Assignment witness = all_zero;
        for (const auto& [k, v] : env) witness[k] = v;
        return {Verdict::sat, witness, CaseTag::const_poly};
    }
    return {Verdict::unsat, std::monostate{}, CaseTag::const_poly};
}

/// Checks a SAT decision's witness by direct evaluation: natural witnesses
/// in N, all-omega witnesses in the one-point model.
inline bool verify_witness(const Term& s, const Term& t, const Decision& d) {
    if (d.verdict != Verdict::sat || std::holds_alternative<std::monostate>(d.witness))
        throw std::invalid_argument("verify_witness: decision carries no witness");
    if (auto a = std::get_if<Assignment>(&d.witness)) {
        try {
            return eval_nat(s, *a) == eval_nat(t, *a);
        } catch (const std::out_of_range&) {
            return false;
        }
    }
    const Model m = model_ops(ModelId::one_point);
    Env env;
    for (const auto& v : free_variables(s)) env[v] = omega(0);
    for (const auto& v : free_variables(t)) env[v] = omega(0);
    return m.eq(eval_term(m, s, env), eval_term(m, t, env));
}

}  // namespace weakind
