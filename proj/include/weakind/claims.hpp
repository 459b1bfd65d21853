#pragma once

#include <functional>
#include <string>
#include <vector>

#include "induction_lab.hpp"

namespace weakind {

/// A reproducible countermodel fact: `observe(probe_bound)` recomputes the
/// outcome, which must equal `expected` exactly.
struct ClaimRecord {
    std::string id;
    ModelId model;
    std::string formula;
    std::string env;
    std::string expected;
    std::string locator;  ///< short description of what the claim establishes
    std::function<std::string(std::size_t)> observe;
};

struct ClaimResult {
    std::string id;
    ModelId model;
    std::string formula;
    std::string env;
    std::string expected;
    std::string observed;
    bool matched = false;
};

namespace detail {

inline std::string q_summary(ModelId id, std::size_t bound) {
    Model m = model_ops(id);
    auto probes = q_probes(m, bound);
    QReport rep = check_q_axioms(m, probes);
    std::string out = status_name(rep.overall());
    for (const auto& a : rep.axioms)
        if (a.status == CheckStatus::fail) out += " " + a.name + render_tuple(a.witness);
    return out;
}

inline std::string induction_summary(ModelId id, const std::string& literal, const std::string& var, const Env& env,
                                     std::size_t bound) {
    Model m = model_ops(id);
    auto probes = basic_probes(m, bound);
    auto inst = make_induction_instance(parse_literal(literal), var);
    return check_induction(m, inst, env, probes).summary();
}

inline std::string prop_summary(ModelId id, std::vector<int> items, std::size_t bound) {
    Model m = model_ops(id);
    auto probes = basic_probes(m, bound);
    std::string out;
    for (int item : items) {
        auto r = check_consequence(m, item, probes);
        if (!out.empty()) out += "; ";
        out += std::to_string(item) + ":" + (r.holds ? "holds" : "fails " + render_tuple(r.witness));
    }
    return out;
}

// In Z[X]+ no y satisfies y^r <= X < (y+1)^r: constants stay below X, and
// every nonconstant y already has y^r above X.
inline std::string root_gap_summary(unsigned r, std::size_t bound) {
    Model m = model_ops(ModelId::zx_plus);
    const ModelElem x = UniPoly{0, 1};
    auto power = [&](ModelElem y) {
        ModelElem acc = m.one();
        for (unsigned i = 0; i < r; ++i) acc = m.mul(acc, y);
        return acc;
    };
    for (const auto& y : q_probes(m, bound)) {
        const auto& p = std::get<UniPoly>(y);
        bool ok = p.degree() == 0 ? !m.leq(x, power(m.succ(y))) : !m.leq(power(y), x);
        if (!ok) return "gap-fails at " + render(y);
    }
    return "no integer root";
}

inline std::string positivity_summary(const std::string& text) {
    return is_positive(parse_formal_sum(text)) ? "positive" : "not positive";
}

}  // namespace detail

/// The fixed registry of countermodel facts the models are built to exhibit.
inline std::vector<ClaimRecord> default_claims() {
    std::vector<ClaimRecord> c;
    const Env none;
    const Env p_omega0{{"p", omega(0)}};
    const Env p_x{{"p", UniPoly{0, 1}}};

    c.push_back({"one-point-q", ModelId::one_point, "Q1-Q8", "{}", "pass", "one-point model satisfies Q",
                 [](std::size_t b) { return detail::q_summary(ModelId::one_point, b); }});
    c.push_back({"one-point-succ-fixpoint", ModelId::one_point, "S(x) != x", "{}", "conclusion-fails-at omega:0",
                 "one-point model falsifies Sx != x",
                 [none](std::size_t b) { return detail::induction_summary(ModelId::one_point, "S(x) != x", "x", none, b); }});
    c.push_back({"one-point-cancellation", ModelId::one_point, "x + y = x + z -> y = z", "{}",
                 "6:fails (omega:0, nat:0, nat:1)", "one-point model falsifies additive cancellation",
                 [](std::size_t b) { return detail::prop_summary(ModelId::one_point, {6}, b); }});
    c.push_back({"max-merge-ring-identities", ModelId::max_merge, "items 1-5", "{}",
                 "1:holds; 2:holds; 3:holds; 4:holds; 5:holds", "max-merge model is a commutative semiring",
                 [](std::size_t b) { return detail::prop_summary(ModelId::max_merge, {1, 2, 3, 4, 5}, b); }});
    c.push_back({"max-merge-q", ModelId::max_merge, "Q1-Q8", "{}", "pass", "max-merge model satisfies Q",
                 [](std::size_t b) { return detail::q_summary(ModelId::max_merge, b); }});
    c.push_back({"max-merge-eq-induction", ModelId::max_merge, "x + p = p", "{p: omega:0}",
                 "conclusion-fails-at omega:1", "max-merge model refutes induction for equations",
                 [p_omega0](std::size_t b) {
                     return detail::induction_summary(ModelId::max_merge, "x + p = p", "x", p_omega0, b);
                 }});
    c.push_back({"zx-plus-square-leq", ModelId::zx_plus, "x*x <= p", "{p: poly:[1,0]}", "conclusion-fails-at poly:[1,0]",
                 "Z[X]+ refutes induction for <= with r = 2",
                 [p_x](std::size_t b) { return detail::induction_summary(ModelId::zx_plus, "x*x <= p", "x", p_x, b); }});
    c.push_back({"zx-plus-cube-leq", ModelId::zx_plus, "x*x*x <= p", "{p: poly:[1,0]}",
                 "conclusion-fails-at poly:[1,0]", "Z[X]+ refutes induction for <= with r = 3",
                 [p_x](std::size_t b) { return detail::induction_summary(ModelId::zx_plus, "x*x*x <= p", "x", p_x, b); }});
    c.push_back({"zx-plus-square-root-gap", ModelId::zx_plus, "y^2 <= X < (y+1)^2", "{}", "no integer root",
                 "Z[X]+ has no integer square root of X",
                 [](std::size_t b) { return detail::root_gap_summary(2, b); }});
    c.push_back({"zx-plus-cube-root-gap", ModelId::zx_plus, "y^3 <= X < (y+1)^3", "{}", "no integer root",
                 "Z[X]+ has no integer cube root of X", [](std::size_t b) { return detail::root_gap_summary(3, b); }});
    c.push_back({"left-absorb-commutativity", ModelId::left_absorb, "x + y = y + x; x*y = y*x", "{}",
                 "1:fails (omega:0, omega:1); 3:fails (omega:0, omega:1)",
                 "left-absorbing model breaks both commutativity laws",
                 [](std::size_t b) { return detail::prop_summary(ModelId::left_absorb, {1, 3}, b); }});
    c.push_back({"left-absorb-succ-fixpoint", ModelId::left_absorb, "S(x) != x", "{}", "conclusion-fails-at omega:0",
                 "left-absorbing model falsifies Sx != x",
                 [none](std::size_t b) {
                     return detail::induction_summary(ModelId::left_absorb, "S(x) != x", "x", none, b);
                 }});
    c.push_back({"left-absorb-nleq-induction", ModelId::left_absorb, "p !<= x", "{p: omega:0}",
                 "conclusion-fails-at omega:0", "left-absorbing model refutes induction for negated <=",
                 [p_omega0](std::size_t b) {
                     return detail::induction_summary(ModelId::left_absorb, "p !<= x", "x", p_omega0, b);
                 }});
    for (const auto& [text, verdict] : std::vector<std::pair<std::string, std::string>>{
             {"-X + X^2", "positive"}, {"-X^2 + X + 2X^2", "positive"}, {"X - X^2", "not positive"}}) {
        c.push_back({"formal-sum-positivity " + text, ModelId::formal_sums, text, "{}", verdict,
                     "worked positivity example",
                     [text = text](std::size_t) { return detail::positivity_summary(text); }});
    }
    return c;
}

inline std::vector<ClaimResult> run_claim_registry(const std::vector<ClaimRecord>& claims, std::size_t probe_bound = 12) {
    std::vector<ClaimResult> out;
    for (const auto& c : claims) {
        std::string observed;
        try {
            observed = c.observe(probe_bound);
        } catch (const std::exception& e) {
            observed = std::string("error: ") + e.what();
        }
        out.push_back({c.id, c.model, c.formula, c.env, c.expected, observed, observed == c.expected});
    }
    return out;
}

inline std::size_t mismatches(const std::vector<ClaimResult>& results) {
    std::size_t n = 0;
    for (const auto& r : results) n += !r.matched;
    return n;
}

}  // namespace weakind
