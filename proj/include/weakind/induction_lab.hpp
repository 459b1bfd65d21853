#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "formula.hpp"
#include "models.hpp"

namespace weakind {

// ---------------------------------------------------------------------------
// Probe sets

/// Naturals 0..bound (embedded in m) followed by m's nonstandard points.
inline std::vector<ModelElem> basic_probes(const Model& m, std::size_t bound) {
    std::vector<ModelElem> out;
    for (std::size_t n = 0; n <= bound; ++n) out.push_back(m.numeral(n));
    for (const auto& e : m.nonstandard()) out.push_back(e);
    return out;
}

/// Random nonnegative formal sums in NF, at most `max_len` summands.
inline std::vector<ModelElem> random_formal_sum_probes(std::size_t count, std::size_t max_len, std::uint64_t seed,
                                                       std::uint32_t max_exponent = 3) {
    Rng rng(seed);
    std::vector<ModelElem> out;
    while (out.size() < count) {
        std::vector<SumTerm> terms;
        auto len = rng.uniform(1, static_cast<std::int64_t>(max_len));
        for (std::int64_t i = 0; i < len; ++i)
            terms.push_back(SumTerm{Int(rng.uniform(-3, 3)), static_cast<std::uint32_t>(rng.uniform(0, max_exponent))});
        FormalSum s = normal_form(FormalSum(std::move(terms)));
        if (s.empty() || s.size() > max_len || !is_nonnegative(s)) continue;
        ModelElem e = s;
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    return out;
}

/// Polynomials of degree <= 2 with coefficients in -3..3 that lie in Z[X]+.
inline std::vector<ModelElem> zx_probe_polys() {
    std::vector<ModelElem> out;
    for (int a2 = -3; a2 <= 3; ++a2)
        for (int a1 = -3; a1 <= 3; ++a1)
            for (int a0 = -3; a0 <= 3; ++a0) {
                UniPoly p{a0, a1, a2};
                if (p.degree() == 0) continue;  // constants come from the natural range
                if (detail::zx_member(p)) out.push_back(p);
            }
    return out;
}

/// Default probe set for the Q-axiom suite.
inline std::vector<ModelElem> q_probes(const Model& m, std::size_t bound) {
    auto out = basic_probes(m, bound);
    if (m.id() == ModelId::zx_plus) {
        for (auto& p : zx_probe_polys())
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    } else if (m.id() == ModelId::formal_sums) {
        for (auto& p : random_formal_sum_probes(40, 5, 0x5eed))
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Literal evaluation and induction instances

inline bool holds(const Model& m, const Literal& lit, const Env& env) {
    ModelElem a = eval_term(m, lit.lhs, env);
    ModelElem b = eval_term(m, lit.rhs, env);
    switch (lit.rel) {
        case Relation::eq: return m.eq(a, b);
        case Relation::neq: return !m.eq(a, b);
        case Relation::leq: return m.leq(a, b);
        case Relation::nleq: return !m.leq(a, b);
    }
    return false;
}

enum class OutcomeKind { base_fails, step_fails_at, conclusion_fails_at, consistent_on_probes };

inline const char* outcome_name(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::base_fails: return "base-fails";
        case OutcomeKind::step_fails_at: return "step-fails-at";
        case OutcomeKind::conclusion_fails_at: return "conclusion-fails-at";
        case OutcomeKind::consistent_on_probes: return "consistent-on-probes";
    }
    return "?";
}

struct InductionOutcome {
    OutcomeKind kind = OutcomeKind::consistent_on_probes;
    std::optional<ModelElem> at;
    Env env;

    /// e.g. `conclusion-fails-at omega:1`
    std::string summary() const { return std::string(outcome_name(kind)) + (at ? " " + render(*at) : ""); }
};

/// Checks base, then step at every probe, then the conclusion at every
/// probe, reporting the first failure. The step is only certified on the
/// probes, so ConclusionFailsAt is a falsification at probe scale.
inline InductionOutcome check_induction(const Model& m, const InductionInstance& inst, const Env& env,
                                        std::span<const ModelElem> probes) {
    for (const auto& p : inst.parameters)
        if (!env.contains(p)) throw std::out_of_range("unbound parameter '" + p + "'");
    auto at = [&](const ModelElem& v) {
        Env e = env;
        e[inst.induction_var] = v;
        return holds(m, inst.formula, e);
    };
    if (!at(m.zero())) return {OutcomeKind::base_fails, std::nullopt, env};
    for (const auto& p : probes)
        if (at(p) && !at(m.succ(p))) return {OutcomeKind::step_fails_at, p, env};
    for (const auto& p : probes)
        if (!at(p)) return {OutcomeKind::conclusion_fails_at, p, env};
    return {OutcomeKind::consistent_on_probes, std::nullopt, env};
}

// ---------------------------------------------------------------------------
// Robinson axioms

enum class CheckStatus { pass, fail, inconclusive };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct AxiomResult {
    std::string name;
    std::string statement;
    CheckStatus status = CheckStatus::pass;
    std::size_t checked = 0;
    std::size_t inconclusive = 0;
    std::vector<ModelElem> witness;  ///< first failing (or first unwitnessed) tuple
};

struct QReport {
    ModelId model;
    std::size_t probe_count = 0;
    std::array<AxiomResult, 8> axioms;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& a : axioms) n += a.status == CheckStatus::fail;
        return n;
    }

    CheckStatus overall() const {
        bool inconclusive = false;
        for (const auto& a : axioms) {
            if (a.status == CheckStatus::fail) return CheckStatus::fail;
            inconclusive = inconclusive || a.status == CheckStatus::inconclusive;
        }
        return inconclusive ? CheckStatus::inconclusive : CheckStatus::pass;
    }
};

namespace detail {

inline void record_fail(AxiomResult& r, std::vector<ModelElem> w) {
    if (r.status != CheckStatus::fail) r.witness = std::move(w);
    r.status = CheckStatus::fail;
}

inline void record_inconclusive(AxiomResult& r, std::vector<ModelElem> w) {
    ++r.inconclusive;
    if (r.status == CheckStatus::pass) {
        r.status = CheckStatus::inconclusive;
        r.witness = std::move(w);
    }
}

inline std::optional<ModelElem> find_predecessor(const Model& m, const ModelElem& x, std::span<const ModelElem> probes) {
    for (const auto& y : m.predecessor_candidates(x))
        if (m.contains(y) && m.eq(m.succ(y), x)) return y;
    for (const auto& y : probes)
        if (m.eq(m.succ(y), x)) return y;
    return std::nullopt;
}

inline std::optional<ModelElem> find_residue(const Model& m, const ModelElem& x, const ModelElem& y,
                                             std::span<const ModelElem> probes) {
    for (const auto& r : m.residue_candidates(x, y))
        if (m.contains(r) && m.eq(m.add(r, x), y)) return r;
    for (const auto& r : probes)
        if (m.eq(m.add(r, x), y)) return r;
    return std::nullopt;
}

}  // namespace detail

/// Checks Q1-Q8 pointwise over the probes. Existentials (Q3, and the right
/// side of Q8) are searched over the probes plus the model's candidate
/// constructors; a true claim without a found witness is inconclusive.
inline QReport check_q_axioms(const Model& m, std::span<const ModelElem> probes) {
    QReport rep{m.id(), probes.size(), {}};
    auto& q = rep.axioms;
    q[0].name = "Q1";
    q[0].statement = "Sx != 0";
    q[1].name = "Q2";
    q[1].statement = "Sx = Sy -> x = y";
    q[2].name = "Q3";
    q[2].statement = "x != 0 -> exists y (x = Sy)";
    q[3].name = "Q4";
    q[3].statement = "x + 0 = x";
    q[4].name = "Q5";
    q[4].statement = "x + Sy = S(x + y)";
    q[5].name = "Q6";
    q[5].statement = "x*0 = 0";
    q[6].name = "Q7";
    q[6].statement = "x*Sy = x*y + x";
    q[7].name = "Q8";
    q[7].statement = "x <= y <-> exists r (r + x = y)";
    const ModelElem zero = m.zero();

    for (const auto& x : probes) {
        ++q[0].checked;
        if (m.eq(m.succ(x), zero)) detail::record_fail(q[0], {x});

        ++q[2].checked;
        if (!m.eq(x, zero) && !detail::find_predecessor(m, x, probes)) detail::record_inconclusive(q[2], {x});

        ++q[3].checked;
        if (!m.eq(m.add(x, zero), x)) detail::record_fail(q[3], {x});

        ++q[5].checked;
        if (!m.eq(m.mul(x, zero), zero)) detail::record_fail(q[5], {x});

        for (const auto& y : probes) {
            ++q[1].checked;
            if (m.eq(m.succ(x), m.succ(y)) && !m.eq(x, y)) detail::record_fail(q[1], {x, y});

            ++q[4].checked;
            if (!m.eq(m.add(x, m.succ(y)), m.succ(m.add(x, y)))) detail::record_fail(q[4], {x, y});

            ++q[6].checked;
            if (!m.eq(m.mul(x, m.succ(y)), m.add(m.mul(x, y), x))) detail::record_fail(q[6], {x, y});

            ++q[7].checked;
            bool le = m.leq(x, y);
            auto r = detail::find_residue(m, x, y, probes);
            if (le && !r) detail::record_inconclusive(q[7], {x, y});
            if (!le && r) detail::record_fail(q[7], {x, y, *r});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Consequences of open induction, items 1..12

struct PropResult {
    int item = 0;
    std::string statement;
    bool holds = true;
    std::vector<ModelElem> witness;
    std::size_t checked = 0;
};

inline const char* consequence_statement(int item) {
    switch (item) {
        case 1: return "x + y = y + x";
        case 2: return "x + (y + z) = (x + y) + z";
        case 3: return "x*y = y*x";
        case 4: return "x*(y + z) = x*y + x*z";
        case 5: return "x*(y*z) = (x*y)*z";
        case 6: return "x + y = x + z -> y = z";
        case 7: return "x <= y | y <= x";
        case 8: return "x <= y & y <= x -> x = y";
        case 9: return "x <= y & y <= z -> x <= z";
        case 10: return "x <= y <-> x + z <= y + z";
        case 11: return "z != 0 & x*z = y*z -> x = y";
        case 12: return "z != 0 -> (x <= y <-> x*z <= y*z)";
    }
    throw std::invalid_argument("item must be in 1..12");
}

inline int consequence_arity(int item) {
    switch (item) {
        case 1:
        case 3:
        case 7:
        case 8: return 2;
        default: return 3;
    }
}

/// Evaluates the item's universal closure on all probe tuples in
/// lexicographic order and reports the first counterexample.
inline PropResult check_consequence(const Model& m, int item, std::span<const ModelElem> probes) {
    PropResult res{item, consequence_statement(item), true, {}, 0};
    const int arity = consequence_arity(item);
    const ModelElem zero = m.zero();
    auto test = [&](const ModelElem& x, const ModelElem& y, const ModelElem& z) -> bool {
        switch (item) {
            case 1: return m.eq(m.add(x, y), m.add(y, x));
            case 2: return m.eq(m.add(x, m.add(y, z)), m.add(m.add(x, y), z));
            case 3: return m.eq(m.mul(x, y), m.mul(y, x));
            case 4: return m.eq(m.mul(x, m.add(y, z)), m.add(m.mul(x, y), m.mul(x, z)));
            case 5: return m.eq(m.mul(x, m.mul(y, z)), m.mul(m.mul(x, y), z));
            case 6: return !m.eq(m.add(x, y), m.add(x, z)) || m.eq(y, z);
            case 7: return m.leq(x, y) || m.leq(y, x);
            case 8: return !(m.leq(x, y) && m.leq(y, x)) || m.eq(x, y);
            case 9: return !(m.leq(x, y) && m.leq(y, z)) || m.leq(x, z);
            case 10: return m.leq(x, y) == m.leq(m.add(x, z), m.add(y, z));
            case 11: return m.eq(z, zero) || !m.eq(m.mul(x, z), m.mul(y, z)) || m.eq(x, y);
            case 12: return m.eq(z, zero) || m.leq(x, y) == m.leq(m.mul(x, z), m.mul(y, z));
        }
        return true;
    };
    for (const auto& x : probes)
        for (const auto& y : probes) {
            if (arity == 2) {
                ++res.checked;
                if (!test(x, y, zero)) {
                    res.holds = false;
                    res.witness = {x, y};
                    return res;
                }
                continue;
            }
            for (const auto& z : probes) {
                ++res.checked;
                if (!test(x, y, z)) {
                    res.holds = false;
                    res.witness = {x, y, z};
                    return res;
                }
            }
        }
    return res;
}

inline std::string render_tuple(const std::vector<ModelElem>& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += render(w[i]);
    }
    return out + ")";
}

}  // namespace weakind
