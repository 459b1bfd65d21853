#pragma once

#include <limits>
#include <string>

#include <json.hpp>

#include "claims.hpp"
#include "decider.hpp"
#include "puiseux.hpp"
#include "search.hpp"

namespace weakind::json_io {

using nlohmann::json;

/// Numbers that fit in 64 bits stay JSON numbers; larger ones become strings.
inline json integer(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Int parse_integer(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline json decision(const Decision& d) {
    json w = nullptr;
    if (auto a = std::get_if<Assignment>(&d.witness)) {
        json assignment = json::object();
        for (const auto& [k, v] : *a) assignment[k] = integer(v);
        w = {{"kind", "nat"}, {"assignment", assignment}};
    } else if (std::holds_alternative<AllOmega>(d.witness)) {
        w = {{"kind", "all-omega"}};
    }
    return {{"status", d.verdict == Verdict::sat ? "sat" : "unsat"}, {"case", case_name(d.case_tag)}, {"witness", w}};
}

/// Array of [coeff, exp] pairs in sequence order.
inline json formal_sum(const FormalSum& s) {
    json out = json::array();
    for (const auto& t : s.terms()) out.push_back(json::array({integer(t.coeff), t.exponent}));
    return out;
}

inline FormalSum parse_formal_sum_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("formal sum JSON must be an array of [coeff, exp] pairs");
    std::vector<SumTerm> terms;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[1].is_number_unsigned())
            throw std::invalid_argument("bad formal sum pair " + p.dump());
        terms.push_back(SumTerm{parse_integer(p[0]), p[1].get<std::uint32_t>()});
    }
    return FormalSum(std::move(terms));
}

inline json primes(const std::vector<Int>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(integer(p));
    return out;
}

inline std::vector<Int> parse_primes(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("\"primes\" must be an array");
    std::vector<Int> out;
    for (const auto& p : j) out.push_back(parse_integer(p));
    return out;
}

/// {"primes":[2,3],"terms":[["3/2","1/2"],...]}, terms in descending exponent.
inline json puiseux(const PuiseuxPoly& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(json::array({to_string(it->second), to_string(it->first)}));
    return {{"primes", primes(p.primes())}, {"terms", terms}};
}

namespace detail {

inline std::vector<std::pair<Rational, Rational>> parse_terms(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("\"terms\" must be an array");
    std::vector<std::pair<Rational, Rational>> out;  // (coeff, exp)
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw std::invalid_argument("bad term " + t.dump());
        auto field = [](const json& v) {
            if (v.is_string()) return parse_rational(v.get<std::string>());
            return Rational(parse_integer(v));
        };
        out.emplace_back(field(t[0]), field(t[1]));
    }
    return out;
}

}  // namespace detail

inline PuiseuxPoly parse_puiseux(const json& j) {
    return PuiseuxPoly(parse_primes(j.at("primes")), detail::parse_terms(j.at("terms")));
}

/// Same shape as the element form plus an optional "terminates" flag; terms
/// are listed in descending exponent and may have negative exponents.
inline std::pair<TruncatedRoot, std::vector<Int>> parse_truncated_root(const json& j) {
    TruncatedRoot r;
    for (const auto& [c, e] : detail::parse_terms(j.at("terms"))) r.terms.emplace_back(e, c);
    r.terminates = j.value("terminates", false);
    r.validate();
    return {r, parse_primes(j.at("primes"))};
}

inline json env(const Env& e) {
    json out = json::object();
    for (const auto& [k, v] : e) out[k] = render(v);
    return out;
}

inline json tuple(const std::vector<ModelElem>& w) {
    json out = json::array();
    for (const auto& e : w) out.push_back(render(e));
    return out;
}

inline json outcome(const InductionOutcome& o) {
    return {{"outcome", outcome_name(o.kind)}, {"witness", o.at ? json(render(*o.at)) : json(nullptr)}, {"env", env(o.env)}};
}

inline json q_report(const QReport& r) {
    json axioms = json::array();
    for (const auto& a : r.axioms) {
        json rec = {{"axiom", a.name},      {"statement", a.statement}, {"status", status_name(a.status)},
                    {"checked", a.checked}, {"inconclusive", a.inconclusive}};
        rec["witness"] = a.witness.empty() ? json(nullptr) : tuple(a.witness);
        axioms.push_back(rec);
    }
    return {{"model", model_name(r.model)}, {"probes", r.probe_count}, {"status", status_name(r.overall())},
            {"axioms", axioms}};
}

inline json claim(const ClaimResult& r) {
    return {{"claim", r.id},        {"model", model_name(r.model)}, {"formula", r.formula},
            {"env", r.env},         {"expected", r.expected},       {"outcome", r.observed},
            {"matched", r.matched}};
}

inline json finding(ModelId m, const Finding& f) {
    json rec = {{"kind", "finding"},
                {"model", model_name(m)},
                {"formula", render(f.literal)},
                {"var", "x"},
                {"trial", f.trial},
                {"seed", f.trial_seed}};
    json o = outcome(f.outcome);
    rec["env"] = o["env"];
    rec["outcome"] = o["outcome"];
    rec["witness"] = o["witness"];
    return rec;
}

inline json search_summary(const SearchReport& r, std::uint64_t seed) {
    return {{"kind", "summary"},
            {"model", model_name(r.model)},
            {"shape", relation_symbol(r.shape)},
            {"seed", seed},
            {"trials", r.trials},
            {"skipped", r.skipped},
            {"step_failures", r.step_failures},
            {"findings", r.findings.size()}};
}

}  // namespace weakind::json_io
