#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bracketing.hpp"
#include "json_io.hpp"

namespace weakind::cli {

using json_io::json;

/// Error in user input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::size_t probe_bound = 12;
    std::uint64_t seed = 0;
    std::size_t budget = 1000;
    std::string output;
    std::string format = "text";

    bool json() const { return format == "json"; }
};

namespace detail {

inline Relation parse_shape(const std::string& s) {
    if (s == "eq" || s == "=") return Relation::eq;
    if (s == "neq" || s == "!=") return Relation::neq;
    if (s == "leq" || s == "<=") return Relation::leq;
    if (s == "nleq" || s == "!<=") return Relation::nleq;
    throw UsageError("unknown shape '" + s + "' (expected eq, neq, leq or nleq)");
}

inline bool has_relation(const std::string& text) { return text.find_first_of("=<") != std::string::npos; }

/// `name=element` bindings, converted into model `m`.
inline Env parse_env(const Model& m, const std::vector<std::string>& bindings) {
    Env env;
    for (const auto& b : bindings) {
        auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("binding must look like name=kind:value, got '" + b + "'");
        auto name = b.substr(0, eq);
        if (!Term::is_identifier(name)) throw UsageError("invalid variable name '" + name + "'");
        ModelElem e = parse_element(b.substr(eq + 1));
        if (auto s = std::get_if<FormalSum>(&e)) e = normal_form(*s);
        env[name] = m.coerce(e);
    }
    return env;
}

/// `1,0,-2`, highest degree first.
inline UniPoly parse_coefficients(const std::string& text) {
    std::vector<Int> hf;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        std::string t;
        for (char c : piece)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        try {
            hf.emplace_back(t);
        } catch (const std::runtime_error&) {
            throw UsageError("bad coefficient '" + piece + "'");
        }
    }
    if (hf.empty()) throw UsageError("empty coefficient list");
    return UniPoly::from_high_first(hf);
}

inline Int parse_int(const std::string& text, const char* what) {
    try {
        return Int(text);
    } catch (const std::runtime_error&) {
        throw UsageError(std::string("bad integer for ") + what + ": '" + text + "'");
    }
}

inline std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    std::string s = line.substr(0, hash);
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline json decide_record(const std::string& text) {
    Literal lit = parse_literal(text);
    if (lit.rel != Relation::eq) throw std::invalid_argument("decide expects an equation, got '" + text + "'");
    return json_io::decision(decide(lit.lhs, lit.rhs));
}

inline std::string decision_text(const Decision& d) {
    std::string out = d.verdict == Verdict::sat ? "sat" : "unsat";
    out += std::string(" (") + case_name(d.case_tag) + ")";
    if (auto a = std::get_if<Assignment>(&d.witness)) {
        out += " witness:";
        bool first = true;
        for (const auto& [k, v] : *a) {
            out += (first ? " " : ", ") + k + "=" + v.str();
            first = false;
        }
    } else if (std::holds_alternative<AllOmega>(d.witness)) {
        out += " witness: all-omega";
    }
    return out;
}

}  // namespace detail

/// Runs one command line (args exclude the program name). Returns the exit
/// code: 0 success, 1 negative verdict, 2 usage or input error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Models of weak arithmetic: deciders, countermodels and induction checks", "weakind"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--probe-bound", cfg.probe_bound, "Largest natural probe")
        ->envname("WEAKIND_PROBE_BOUND")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    app.add_option("--seed", cfg.seed, "Random seed")->envname("WEAKIND_SEED");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", cfg.output, "Write output to this file instead of stdout");

    std::ostringstream buf;
    int code = 0;

    auto* parse_cmd = app.add_subcommand("parse", "Parse a term or literal and print it back");
    std::string parse_text;
    parse_cmd->add_option("text", parse_text)->required();

    auto* normalize_cmd = app.add_subcommand("normalize", "Canonical polynomial of a term");
    std::string normalize_text;
    normalize_cmd->add_option("term", normalize_text)->required();

    auto* identity_cmd = app.add_subcommand("identity", "Is s = t an identity of the naturals?");
    std::string identity_text;
    identity_cmd->add_option("equation", identity_text)->required();

    auto* decide_cmd = app.add_subcommand("decide", "Is s = t solvable in some model of open induction?");
    std::string decide_text, corpus;
    decide_cmd->add_option("equation", decide_text);
    decide_cmd->add_option("--corpus", corpus, "File with one equation per line");

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term or literal in a model");
    std::string eval_model, eval_text;
    std::vector<std::string> eval_env;
    eval_cmd->add_option("--model", eval_model)->required();
    eval_cmd->add_option("--env", eval_env, "Binding name=kind:value; repeatable");
    eval_cmd->add_option("text", eval_text)->required();

    auto* checkq_cmd = app.add_subcommand("check-q", "Check the Robinson axioms on probes");
    std::string checkq_model;
    checkq_cmd->add_option("--model", checkq_model)->required();

    auto* checkind_cmd = app.add_subcommand("check-ind", "Check one induction instance on probes");
    std::string ind_model, ind_formula, ind_var = "x";
    std::vector<std::string> ind_env;
    checkind_cmd->add_option("--model", ind_model)->required();
    checkind_cmd->add_option("--formula", ind_formula)->required();
    checkind_cmd->add_option("--var", ind_var);
    checkind_cmd->add_option("--env", ind_env, "Binding name=kind:value; repeatable");

    auto* checkprop_cmd = app.add_subcommand("check-prop", "Check one consequence of open induction (items 1-12)");
    std::string prop_model;
    int prop_item = 0;
    checkprop_cmd->add_option("--model", prop_model)->required();
    checkprop_cmd->add_option("--item", prop_item)->required()->check(CLI::Range(1, 12));

    auto* claims_cmd = app.add_subcommand("claims", "Countermodel claim registry");
    claims_cmd->require_subcommand(1);
    auto* claims_run = claims_cmd->add_subcommand("run", "Reproduce every registered claim");

    auto* search_cmd = app.add_subcommand("search", "Random search for induction violations");
    std::string search_model, search_shape;
    search_cmd->add_option("--model", search_model)->required();
    search_cmd->add_option("--shape", search_shape)->required();
    search_cmd->add_option("--budget", cfg.budget)->check(CLI::NonNegativeNumber);

    auto* bracket_cmd = app.add_subcommand("bracket", "Locate a sign change of f at fractions m/q");
    std::string coeffs, q_text = "1", a_text, b_text, lo_text, hi_text;
    bool changes = false;
    bracket_cmd->add_option("coeffs", coeffs, "Coefficients, highest degree first, e.g. 1,0,-2")->required();
    bracket_cmd->add_option("--q", q_text);
    bracket_cmd->add_option("--a", a_text);
    bracket_cmd->add_option("--b", b_text);
    bracket_cmd->add_flag("--changes", changes, "List every strict sign change in [--lo, --hi]");
    bracket_cmd->add_option("--lo", lo_text);
    bracket_cmd->add_option("--hi", hi_text);

    auto* nf_cmd = app.add_subcommand("nf", "Normal form of a formal sum");
    std::string nf_text;
    nf_cmd->add_option("sum", nf_text, "Text form (2X^3 - X + 4) or JSON pair array")->required();

    auto* puiseux_cmd = app.add_subcommand("puiseux", "Fractional-exponent polynomials");
    puiseux_cmd->require_subcommand(1);
    auto* ip_cmd = puiseux_cmd->add_subcommand("ip", "Integer part of a truncated root");
    std::string ip_text;
    ip_cmd->add_option("root", ip_text, "JSON {\"primes\":[..],\"terms\":[[coeff,exp],..],\"terminates\":bool}")
        ->required();

    std::vector<const char*> argv{"weakind"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*parse_cmd) {
            if (detail::has_relation(parse_text)) {
                Literal lit = parse_literal(parse_text);
                if (cfg.json())
                    buf << json{{"kind", "literal"}, {"text", render(lit)}, {"relation", relation_symbol(lit.rel)}}.dump()
                        << "\n";
                else
                    buf << render(lit) << "\n";
            } else {
                Term t = parse_term(parse_text);
                if (cfg.json()) {
                    json vars = json::array();
                    for (const auto& v : free_variables(t)) vars.push_back(v);
                    buf << json{{"kind", "term"}, {"text", render(t)}, {"depth", depth(t)}, {"variables", vars}}.dump()
                        << "\n";
                } else {
                    buf << render(t) << "\n";
                }
            }
        } else if (*normalize_cmd) {
            NatPoly p = normalize(parse_term(normalize_text));
            if (cfg.json())
                buf << json{{"term", normalize_text}, {"polynomial", render(p)}, {"degree", degree(p)}}.dump() << "\n";
            else
                buf << render(p) << "\n";
        } else if (*identity_cmd) {
            Literal lit = parse_literal(identity_text);
            if (lit.rel != Relation::eq) throw UsageError("identity expects an equation");
            bool id = decide_identity(lit.lhs, lit.rhs);
            if (cfg.json())
                buf << json{{"equation", render(lit)}, {"identity", id}, {"lhs", render(normalize(lit.lhs))},
                            {"rhs", render(normalize(lit.rhs))}}
                           .dump()
                    << "\n";
            else
                buf << (id ? "identity" : "not an identity") << "\n";
            code = id ? 0 : 1;
        } else if (*decide_cmd) {
            if (corpus.empty() == decide_text.empty()) throw UsageError("decide needs exactly one of EQUATION or --corpus");
            if (!corpus.empty()) {
                std::ifstream in(corpus);
                if (!in) throw UsageError("cannot open corpus '" + corpus + "'");
                std::string line;
                std::size_t lineno = 0;
                while (std::getline(in, line)) {
                    ++lineno;
                    std::string text = detail::strip_comment(line);
                    if (text.empty()) continue;
                    json rec;
                    try {
                        rec = detail::decide_record(text);
                    } catch (const std::exception& e) {
                        rec = {{"error", e.what()}};
                    }
                    rec["line"] = lineno;
                    rec["input"] = text;
                    buf << rec.dump() << "\n";
                }
            } else {
                Literal lit = parse_literal(decide_text);
                if (lit.rel != Relation::eq) throw UsageError("decide expects an equation");
                Decision d = decide(lit.lhs, lit.rhs);
                if (cfg.json())
                    buf << json_io::decision(d).dump() << "\n";
                else
                    buf << detail::decision_text(d) << "\n";
                code = d.verdict == Verdict::sat ? 0 : 1;
            }
        } else if (*eval_cmd) {
            Model m = model_ops(parse_model_id(eval_model));
            Env env = detail::parse_env(m, eval_env);
            if (detail::has_relation(eval_text)) {
                Literal lit = parse_literal(eval_text);
                bool v = holds(m, lit, env);
                if (cfg.json())
                    buf << json{{"model", m.name()}, {"literal", render(lit)}, {"env", json_io::env(env)}, {"value", v}}
                               .dump()
                        << "\n";
                else
                    buf << (v ? "true" : "false") << "\n";
            } else {
                ModelElem v = eval_term(m, parse_term(eval_text), env);
                if (cfg.json())
                    buf << json{{"model", m.name()}, {"term", eval_text}, {"env", json_io::env(env)}, {"value", render(v)}}
                               .dump()
                        << "\n";
                else
                    buf << render(v) << "\n";
            }
        } else if (*checkq_cmd) {
            Model m = model_ops(parse_model_id(checkq_model));
            auto probes = q_probes(m, cfg.probe_bound);
            QReport rep = check_q_axioms(m, probes);
            if (cfg.json()) {
                buf << json_io::q_report(rep).dump() << "\n";
            } else {
                for (const auto& a : rep.axioms) {
                    buf << a.name << " " << status_name(a.status);
                    if (!a.witness.empty()) buf << " " << render_tuple(a.witness);
                    buf << "\n";
                }
                buf << m.name() << ": " << status_name(rep.overall()) << " on " << rep.probe_count << " probes\n";
            }
            code = rep.failures() ? 1 : 0;
        } else if (*checkind_cmd) {
            Model m = model_ops(parse_model_id(ind_model));
            Env env = detail::parse_env(m, ind_env);
            auto inst = make_induction_instance(parse_literal(ind_formula), ind_var);
            auto probes = q_probes(m, cfg.probe_bound);
            auto o = check_induction(m, inst, env, probes);
            if (cfg.json()) {
                json rec = json_io::outcome(o);
                rec["model"] = m.name();
                rec["formula"] = render(inst.formula);
                rec["var"] = inst.induction_var;
                buf << rec.dump() << "\n";
            } else {
                buf << o.summary() << " (on " << probes.size() << " probes)\n";
            }
            code = o.kind == OutcomeKind::conclusion_fails_at ? 1 : 0;
        } else if (*checkprop_cmd) {
            Model m = model_ops(parse_model_id(prop_model));
            auto r = check_consequence(m, prop_item, basic_probes(m, cfg.probe_bound));
            if (cfg.json())
                buf << json{{"model", m.name()}, {"item", r.item}, {"statement", r.statement}, {"holds", r.holds},
                            {"witness", r.holds ? json(nullptr) : json_io::tuple(r.witness)}}
                           .dump()
                    << "\n";
            else
                buf << r.item << ": " << r.statement << ": " << (r.holds ? "holds" : "fails " + render_tuple(r.witness))
                    << "\n";
            code = r.holds ? 0 : 1;
        } else if (*claims_cmd && *claims_run) {
            auto results = run_claim_registry(default_claims(), cfg.probe_bound);
            for (const auto& r : results) {
                if (cfg.json())
                    buf << json_io::claim(r).dump() << "\n";
                else
                    buf << (r.matched ? "ok       " : "MISMATCH ") << r.id << ": " << r.observed
                        << (r.matched ? "" : " (expected " + r.expected + ")") << "\n";
            }
            auto bad = mismatches(results);
            if (!cfg.json()) buf << results.size() - bad << "/" << results.size() << " claims reproduced\n";
            code = bad ? 1 : 0;
        } else if (*search_cmd) {
            ModelId id = parse_model_id(search_model);
            SearchConfig sc;
            sc.budget = cfg.budget;
            sc.seed = cfg.seed;
            sc.probe_bound = cfg.probe_bound;
            auto rep = search_violations(id, detail::parse_shape(search_shape), sc);
            if (cfg.json()) {
                for (const auto& f : rep.findings) buf << json_io::finding(id, f).dump() << "\n";
                buf << json_io::search_summary(rep, cfg.seed).dump() << "\n";
            } else {
                for (const auto& f : rep.findings)
                    buf << "*** VIOLATION trial " << f.trial << " seed " << f.trial_seed << ": " << render(f.literal)
                        << " with " << render(f.env) << " -> " << f.outcome.summary() << "\n";
                buf << model_name(id) << " " << relation_symbol(rep.shape) << ": " << rep.trials << " trials, "
                    << rep.findings.size() << " violations, " << rep.step_failures << " explained by step failures, "
                    << rep.skipped << " skipped\n";
            }
        } else if (*bracket_cmd) {
            UniPoly f = detail::parse_coefficients(coeffs);
            Int q = detail::parse_int(q_text, "--q");
            if (changes) {
                if (lo_text.empty() || hi_text.empty()) throw UsageError("--changes needs --lo and --hi");
                auto set = sign_change_set(f, q, detail::parse_int(lo_text, "--lo"), detail::parse_int(hi_text, "--hi"));
                if (cfg.json()) {
                    json arr = json::array();
                    for (const auto& m : set) arr.push_back(json_io::integer(m));
                    buf << json{{"f", render(f, "t")}, {"q", json_io::integer(q)}, {"sign_changes", arr}}.dump() << "\n";
                } else {
                    buf << "{";
                    for (std::size_t i = 0; i < set.size(); ++i) buf << (i ? ", " : "") << set[i];
                    buf << "}\n";
                }
            } else {
                if (a_text.empty() || b_text.empty()) throw UsageError("bracket needs --a and --b");
                Int c = bracket(f, q, detail::parse_int(a_text, "--a"), detail::parse_int(b_text, "--b"));
                if (cfg.json())
                    buf << json{{"f", render(f, "t")}, {"q", json_io::integer(q)}, {"c", json_io::integer(c)}}.dump()
                        << "\n";
                else
                    buf << c << "\n";
            }
        } else if (*nf_cmd) {
            auto first = nf_text.find_first_not_of(" \t");
            FormalSum s = first != std::string::npos && nf_text[first] == '['
                              ? json_io::parse_formal_sum_json(json::parse(nf_text))
                              : parse_formal_sum(nf_text);
            FormalSum nf = normal_form(s);
            if (cfg.json())
                buf << json{{"input", json_io::formal_sum(s)}, {"nf", json_io::formal_sum(nf)}, {"text", render(nf)},
                            {"positive", is_positive(nf)}, {"nonnegative", is_nonnegative(nf)}}
                           .dump()
                    << "\n";
            else
                buf << render(nf) << "\n";
        } else if (*puiseux_cmd && *ip_cmd) {
            auto [root, primes] = json_io::parse_truncated_root(json::parse(ip_text));
            PuiseuxPoly s = puiseux_integer_part(root, primes);
            if (cfg.json())
                buf << json_io::puiseux(s).dump() << "\n";
            else
                buf << render(s) << "\n";
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.output.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(cfg.output);
        if (!f) {
            err << "error: cannot write '" << cfg.output << "'\n";
            return 2;
        }
        f << buf.str();
    }
    return code;
}

}  // namespace weakind::cli
