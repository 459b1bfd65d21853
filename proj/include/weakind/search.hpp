#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "induction_lab.hpp"

namespace weakind {

struct SearchConfig {
    std::size_t budget = 1000;
    std::uint64_t seed = 0;
    std::size_t probe_bound = 12;
    std::size_t max_depth = 5;
    /// Predecessors of a failing element re-checked before a finding is kept.
    std::size_t chain_depth = 64;
    /// Cap on formal-sum product work; larger trials are skipped.
    std::uint64_t mul_work = 20'000;
};

struct Finding {
    std::size_t trial = 0;
    std::uint64_t trial_seed = 0;  ///< regenerates the instance via search_instance
    Literal literal;
    Env env;
    InductionOutcome outcome;
};

struct SearchReport {
    ModelId model;
    Relation shape;
    std::size_t trials = 0;
    std::size_t skipped = 0;      ///< trials abandoned because an element grew too large
    std::size_t step_failures = 0;  ///< conclusion failures explained by a step failure below the probe
    std::vector<Finding> findings;
};

/// Parameter values drawn for random instances.
inline std::vector<ModelElem> parameter_pool(const Model& m, std::size_t bound) {
    auto pool = basic_probes(m, std::min<std::size_t>(bound, 4));
    if (m.id() == ModelId::zx_plus)
        for (auto p : {UniPoly{-1, 1}, UniPoly{2, 1}, UniPoly{0, 3}, UniPoly{0, -1, 1}}) pool.push_back(p);
    if (m.id() == ModelId::formal_sums)
        for (auto& p : random_formal_sum_probes(6, 3, 0xface, 2)) pool.push_back(std::move(p));
    return pool;
}

/// Probes the induction variable ranges over during search.
inline std::vector<ModelElem> search_probes(const Model& m, std::size_t bound) {
    auto out = basic_probes(m, bound);
    if (m.id() == ModelId::formal_sums) {
        for (auto& p : random_formal_sum_probes(24, 4, 0x5eed, 2))
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

/// The random instance of trial seed `s`: a literal of the given shape in
/// x, p, q with x as induction variable, plus values for p and q.
inline std::pair<Literal, Env> search_instance(Relation shape, std::uint64_t s, std::size_t max_depth,
                                               const std::vector<ModelElem>& pool) {
    Rng rng(s);
    TermGenConfig cfg{static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_depth))),
                      {"x", "x", "p", "q"}, 2};
    Literal lit{shape, random_term(rng, cfg), random_term(rng, cfg)};
    Env env{{"p", pool[rng.index(pool.size())]}, {"q", pool[rng.index(pool.size())]}};
    return {lit, env};
}

namespace detail {

// Walks down from a failing element. A step failure anywhere on the chain
// means the instance's hypothesis is false in the model, so the probe-scale
// conclusion failure is not a counterexample.
inline bool step_fails_below(const Model& m, const InductionInstance& inst, const Env& env, const ModelElem& start,
                             std::size_t depth) {
    auto at = [&](const ModelElem& v) {
        Env e = env;
        e[inst.induction_var] = v;
        return holds(m, inst.formula, e);
    };
    ModelElem cur = start;
    bool cur_holds = at(cur);
    for (std::size_t i = 0; i < depth; ++i) {
        auto preds = m.predecessor_candidates(cur);
        if (preds.empty() || m.eq(preds.front(), cur)) return false;
        ModelElem prev = preds.front();
        bool prev_holds = at(prev);
        if (prev_holds && !cur_holds) return true;
        cur = std::move(prev);
        cur_holds = prev_holds;
    }
    return false;
}

}  // namespace detail

/// Random induction instances of one literal shape; keeps those whose
/// conclusion fails on the probes after base and step passed.
inline SearchReport search_violations(ModelId id, Relation shape, const SearchConfig& cfg) {
    Model m = model_ops(id, cfg.mul_work);
    SearchReport rep{id, shape, 0, 0, 0, {}};
    const auto pool = parameter_pool(m, cfg.probe_bound);
    const auto probes = search_probes(m, cfg.probe_bound);
    for (std::size_t i = 0; i < cfg.budget; ++i) {
        ++rep.trials;
        std::uint64_t s = mix_seed(cfg.seed, i);
        auto [lit, env] = search_instance(shape, s, cfg.max_depth, pool);
        auto inst = make_induction_instance(lit, "x");
        try {
            auto out = check_induction(m, inst, env, probes);
            if (out.kind != OutcomeKind::conclusion_fails_at) continue;
            if (detail::step_fails_below(m, inst, env, *out.at, cfg.chain_depth)) {
                ++rep.step_failures;
                continue;
            }
            rep.findings.push_back({i, s, lit, env, out});
        } catch (const std::length_error&) {
            ++rep.skipped;
        } catch (const std::out_of_range&) {
            ++rep.skipped;
        }
    }
    return rep;
}

}  // namespace weakind
