#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "formal_sum.hpp"
#include "numeric.hpp"
#include "term.hpp"
#include "unipoly.hpp"

namespace weakind {

/// The computable countermodels.
///   one_point   N + {w}: w absorbs + and S, 0*w = 0.
///   max_merge   N + {w0, w1}: commutative, w_i + w_j = w_max(i,j).
///   left_absorb N + {w0, w1}: w_i + x = w_i, w_i * x = w_i for x != 0.
///   zx_plus     Z[X]+ with eventual-dominance order.
///   formal_sums nonnegative order-significant formal sums.
enum class ModelId { one_point, max_merge, left_absorb, zx_plus, formal_sums };

inline constexpr std::array<ModelId, 5> all_models = {ModelId::one_point, ModelId::max_merge, ModelId::left_absorb,
                                                      ModelId::zx_plus, ModelId::formal_sums};

inline std::string model_name(ModelId id) {
    switch (id) {
        case ModelId::one_point: return "one-point";
        case ModelId::max_merge: return "max-merge";
        case ModelId::left_absorb: return "left-absorb";
        case ModelId::zx_plus: return "zx-plus";
        case ModelId::formal_sums: return "formal-sums";
    }
    return "?";
}

inline ModelId parse_model_id(const std::string& name) {
    for (auto id : all_models)
        if (model_name(id) == name) return id;
    throw std::invalid_argument("unknown model '" + name +
                                "' (expected one-point, max-merge, left-absorb, zx-plus or formal-sums)");
}

struct Nat {
    Int value;
    friend bool operator==(const Nat&, const Nat&) = default;
};

struct Omega {
    int index = 0;
    friend bool operator==(const Omega&, const Omega&) = default;
};

using ModelElem = std::variant<Nat, Omega, UniPoly, FormalSum>;
using Env = std::map<std::string, ModelElem>;

inline ModelElem nat(const Int& v) { return Nat{v}; }
inline ModelElem omega(int i = 0) { return Omega{i}; }

inline bool is_nat(const ModelElem& e) { return std::holds_alternative<Nat>(e); }
inline bool is_omega(const ModelElem& e) { return std::holds_alternative<Omega>(e); }

/// Element literal: `nat:5`, `omega:0`, `poly:[1,0,-2]`, `sum:[(2,3),(-1,0)]`.
inline std::string render(const ModelElem& e) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Nat>)
                return "nat:" + v.value.str();
            else if constexpr (std::is_same_v<T, Omega>)
                return "omega:" + std::to_string(v.index);
            else if constexpr (std::is_same_v<T, UniPoly>)
                return "poly:" + render_coefficients(v);
            else
                return "sum:" + render_pairs(v);
        },
        e);
}

inline std::string render(const Env& env) {
    std::string out;
    for (const auto& [k, v] : env) {
        if (!out.empty()) out += ",";
        out += k + "=" + render(v);
    }
    return out;
}

/// Parses an element literal without reference to a model.
inline ModelElem parse_element(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("element literal needs a kind prefix: '" + text + "'");
    auto kind = text.substr(0, colon);
    auto body = text.substr(colon + 1);
    try {
        if (kind == "nat") {
            Int v(body);
            if (v < 0) throw std::invalid_argument("negative natural");
            return nat(v);
        }
        if (kind == "omega") {
            if (body != "0" && body != "1") throw std::invalid_argument("omega index must be 0 or 1");
            return omega(body == "1" ? 1 : 0);
        }
        if (kind == "poly") {
            if (body.size() < 2 || body.front() != '[' || body.back() != ']')
                throw std::invalid_argument("poly literal must be a bracketed list");
            std::vector<Int> coeffs;
            std::string inner = body.substr(1, body.size() - 2);
            std::size_t start = 0;
            while (start <= inner.size() && !inner.empty()) {
                auto comma = inner.find(',', start);
                auto piece = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                std::string trimmed;
                for (char c : piece)
                    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
                coeffs.emplace_back(trimmed);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            return UniPoly::from_high_first(coeffs);
        }
        if (kind == "sum") return parse_formal_sum_pairs(body);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("bad element literal '" + text + "': " + e.what());
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad element literal '" + text + "'");
    }
    throw std::invalid_argument("unknown element kind '" + kind + "'");
}

/// A model as a table of operations. Public methods reject elements that do
/// not belong to the model; the table itself is unchecked.
class Model {
public:
    struct Table {
        std::function<ModelElem(const Int&)> numeral;
        std::function<bool(const ModelElem&)> contains;
        std::function<ModelElem(const ModelElem&)> succ;
        std::function<ModelElem(const ModelElem&, const ModelElem&)> add;
        std::function<ModelElem(const ModelElem&, const ModelElem&)> mul;
        std::function<bool(const ModelElem&, const ModelElem&)> leq;
        /// Candidates y for x = Sy.
        std::function<std::vector<ModelElem>(const ModelElem&)> predecessor_candidates;
        /// Candidates r for r + x = y.
        std::function<std::vector<ModelElem>(const ModelElem&, const ModelElem&)> residue_candidates;
        /// Distinguished nonstandard elements (omega points, X, ...).
        std::vector<ModelElem> nonstandard;
    };

    Model(ModelId id, Table table) : id_(id), table_(std::move(table)) {}

    ModelId id() const { return id_; }
    std::string name() const { return model_name(id_); }
    const Table& table() const { return table_; }

    bool contains(const ModelElem& e) const { return table_.contains(e); }

    ModelElem numeral(const Int& n) const { return table_.numeral(n); }
    ModelElem zero() const { return numeral(0); }
    ModelElem one() const { return numeral(1); }

    ModelElem succ(const ModelElem& a) const {
        check(a);
        return table_.succ(a);
    }
    ModelElem add(const ModelElem& a, const ModelElem& b) const {
        check(a), check(b);
        return table_.add(a, b);
    }
    ModelElem mul(const ModelElem& a, const ModelElem& b) const {
        check(a), check(b);
        return table_.mul(a, b);
    }
    bool leq(const ModelElem& a, const ModelElem& b) const {
        check(a), check(b);
        return table_.leq(a, b);
    }
    bool eq(const ModelElem& a, const ModelElem& b) const {
        check(a), check(b);
        return a == b;
    }
    std::vector<ModelElem> predecessor_candidates(const ModelElem& a) const {
        check(a);
        return table_.predecessor_candidates ? table_.predecessor_candidates(a) : std::vector<ModelElem>{};
    }
    std::vector<ModelElem> residue_candidates(const ModelElem& x, const ModelElem& y) const {
        check(x), check(y);
        return table_.residue_candidates ? table_.residue_candidates(x, y) : std::vector<ModelElem>{};
    }
    const std::vector<ModelElem>& nonstandard() const { return table_.nonstandard; }

    /// Converts a generic literal (e.g. `nat:3` in Z[X]+) into this model.
    ModelElem coerce(const ModelElem& e) const {
        ModelElem r = e;
        if (auto n = std::get_if<Nat>(&e); n && !contains(e)) r = numeral(n->value);
        check(r);
        return r;
    }

private:
    void check(const ModelElem& e) const {
        if (!table_.contains(e)) throw std::invalid_argument(render(e) + " is not an element of " + name());
    }

    ModelId id_;
    Table table_;
};

namespace detail {

inline const Int& nat_value(const ModelElem& e) { return std::get<Nat>(e).value; }

inline bool is_nat_zero(const ModelElem& e) { return is_nat(e) && nat_value(e) == 0; }

// Shared pieces for the N + omega models.
inline Model::Table omega_table(int omega_count) {
    Model::Table t;
    t.numeral = [](const Int& n) -> ModelElem { return nat(n); };
    t.contains = [omega_count](const ModelElem& e) {
        if (auto n = std::get_if<Nat>(&e)) return n->value >= 0;
        if (auto w = std::get_if<Omega>(&e)) return w->index >= 0 && w->index < omega_count;
        return false;
    };
    t.succ = [](const ModelElem& a) -> ModelElem {
        if (is_nat(a)) return nat(nat_value(a) + 1);
        return a;
    };
    t.predecessor_candidates = [](const ModelElem& a) -> std::vector<ModelElem> {
        if (is_omega(a)) return {a};
        if (nat_value(a) > 0) return {nat(nat_value(a) - 1)};
        return {};
    };
    t.residue_candidates = [](const ModelElem& x, const ModelElem& y) -> std::vector<ModelElem> {
        std::vector<ModelElem> out;
        if (is_nat(x) && is_nat(y) && nat_value(x) <= nat_value(y)) out.push_back(nat(nat_value(y) - nat_value(x)));
        if (is_omega(y)) {
            out.push_back(y);
            out.push_back(nat(0));
        }
        return out;
    };
    for (int i = 0; i < omega_count; ++i) t.nonstandard.push_back(omega(i));
    return t;
}

inline Model make_one_point() {
    auto t = omega_table(1);
    t.add = [](const ModelElem& a, const ModelElem& b) -> ModelElem {
        if (is_omega(a) || is_omega(b)) return omega(0);
        return nat(nat_value(a) + nat_value(b));
    };
    t.mul = [](const ModelElem& a, const ModelElem& b) -> ModelElem {
        if (is_nat_zero(a) || is_nat_zero(b)) return nat(0);
        if (is_omega(a) || is_omega(b)) return omega(0);
        return nat(nat_value(a) * nat_value(b));
    };
    // x <= y iff exists r. r + x = y
    t.leq = [](const ModelElem& a, const ModelElem& b) {
        if (is_omega(b)) return true;
        if (is_omega(a)) return false;
        return nat_value(a) <= nat_value(b);
    };
    return Model(ModelId::one_point, std::move(t));
}

inline Model make_max_merge() {
    auto t = omega_table(2);
    auto merge = [](const ModelElem& a, const ModelElem& b) -> ModelElem {
        int i = is_omega(a) ? std::get<Omega>(a).index : -1;
        int j = is_omega(b) ? std::get<Omega>(b).index : -1;
        return omega(std::max(i, j));
    };
    t.add = [merge](const ModelElem& a, const ModelElem& b) -> ModelElem {
        if (is_omega(a) || is_omega(b)) return merge(a, b);
        return nat(nat_value(a) + nat_value(b));
    };
    t.mul = [merge](const ModelElem& a, const ModelElem& b) -> ModelElem {
        if (is_nat_zero(a) || is_nat_zero(b)) return nat(0);
        if (is_omega(a) || is_omega(b)) return merge(a, b);
        return nat(nat_value(a) * nat_value(b));
    };
    // Forced by Q8: w_i <= w_j iff j >= i, w_i is above every n.
    t.leq = [](const ModelElem& a, const ModelElem& b) {
        if (is_omega(a) && is_omega(b)) return std::get<Omega>(b).index >= std::get<Omega>(a).index;
        if (is_omega(b)) return true;
        if (is_omega(a)) return false;
        return nat_value(a) <= nat_value(b);
    };
    return Model(ModelId::max_merge, std::move(t));
}

inline Model make_left_absorb() {
    auto t = omega_table(2);
    t.add = [](const ModelElem& a, const ModelElem& b) -> ModelElem {
        if (is_omega(a)) return a;
        if (is_omega(b)) return b;
        return nat(nat_value(a) + nat_value(b));
    };
    t.mul = [](const ModelElem& a, const ModelElem& b) -> ModelElem {
        if (is_nat_zero(a) || is_nat_zero(b)) return nat(0);
        if (is_omega(a)) return a;
        if (is_omega(b)) return b;
        return nat(nat_value(a) * nat_value(b));
    };
    t.leq = [](const ModelElem& a, const ModelElem& b) {
        if (is_omega(b)) return true;
        if (is_omega(a)) return false;
        return nat_value(a) <= nat_value(b);
    };
    return Model(ModelId::left_absorb, std::move(t));
}

inline bool zx_member(const UniPoly& p) { return p.is_zero() || p.leading() > 0; }

inline Model make_zx_plus() {
    Model::Table t;
    t.numeral = [](const Int& n) -> ModelElem { return UniPoly::constant(n); };
    t.contains = [](const ModelElem& e) {
        auto p = std::get_if<UniPoly>(&e);
        return p && zx_member(*p);
    };
    t.succ = [](const ModelElem& a) -> ModelElem { return std::get<UniPoly>(a) + UniPoly{1}; };
    t.add = [](const ModelElem& a, const ModelElem& b) -> ModelElem { return std::get<UniPoly>(a) + std::get<UniPoly>(b); };
    t.mul = [](const ModelElem& a, const ModelElem& b) -> ModelElem { return std::get<UniPoly>(a) * std::get<UniPoly>(b); };
    // f <= g iff f(x) <= g(x) for all large x: g - f is zero or has positive leading coefficient.
    t.leq = [](const ModelElem& a, const ModelElem& b) { return zx_member(std::get<UniPoly>(b) - std::get<UniPoly>(a)); };
    t.predecessor_candidates = [](const ModelElem& a) -> std::vector<ModelElem> {
        auto p = std::get<UniPoly>(a) - UniPoly{1};
        if (zx_member(p)) return {p};
        return {};
    };
    t.residue_candidates = [](const ModelElem& x, const ModelElem& y) -> std::vector<ModelElem> {
        auto r = std::get<UniPoly>(y) - std::get<UniPoly>(x);
        if (zx_member(r)) return {r};
        return {};
    };
    t.nonstandard = {UniPoly{0, 1}, UniPoly{1, 1}, UniPoly{0, 2}, UniPoly{0, 0, 1}};
    return Model(ModelId::zx_plus, std::move(t));
}

inline Model make_formal_sums(std::uint64_t mul_work) {
    Model::Table t;
    t.numeral = [](const Int& n) -> ModelElem {
        if (n == 0) return FormalSum{};
        return FormalSum(std::vector<SumTerm>{SumTerm{n, 0}});
    };
    t.contains = [](const ModelElem& e) {
        auto s = std::get_if<FormalSum>(&e);
        return s && is_normal_form(*s) && is_nonnegative(*s);
    };
    t.succ = [](const ModelElem& a) -> ModelElem { return sum_succ(std::get<FormalSum>(a)); };
    t.add = [](const ModelElem& a, const ModelElem& b) -> ModelElem {
        return sum_add(std::get<FormalSum>(a), std::get<FormalSum>(b));
    };
    t.mul = [mul_work](const ModelElem& a, const ModelElem& b) -> ModelElem {
        return sum_mul(std::get<FormalSum>(a), std::get<FormalSum>(b), mul_work);
    };
    t.leq = [](const ModelElem& a, const ModelElem& b) { return sum_leq(std::get<FormalSum>(a), std::get<FormalSum>(b)); };
    t.predecessor_candidates = [](const ModelElem& a) -> std::vector<ModelElem> {
        auto p = sum_predecessor(std::get<FormalSum>(a));
        if (is_nonnegative(p)) return {p};
        return {};
    };
    t.residue_candidates = [](const ModelElem& x, const ModelElem& y) -> std::vector<ModelElem> {
        auto r = leq_residue(std::get<FormalSum>(x), std::get<FormalSum>(y));
        if (is_nonnegative(r)) return {r};
        return {};
    };
    t.nonstandard = {FormalSum{{1, 1}}, FormalSum{{1, 2}}, FormalSum{{-1, 1}, {1, 2}}, FormalSum{{1, 2}, {-1, 1}},
                     FormalSum{{1, 1}, {1, 0}, {1, 2}}};
    return Model(ModelId::formal_sums, std::move(t));
}

}  // namespace detail

/// `mul_work` bounds formal-sum products (see sum_mul); other models ignore it.
inline Model model_ops(ModelId id, std::uint64_t mul_work = 50'000'000) {
    switch (id) {
        case ModelId::one_point: return detail::make_one_point();
        case ModelId::max_merge: return detail::make_max_merge();
        case ModelId::left_absorb: return detail::make_left_absorb();
        case ModelId::zx_plus: return detail::make_zx_plus();
        case ModelId::formal_sums: return detail::make_formal_sums(mul_work);
    }
    throw std::invalid_argument("unknown model id");
}

/// Compositional interpretation of a term.
inline ModelElem eval_term(const Model& m, const Term& t, const Env& env) {
    switch (t.kind()) {
        case TermKind::zero: return m.zero();
        case TermKind::var: {
            auto it = env.find(t.name());
            if (it == env.end()) throw std::out_of_range("unbound variable '" + t.name() + "'");
            if (!m.contains(it->second))
                throw std::invalid_argument(render(it->second) + " is not an element of " + m.name());
            return it->second;
        }
        case TermKind::succ: return m.succ(eval_term(m, t.arg(), env));
        case TermKind::add: return m.add(eval_term(m, t.lhs(), env), eval_term(m, t.rhs(), env));
        case TermKind::mul: return m.mul(eval_term(m, t.lhs(), env), eval_term(m, t.rhs(), env));
    }
    return m.zero();
}

// ---------------------------------------------------------------------------
// Term dichotomy in the one-point model

struct ConstantIn {
    ModelElem value;
};
struct UnboundedIn {};
using OnePointClass = std::variant<ConstantIn, UnboundedIn>;

namespace detail {

inline OnePointClass classify_structural(const Term& t, const std::string& x, const Env& env) {
    static const Model m = make_one_point();
    switch (t.kind()) {
        case TermKind::zero: return ConstantIn{nat(0)};
        case TermKind::var: {
            if (t.name() == x) return UnboundedIn{};
            auto it = env.find(t.name());
            if (it == env.end()) throw std::out_of_range("unbound parameter '" + t.name() + "'");
            return ConstantIn{it->second};
        }
        case TermKind::succ: {
            auto a = classify_structural(t.arg(), x, env);
            if (auto c = std::get_if<ConstantIn>(&a)) return ConstantIn{m.succ(c->value)};
            return a;
        }
        case TermKind::add: {
            auto a = classify_structural(t.lhs(), x, env);
            auto b = classify_structural(t.rhs(), x, env);
            auto ca = std::get_if<ConstantIn>(&a);
            auto cb = std::get_if<ConstantIn>(&b);
            if (ca && cb) return ConstantIn{m.add(ca->value, cb->value)};
            if ((ca && is_omega(ca->value)) || (cb && is_omega(cb->value))) return ConstantIn{omega(0)};
            return UnboundedIn{};
        }
        case TermKind::mul: {
            auto a = classify_structural(t.lhs(), x, env);
            auto b = classify_structural(t.rhs(), x, env);
            auto ca = std::get_if<ConstantIn>(&a);
            auto cb = std::get_if<ConstantIn>(&b);
            if ((ca && is_nat_zero(ca->value)) || (cb && is_nat_zero(cb->value))) return ConstantIn{nat(0)};
            if (ca && cb) return ConstantIn{m.mul(ca->value, cb->value)};
            return UnboundedIn{};
        }
    }
    return UnboundedIn{};
}

}  // namespace detail

/// Either t(x, env) is constant in x, or t(w, env) = w and t(n, env) >= n.
/// The structural verdict is cross-checked by evaluating at x in {0..probe_bound, w};
/// a disagreement is an internal error.
inline OnePointClass classify_term_onepoint(const Term& t, const std::string& x, const Env& env,
                                            std::size_t probe_bound = 16) {
    const Model m = model_ops(ModelId::one_point);
    auto verdict = detail::classify_structural(t, x, env);
    std::vector<ModelElem> probes;
    for (std::size_t n = 0; n <= probe_bound; ++n) probes.push_back(nat(n));
    probes.push_back(omega(0));
    for (const auto& p : probes) {
        Env e = env;
        e[x] = p;
        ModelElem v = eval_term(m, t, e);
        if (auto c = std::get_if<ConstantIn>(&verdict)) {
            if (v != c->value) throw std::logic_error("term classified constant but varies at x = " + render(p));
        } else {
            if (!m.leq(p, v)) throw std::logic_error("unbounded term drops below x at " + render(p));
            if (is_omega(p) && !is_omega(v)) throw std::logic_error("unbounded term is finite at omega");
        }
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Ring of differences

/// Formal differences (p, n) read as p - n, with (p, n) ~ (p', n') iff
/// p + n' = p' + n. Only meaningful over a cancellative commutative semiring.
class DiffRing {
public:
    struct Pair {
        ModelElem pos;
        ModelElem neg;
    };

    explicit DiffRing(Model base) : base_(std::move(base)) {}

    const Model& base() const { return base_; }

    Pair embed(const ModelElem& a) const { return Pair{a, base_.zero()}; }

    Pair add(const Pair& a, const Pair& b) const { return Pair{base_.add(a.pos, b.pos), base_.add(a.neg, b.neg)}; }

    Pair neg(const Pair& a) const { return Pair{a.neg, a.pos}; }

    Pair sub(const Pair& a, const Pair& b) const { return add(a, neg(b)); }

    Pair mul(const Pair& a, const Pair& b) const {
        return Pair{base_.add(base_.mul(a.pos, b.pos), base_.mul(a.neg, b.neg)),
                    base_.add(base_.mul(a.pos, b.neg), base_.mul(a.neg, b.pos))};
    }

    bool equivalent(const Pair& a, const Pair& b) const {
        return base_.eq(base_.add(a.pos, b.neg), base_.add(b.pos, a.neg));
    }

private:
    Model base_;
};

struct CancellationFailure {
    std::string law;                ///< "commutativity" or "cancellation"
    std::vector<ModelElem> witness; ///< (a, b) or (a, b, c) with a + b = a + c, b != c
};

/// Builds the difference ring if addition is commutative and cancellative
/// on the probe set, otherwise returns the first counterexample.
inline std::variant<DiffRing, CancellationFailure> diff_ring(const Model& m, std::span<const ModelElem> probes) {
    for (const auto& a : probes)
        for (const auto& b : probes)
            if (!m.eq(m.add(a, b), m.add(b, a))) return CancellationFailure{"commutativity", {a, b}};
    for (const auto& a : probes)
        for (const auto& b : probes)
            for (const auto& c : probes)
                if (b != c && m.eq(m.add(a, b), m.add(a, c))) return CancellationFailure{"cancellation", {a, b, c}};
    return DiffRing(m);
}

}  // namespace weakind
