// Walks through the countermodels: which laws fail where, and which
// induction instances break.
#include <iostream>

#include "weakind/weakind.hpp"

using namespace weakind;

int main() {
    for (auto id : all_models) {
        Model m = model_ops(id);
        auto probes = q_probes(m, 12);
        QReport q = check_q_axioms(m, probes);
        std::cout << m.name() << ": Q1-Q8 " << status_name(q.overall()) << " on " << probes.size() << " probes\n";
        auto basic = basic_probes(m, 4);
        for (int item = 1; item <= 12; ++item) {
            auto r = check_consequence(m, item, basic);
            if (!r.holds) std::cout << "  fails " << item << ": " << r.statement << " at " << render_tuple(r.witness) << "\n";
        }
    }

    Model mm = model_ops(ModelId::max_merge);
    auto inst = make_induction_instance(parse_literal("x + p = p"), "x");
    auto probes = basic_probes(mm, 12);
    std::cout << "\nmax-merge, x + p = p with p = omega:0: "
              << check_induction(mm, inst, {{"p", omega(0)}}, probes).summary() << "\n";

    Term s = parse_term("x*x + y"), t = parse_term("5");
    Decision d = decide(s, t);
    std::cout << "x*x + y = 5 is " << (d.verdict == Verdict::sat ? "solvable" : "unsolvable")
              << " (" << case_name(d.case_tag) << ")\n";
}
