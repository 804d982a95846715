#include "boolcube/lowerbounds.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace boolcube {

LowerBoundInstance build_parity_instance(double a, double eps, int n) {
    if (a < 1.0)
        throw std::invalid_argument("build_parity_instance: a must be >= 1");
    if (!(eps > 0.0 && eps <= 0.25))
        throw std::invalid_argument("build_parity_instance: eps must be in (0, 1/4]");
    LowerBoundInstance inst;
    inst.a = a;
    inst.eps = eps;
    inst.n = n;
    inst.k = int(std::floor(a / (4.0 * eps)));
    inst.r = 1.0 / (4.0 * eps);
    if (inst.k < 1 || inst.k > n)
        throw std::invalid_argument("build_parity_instance: k out of range");

    auto parity = std::make_shared<FunctionSpec>();
    parity->kind = FunctionKind::Parity;
    parity->n = n;
    parity->variables = (uint32_t(1) << inst.k) - 1;

    inst.spec.kind = FunctionKind::Lifted;
    inst.spec.n = n;
    inst.spec.inner = parity;
    inst.spec.lift_r = inst.r;
    inst.table = generate(inst.spec).table;
    inst.claimed_degree = inst.k;

    ClassReport sb = minimal_self_bounding(inst.table);
    if (!sb.lipschitz || sb.parameter > a + 1e-9)
        throw std::logic_error("build_parity_instance: realized a* exceeds a");
    return inst;
}

DegreeBoundResult verify_degree_bound(const LowerBoundInstance& instance) {
    DegreeBoundResult res;
    FunctionSpec parity;
    parity.kind = FunctionKind::Parity;
    parity.n = instance.n;
    parity.variables = (uint32_t(1) << instance.k) - 1;
    TruthTable inner = generate(parity).table;

    res.inner_optimum =
        best_l1_degree_bounded(inner, instance.k - 1).empirical_error;
    res.lifted_optimum =
        best_l1_degree_bounded(instance.table, instance.k - 1).empirical_error;
    res.holds = res.lifted_optimum >= instance.eps - 1e-6 &&
                std::fabs(res.inner_optimum - 0.5) <= 1e-6;
    return res;
}

SampleBoundReport sample_bound_family(int k, int n) {
    if (k > n) throw std::invalid_argument("sample_bound_family: k > n");
    if (k < 1) throw std::invalid_argument("sample_bound_family: k < 1");
    if (k > 4)
        throw std::invalid_argument(
            "sample_bound_family: k > 4 refused for full enumeration");
    SampleBoundReport rep;
    rep.k = k;
    rep.n = n;
    const uint32_t points = uint32_t(1) << k;
    rep.family_size = std::pow(2.0, double(points));
    rep.examples_needed = double(points);
    rep.note = "information-theoretic: distinguishing 2^(2^k) functions to "
               "1/4 accuracy needs Omega(2^k) examples or value queries";

    // Every Boolean function of the first k variables, as its minterm k-DNF.
    for (uint64_t id = 0; id < (uint64_t(1) << points); ++id) {
        DnfFormula phi;
        phi.n = n;
        for (uint32_t assignment = 0; assignment < points; ++assignment) {
            if (!((id >> assignment) & 1ULL)) continue;
            std::vector<DnfLiteral> term;
            for (int i = 0; i < k; ++i)
                term.push_back({i, ((assignment >> i) & 1u) != 0});
            phi.terms.push_back(std::move(term));
        }
        rep.members.push_back(std::move(phi));
    }
    return rep;
}

}  // namespace boolcube
