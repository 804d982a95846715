#pragma once

#include <string>
#include <vector>

#include "boolcube/function_library.hpp"
#include "boolcube/regression.hpp"
#include "boolcube/truth_table.hpp"

namespace boolcube {

// A lifted 0/1 parity witnessing the degree lower bound: f = parity on
// k = floor(a/(4 eps)) variables, g = lift(f, r) for r = 1/(4 eps).
struct LowerBoundInstance {
    double a = 1.0;
    double eps = 0.25;
    int n = 0;
    int k = 0;
    double r = 1.0;
    FunctionSpec spec;      // lifted wrapping parity
    TruthTable table;       // realized g
    int claimed_degree = 0; // any eps-approximator needs at least this
};

LowerBoundInstance build_parity_instance(double a, double eps, int n);

struct DegreeBoundResult {
    bool holds = true;
    // Exact degree-(k-1) l1 optimum for the lifted instance; the paper's
    // threshold is eps, the lifted inner optimum gives the stronger 2 eps.
    double lifted_optimum = 0.0;
    double inner_optimum = 0.0;  // for the 0/1 parity itself; equals 1/2
};

DegreeBoundResult verify_degree_bound(const LowerBoundInstance& instance);

// Counting-argument report for the sample-complexity demonstration: the
// family of all Boolean functions on the first k variables, realized as
// k-DNFs. Not an executable proof; the numbers are the argument.
struct SampleBoundReport {
    int k = 0;
    int n = 0;
    double family_size = 0.0;        // 2^(2^k)
    double examples_needed = 0.0;    // Omega(2^k) for 1/4-accuracy
    std::vector<DnfFormula> members; // full enumeration for k <= 4
    std::string note;
};

SampleBoundReport sample_bound_family(int k, int n);

}  // namespace boolcube
