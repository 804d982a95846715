#pragma once

#include <memory>
#include <string>
#include <vector>

#include "boolcube/rng.hpp"
#include "boolcube/truth_table.hpp"

namespace boolcube {

// A DNF over n variables; each term is a conjunction of literals
// (variable index, polarity). polarity true = positive literal.
struct DnfLiteral {
    int var = 0;
    bool positive = true;
};

struct DnfFormula {
    int n = 0;
    std::vector<std::vector<DnfLiteral>> terms;

    int width() const;
    // Throws on repeated variables inside a term or out-of-range indices.
    void validate() const;
};

enum class FunctionKind {
    Cut,
    Coverage,
    MatroidRankPartition,
    BudgetAdditive,
    Xos,
    Dnf,
    Parity,
    Conjunction,
    Lifted,
    Scaled,
    Mixture,
};

const char* kind_name(FunctionKind k);
FunctionKind kind_from_name(const std::string& name);

// Declarative description of a generated function. Same spec always yields
// the identical table.
struct FunctionSpec {
    FunctionKind kind = FunctionKind::Conjunction;
    int n = 0;

    // cut: weighted edge list over vertices 0..n-1
    struct Edge {
        int u = 0, v = 0;
        double weight = 1.0;
    };
    std::vector<Edge> edges;

    // coverage: per-variable sets over a weighted universe
    std::vector<std::vector<int>> sets;
    std::vector<double> universe_weights;

    // matroid_rank_partition: blocks with capacities
    std::vector<std::vector<int>> blocks;
    std::vector<int> capacities;

    // budget_additive
    std::vector<double> item_weights;
    double budget = 1.0;

    // xos: clause-by-variable weight matrix, all entries >= 0
    std::vector<std::vector<double>> xos_weights;

    // dnf
    DnfFormula dnf;

    // parity / conjunction: variable set bitmask
    uint32_t variables = 0;

    // lifted / scaled / mixture: inner specs
    std::shared_ptr<FunctionSpec> inner;
    double lift_r = 1.0;
    double scale = 1.0;
    std::vector<std::pair<double, std::shared_ptr<FunctionSpec>>> mixture;

    void validate() const;
};

struct GeneratedTable {
    TruthTable table;
    // Division factor applied to bring cut/coverage/matroid/budget/xos
    // outputs into [0,1]; 1.0 when no rescaling happened.
    double scale_divisor = 1.0;
};

GeneratedTable generate(const FunctionSpec& spec);
TruthTable dnf_to_table(const DnfFormula& formula);

// g = 1 - 1/r + f/r for f with range [0,1]; shrinks the self-bounding
// parameter by a factor of r.
TruthTable lift(const TruthTable& f, double r);

// Membership checkers. A violated verdict carries a concrete witness that
// reproduces the violation on re-evaluation.
struct ClassReport {
    std::string class_name;
    bool holds = true;
    // Witness points/indices for the violated case.
    std::vector<uint32_t> witness_points;
    std::vector<int> witness_indices;
    // Computed parameter: minimal a* for self-bounding, slack otherwise.
    double parameter = 0.0;
    bool lipschitz = true;
    std::string detail;
};

ClassReport check_submodular(const TruthTable& f);
ClassReport check_monotone(const TruthTable& f);
// Reports a*(f) = max_{x: f(x)>0} sum_i (f(x) - min_{x_i} f(x)) / f(x) and
// the 1-Lipschitz flag; f must be nonnegative.
ClassReport minimal_self_bounding(const TruthTable& f);
// Exact fractional-subadditivity test: one linear feasibility program per
// subset; restricted to n <= 12.
ClassReport verify_fractional_subadditivity(const TruthTable& f);

TruthTable gen_xos(const std::vector<std::vector<double>>& weights);

// Randomized spec helpers; same (n, seed) -> identical spec.
FunctionSpec random_cut_spec(int n, Rng& rng);
FunctionSpec random_coverage_spec(int n, Rng& rng);
FunctionSpec random_matroid_rank_spec(int n, Rng& rng);
FunctionSpec random_xos_spec(int n, int clauses, Rng& rng);
FunctionSpec random_dnf_spec(int n, int width, int terms, Rng& rng);

}  // namespace boolcube
