#include "boolcube/function_library.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "boolcube/lp.hpp"

namespace boolcube {

int DnfFormula::width() const {
    size_t w = 0;
    for (const auto& t : terms) w = std::max(w, t.size());
    return int(w);
}

void DnfFormula::validate() const {
    if (n < 1 || n > max_dimension())
        throw std::invalid_argument("DnfFormula: dimension out of range");
    for (const auto& term : terms) {
        std::set<int> seen;
        for (const auto& lit : term) {
            if (lit.var < 0 || lit.var >= n)
                throw std::invalid_argument("DnfFormula: variable out of range");
            if (!seen.insert(lit.var).second)
                throw std::invalid_argument(
                    "DnfFormula: repeated variable in term");
        }
    }
}

const char* kind_name(FunctionKind k) {
    switch (k) {
        case FunctionKind::Cut: return "cut";
        case FunctionKind::Coverage: return "coverage";
        case FunctionKind::MatroidRankPartition: return "matroid_rank_partition";
        case FunctionKind::BudgetAdditive: return "budget_additive";
        case FunctionKind::Xos: return "xos";
        case FunctionKind::Dnf: return "dnf";
        case FunctionKind::Parity: return "parity";
        case FunctionKind::Conjunction: return "conjunction";
        case FunctionKind::Lifted: return "lifted";
        case FunctionKind::Scaled: return "scaled";
        case FunctionKind::Mixture: return "mixture";
    }
    return "unknown";
}

FunctionKind kind_from_name(const std::string& name) {
    for (FunctionKind k :
         {FunctionKind::Cut, FunctionKind::Coverage,
          FunctionKind::MatroidRankPartition, FunctionKind::BudgetAdditive,
          FunctionKind::Xos, FunctionKind::Dnf, FunctionKind::Parity,
          FunctionKind::Conjunction, FunctionKind::Lifted,
          FunctionKind::Scaled, FunctionKind::Mixture})
        if (name == kind_name(k)) return k;
    throw std::invalid_argument("unknown function kind: " + name);
}

void FunctionSpec::validate() const {
    if (n < 1 || n > max_dimension())
        throw std::invalid_argument("FunctionSpec: dimension out of range");
    auto check_index = [&](int i) {
        if (i < 0 || i >= n)
            throw std::invalid_argument("FunctionSpec: index out of range");
    };
    switch (kind) {
        case FunctionKind::Cut:
            for (const auto& e : edges) {
                check_index(e.u);
                check_index(e.v);
                if (e.weight < 0)
                    throw std::invalid_argument("FunctionSpec: negative edge weight");
            }
            break;
        case FunctionKind::Coverage: {
            if (int(sets.size()) != n)
                throw std::invalid_argument("FunctionSpec: coverage needs one set per variable");
            for (const auto& s : sets)
                for (int u : s)
                    if (u < 0 || u >= int(universe_weights.size()))
                        throw std::invalid_argument("FunctionSpec: universe element out of range");
            for (double w : universe_weights)
                if (w < 0)
                    throw std::invalid_argument("FunctionSpec: negative universe weight");
            break;
        }
        case FunctionKind::MatroidRankPartition: {
            if (blocks.size() != capacities.size())
                throw std::invalid_argument("FunctionSpec: blocks/capacities mismatch");
            std::set<int> seen;
            for (const auto& b : blocks)
                for (int i : b) {
                    check_index(i);
                    if (!seen.insert(i).second)
                        throw std::invalid_argument("FunctionSpec: blocks must be disjoint");
                }
            for (int c : capacities)
                if (c < 0)
                    throw std::invalid_argument("FunctionSpec: negative capacity");
            break;
        }
        case FunctionKind::BudgetAdditive:
            if (int(item_weights.size()) != n)
                throw std::invalid_argument("FunctionSpec: budget_additive needs n weights");
            for (double w : item_weights)
                if (w < 0)
                    throw std::invalid_argument("FunctionSpec: negative item weight");
            if (budget < 0)
                throw std::invalid_argument("FunctionSpec: negative budget");
            break;
        case FunctionKind::Xos:
            for (const auto& row : xos_weights) {
                if (int(row.size()) != n)
                    throw std::invalid_argument("FunctionSpec: xos row width != n");
                for (double w : row)
                    if (w < 0)
                        throw std::invalid_argument("FunctionSpec: negative xos weight");
            }
            break;
        case FunctionKind::Dnf:
            if (dnf.n != n)
                throw std::invalid_argument("FunctionSpec: dnf dimension mismatch");
            dnf.validate();
            break;
        case FunctionKind::Parity:
        case FunctionKind::Conjunction:
            if (variables >> n)
                throw std::invalid_argument("FunctionSpec: variable set out of range");
            break;
        case FunctionKind::Lifted:
            if (!inner) throw std::invalid_argument("FunctionSpec: lifted needs inner");
            if (lift_r < 1.0)
                throw std::invalid_argument("FunctionSpec: lift r must be >= 1");
            inner->validate();
            break;
        case FunctionKind::Scaled:
            if (!inner) throw std::invalid_argument("FunctionSpec: scaled needs inner");
            inner->validate();
            break;
        case FunctionKind::Mixture: {
            double total = 0;
            for (const auto& [w, sub] : mixture) {
                if (w < 0)
                    throw std::invalid_argument("FunctionSpec: negative mixture weight");
                if (!sub)
                    throw std::invalid_argument("FunctionSpec: null mixture component");
                sub->validate();
                total += w;
            }
            if (std::fabs(total - 1.0) > 1e-9)
                throw std::invalid_argument("FunctionSpec: mixture weights must sum to 1");
            break;
        }
    }
}

namespace {

GeneratedTable rescale_to_unit(TruthTable raw) {
    double mx = 0;
    for (double v : raw.values) mx = std::max(mx, v);
    GeneratedTable out;
    if (mx > 0)
        for (double& v : raw.values) v /= mx;
    raw.range = std::make_pair(0.0, 1.0);
    out.table = std::move(raw);
    out.scale_divisor = mx > 0 ? mx : 1.0;
    return out;
}

}  // namespace

TruthTable dnf_to_table(const DnfFormula& formula) {
    formula.validate();
    TruthTable f;
    f.n = formula.n;
    f.values.assign(size_t(1) << formula.n, 0.0);
    f.range = std::make_pair(0.0, 1.0);
    for (uint32_t x = 0; x < f.size(); ++x) {
        for (const auto& term : formula.terms) {
            bool sat = true;
            for (const auto& lit : term)
                if ((((x >> lit.var) & 1u) != 0) != lit.positive) {
                    sat = false;
                    break;
                }
            if (sat && !term.empty()) {
                f.values[x] = 1.0;
                break;
            }
            if (sat && term.empty()) {
                // Empty term is a tautology.
                f.values[x] = 1.0;
                break;
            }
        }
    }
    return f;
}

TruthTable lift(const TruthTable& f, double r) {
    if (r < 1.0) throw std::invalid_argument("lift: r must be >= 1");
    TruthTable g = f;
    for (double& v : g.values) v = 1.0 - 1.0 / r + v / r;
    g.range = std::make_pair(1.0 - 1.0 / r, 1.0);
    return g;
}

TruthTable gen_xos(const std::vector<std::vector<double>>& weights) {
    FunctionSpec spec;
    spec.kind = FunctionKind::Xos;
    spec.n = weights.empty() ? 1 : int(weights[0].size());
    spec.xos_weights = weights;
    return generate(spec).table;
}

GeneratedTable generate(const FunctionSpec& spec) {
    spec.validate();
    const size_t sz = size_t(1) << spec.n;
    TruthTable raw;
    raw.n = spec.n;
    raw.values.assign(sz, 0.0);

    switch (spec.kind) {
        case FunctionKind::Cut:
            for (uint32_t x = 0; x < sz; ++x) {
                double cut = 0;
                for (const auto& e : spec.edges)
                    if (((x >> e.u) & 1u) != ((x >> e.v) & 1u)) cut += e.weight;
                raw.values[x] = cut;
            }
            return rescale_to_unit(std::move(raw));
        case FunctionKind::Coverage:
            for (uint32_t x = 0; x < sz; ++x) {
                std::vector<char> covered(spec.universe_weights.size(), 0);
                for (int i = 0; i < spec.n; ++i)
                    if ((x >> i) & 1u)
                        for (int u : spec.sets[i]) covered[u] = 1;
                double total = 0;
                for (size_t u = 0; u < covered.size(); ++u)
                    if (covered[u]) total += spec.universe_weights[u];
                raw.values[x] = total;
            }
            return rescale_to_unit(std::move(raw));
        case FunctionKind::MatroidRankPartition:
            for (uint32_t x = 0; x < sz; ++x) {
                double rank = 0;
                for (size_t b = 0; b < spec.blocks.size(); ++b) {
                    int inter = 0;
                    for (int i : spec.blocks[b])
                        if ((x >> i) & 1u) ++inter;
                    rank += std::min(inter, spec.capacities[b]);
                }
                raw.values[x] = rank;
            }
            return rescale_to_unit(std::move(raw));
        case FunctionKind::BudgetAdditive:
            for (uint32_t x = 0; x < sz; ++x) {
                double total = 0;
                for (int i = 0; i < spec.n; ++i)
                    if ((x >> i) & 1u) total += spec.item_weights[i];
                raw.values[x] = std::min(total, spec.budget);
            }
            return rescale_to_unit(std::move(raw));
        case FunctionKind::Xos:
            for (uint32_t x = 0; x < sz; ++x) {
                double best = 0;
                for (const auto& row : spec.xos_weights) {
                    double acc = 0;
                    for (int i = 0; i < spec.n; ++i)
                        if ((x >> i) & 1u) acc += row[i];
                    best = std::max(best, acc);
                }
                raw.values[x] = best;
            }
            return rescale_to_unit(std::move(raw));
        case FunctionKind::Dnf:
            return {dnf_to_table(spec.dnf), 1.0};
        case FunctionKind::Parity:
            for (uint32_t x = 0; x < sz; ++x)
                raw.values[x] = double(popcount32(x & spec.variables) & 1);
            raw.range = std::make_pair(0.0, 1.0);
            return {std::move(raw), 1.0};
        case FunctionKind::Conjunction:
            for (uint32_t x = 0; x < sz; ++x)
                raw.values[x] =
                    ((x & spec.variables) == spec.variables) ? 1.0 : 0.0;
            raw.range = std::make_pair(0.0, 1.0);
            return {std::move(raw), 1.0};
        case FunctionKind::Lifted: {
            GeneratedTable in = generate(*spec.inner);
            return {lift(in.table, spec.lift_r), in.scale_divisor};
        }
        case FunctionKind::Scaled: {
            GeneratedTable in = generate(*spec.inner);
            for (double& v : in.table.values) v *= spec.scale;
            if (in.table.range)
                in.table.range = std::make_pair(in.table.range->first * spec.scale,
                                                in.table.range->second * spec.scale);
            return in;
        }
        case FunctionKind::Mixture: {
            raw.range.reset();
            for (const auto& [w, sub] : spec.mixture) {
                GeneratedTable in = generate(*sub);
                if (in.table.n != spec.n)
                    throw std::invalid_argument("mixture component dimension mismatch");
                for (uint32_t x = 0; x < sz; ++x)
                    raw.values[x] += w * in.table.values[x];
            }
            raw.range = std::make_pair(0.0, 1.0);
            return {std::move(raw), 1.0};
        }
    }
    throw std::logic_error("generate: unhandled kind");
}

ClassReport check_submodular(const TruthTable& f) {
    ClassReport rep;
    rep.class_name = "submodular";
    double worst = 0;
    // Local quadruple test: f(x_{i<-1,j<-1}) + f(x_{i<-0,j<-0}) <=
    // f(x_{i<-1,j<-0}) + f(x_{i<-0,j<-1}).
    for (uint32_t x = 0; x < f.size(); ++x)
        for (int i = 0; i < f.n; ++i)
            for (int j = i + 1; j < f.n; ++j) {
                uint32_t bi = 1u << i, bj = 1u << j;
                uint32_t base = x & ~(bi | bj);
                double lhs = f(base | bi | bj) + f(base);
                double rhs = f(base | bi) + f(base | bj);
                double slack = lhs - rhs;
                if (slack > worst) {
                    worst = slack;
                    rep.witness_points = {base};
                    rep.witness_indices = {i, j};
                }
            }
    rep.parameter = worst;
    rep.holds = worst <= 1e-12;
    if (rep.holds) {
        rep.witness_points.clear();
        rep.witness_indices.clear();
    }
    return rep;
}

ClassReport check_monotone(const TruthTable& f) {
    ClassReport rep;
    rep.class_name = "monotone";
    double worst = 0;
    for (uint32_t x = 0; x < f.size(); ++x)
        for (int i = 0; i < f.n; ++i) {
            uint32_t bit = 1u << i;
            double slack = f(x & ~bit) - f(x | bit);
            if (slack > worst) {
                worst = slack;
                rep.witness_points = {x & ~bit};
                rep.witness_indices = {i};
            }
        }
    rep.parameter = worst;
    rep.holds = worst <= 1e-12;
    if (rep.holds) {
        rep.witness_points.clear();
        rep.witness_indices.clear();
    }
    return rep;
}

ClassReport minimal_self_bounding(const TruthTable& f) {
    ClassReport rep;
    rep.class_name = "self_bounding";
    for (double v : f.values)
        if (v < 0)
            throw std::invalid_argument("minimal_self_bounding: negative value");
    double a_star = 0;
    double worst_decrease = 0;
    for (uint32_t x = 0; x < f.size(); ++x) {
        double fx = f(x);
        double dec_sum = 0;
        for (int i = 0; i < f.n; ++i) {
            double dec = fx - std::min(fx, f(x ^ (1u << i)));
            dec_sum += dec;
            if (dec > worst_decrease) {
                worst_decrease = dec;
                rep.witness_points = {x};
                rep.witness_indices = {i};
            }
        }
        if (fx > 0) {
            a_star = std::max(a_star, dec_sum / fx);
        } else if (dec_sum > 0) {
            // Impossible for nonnegative f: all decreases are zero at f(x)=0.
            throw std::logic_error("minimal_self_bounding: positive decrease at f(x)=0");
        }
    }
    rep.parameter = a_star;
    rep.lipschitz = worst_decrease <= 1.0 + 1e-12;
    rep.holds = rep.lipschitz;
    return rep;
}

ClassReport verify_fractional_subadditivity(const TruthTable& f) {
    ClassReport rep;
    rep.class_name = "fractionally_subadditive";
    if (f.n > 12)
        throw std::invalid_argument(
            "verify_fractional_subadditivity: n > 12 not supported");
    const uint32_t sz = uint32_t(f.size());
    // For each A, minimize sum_B beta_B f(B) over fractional covers of A.
    for (uint32_t a_set = 1; a_set < sz; ++a_set) {
        std::vector<int> members;
        for (int i = 0; i < f.n; ++i)
            if ((a_set >> i) & 1u) members.push_back(i);
        LpSolver::Matrix A(members.size(), LpSolver::Vector(sz - 1, 0.0));
        LpSolver::Vector b(members.size(), -1.0), c(sz - 1, 0.0);
        for (uint32_t bset = 1; bset < sz; ++bset) {
            c[bset - 1] = -f(bset);  // maximize -sum f(B) beta_B
            for (size_t k = 0; k < members.size(); ++k)
                if ((bset >> members[k]) & 1u) A[k][bset - 1] = -1.0;
        }
        LpSolver::Vector x;
        double opt = -LpSolver(A, b, c).solve(x);
        if (f(a_set) > opt + 1e-9) {
            rep.holds = false;
            rep.witness_points = {a_set};
            rep.parameter = f(a_set) - opt;
            rep.detail = "f(A) exceeds optimal fractional cover value";
            return rep;
        }
    }
    return rep;
}

FunctionSpec random_cut_spec(int n, Rng& rng) {
    FunctionSpec spec;
    spec.kind = FunctionKind::Cut;
    spec.n = n;
    // Erdos-Renyi-ish weighted graph, density 0.4.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < 0.4)
                spec.edges.push_back({u, v, rng.next_uniform(0.2, 1.0)});
    if (spec.edges.empty()) spec.edges.push_back({0, n > 1 ? 1 : 0, 1.0});
    return spec;
}

FunctionSpec random_coverage_spec(int n, Rng& rng) {
    FunctionSpec spec;
    spec.kind = FunctionKind::Coverage;
    spec.n = n;
    int universe = n + int(rng.next_below(n));
    spec.universe_weights.resize(universe);
    for (double& w : spec.universe_weights) w = rng.next_uniform(0.1, 1.0);
    spec.sets.resize(n);
    for (int i = 0; i < n; ++i) {
        int k = 1 + int(rng.next_below(3));
        for (int j = 0; j < k; ++j)
            spec.sets[i].push_back(int(rng.next_below(universe)));
    }
    return spec;
}

FunctionSpec random_matroid_rank_spec(int n, Rng& rng) {
    FunctionSpec spec;
    spec.kind = FunctionKind::MatroidRankPartition;
    spec.n = n;
    int nblocks = 1 + int(rng.next_below(std::max(1, n / 2)));
    spec.blocks.resize(nblocks);
    for (int i = 0; i < n; ++i)
        spec.blocks[rng.next_below(nblocks)].push_back(i);
    for (int b = 0; b < nblocks; ++b)
        spec.capacities.push_back(1 + int(rng.next_below(2)));
    return spec;
}

FunctionSpec random_xos_spec(int n, int clauses, Rng& rng) {
    FunctionSpec spec;
    spec.kind = FunctionKind::Xos;
    spec.n = n;
    spec.xos_weights.assign(clauses, std::vector<double>(n, 0.0));
    for (auto& row : spec.xos_weights)
        for (double& w : row)
            if (rng.next_double() < 0.5) w = rng.next_uniform(0.0, 1.0);
    return spec;
}

FunctionSpec random_dnf_spec(int n, int width, int terms, Rng& rng) {
    FunctionSpec spec;
    spec.kind = FunctionKind::Dnf;
    spec.n = n;
    spec.dnf.n = n;
    for (int t = 0; t < terms; ++t) {
        std::vector<DnfLiteral> term;
        std::vector<int> vars(n);
        for (int i = 0; i < n; ++i) vars[i] = i;
        // Fisher-Yates prefix for distinct variables.
        for (int j = 0; j < width; ++j) {
            int k = j + int(rng.next_below(uint64_t(n - j)));
            std::swap(vars[j], vars[k]);
            term.push_back({vars[j], rng.next_double() < 0.5});
        }
        spec.dnf.terms.push_back(std::move(term));
    }
    return spec;
}

}  // namespace boolcube
