#include "boolcube/regression.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "boolcube/lp.hpp"

namespace boolcube {

void SampleSet::validate() const {
    if (n < 1 || n > max_dimension())
        throw std::invalid_argument("SampleSet: dimension out of range");
    for (const auto& r : records) {
        if (r.x >> n)
            throw std::invalid_argument("SampleSet: point outside dimension");
        if (!std::isfinite(r.y))
            throw std::invalid_argument("SampleSet: non-finite label");
    }
}

std::vector<uint32_t> basis_subsets(uint32_t support, int d) {
    std::vector<uint32_t> out;
    // Enumerate subsets of the support mask, then order by (degree, mask).
    uint32_t sub = support;
    for (;;) {
        if (popcount32(sub) <= d) out.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & support;
    }
    std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
        int da = popcount32(a), db = popcount32(b);
        return da != db ? da < db : a < b;
    });
    return out;
}

std::vector<uint32_t> basis_up_to_degree(int n, int d) {
    return basis_subsets((uint32_t(1) << n) - 1, d);
}

RegressionResult l1_regress(const RegressionProblem& problem) {
    problem.samples.validate();
    const auto& records = problem.samples.records;
    const size_t m = records.size();
    const size_t K = problem.basis.size();
    if (m == 0) throw std::invalid_argument("l1_regress: no samples");
    if (K == 0) throw std::invalid_argument("l1_regress: empty basis");
    if (problem.spectral_bound && *problem.spectral_bound < 0)
        throw std::invalid_argument("l1_regress: negative spectral bound");
    for (uint32_t s : problem.basis)
        if (s >> problem.samples.n)
            throw std::invalid_argument("l1_regress: basis outside dimension");

    // Variables: c+ (K), c- (K), t (m), all >= 0.
    const size_t nvars = 2 * K + m;
    const size_t nrows = 2 * m + (problem.spectral_bound ? 1 : 0);
    LpSolver::Matrix A(nrows, LpSolver::Vector(nvars, 0.0));
    LpSolver::Vector b(nrows, 0.0), c(nvars, 0.0);

    for (size_t j = 0; j < m; ++j) {
        for (size_t k = 0; k < K; ++k) {
            double v = chi(problem.basis[k], records[j].x);
            A[2 * j][k] = v;
            A[2 * j][K + k] = -v;
            A[2 * j + 1][k] = -v;
            A[2 * j + 1][K + k] = v;
        }
        A[2 * j][2 * K + j] = -1.0;
        A[2 * j + 1][2 * K + j] = -1.0;
        b[2 * j] = records[j].y;
        b[2 * j + 1] = -records[j].y;
        c[2 * K + j] = -1.0 / double(m);
    }
    if (problem.spectral_bound) {
        for (size_t k = 0; k < 2 * K; ++k) A[2 * m][k] = 1.0;
        b[2 * m] = *problem.spectral_bound;
    }

    LpSolver::Vector x;
    double obj = LpSolver(A, b, c).solve(x);
    if (obj == -LpSolver::kInf)
        throw std::runtime_error("l1_regress: LP reported infeasible");

    RegressionResult res;
    res.polynomial.n = problem.samples.n;
    int deg = 0;
    for (uint32_t s : problem.basis) deg = std::max(deg, popcount32(s));
    res.polynomial.degree = deg;
    for (size_t k = 0; k < K; ++k) {
        double coeff = x[k] - x[K + k];
        if (std::fabs(coeff) > LpSolver::kEps)
            res.polynomial.terms[problem.basis[k]] = coeff;
    }
    // Recompute the objective from the coefficients directly.
    double err = 0;
    for (const auto& r : records)
        err += std::fabs(res.polynomial.eval(r.x) - r.y);
    res.empirical_error = err / double(m);
    return res;
}

RegressionResult best_l1_degree_bounded(const TruthTable& f, int d,
                                        std::optional<double> spectral_bound) {
    RegressionProblem prob;
    prob.basis = basis_up_to_degree(f.n, d);
    if (double(f.size()) * double(prob.basis.size()) > 1e7)
        throw std::invalid_argument(
            "best_l1_degree_bounded: problem size guard exceeded");
    prob.samples.n = f.n;
    prob.samples.provenance = SampleProvenance::ExactCube;
    prob.samples.records.reserve(f.size());
    for (uint32_t x = 0; x < f.size(); ++x)
        prob.samples.records.push_back({x, f(x)});
    prob.spectral_bound = spectral_bound;
    return l1_regress(prob);
}

std::vector<std::pair<uint32_t, double>> characters_to_monomials(
    const SparsePolynomial& p) {
    // chi_S(x) = prod_{i in S} (1 - 2 x_i); the monomial T picks up
    // (-2)^|T| from every S containing T.
    std::map<uint32_t, double> mono;
    for (const auto& [s, coeff] : p.terms) {
        uint32_t sub = s;
        for (;;) {
            mono[sub] += std::pow(-2.0, popcount32(sub)) * coeff;
            if (sub == 0) break;
            sub = (sub - 1) & s;
        }
    }
    std::vector<std::pair<uint32_t, double>> out;
    for (const auto& [t, c] : mono)
        if (c != 0.0) out.emplace_back(t, c);
    return out;
}

}  // namespace boolcube
