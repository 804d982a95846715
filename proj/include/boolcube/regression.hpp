#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolcube/sparse_poly.hpp"
#include "boolcube/truth_table.hpp"

namespace boolcube {

enum class SampleProvenance { ExactCube, RandomOracle, Noisy };

struct Sample {
    uint32_t x = 0;
    double y = 0.0;
};

struct SampleSet {
    int n = 0;
    std::vector<Sample> records;
    SampleProvenance provenance = SampleProvenance::RandomOracle;
    std::optional<uint64_t> seed;

    void validate() const;
};

struct RegressionProblem {
    SampleSet samples;
    std::vector<uint32_t> basis;  // subset bitmasks (characters)
    std::optional<double> spectral_bound;
    double tolerance = 1e-6;
};

struct RegressionResult {
    SparsePolynomial polynomial;
    double empirical_error = 0.0;  // (1/m) sum |p(x_j) - y_j|
};

// Minimize (1/m) sum_j |sum_S c_S chi_S(x_j) - y_j| over coefficients c,
// subject to sum_S |c_S| <= B when a spectral bound is present. Solved as
// an LP (slack per sample, split coefficients); deterministic for a fixed
// input ordering.
RegressionResult l1_regress(const RegressionProblem& problem);

// Exact minimum of E_x |f(x) - p(x)| over polynomials of degree <= d,
// via a full-cube LP. Guard: 2^n * basis size <= 10^7.
RegressionResult best_l1_degree_bounded(const TruthTable& f, int d,
                                        std::optional<double> spectral_bound =
                                            std::nullopt);

// All subset masks of `support` with popcount <= d, by (degree, mask) order.
std::vector<uint32_t> basis_subsets(uint32_t support, int d);
std::vector<uint32_t> basis_up_to_degree(int n, int d);

// Conversion between the character basis chi_S and {0,1} monomials
// prod_{i in S} x_i. Both directions are exact affine maps.
std::vector<std::pair<uint32_t, double>> characters_to_monomials(
    const SparsePolynomial& p);

}  // namespace boolcube
