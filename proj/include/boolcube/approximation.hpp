#pragma once

#include <string>
#include <vector>

#include "boolcube/fourier.hpp"
#include "boolcube/sparse_poly.hpp"
#include "boolcube/truth_table.hpp"

namespace boolcube {

enum class Recipe { Theorem31, Theorem32 };

// Parameter recipes, natural log throughout:
//   theorem31: d = ceil((2a/eps) ln(3/eps)),  rho = 1 - eps/(2a)
//   theorem32: d = ceil((4a/eps) ln(6/eps)),  rho = 1 - eps/(2a),
//              alpha = 3^(-2d-1) eps^4 / a^2
struct ApproxParams {
    double a = 1.0;
    double eps = 1.0;
    Recipe recipe = Recipe::Theorem31;
    int d = 0;
    double rho = 0.0;
    double alpha = 0.0;  // only for theorem32
};

ApproxParams derive_params(double a, double eps, Recipe recipe);

// p(x) = sum_{|S| < d} rho^|S| f_hat(S) chi_S(x)
SparsePolynomial truncate_noisy(const TruthTable& f, double rho, int d);

// phi(t): exact average of f over points at Hamming distance t from x.
struct LevelProfile {
    PointMask base;
    std::vector<double> values;  // index t = 0..n
};

LevelProfile level_profile(const TruthTable& f, PointMask x);

struct BoundCheck {
    bool holds = true;
    // Minimum of LHS - RHS over all checked points/levels; negative below
    // -tolerance means violated.
    double worst_slack = 0.0;
    std::string detail;
};

// phi(t) >= (1 - t/(n-a+1))^a phi(0); levels where the base drops below
// zero are vacuous for nonnegative f.
BoundCheck check_level_bound(const LevelProfile& profile, double a);

// T_rho f(x) >= tau f(x) with tau = (1 - (1-rho)/(2(1-(a-1)/n)))^a, at
// every x; slack is min_x (T_rho f(x) - tau f(x)).
BoundCheck check_pointwise_noise_bound(const TruthTable& f, double a,
                                       double rho);

// ||f||_1 <= ||f||_inf <= 3^a ||f||_1 for nonnegative a-self-bounding f.
BoundCheck check_norm_ratio(const TruthTable& f, double a);

// I = { i : Inf^kappa_i(f) >= alpha }, returned as a bitmask.
uint32_t junta_select(const TruthTable& f, double kappa, double alpha);

// sum_{S not subset of I, |S| <= d} f_hat(S)^2 <=
//   (kappa-1)^(1-d) alpha^(2/kappa-1) Inf^kappa(f)
BoundCheck check_tail_bound(const TruthTable& f, double kappa, double alpha,
                            int d);

// Junta polynomial of the theorem32 recipe: terms rho^|S| f_hat(S) for
// S subset of I, |S| <= min(d, n).
SparsePolynomial build_junta_polynomial(const TruthTable& f, double a,
                                        double eps);

}  // namespace boolcube
