#pragma once

#include "boolcube/rng.hpp"
#include "boolcube/truth_table.hpp"

namespace boolcube {

// Walsh-Hadamard transform, expectation convention:
// f_hat(S) = E_x[f(x) chi_S(x)].
FourierSpectrum wht_forward(const TruthTable& f);
TruthTable wht_inverse(const FourierSpectrum& s);

// Norms under the uniform distribution: l1 = E|f|, l2 = sqrt(E f^2),
// linf = max |f|.
double norm_l1(const TruthTable& f);
double norm_l2(const TruthTable& f);
double norm_linf(const TruthTable& f);
double norm(const TruthTable& f, double p);  // p in {1, 2, infinity}

// T_rho f, computed by scaling each coefficient by rho^|S| and inverting.
TruthTable noise_operator_exact(const TruthTable& f, double rho);
FourierSpectrum noise_spectrum(const FourierSpectrum& s, double rho);

// One draw of y ~ N_rho(x): each coordinate kept with probability (1+rho)/2.
PointMask noise_sample(PointMask x, double rho, Rng& rng);

// Discrete derivative d_i f(x) = (f(x with bit i set) - f(x with bit i
// clear)) / 2; independent of coordinate i of x.
TruthTable discrete_derivative(const TruthTable& f, int i);

// Inf^kappa_i(f) = E|d_i f|^kappa; Inf^2_i equals sum_{S ni i} f_hat(S)^2.
double influence(const TruthTable& f, int i, double kappa);
InfluenceProfile influence_profile(const TruthTable& f, double kappa);

}  // namespace boolcube
