#include "boolcube/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boolcube {

namespace {

// In-place butterfly; computes a[S] = sum_x chi_S(x) a[x].
void wht_in_place(std::vector<double>& a) {
    const size_t sz = a.size();
    for (size_t len = 1; len < sz; len <<= 1) {
        for (size_t i = 0; i < sz; i += len << 1) {
            for (size_t j = i; j < i + len; ++j) {
                double u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
        }
    }
}

}  // namespace

FourierSpectrum wht_forward(const TruthTable& f) {
    std::vector<double> c = f.values;
    wht_in_place(c);
    const double inv = 1.0 / double(f.size());
    for (double& v : c) v *= inv;
    return {f.n, std::move(c)};
}

TruthTable wht_inverse(const FourierSpectrum& s) {
    std::vector<double> v = s.coeffs;
    wht_in_place(v);
    TruthTable f;
    f.n = s.n;
    f.values = std::move(v);
    return f;
}

double norm_l1(const TruthTable& f) {
    double acc = 0;
    for (double v : f.values) acc += std::fabs(v);
    return acc / double(f.size());
}

double norm_l2(const TruthTable& f) {
    double acc = 0;
    for (double v : f.values) acc += v * v;
    return std::sqrt(acc / double(f.size()));
}

double norm_linf(const TruthTable& f) {
    double acc = 0;
    for (double v : f.values) acc = std::max(acc, std::fabs(v));
    return acc;
}

double norm(const TruthTable& f, double p) {
    if (p == 1.0) return norm_l1(f);
    if (p == 2.0) return norm_l2(f);
    if (std::isinf(p)) return norm_linf(f);
    throw std::invalid_argument("norm: p must be 1, 2 or infinity");
}

FourierSpectrum noise_spectrum(const FourierSpectrum& s, double rho) {
    FourierSpectrum out = s;
    for (size_t mask = 0; mask < out.coeffs.size(); ++mask)
        out.coeffs[mask] *= std::pow(rho, popcount32(uint32_t(mask)));
    return out;
}

TruthTable noise_operator_exact(const TruthTable& f, double rho) {
    if (rho < -1.0 || rho > 1.0)
        throw std::invalid_argument("noise_operator_exact: rho out of [-1,1]");
    TruthTable out = wht_inverse(noise_spectrum(wht_forward(f), rho));
    return out;
}

PointMask noise_sample(PointMask x, double rho, Rng& rng) {
    if (rho < -1.0 || rho > 1.0)
        throw std::invalid_argument("noise_sample: rho out of [-1,1]");
    const double flip_prob = (1.0 - rho) / 2.0;
    uint32_t y = x.bits;
    for (int i = 0; i < x.n; ++i)
        if (rng.next_double() < flip_prob) y ^= (1u << i);
    return {y, x.n};
}

TruthTable discrete_derivative(const TruthTable& f, int i) {
    if (i < 0 || i >= f.n)
        throw std::invalid_argument("discrete_derivative: index out of range");
    TruthTable out;
    out.n = f.n;
    out.values.resize(f.size());
    const uint32_t bit = 1u << i;
    for (uint32_t x = 0; x < f.size(); ++x)
        out.values[x] = 0.5 * (f(x | bit) - f(x & ~bit));
    return out;
}

double influence(const TruthTable& f, int i, double kappa) {
    if (kappa < 1.0)
        throw std::invalid_argument("influence: kappa must be >= 1");
    TruthTable d = discrete_derivative(f, i);
    double acc = 0;
    for (double v : d.values) acc += std::pow(std::fabs(v), kappa);
    return acc / double(f.size());
}

InfluenceProfile influence_profile(const TruthTable& f, double kappa) {
    InfluenceProfile p;
    p.kappa = kappa;
    p.per_variable.resize(f.n);
    for (int i = 0; i < f.n; ++i) {
        p.per_variable[i] = influence(f, i, kappa);
        p.total += p.per_variable[i];
    }
    return p;
}

}  // namespace boolcube
