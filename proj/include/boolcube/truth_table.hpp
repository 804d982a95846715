#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boolcube {

// Hard cap on the cube dimension for dense representations. Can be raised
// through the BOOLCUBE_MAX_N environment variable (the CLI prints a memory
// estimate when it does so).
int max_dimension();

// A point of {0,1}^n packed into the low n bits of a word; bit i is
// coordinate i.
struct PointMask {
    uint32_t bits = 0;
    int n = 0;

    bool get(int i) const { return (bits >> i) & 1u; }
    PointMask with_bit(int i, bool b) const {
        uint32_t m = b ? (bits | (1u << i)) : (bits & ~(1u << i));
        return {m, n};
    }
    PointMask flipped(int i) const { return {bits ^ (1u << i), n}; }
};

// Dense evaluation of f: {0,1}^n -> R. Index j holds f(x) where the bits of
// j are the coordinates of x.
struct TruthTable {
    int n = 0;
    std::vector<double> values;
    // Declared range [lo, hi]; honored by every entry when present.
    std::optional<std::pair<double, double>> range;

    TruthTable() = default;
    TruthTable(int n, std::vector<double> values,
               std::optional<std::pair<double, double>> range = std::nullopt);

    static TruthTable constant(int n, double c);

    size_t size() const { return values.size(); }
    double operator()(uint32_t x) const { return values[x]; }
    double& operator[](uint32_t x) { return values[x]; }
    double at(uint32_t x) const { return values[x]; }

    // Throws std::invalid_argument on inconsistent dimension/length,
    // non-finite entries, or a violated declared range.
    void validate() const;
};

// Fourier coefficients f_hat(S) indexed by subset bitmask S, expectation
// normalization: f_hat(S) = E_x[f(x) chi_S(x)].
struct FourierSpectrum {
    int n = 0;
    std::vector<double> coeffs;

    size_t size() const { return coeffs.size(); }
    double operator()(uint32_t s) const { return coeffs[s]; }
};

// Per-variable l_kappa^kappa influences for a declared exponent.
struct InfluenceProfile {
    double kappa = 2.0;
    std::vector<double> per_variable;
    double total = 0.0;
};

inline int popcount32(uint32_t x) { return __builtin_popcount(x); }

// chi_S(x) = (-1)^{sum_{i in S} x_i}
inline double chi(uint32_t s, uint32_t x) {
    return (popcount32(s & x) & 1) ? -1.0 : 1.0;
}

std::string format_point(uint32_t x, int n);

}  // namespace boolcube
