#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "boolcube/truth_table.hpp"

namespace boolcube {

// Multilinear polynomial in the character basis: p(x) = sum_S c_S chi_S(x),
// with a degree bound and an optional support restriction to a variable set.
struct SparsePolynomial {
    int n = 0;
    int degree = 0;
    // Variable set I as a bitmask; when present every term S is a subset.
    std::optional<uint32_t> support;
    std::map<uint32_t, double> terms;

    double eval(uint32_t x) const {
        double acc = 0;
        for (const auto& [s, c] : terms) acc += c * chi(s, x);
        return acc;
    }

    void set(uint32_t s, double c) {
        if (c != 0.0) terms[s] = c;
    }

    // Throws on a term violating the degree bound or support restriction.
    void validate() const;

    // sum_S |c_S|
    double spectral_norm() const;

    TruthTable to_table() const;
};

// E_x |f(x) - p(x)| over the full cube.
double l1_error(const TruthTable& f, const SparsePolynomial& p);

}  // namespace boolcube
