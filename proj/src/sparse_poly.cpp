#include "boolcube/sparse_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace boolcube {

void SparsePolynomial::validate() const {
    for (const auto& [s, c] : terms) {
        if (popcount32(s) > degree)
            throw std::invalid_argument("SparsePolynomial: term above degree");
        if (support && (s & ~*support) != 0)
            throw std::invalid_argument("SparsePolynomial: term outside support");
        if (c == 0.0)
            throw std::invalid_argument("SparsePolynomial: explicit zero term");
        if (s >> n)
            throw std::invalid_argument("SparsePolynomial: term outside dimension");
    }
}

double SparsePolynomial::spectral_norm() const {
    double acc = 0;
    for (const auto& [s, c] : terms) acc += std::fabs(c);
    return acc;
}

TruthTable SparsePolynomial::to_table() const {
    TruthTable f;
    f.n = n;
    f.values.resize(size_t(1) << n);
    for (uint32_t x = 0; x < f.size(); ++x) f.values[x] = eval(x);
    return f;
}

double l1_error(const TruthTable& f, const SparsePolynomial& p) {
    if (f.n != p.n)
        throw std::invalid_argument("l1_error: dimension mismatch");
    double acc = 0;
    for (uint32_t x = 0; x < f.size(); ++x) acc += std::fabs(f(x) - p.eval(x));
    return acc / double(f.size());
}

}  // namespace boolcube
