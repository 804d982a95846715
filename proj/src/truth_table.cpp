#include "boolcube/truth_table.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace boolcube {

int max_dimension() {
    static int cap = [] {
        if (const char* env = std::getenv("BOOLCUBE_MAX_N")) {
            int v = std::atoi(env);
            if (v >= 1 && v <= 30) return v;
        }
        return 24;
    }();
    return cap;
}

TruthTable::TruthTable(int n_, std::vector<double> values_,
                       std::optional<std::pair<double, double>> range_)
    : n(n_), values(std::move(values_)), range(range_) {
    validate();
}

TruthTable TruthTable::constant(int n, double c) {
    return TruthTable(n, std::vector<double>(size_t(1) << n, c),
                      std::make_pair(c, c));
}

void TruthTable::validate() const {
    if (n < 1 || n > max_dimension())
        throw std::invalid_argument("TruthTable: dimension out of range");
    if (values.size() != (size_t(1) << n))
        throw std::invalid_argument("TruthTable: length must be 2^n");
    for (double v : values) {
        if (!std::isfinite(v))
            throw std::invalid_argument("TruthTable: non-finite value");
        if (range && (v < range->first - 1e-12 || v > range->second + 1e-12))
            throw std::invalid_argument(
                "TruthTable: value outside declared range");
    }
}

std::string format_point(uint32_t x, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((x >> i) & 1u) s[i] = '1';
    return s;
}

}  // namespace boolcube
