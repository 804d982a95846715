#include "boolcube/approximation.hpp"

#include <cmath>
#include <stdexcept>

#include "boolcube/function_library.hpp"

namespace boolcube {

ApproxParams derive_params(double a, double eps, Recipe recipe) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("derive_params: eps must be in (0,1]");
    if (a < 1.0) throw std::invalid_argument("derive_params: a must be >= 1");
    ApproxParams p;
    p.a = a;
    p.eps = eps;
    p.recipe = recipe;
    p.rho = 1.0 - eps / (2.0 * a);
    if (recipe == Recipe::Theorem31) {
        p.d = int(std::ceil(2.0 * a / eps * std::log(3.0 / eps)));
    } else {
        p.d = int(std::ceil(4.0 * a / eps * std::log(6.0 / eps)));
        p.alpha = std::pow(3.0, -2.0 * p.d - 1.0) * std::pow(eps, 4.0) / (a * a);
    }
    return p;
}

SparsePolynomial truncate_noisy(const TruthTable& f, double rho, int d) {
    if (d < 0 || d > f.n + 1)
        throw std::invalid_argument("truncate_noisy: d out of range");
    FourierSpectrum spec = wht_forward(f);
    SparsePolynomial p;
    p.n = f.n;
    p.degree = d > 0 ? d - 1 : 0;
    for (uint32_t s = 0; s < spec.size(); ++s) {
        int deg = popcount32(s);
        if (deg < d && spec(s) != 0.0)
            p.set(s, std::pow(rho, deg) * spec(s));
    }
    return p;
}

LevelProfile level_profile(const TruthTable& f, PointMask x) {
    if (x.n != f.n)
        throw std::invalid_argument("level_profile: dimension mismatch");
    LevelProfile prof;
    prof.base = x;
    std::vector<double> sums(f.n + 1, 0.0);
    std::vector<double> counts(f.n + 1, 0.0);
    for (uint32_t y = 0; y < f.size(); ++y) {
        int t = popcount32(y ^ x.bits);
        sums[t] += f(y);
        counts[t] += 1.0;
    }
    prof.values.resize(f.n + 1);
    for (int t = 0; t <= f.n; ++t) prof.values[t] = sums[t] / counts[t];
    return prof;
}

BoundCheck check_level_bound(const LevelProfile& profile, double a) {
    BoundCheck res;
    const int n = int(profile.values.size()) - 1;
    const double phi0 = profile.values[0];
    double worst = 1.0 / 0.0;
    for (int t = 0; t <= n; ++t) {
        double base = 1.0 - double(t) / (n - a + 1.0);
        // Vacuous once the base goes negative: RHS <= 0 <= phi(t).
        double rhs = base < 0.0 ? 0.0 : std::pow(base, a) * phi0;
        worst = std::min(worst, profile.values[t] - rhs);
    }
    res.worst_slack = worst;
    res.holds = worst >= -1e-9;
    return res;
}

BoundCheck check_pointwise_noise_bound(const TruthTable& f, double a,
                                       double rho) {
    BoundCheck res;
    if (f.n < 4 * a) res.detail = "warning: n < 4a";
    const double tau =
        std::pow(1.0 - (1.0 - rho) / (2.0 * (1.0 - (a - 1.0) / f.n)), a);
    TruthTable noisy = noise_operator_exact(f, rho);
    double worst = 1.0 / 0.0;
    for (uint32_t x = 0; x < f.size(); ++x)
        worst = std::min(worst, noisy(x) - tau * f(x));
    res.worst_slack = worst;
    res.holds = worst >= -1e-9;
    return res;
}

BoundCheck check_norm_ratio(const TruthTable& f, double a) {
    BoundCheck res;
    const double l1 = norm_l1(f);
    const double linf = norm_linf(f);
    const double slack1 = linf - l1;
    const double slack2 = std::pow(3.0, a) * l1 - linf;
    res.worst_slack = std::min(slack1, slack2);
    res.holds = res.worst_slack >= -1e-9;
    return res;
}

uint32_t junta_select(const TruthTable& f, double kappa, double alpha) {
    if (alpha <= 0.0)
        throw std::invalid_argument("junta_select: alpha must be positive");
    uint32_t mask = 0;
    for (int i = 0; i < f.n; ++i)
        if (influence(f, i, kappa) >= alpha) mask |= (1u << i);
    return mask;
}

BoundCheck check_tail_bound(const TruthTable& f, double kappa, double alpha,
                            int d) {
    BoundCheck res;
    const uint32_t junta = junta_select(f, kappa, alpha);
    FourierSpectrum spec = wht_forward(f);
    double lhs = 0;
    for (uint32_t s = 0; s < spec.size(); ++s)
        if (popcount32(s) <= d && (s & ~junta) != 0) lhs += spec(s) * spec(s);
    const double total_inf = influence_profile(f, kappa).total;
    const double rhs = std::pow(kappa - 1.0, 1.0 - d) *
                       std::pow(alpha, 2.0 / kappa - 1.0) * total_inf;
    res.worst_slack = rhs - lhs;
    res.holds = res.worst_slack >= -1e-9;
    return res;
}

SparsePolynomial build_junta_polynomial(const TruthTable& f, double a,
                                        double eps) {
    ClassReport sb = minimal_self_bounding(f);
    if (!sb.lipschitz || sb.parameter > a + 1e-9)
        throw std::invalid_argument(
            "build_junta_polynomial: f is not a-self-bounding (a* = " +
            std::to_string(sb.parameter) + ")");
    ApproxParams params = derive_params(a, eps, Recipe::Theorem32);
    const int d = std::min(params.d, f.n);
    const uint32_t junta = junta_select(f, 4.0 / 3.0, params.alpha);
    FourierSpectrum spec = wht_forward(f);
    SparsePolynomial p;
    p.n = f.n;
    p.degree = d;
    p.support = junta;
    for (uint32_t s = 0; s < spec.size(); ++s) {
        int deg = popcount32(s);
        if (deg <= d && (s & ~junta) == 0 && spec(s) != 0.0)
            p.set(s, std::pow(params.rho, deg) * spec(s));
    }
    return p;
}

}  // namespace boolcube
