// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "boolcube/approximation.hpp"
#include "boolcube/fourier.hpp"
#include "boolcube/function_library.hpp"
#include "boolcube/io.hpp"
#include "boolcube/learning.hpp"
#include "boolcube/lowerbounds.hpp"
#include "boolcube/regression.hpp"

using namespace boolcube;

namespace {

struct Inst {
    TruthTable f;
    double a;
    std::string kind;
};

TruthTable random01_table(int n, Rng& rng) {
    TruthTable f;
    f.n = n;
    f.values.resize(size_t(1) << n);
    for (double& v : f.values) v = rng.next_uniform(0.0, 1.0);
    return f;
}

TruthTable conjunction(int n, int width) {
    TruthTable f;
    f.n = n;
    f.values.resize(size_t(1) << n);
    uint32_t mask = (uint32_t(1) << width) - 1;
    for (uint32_t x = 0; x < f.size(); ++x)
        f.values[x] = ((x & mask) == mask) ? 1.0 : 0.0;
    return f;
}

// Generated instance pool: coverage/XOS (a=1), cut (a=2), k-DNF (a=k<=3),
// n in [max(8, 4a), 14].
std::vector<Inst> make_pool(int count, uint64_t seed) {
    std::vector<Inst> pool;
    Rng root(seed);
    for (int i = 0; i < count; ++i) {
        Rng rng = root.split(uint64_t(i));
        int pick = i % 6;
        int n = 8 + (i / 6) % 7;  // 8..14
        switch (pick) {
            case 0:
                pool.push_back(
                    {generate(random_coverage_spec(n, rng)).table, 1.0,
                     "coverage"});
                break;
            case 1:
                pool.push_back(
                    {generate(random_xos_spec(n, 3 + i % 3, rng)).table, 1.0,
                     "xos"});
                break;
            case 2:
                pool.push_back(
                    {generate(random_cut_spec(n, rng)).table, 2.0, "cut"});
                break;
            case 3:
                pool.push_back(
                    {generate(random_dnf_spec(n, 1, 4, rng)).table, 1.0,
                     "1-dnf"});
                break;
            case 4:
                pool.push_back(
                    {generate(random_dnf_spec(n, 2, 5, rng)).table, 2.0,
                     "2-dnf"});
                break;
            default: {
                int n3 = 12 + (i / 6) % 3;  // 3-DNF needs n >= 4a = 12
                pool.push_back(
                    {generate(random_dnf_spec(n3, 3, 5, rng)).table, 3.0,
                     "3-dnf"});
                break;
            }
        }
    }
    return pool;
}

double l1_dist(const TruthTable& f, const TruthTable& g) {
    double acc = 0;
    for (uint32_t x = 0; x < f.size(); ++x) acc += std::fabs(f(x) - g(x));
    return acc / double(f.size());
}

double tau_of(double a, double rho, int n) {
    return std::pow(1.0 - (1.0 - rho) / (2.0 * (1.0 - (a - 1.0) / n)), a);
}

// ---- criteria ------------------------------------------------------------

bool criterion1(std::string& detail) {
    Rng root(101);
    double worst_rt = 0, worst_parseval = 0;
    for (int i = 0; i < 200; ++i) {
        Rng rng = root.split(uint64_t(i));
        int n = 4 + i % 13;  // 4..16
        TruthTable f;
        f.n = n;
        f.values.resize(size_t(1) << n);
        for (double& v : f.values) v = rng.next_uniform(-1.0, 1.0);
        auto s = wht_forward(f);
        auto back = wht_inverse(s);
        double energy_f = 0, energy_s = 0;
        for (uint32_t x = 0; x < f.size(); ++x) {
            worst_rt = std::max(worst_rt, std::fabs(back(x) - f(x)));
            energy_f += f(x) * f(x);
            energy_s += s(x) * s(x);
        }
        energy_f /= double(f.size());
        worst_parseval = std::max(
            worst_parseval, std::fabs(energy_s - energy_f) / energy_f);
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "round-trip %.2e, Parseval rel %.2e",
                  worst_rt, worst_parseval);
    detail = buf;
    return worst_rt <= 1e-12 && worst_parseval <= 1e-9;
}

bool criterion2(std::string& detail) {
    Rng root(102);
    int agree = 0;
    const int cases = 20, m = 100000;
    for (int i = 0; i < cases; ++i) {
        Rng rng = root.split(uint64_t(i));
        int n = 6 + i % 5;
        TruthTable f = random01_table(n, rng);
        PointMask x{uint32_t(rng.next_u64() & ((1u << n) - 1)), n};
        double rho = 0.2 + 0.15 * (i % 5);
        double exact = noise_operator_exact(f, rho)(x.bits);
        double sum = 0, sumsq = 0;
        for (int j = 0; j < m; ++j) {
            double v = f(noise_sample(x, rho, rng).bits);
            sum += v;
            sumsq += v * v;
        }
        double mean = sum / m;
        double se =
            std::sqrt(std::max(0.0, sumsq / m - mean * mean) / m);
        if (std::fabs(mean - exact) <= 3.0 * se + 1e-12) ++agree;
    }
    detail = std::to_string(agree) + "/20 within 3 SE";
    return agree >= 19;
}

bool criterion3(std::string& detail) {
    auto pool = make_pool(100, 103);
    double worst = 1e9;
    for (const auto& inst : pool)
        for (double rho : {0.25, 0.5, 0.9}) {
            auto chk = check_pointwise_noise_bound(inst.f, inst.a, rho);
            worst = std::min(worst, chk.worst_slack);
            if (!chk.holds) {
                detail = inst.kind + " violates at rho=" + std::to_string(rho);
                return false;
            }
        }
    detail = "300 checks, worst slack " + std::to_string(worst);
    return true;
}

bool criterion4(std::string& detail) {
    auto pool = make_pool(100, 104);
    Rng root(1040);
    double worst = 1e9;
    for (size_t i = 0; i < pool.size(); ++i) {
        const auto& inst = pool[i];
        Rng rng = root.split(i);
        std::vector<uint32_t> bases;
        uint32_t argmax = 0;
        for (uint32_t x = 0; x < inst.f.size(); ++x)
            if (inst.f(x) > inst.f(argmax)) argmax = x;
        bases.push_back(argmax);
        for (int j = 0; j < 5; ++j)
            bases.push_back(
                uint32_t(rng.next_u64() & (inst.f.size() - 1)));
        for (uint32_t b : bases) {
            auto chk = check_level_bound(
                level_profile(inst.f, {b, inst.f.n}), inst.a);
            worst = std::min(worst, chk.worst_slack);
            if (!chk.holds) {
                detail = inst.kind + " violates level bound";
                return false;
            }
        }
    }
    detail = "600 base points, worst slack " + std::to_string(worst);
    return true;
}

bool criterion5(std::string& detail) {
    auto pool = make_pool(100, 105);
    double worst = 1e9;
    for (const auto& inst : pool)
        for (double eps : {1.0, 0.75, 0.5}) {
            auto params = derive_params(inst.a, eps, Recipe::Theorem31);
            int d = std::min(params.d, inst.f.n + 1);
            double rho = params.rho;
            double tau = tau_of(inst.a, rho, inst.f.n);
            double l1 = norm_l1(inst.f), l2 = norm_l2(inst.f);
            TruthTable noisy = noise_operator_exact(inst.f, rho);
            TruthTable p = truncate_noisy(inst.f, rho, d).to_table();
            // eq noise-1
            double lhs1 = l1_dist(noisy, inst.f);
            double s1 = 2.0 * (1.0 - tau) * l1 - lhs1;
            // eq noise-2
            double lhs2 = l1_dist(p, noisy);
            double s2 = std::pow(rho, d) * l2 - lhs2;
            // combined theorem bound
            double s3 = eps * l2 - l1_dist(p, inst.f);
            worst = std::min({worst, s1, s2, s3});
            if (std::min({s1, s2, s3}) < -1e-9) {
                detail = inst.kind + " violates at eps=" + std::to_string(eps);
                return false;
            }
        }
    detail = "300 runs x 3 inequalities, worst slack " + std::to_string(worst);
    return true;
}

bool criterion6(std::string& detail) {
    auto pool = make_pool(100, 106);
    for (const auto& inst : pool) {
        if (inst.f.n < 4 * inst.a) continue;
        if (!check_norm_ratio(inst.f, inst.a).holds) {
            detail = inst.kind + " violates the norm ratio";
            return false;
        }
    }
    for (int a : {1, 2, 3}) {
        auto f = conjunction(4 * a, a);
        double ratio = norm_linf(f) / norm_l1(f);
        if (std::fabs(ratio - std::pow(2.0, a)) > 1e-9) {
            detail = "conjunction tightness witness failed";
            return false;
        }
    }
    detail = "all instances + conjunction ratio 2^a witnesses";
    return true;
}

bool criterion7(std::string& detail) {
    auto pool = make_pool(100, 107);
    double worst = 1e9;
    for (const auto& inst : pool) {
        double inf1 = influence_profile(inst.f, 1.0).total;
        double slack = inst.a * norm_l1(inst.f) - inf1;
        worst = std::min(worst, slack);
        if (slack < -1e-9) {
            detail = inst.kind + " violates Inf^1 <= a ||f||_1";
            return false;
        }
    }
    for (int a : {1, 2, 3}) {
        auto f = conjunction(4 * a, a);
        double inf1 = influence_profile(f, 1.0).total;
        if (std::fabs(inf1 - a * norm_l1(f)) > 1e-12) {
            detail = "conjunction equality witness failed";
            return false;
        }
    }
    detail = "worst slack " + std::to_string(worst) + ", equality witnesses ok";
    return true;
}

bool criterion8(std::string& detail) {
    Rng root(108);
    double worst = 1e9;
    for (int i = 0; i < 100; ++i) {
        Rng rng = root.split(uint64_t(i));
        TruthTable f = random01_table(10, rng);
        for (double alpha : {0.01, 0.05})
            for (int d : {2, 4}) {
                auto chk = check_tail_bound(f, 4.0 / 3.0, alpha, d);
                worst = std::min(worst, chk.worst_slack);
                if (!chk.holds) {
                    detail = "tail bound violated";
                    return false;
                }
            }
    }
    detail = "400 checks, worst slack " + std::to_string(worst);
    return true;
}

bool criterion9(std::string& detail) {
    auto pool = make_pool(100, 109);
    int uncapped = 0, capped = 0;
    for (const auto& inst : pool)
        for (double eps : {1.0, 0.5}) {
            auto params = derive_params(inst.a, eps, Recipe::Theorem32);
            auto p = build_junta_polynomial(inst.f, inst.a, eps);
            if (params.d <= inst.f.n) {
                ++uncapped;
                int junta_size = popcount32(*p.support);
                if (double(junta_size) > inst.a / params.alpha) {
                    detail = "junta size bound violated";
                    return false;
                }
            } else {
                ++capped;
            }
            if (l1_error(inst.f, p) > eps + 1e-9) {
                detail = inst.kind + " junta error exceeds eps=" +
                         std::to_string(eps);
                return false;
            }
        }
    detail = std::to_string(uncapped) + " uncapped + " +
             std::to_string(capped) + " capped runs within eps";
    return uncapped > 0 && capped > 0;
}

bool criterion10(std::string& detail) {
    Rng root(110);
    for (int i = 0; i < 50; ++i) {
        Rng rng = root.split(uint64_t(i));
        int k = 1 + i % 3;
        auto f = generate(random_dnf_spec(12, k, 4 + i % 3, rng)).table;
        auto rep = minimal_self_bounding(f);
        if (rep.parameter > k + 1e-9 || !rep.lipschitz) {
            detail = "a* or Lipschitz failed for a k-DNF";
            return false;
        }
        for (double r : {1.0, 2.0, double(k)}) {
            auto g = lift(f, r);
            auto grep = minimal_self_bounding(g);
            if (grep.parameter > rep.parameter / r + 1e-9) {
                detail = "lifted a* exceeds a*/r";
                return false;
            }
            for (double v : g.values)
                if (v < 1.0 - 1.0 / r - 1e-12 || v > 1.0 + 1e-12) {
                    detail = "lifted range violated";
                    return false;
                }
        }
    }
    detail = "50 k-DNFs, lift algebra exact";
    return true;
}

bool criterion11(std::string& detail) {
    const int n = 6;
    for (int k = 1; k <= 4; ++k) {
        double eps = 1.0 / (4.0 * k);  // makes k = floor(a/(4 eps)), r = k
        auto inst = build_parity_instance(1.0, eps, n);
        if (inst.k != k) {
            detail = "instance recipe produced wrong k";
            return false;
        }
        auto res = verify_degree_bound(inst);
        if (std::fabs(res.inner_optimum - 0.5) > 1e-6) {
            detail = "parity optimum != 0.5 at k=" + std::to_string(k);
            return false;
        }
        if (std::fabs(res.lifted_optimum - 2.0 * eps) > 1e-6) {
            detail = "lifted optimum != 2 eps at k=" + std::to_string(k);
            return false;
        }
    }
    detail = "k=1..4 parity optima 0.5, lifted optima 2eps";
    return true;
}

bool criterion12(std::string& detail) {
    const int runs = 20;
    int ok = 0;
    Rng root(112);
    for (int i = 0; i < runs; ++i) {
        Rng rng = root.split(uint64_t(i));
        auto f = generate(random_cut_spec(12, rng)).table;
        LearnerConfig cfg;
        cfg.a = 2.0;
        cfg.eps = 0.5;
        cfg.seed = 9000 + uint64_t(i);
        cfg.degree = 2;  // cuts have exact degree 2
        cfg.m_regress = 600;
        cfg.theta = 0.005;
        Oracle o1(OracleMode::ValueQuery, f, cfg.seed);
        auto h1 = pac_learn_submodular(o1, cfg);
        if (evaluate_hypothesis(h1, f) <= cfg.eps) ++ok;
        // Bit-exact transcript reproducibility per seed.
        Oracle o2(OracleMode::ValueQuery, f, cfg.seed);
        auto h2 = pac_learn_submodular(o2, cfg);
        if (h1.transcript.dump() != h2.transcript.dump() ||
            h1.polynomial.terms != h2.polynomial.terms) {
            detail = "transcript not reproducible at seed " +
                     std::to_string(cfg.seed);
            return false;
        }
    }
    detail = std::to_string(ok) + "/20 runs within eps, transcripts bit-exact";
    return 3 * ok >= 2 * runs;
}

bool criterion13(std::string& detail) {
    const int runs = 20;
    Rng root(113);
    std::string summary;
    for (double eta : {0.1, 0.25}) {
        Rng rng = root.split(uint64_t(eta * 100));
        auto f = generate(random_coverage_spec(10, rng)).table;
        LearnerConfig cfg;
        cfg.a = 1.0;
        cfg.eps = 0.5;
        cfg.degree = 2;
        cfg.m_regress = 600;
        double bound = 0;
        int ok = 0;
        double delta = -1;
        for (int i = 0; i < runs; ++i) {
            cfg.seed = 9100 + uint64_t(i);
            Oracle o(OracleMode::RandomExample, f, cfg.seed,
                     LabelChannel::UniformNoise, eta);
            auto h = agnostic_learn(o, cfg);
            if (delta < 0) {
                bound = h.transcript["spectral_bound"].get<double>();
                delta = best_l1_degree_bounded(f, *cfg.degree, bound)
                            .empirical_error;
            }
            if (evaluate_hypothesis(h, f) <= delta + cfg.eps + 1e-6) ++ok;
        }
        summary += "eta=" + std::to_string(eta) + ": " + std::to_string(ok) +
                   "/20; ";
        if (3 * ok < 2 * runs) {
            detail = summary;
            return false;
        }
    }
    detail = summary + "Delta from the full-cube class LP";
    return true;
}

bool criterion14(std::string& detail) {
    const int runs = 20;
    int ok = 0;
    Rng root(114);
    for (int i = 0; i < runs; ++i) {
        Rng rng = root.split(uint64_t(i));
        auto f = generate(random_dnf_spec(12, 2, 4, rng)).table;
        LearnerConfig cfg;
        cfg.a = 2.0;
        cfg.eps = 0.5;
        cfg.seed = 9200 + uint64_t(i);
        cfg.degree = 2;
        cfg.m_regress = 400;
        Oracle o(OracleMode::RandomExample, f, cfg.seed);
        auto h = reduce_via_lifting(
            o, cfg, 2.0,
            [](Oracle& oracle, const LearnerConfig& c) {
                return agnostic_learn(oracle, c);
            });
        if (evaluate_hypothesis(h, f) <= cfg.eps) ++ok;
    }
    detail = std::to_string(ok) + "/20 lifted 2-DNF runs within eps";
    return 3 * ok >= 2 * runs;
}

bool criterion15(std::string& detail) {
    Rng rng(115);
    TruthTable f = random01_table(5, rng);
    auto spec = wht_forward(f);
    auto reg = best_l1_degree_bounded(f, 5);
    double worst = 0;
    for (uint32_t s = 0; s < 32; ++s) {
        auto it = reg.polynomial.terms.find(s);
        double c = it == reg.polynomial.terms.end() ? 0.0 : it->second;
        worst = std::max(worst, std::fabs(c - spec(s)));
    }
    if (worst > 1e-6) {
        detail = "regression does not reproduce the spectrum";
        return false;
    }
    for (int j = 0; j < 10000; ++j) {
        double v = rng.next_uniform(-2.0, 3.0);
        double y = rng.next_uniform(0.0, 1.0);
        double clipped = std::fmin(1.0, std::fmax(0.0, v));
        if (std::fabs(clipped - y) > std::fabs(v - y) + 1e-15) {
            detail = "clipping increased an error";
            return false;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "spectrum match %.2e, clipping ok on 1e4 pairs", worst);
    detail = buf;
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "Fourier round-trip + Parseval", criterion1},
        {2, "noise operator Monte Carlo consistency", criterion2},
        {3, "pointwise noise bound on the instance pool", criterion3},
        {4, "level bound at argmax + random bases", criterion4},
        {5, "noisy truncation bound and its components", criterion5},
        {6, "norm ratio ||f||_inf <= 3^a ||f||_1", criterion6},
        {7, "total l1-influence <= a ||f||_1", criterion7},
        {8, "low-influence Fourier tail bound", criterion8},
        {9, "junta polynomial meets the l1 target", criterion9},
        {10, "k-DNF self-bounding parameter and lifting", criterion10},
        {11, "parity degree lower bound via exact LP", criterion11},
        {12, "PAC pipeline on random cuts, 20 seeds", criterion12},
        {13, "agnostic pipeline under label noise", criterion13},
        {14, "2-DNF learning through the lifting reduction", criterion14},
        {15, "regression sanity + clipping", criterion15},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        std::printf("criterion %2d [%s] (%6.2fs) %s -- %s\n", c.id,
                    pass ? "PASS" : "FAIL", secs, c.name, detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
