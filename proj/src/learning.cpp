#include "boolcube/learning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boolcube/approximation.hpp"

namespace boolcube {

Oracle::Oracle(OracleMode mode, TruthTable target, uint64_t seed,
               LabelChannel channel, double noise_eta)
    : seed_(seed), mode_(mode), target_(std::move(target)), channel_(channel),
      noise_eta_(noise_eta), rng_(Rng(seed).split(0x0a51)) {}

double Oracle::label(uint32_t x) {
    double y = target_(x);
    if (channel_ == LabelChannel::UniformNoise) {
        y += rng_.next_uniform(-noise_eta_, noise_eta_);
        y = std::clamp(y, 0.0, 1.0);
    }
    if (label_lift_r_ != 1.0) y = 1.0 - (1.0 - y) / label_lift_r_;
    return y;
}

Sample Oracle::draw_example() {
    if (mode_ != OracleMode::RandomExample)
        throw std::logic_error("Oracle: not in random-example mode");
    if (examples_drawn_ >= example_budget_)
        throw std::runtime_error("Oracle: example budget exhausted");
    ++examples_drawn_;
    uint32_t x = uint32_t(rng_.next_u64() & ((uint64_t(1) << target_.n) - 1));
    return {x, label(x)};
}

double Oracle::query(uint32_t x) {
    if (mode_ != OracleMode::ValueQuery)
        throw std::logic_error("Oracle: not in value-query mode");
    if (queries_made_ >= query_budget_)
        throw std::runtime_error("Oracle: query budget exhausted");
    ++queries_made_;
    return label(x);
}

SampleSet draw_samples(Oracle& oracle, int m) {
    SampleSet set;
    set.n = oracle.dimension();
    set.provenance = SampleProvenance::RandomOracle;
    set.records.reserve(size_t(m));
    if (oracle.mode() == OracleMode::RandomExample) {
        for (int j = 0; j < m; ++j)
            set.records.push_back(oracle.draw_example());
    } else {
        // Value-query mode: uniform points from a stream keyed on the query
        // counter, so successive batches use fresh points.
        Rng rng = oracle.stream(0xd3a30000ULL + oracle.queries_made());
        const uint64_t mask = (uint64_t(1) << set.n) - 1;
        for (int j = 0; j < m; ++j) {
            uint32_t x = uint32_t(rng.next_u64() & mask);
            set.records.push_back({x, oracle.query(x)});
        }
    }
    return set;
}

JuntaEstimate identify_influential(Oracle& oracle, double theta, double delta,
                                   int m_override) {
    JuntaEstimate out;
    const int n = oracle.dimension();
    if (theta <= 0) throw std::invalid_argument("identify_influential: theta <= 0");
    if (oracle.mode() == OracleMode::ValueQuery) {
        // (d_i f)^2 has range [0, 1/4]; Hoeffding two-sided at delta/n with
        // deviation theta/2 gives m = ln(2n/delta) / (8 theta^2).
        int m = m_override > 0
                    ? m_override
                    : int(std::ceil(std::log(2.0 * n / delta) /
                                    (8.0 * theta * theta)));
        std::vector<double> estimates(n, 0.0);
        Rng point_rng = oracle.stream(0x9d5f);
        for (int i = 0; i < n; ++i) {
            double acc = 0;
            for (int j = 0; j < m; ++j) {
                uint32_t x = uint32_t(point_rng.next_u64() &
                                      ((uint64_t(1) << n) - 1));
                double f1 = oracle.query(x | (1u << i));
                double f0 = oracle.query(x & ~(1u << i));
                double d = 0.5 * (f1 - f0);
                acc += d * d;
            }
            estimates[i] = acc / m;
            if (estimates[i] > theta) out.variables |= (1u << i);
        }
        out.info["mode"] = "value-query";
        out.info["pairs_per_variable"] = m;
        out.info["estimates"] = estimates;
    } else {
        // Degree-<=2 spectrum proxy from one batch of random examples.
        int m = m_override > 0 ? m_override
                               : int(std::ceil(32.0 * std::log(2.0 * n / delta) /
                                               (theta * theta)));
        SampleSet samples = draw_samples(oracle, m);
        std::vector<uint32_t> low_basis = basis_up_to_degree(n, 2);
        std::vector<double> coeff(low_basis.size(), 0.0);
        for (size_t k = 0; k < low_basis.size(); ++k) {
            double acc = 0;
            for (const auto& r : samples.records)
                acc += r.y * chi(low_basis[k], r.x);
            coeff[k] = acc / m;
        }
        std::vector<double> estimates(n, 0.0);
        for (size_t k = 0; k < low_basis.size(); ++k)
            for (int i = 0; i < n; ++i)
                if ((low_basis[k] >> i) & 1u)
                    estimates[i] += coeff[k] * coeff[k];
        for (int i = 0; i < n; ++i)
            if (estimates[i] > theta) out.variables |= (1u << i);
        out.info["mode"] = "random-example (best effort, degree-2 proxy)";
        out.info["examples"] = m;
        out.info["estimates"] = estimates;
    }
    out.info["theta"] = theta;
    out.info["confidence_delta"] = delta;
    return out;
}

namespace {

std::vector<int> mask_to_list(uint32_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

nlohmann::json config_echo(const LearnerConfig& cfg) {
    nlohmann::json j;
    j["a"] = cfg.a;
    j["eps"] = cfg.eps;
    j["seed"] = cfg.seed;
    j["m_influence"] = cfg.m_influence;
    j["m_regress"] = cfg.m_regress;
    j["theta"] = cfg.theta;
    j["confidence"] = cfg.confidence;
    if (cfg.degree) j["degree"] = *cfg.degree;
    if (cfg.spectral_bound) j["spectral_bound"] = *cfg.spectral_bound;
    return j;
}

Hypothesis constant_hypothesis(int n, double value, nlohmann::json transcript) {
    Hypothesis h;
    h.polynomial.n = n;
    h.polynomial.degree = 0;
    h.polynomial.set(0, value);
    h.transcript = std::move(transcript);
    return h;
}

double default_spectral_bound(int d) {
    // Cor-3.8-style 2^{O(d^2)} report, capped to keep the LP well scaled.
    return std::min(std::pow(2.0, double(d) * double(d)), 1e6);
}

Hypothesis finish(RegressionResult reg, nlohmann::json transcript) {
    transcript["lp_objective"] = reg.empirical_error;
    transcript["terms"] = reg.polynomial.terms.size();
    Hypothesis h;
    h.polynomial = std::move(reg.polynomial);
    h.transcript = std::move(transcript);
    return h;
}

}  // namespace

Hypothesis pac_learn_submodular(Oracle& oracle, const LearnerConfig& cfg) {
    const int n = oracle.dimension();
    nlohmann::json tr;
    tr["learner"] = "pac_submodular";
    tr["config"] = config_echo(cfg);

    JuntaEstimate junta =
        identify_influential(oracle, cfg.theta, cfg.confidence, cfg.m_influence);
    tr["junta"] = mask_to_list(junta.variables, n);
    tr["junta_info"] = junta.info;

    if (junta.variables == 0) {
        SampleSet samples = draw_samples(oracle, cfg.m_regress);
        double mean = 0;
        for (const auto& r : samples.records) mean += r.y;
        mean /= std::max<size_t>(1, samples.records.size());
        tr["fallback"] = "constant mean hypothesis (empty junta)";
        tr["samples_regress"] = samples.records.size();
        return constant_hypothesis(n, mean, std::move(tr));
    }

    int d = cfg.degree ? *cfg.degree
                       : derive_params(cfg.a, cfg.eps, Recipe::Theorem31).d;
    d = std::min({d, popcount32(junta.variables), n});
    RegressionProblem prob;
    prob.basis = basis_subsets(junta.variables, d);
    prob.samples = draw_samples(oracle, cfg.m_regress);
    tr["degree"] = d;
    tr["basis_size"] = prob.basis.size();
    tr["samples_regress"] = prob.samples.records.size();
    return finish(l1_regress(prob), std::move(tr));
}

Hypothesis pac_learn_monotone_selfbounding(Oracle& oracle,
                                           const LearnerConfig& cfg) {
    const int n = oracle.dimension();
    nlohmann::json tr;
    tr["learner"] = "pac_monotone_selfbounding";
    tr["config"] = config_echo(cfg);

    int d = cfg.degree ? *cfg.degree
                       : derive_params(cfg.a, cfg.eps, Recipe::Theorem32).d;
    d = std::min(d, n);
    SampleSet samples = draw_samples(oracle, cfg.m_regress);
    const size_t m = samples.records.size();

    // Basis selection: keep candidate characters whose empirical coefficient
    // clears three standard errors of the estimate.
    std::vector<uint32_t> candidates = basis_up_to_degree(n, d);
    const double cutoff = 3.0 / std::sqrt(double(m));
    std::vector<uint32_t> basis;
    basis.push_back(0);
    for (uint32_t s : candidates) {
        if (s == 0) continue;
        double acc = 0;
        for (const auto& r : samples.records) acc += r.y * chi(s, r.x);
        if (std::fabs(acc / double(m)) >= cutoff) basis.push_back(s);
    }

    double bound = cfg.spectral_bound ? *cfg.spectral_bound
                                      : default_spectral_bound(d);
    RegressionProblem prob;
    prob.basis = basis;
    prob.samples = draw_samples(oracle, cfg.m_regress);
    prob.spectral_bound = bound;
    tr["degree"] = d;
    tr["basis_size"] = basis.size();
    tr["coefficient_cutoff"] = cutoff;
    tr["spectral_bound"] = bound;
    tr["samples_select"] = m;
    tr["samples_regress"] = prob.samples.records.size();
    return finish(l1_regress(prob), std::move(tr));
}

Hypothesis agnostic_learn(Oracle& oracle, const LearnerConfig& cfg) {
    const int n = oracle.dimension();
    nlohmann::json tr;
    tr["learner"] = "agnostic_selfbounding";
    tr["config"] = config_echo(cfg);

    int d = cfg.degree ? *cfg.degree
                       : derive_params(cfg.a, cfg.eps, Recipe::Theorem31).d;
    d = std::min(d, n);
    std::vector<uint32_t> basis = basis_up_to_degree(n, d);
    if (basis.size() > 1000000)
        throw std::invalid_argument("agnostic_learn: basis size guard exceeded");

    double bound = cfg.spectral_bound ? *cfg.spectral_bound
                                      : default_spectral_bound(d);
    RegressionProblem prob;
    prob.basis = std::move(basis);
    prob.samples = draw_samples(oracle, cfg.m_regress);
    prob.spectral_bound = bound;
    tr["degree"] = d;
    tr["basis_size"] = prob.basis.size();
    tr["spectral_bound"] = bound;
    tr["samples_regress"] = prob.samples.records.size();
    return finish(l1_regress(prob), std::move(tr));
}

Hypothesis reduce_via_lifting(Oracle& oracle, const LearnerConfig& cfg,
                              double r, const LearnerFn& base) {
    if (r < 1.0) throw std::invalid_argument("reduce_via_lifting: r < 1");
    double previous = oracle.label_lift();
    oracle.set_label_lift(previous * r);
    LearnerConfig lifted_cfg = cfg;
    lifted_cfg.eps = cfg.eps / r;
    Hypothesis inner = base(oracle, lifted_cfg);
    oracle.set_label_lift(previous);

    Hypothesis out = inner;
    // h'(x) = 1 - r (1 - h(x)), applied after the inner clip.
    out.post_offset = 1.0 - r * (1.0 - inner.post_offset);
    out.post_scale = r * inner.post_scale;
    out.transcript = nlohmann::json{{"reduction", "lifting"},
                                    {"r", r},
                                    {"inner", inner.transcript}};
    return out;
}

double evaluate_hypothesis(const Hypothesis& h, const TruthTable& target) {
    if (h.polynomial.n != target.n)
        throw std::invalid_argument("evaluate_hypothesis: dimension mismatch");
    double acc = 0;
    for (uint32_t x = 0; x < target.size(); ++x)
        acc += std::fabs(target(x) - h.eval(x));
    return acc / double(target.size());
}

ErrorEstimate evaluate_hypothesis(const Hypothesis& h, Oracle& oracle, int m) {
    if (h.polynomial.n != oracle.dimension())
        throw std::invalid_argument("evaluate_hypothesis: dimension mismatch");
    double sum = 0, sumsq = 0;
    for (int j = 0; j < m; ++j) {
        Sample s = oracle.draw_example();
        double r = std::fabs(h.eval(s.x) - s.y);
        sum += r;
        sumsq += r * r;
    }
    ErrorEstimate est;
    est.mean = sum / m;
    double var = std::max(0.0, sumsq / m - est.mean * est.mean);
    double half = 1.96 * std::sqrt(var / m);
    est.ci_low = est.mean - half;
    est.ci_high = est.mean + half;
    return est;
}

}  // namespace boolcube
