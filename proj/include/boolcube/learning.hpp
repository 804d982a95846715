#pragma once

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "boolcube/regression.hpp"
#include "boolcube/rng.hpp"
#include "boolcube/sparse_poly.hpp"
#include "boolcube/truth_table.hpp"

namespace boolcube {

enum class OracleMode { RandomExample, ValueQuery };
enum class LabelChannel { Exact, UniformNoise };

// Access to the unknown target. Stateful (budget counters, RNG stream);
// owned by one learner at a time. Identical seed and budget produce an
// identical transcript.
class Oracle {
  public:
    Oracle(OracleMode mode, TruthTable target, uint64_t seed,
           LabelChannel channel = LabelChannel::Exact, double noise_eta = 0.0);

    int dimension() const { return target_.n; }
    OracleMode mode() const { return mode_; }
    const TruthTable& target() const { return target_; }

    void set_example_budget(uint64_t b) { example_budget_ = b; }
    void set_query_budget(uint64_t b) { query_budget_ = b; }
    uint64_t examples_drawn() const { return examples_drawn_; }
    uint64_t queries_made() const { return queries_made_; }

    // Labels pass through y -> 1 - (1-y)/r; used by the lifting reduction.
    void set_label_lift(double r) { label_lift_r_ = r; }
    double label_lift() const { return label_lift_r_; }

    Sample draw_example();       // random-example mode only
    double query(uint32_t x);    // value-query mode only

    // Auxiliary deterministic stream derived from the oracle seed; used by
    // callers that need query points independent of the label stream.
    Rng stream(uint64_t id) const { return Rng(seed_).split(id); }

  private:
    double label(uint32_t x);

    uint64_t seed_ = 0;
    OracleMode mode_;
    TruthTable target_;
    LabelChannel channel_;
    double noise_eta_;
    double label_lift_r_ = 1.0;
    uint64_t example_budget_ = ~0ULL;
    uint64_t query_budget_ = ~0ULL;
    uint64_t examples_drawn_ = 0;
    uint64_t queries_made_ = 0;
    Rng rng_;
};

enum class LearnerClass { Submodular, MonotoneSelfBounding, SelfBoundingAgnostic };

struct LearnerConfig {
    double a = 2.0;
    double eps = 0.5;
    LearnerClass tag = LearnerClass::Submodular;
    uint64_t seed = 0;
    int m_influence = 0;   // 0: derived from (theta, confidence)
    int m_regress = 1000;
    double theta = 0.01;   // Inf^2 threshold for the junta surrogate
    double confidence = 1.0 / 6.0;
    std::optional<int> degree;           // default: recipe from (a, eps)
    std::optional<double> spectral_bound;  // default: class report bound
};

// Evaluation is clip(polynomial(x)) to [0,1], then the affine post map
// (identity except for hypotheses produced by the lifting reduction).
struct Hypothesis {
    SparsePolynomial polynomial;
    double post_scale = 1.0;
    double post_offset = 0.0;
    nlohmann::json transcript;

    double eval(uint32_t x) const {
        double v = polynomial.eval(x);
        v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        return post_offset + post_scale * v;
    }
};

SampleSet draw_samples(Oracle& oracle, int m);

struct JuntaEstimate {
    uint32_t variables = 0;
    nlohmann::json info;
};

// Surrogate for the prior-work junta finder: value-query mode estimates
// Inf^2_i from random pair flips with a per-variable tail bound at
// confidence delta/n; random-example mode thresholds the degree-<=2
// empirical spectrum (best effort, labeled in the transcript).
JuntaEstimate identify_influential(Oracle& oracle, double theta, double delta,
                                   int m_override = 0);

Hypothesis pac_learn_submodular(Oracle& oracle, const LearnerConfig& cfg);
Hypothesis pac_learn_monotone_selfbounding(Oracle& oracle,
                                           const LearnerConfig& cfg);
Hypothesis agnostic_learn(Oracle& oracle, const LearnerConfig& cfg);

using LearnerFn = std::function<Hypothesis(Oracle&, const LearnerConfig&)>;

// Lemma-style reduction: lift labels by r, run the base learner at error
// eps/r, and map the hypothesis back through h'(x) = 1 - r (1 - h(x)).
Hypothesis reduce_via_lifting(Oracle& oracle, const LearnerConfig& cfg,
                              double r, const LearnerFn& base);

double evaluate_hypothesis(const Hypothesis& h, const TruthTable& target);

struct ErrorEstimate {
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;  // two-sided 95% interval
};

ErrorEstimate evaluate_hypothesis(const Hypothesis& h, Oracle& oracle, int m);

}  // namespace boolcube
