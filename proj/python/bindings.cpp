#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "boolcube/approximation.hpp"
#include "boolcube/fourier.hpp"
#include "boolcube/function_library.hpp"
#include "boolcube/learning.hpp"
#include "boolcube/lowerbounds.hpp"
#include "boolcube/regression.hpp"

namespace py = pybind11;
using namespace boolcube;

namespace {

TruthTable table_from(const std::vector<double>& values) {
    size_t len = values.size();
    if (len < 2 || (len & (len - 1)))
        throw std::invalid_argument("table length must be a power of two");
    TruthTable f;
    f.n = int(std::round(std::log2(double(len))));
    f.values = values;
    f.validate();
    return f;
}

py::dict poly_dict(const SparsePolynomial& p) {
    py::dict terms;
    for (const auto& [s, c] : p.terms) terms[py::int_(s)] = c;
    py::dict out;
    out["n"] = p.n;
    out["degree"] = p.degree;
    if (p.support) out["support"] = *p.support;
    out["terms"] = terms;
    return out;
}

py::dict hypothesis_dict(const Hypothesis& h, const TruthTable& target) {
    py::dict out;
    out["polynomial"] = poly_dict(h.polynomial);
    out["post_scale"] = h.post_scale;
    out["post_offset"] = h.post_offset;
    out["l1_error"] = evaluate_hypothesis(h, target);
    out["transcript"] = h.transcript.dump();
    return out;
}

}  // namespace

PYBIND11_MODULE(_boolcube, m) {
    m.doc() = "Fourier analysis and learning of functions on the Boolean "
              "cube, exact at desk scale";

    // Transforms and norms. Tables are flat lists of length 2^n indexed by
    // the point's bitmask.
    m.def("wht", [](const std::vector<double>& v) {
        return wht_forward(table_from(v)).coeffs;
    });
    m.def("inverse_wht", [](const std::vector<double>& coeffs) {
        size_t len = coeffs.size();
        if (len < 2 || (len & (len - 1)))
            throw std::invalid_argument("length must be a power of two");
        FourierSpectrum s;
        s.n = int(std::round(std::log2(double(len))));
        s.coeffs = coeffs;
        return wht_inverse(s).values;
    });
    m.def("norm", [](const std::vector<double>& v, double p) {
        return norm(table_from(v), p);
    });
    m.def("norm_linf",
          [](const std::vector<double>& v) { return norm_linf(table_from(v)); });
    m.def("noise_operator", [](const std::vector<double>& v, double rho) {
        return noise_operator_exact(table_from(v), rho).values;
    });
    m.def("influences", [](const std::vector<double>& v, double kappa) {
        return influence_profile(table_from(v), kappa).per_variable;
    });
    m.def("derivative", [](const std::vector<double>& v, int i) {
        return discrete_derivative(table_from(v), i).values;
    });

    // Generators and class checkers.
    m.def(
        "random_cut",
        [](int n, uint64_t seed) {
            Rng rng(seed);
            return generate(random_cut_spec(n, rng)).table.values;
        },
        py::arg("n"), py::arg("seed"));
    m.def(
        "random_coverage",
        [](int n, uint64_t seed) {
            Rng rng(seed);
            return generate(random_coverage_spec(n, rng)).table.values;
        },
        py::arg("n"), py::arg("seed"));
    m.def(
        "random_xos",
        [](int n, int clauses, uint64_t seed) {
            Rng rng(seed);
            return generate(random_xos_spec(n, clauses, rng)).table.values;
        },
        py::arg("n"), py::arg("clauses"), py::arg("seed"));
    m.def(
        "random_dnf",
        [](int n, int k, int terms, uint64_t seed) {
            Rng rng(seed);
            return generate(random_dnf_spec(n, k, terms, rng)).table.values;
        },
        py::arg("n"), py::arg("k"), py::arg("terms"), py::arg("seed"));
    m.def("lift", [](const std::vector<double>& v, double r) {
        return lift(table_from(v), r).values;
    });
    m.def("minimal_self_bounding", [](const std::vector<double>& v) {
        auto rep = minimal_self_bounding(table_from(v));
        return py::make_tuple(rep.parameter, rep.lipschitz);
    });
    m.def("is_submodular", [](const std::vector<double>& v) {
        return check_submodular(table_from(v)).holds;
    });
    m.def("is_monotone", [](const std::vector<double>& v) {
        return check_monotone(table_from(v)).holds;
    });

    // Approximation recipes and bound checks.
    m.def("derive_params", [](double a, double eps, const std::string& recipe) {
        Recipe r = recipe == "theorem32" ? Recipe::Theorem32
                                         : Recipe::Theorem31;
        auto p = derive_params(a, eps, r);
        py::dict out;
        out["d"] = p.d;
        out["rho"] = p.rho;
        if (r == Recipe::Theorem32) out["alpha"] = p.alpha;
        return out;
    });
    m.def("truncate_noisy", [](const std::vector<double>& v, double rho,
                               int d) {
        return poly_dict(truncate_noisy(table_from(v), rho, d));
    });
    m.def("junta_polynomial",
          [](const std::vector<double>& v, double a, double eps) {
              return poly_dict(build_junta_polynomial(table_from(v), a, eps));
          });
    m.def("eval_polynomial",
          [](const py::dict& poly, uint32_t x) {
              double acc = 0;
              for (auto item : poly["terms"].cast<py::dict>())
                  acc += item.second.cast<double>() *
                         chi(item.first.cast<uint32_t>(), x);
              return acc;
          });
    m.def("check_pointwise_noise_bound",
          [](const std::vector<double>& v, double a, double rho) {
              auto chk = check_pointwise_noise_bound(table_from(v), a, rho);
              return py::make_tuple(chk.holds, chk.worst_slack);
          });
    m.def("check_norm_ratio", [](const std::vector<double>& v, double a) {
        auto chk = check_norm_ratio(table_from(v), a);
        return py::make_tuple(chk.holds, chk.worst_slack);
    });
    m.def("junta_select",
          [](const std::vector<double>& v, double kappa, double alpha) {
              return junta_select(table_from(v), kappa, alpha);
          });

    // Exact l1 regression over the cube.
    m.def(
        "best_l1_degree_bounded",
        [](const std::vector<double>& v, int d,
           std::optional<double> spectral_bound) {
            auto res = best_l1_degree_bounded(table_from(v), d, spectral_bound);
            return py::make_tuple(res.empirical_error,
                                  poly_dict(res.polynomial));
        },
        py::arg("values"), py::arg("d"),
        py::arg("spectral_bound") = std::nullopt);

    // Learning pipelines; returns the hypothesis with its exact error.
    m.def(
        "learn",
        [](const std::vector<double>& v, const std::string& learner,
           double a, double eps, uint64_t seed, int degree, int m_regress,
           double theta, const std::string& oracle, double eta, double r) {
            TruthTable f = table_from(v);
            LearnerConfig cfg;
            cfg.a = a;
            cfg.eps = eps;
            cfg.seed = seed;
            cfg.m_regress = m_regress;
            cfg.theta = theta;
            if (degree > 0) cfg.degree = degree;
            OracleMode mode = oracle == "queries" ? OracleMode::ValueQuery
                                                  : OracleMode::RandomExample;
            Oracle o(mode, f, seed,
                     eta > 0 ? LabelChannel::UniformNoise
                             : LabelChannel::Exact,
                     eta);
            Hypothesis h;
            if (learner == "submodular")
                h = pac_learn_submodular(o, cfg);
            else if (learner == "monotone")
                h = pac_learn_monotone_selfbounding(o, cfg);
            else if (learner == "agnostic")
                h = agnostic_learn(o, cfg);
            else if (learner == "lift")
                h = reduce_via_lifting(o, cfg, r,
                                       [](Oracle& oo, const LearnerConfig& c) {
                                           return agnostic_learn(oo, c);
                                       });
            else
                throw std::invalid_argument("unknown learner: " + learner);
            return hypothesis_dict(h, f);
        },
        py::arg("values"), py::arg("learner"), py::arg("a") = 1.0,
        py::arg("eps") = 0.5, py::arg("seed") = 0, py::arg("degree") = 0,
        py::arg("m_regress") = 600, py::arg("theta") = 0.01,
        py::arg("oracle") = "examples", py::arg("eta") = 0.0,
        py::arg("r") = 2.0);

    // Lower-bound construction.
    m.def("parity_lower_bound", [](double a, double eps, int n) {
        auto inst = build_parity_instance(a, eps, n);
        auto res = verify_degree_bound(inst);
        py::dict out;
        out["k"] = inst.k;
        out["r"] = inst.r;
        out["claimed_degree"] = inst.claimed_degree;
        out["inner_optimum"] = res.inner_optimum;
        out["lifted_optimum"] = res.lifted_optimum;
        out["holds"] = res.holds;
        return out;
    });

    m.attr("__version__") = "0.1.0";
}
