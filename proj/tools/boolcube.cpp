// boolcube <command> --config <file.json> [--n --eps --a --seed --out --jobs]
//
// Commands: transform, verify, approx, learn, lowerbound, suite.
// Exit codes: 0 all checks pass, 1 check failure, 2 schema violation,
// 3 resource guard.
#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
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
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t config_seed(const json& cfg) {
    // Seeds are explicit: absent means 0, never wall clock.
    return cfg.value("seed", uint64_t(0));
}

void check_dimension_guard(int n) {
    if (n < 1)
        throw SchemaError("dimension must be >= 1");
    if (n > max_dimension())
        throw GuardError("n = " + std::to_string(n) +
                         " exceeds the dimension cap " +
                         std::to_string(max_dimension()) +
                         " (override with BOOLCUBE_MAX_N)");
}

// Resolve the target function: explicit spec, file input, inline table, or
// a named random generator driven by (n, seed).
TruthTable resolve_function(const json& cfg) {
    if (cfg.contains("function")) {
        FunctionSpec spec = function_spec_from_json(cfg.at("function"));
        check_dimension_guard(spec.n);
        return generate(spec).table;
    }
    if (cfg.contains("input")) {
        std::string path = cfg.at("input").get<std::string>();
        if (path.size() > 4 && path.substr(path.size() - 4) == ".bin") {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw SchemaError("cannot open " + path);
            return read_truth_table_binary(in);
        }
        return truth_table_from_json(load_json_file(path));
    }
    if (cfg.contains("table"))
        return truth_table_from_json(cfg.at("table"));
    if (cfg.contains("generator")) {
        std::string name = cfg.at("generator").get<std::string>();
        int n = cfg.value("n", 8);
        check_dimension_guard(n);
        Rng rng = Rng(config_seed(cfg)).split(0xf11);
        if (name == "cut") return generate(random_cut_spec(n, rng)).table;
        if (name == "coverage")
            return generate(random_coverage_spec(n, rng)).table;
        if (name == "matroid")
            return generate(random_matroid_rank_spec(n, rng)).table;
        if (name == "xos")
            return generate(random_xos_spec(n, cfg.value("clauses", 3), rng))
                .table;
        if (name == "dnf")
            return generate(random_dnf_spec(n, cfg.value("k", 2),
                                            cfg.value("terms", 4), rng))
                .table;
        throw SchemaError("unknown generator: " + name);
    }
    throw SchemaError("config needs one of function/input/table/generator");
}

json check_entry(const std::string& name, bool holds, double slack,
                 const std::string& detail = "") {
    return json{{"name", name},
                {"holds", holds},
                {"worst_slack", slack},
                {"detail", detail}};
}

// ---- commands ------------------------------------------------------------

json cmd_transform(const json& cfg) {
    TruthTable f = resolve_function(cfg);
    std::string op = cfg.value("op", "wht");
    json out;
    if (op == "wht") {
        auto s = wht_forward(f);
        SparsePolynomial p;
        p.n = f.n;
        p.degree = f.n;
        for (uint32_t m = 0; m < s.size(); ++m)
            if (std::fabs(s(m)) > 1e-15) p.set(m, s(m));
        out["result"] = polynomial_to_json(p);
    } else if (op == "noise") {
        double rho = cfg.at("rho").get<double>();
        out["result"] = truth_table_to_json(noise_operator_exact(f, rho));
    } else if (op == "truncate") {
        double rho = cfg.at("rho").get<double>();
        int d = cfg.at("d").get<int>();
        out["result"] = polynomial_to_json(truncate_noisy(f, rho, d));
    } else if (op == "derivative") {
        int i = cfg.at("i").get<int>();
        out["result"] = truth_table_to_json(discrete_derivative(f, i));
    } else if (op == "influence") {
        double kappa = cfg.value("kappa", 2.0);
        auto prof = influence_profile(f, kappa);
        out["result"] = {{"kappa", kappa},
                         {"per_variable", prof.per_variable},
                         {"total", prof.total}};
    } else {
        throw SchemaError("unknown transform op: " + op);
    }
    out["checks"] = json::array();
    return out;
}

json cmd_verify(const json& cfg) {
    TruthTable f = resolve_function(cfg);
    double a = cfg.value("a", 1.0);
    json checks = json::array();

    auto sb = minimal_self_bounding(f);
    checks.push_back(check_entry("self_bounding_a", sb.parameter <= a + 1e-9,
                                 a - sb.parameter,
                                 "a* = " + std::to_string(sb.parameter)));
    checks.push_back(check_entry("lipschitz", sb.lipschitz, 0.0));

    auto nr = check_norm_ratio(f, a);
    checks.push_back(
        check_entry("norm_ratio", nr.holds, nr.worst_slack, nr.detail));

    for (double rho : {0.25, 0.5, 0.9}) {
        auto pb = check_pointwise_noise_bound(f, a, rho);
        checks.push_back(check_entry(
            "pointwise_noise_rho_" + std::to_string(rho), pb.holds,
            pb.worst_slack, pb.detail));
    }

    uint32_t argmax = 0;
    for (uint32_t x = 0; x < f.size(); ++x)
        if (f(x) > f(argmax)) argmax = x;
    auto lb = check_level_bound(level_profile(f, {argmax, f.n}), a);
    checks.push_back(
        check_entry("level_bound_argmax", lb.holds, lb.worst_slack));

    double inf1 = influence_profile(f, 1.0).total;
    double islack = a * norm_l1(f) - inf1;
    checks.push_back(
        check_entry("influence_bound", islack >= -1e-9, islack));

    if (cfg.value("class", "") == "submodular") {
        auto rep = check_submodular(f);
        checks.push_back(
            check_entry("submodular", rep.holds, rep.parameter, rep.detail));
    } else if (cfg.value("class", "") == "xos") {
        auto rep = verify_fractional_subadditivity(f);
        checks.push_back(
            check_entry("xos", rep.holds, rep.parameter, rep.detail));
    } else if (cfg.value("class", "") == "monotone") {
        auto rep = check_monotone(f);
        checks.push_back(
            check_entry("monotone", rep.holds, rep.parameter, rep.detail));
    }
    return json{{"checks", checks}};
}

json cmd_approx(const json& cfg) {
    TruthTable f = resolve_function(cfg);
    double a = cfg.value("a", 1.0);
    double eps = cfg.value("eps", 0.5);
    std::string recipe = cfg.value("recipe", "theorem31");
    json out;
    json checks = json::array();
    if (recipe == "theorem31") {
        auto params = derive_params(a, eps, Recipe::Theorem31);
        int d = std::min(params.d, f.n + 1);
        auto p = truncate_noisy(f, params.rho, d);
        double err = l1_error(f, p);
        double slack = eps * norm_l2(f) - err;
        out["params"] = {{"d", params.d}, {"d_capped", d}, {"rho", params.rho}};
        out["l1_error"] = err;
        checks.push_back(check_entry("thm31_l1_bound", slack >= -1e-9, slack));
        if (cfg.contains("poly_out"))
            save_json_file(cfg.at("poly_out").get<std::string>(),
                           polynomial_to_json(p));
    } else if (recipe == "theorem32") {
        auto params = derive_params(a, eps, Recipe::Theorem32);
        auto p = build_junta_polynomial(f, a, eps);
        double err = l1_error(f, p);
        double slack = eps - err;
        out["params"] = {{"d", params.d},
                         {"rho", params.rho},
                         {"alpha", params.alpha},
                         {"junta_size", popcount32(*p.support)}};
        out["l1_error"] = err;
        checks.push_back(check_entry("thm32_l1_bound", slack >= -1e-9, slack));
        if (cfg.contains("poly_out"))
            save_json_file(cfg.at("poly_out").get<std::string>(),
                           polynomial_to_json(p));
    } else {
        throw SchemaError("unknown recipe: " + recipe);
    }
    out["checks"] = checks;
    return out;
}

json cmd_learn(const json& cfg) {
    TruthTable f = resolve_function(cfg);
    LearnerConfig lc;
    lc.a = cfg.value("a", 1.0);
    lc.eps = cfg.value("eps", 0.5);
    lc.seed = config_seed(cfg);
    lc.m_regress = cfg.value("m_regress", 600);
    lc.theta = cfg.value("theta", 0.01);
    if (cfg.contains("degree")) lc.degree = cfg.at("degree").get<int>();
    if (cfg.contains("spectral_bound"))
        lc.spectral_bound = cfg.at("spectral_bound").get<double>();

    OracleMode mode = cfg.value("oracle", "examples") == "queries"
                          ? OracleMode::ValueQuery
                          : OracleMode::RandomExample;
    double eta = cfg.value("eta", 0.0);
    Oracle oracle(mode, f, lc.seed,
                  eta > 0 ? LabelChannel::UniformNoise : LabelChannel::Exact,
                  eta);

    std::string learner = cfg.value("learner", "agnostic");
    Hypothesis h;
    bool assert_eps = true;
    if (learner == "submodular") {
        h = pac_learn_submodular(oracle, lc);
    } else if (learner == "monotone") {
        h = pac_learn_monotone_selfbounding(oracle, lc);
    } else if (learner == "agnostic") {
        h = agnostic_learn(oracle, lc);
        assert_eps = false;  // agnostic guarantee is relative to Delta
    } else if (learner == "lift") {
        double r = cfg.value("r", 2.0);
        h = reduce_via_lifting(oracle, lc, r,
                               [](Oracle& o, const LearnerConfig& c) {
                                   return agnostic_learn(o, c);
                               });
    } else {
        throw SchemaError("unknown learner: " + learner);
    }

    double err = evaluate_hypothesis(h, f);
    json out;
    out["transcript"] = h.transcript;
    out["exact_l1_error"] = err;
    out["examples_drawn"] = oracle.examples_drawn();
    out["queries_made"] = oracle.queries_made();
    json checks = json::array();
    if (assert_eps) {
        checks.push_back(
            check_entry("l1_error_within_eps", err <= lc.eps, lc.eps - err));
    } else if (cfg.value("check_delta", false)) {
        int d = lc.degree ? *lc.degree : 2;
        double bound = h.transcript.value("spectral_bound", 1e6);
        double delta = best_l1_degree_bounded(f, d, bound).empirical_error;
        out["delta"] = delta;
        checks.push_back(check_entry("agnostic_within_delta_plus_eps",
                                     err <= delta + lc.eps + 1e-6,
                                     delta + lc.eps - err));
    }
    out["checks"] = checks;
    if (cfg.contains("poly_out"))
        save_json_file(cfg.at("poly_out").get<std::string>(),
                       polynomial_to_json(h.polynomial));
    return out;
}

json cmd_lowerbound(const json& cfg) {
    double a = cfg.value("a", 1.0);
    int n = cfg.value("n", 6);
    check_dimension_guard(n);
    double eps;
    if (cfg.contains("k")) {
        int k = cfg.at("k").get<int>();
        if (k < 1) throw SchemaError("k must be >= 1");
        eps = a / (4.0 * k);
    } else {
        eps = cfg.value("eps", 0.25);
    }
    auto inst = build_parity_instance(a, eps, n);
    auto res = verify_degree_bound(inst);
    json out;
    out["k"] = inst.k;
    out["r"] = inst.r;
    out["claimed_degree"] = inst.claimed_degree;
    out["optimum"] = res.inner_optimum;
    out["lifted_optimum"] = res.lifted_optimum;
    json checks = json::array();
    checks.push_back(check_entry("parity_optimum_half",
                                 std::fabs(res.inner_optimum - 0.5) <= 1e-6,
                                 res.inner_optimum - 0.5));
    checks.push_back(check_entry("lifted_optimum_at_least_eps", res.holds,
                                 res.lifted_optimum - inst.eps));
    out["checks"] = checks;
    if (cfg.value("family_k", 0) > 0) {
        auto rep = sample_bound_family(cfg.at("family_k").get<int>(), n);
        out["family"] = {{"k", rep.k},
                         {"family_size", rep.family_size},
                         {"examples_needed", rep.examples_needed},
                         {"note", rep.note}};
    }
    return out;
}

// ---- suites --------------------------------------------------------------

struct SuiteInst {
    TruthTable f;
    double a;
    std::string kind;
};

std::vector<SuiteInst> suite_pool(int count, uint64_t seed) {
    std::vector<SuiteInst> pool;
    Rng root(seed);
    for (int i = 0; i < count; ++i) {
        Rng rng = root.split(uint64_t(i));
        int n = 8 + (i / 4) % 5;
        switch (i % 4) {
            case 0:
                pool.push_back({generate(random_coverage_spec(n, rng)).table,
                                1.0, "coverage"});
                break;
            case 1:
                pool.push_back(
                    {generate(random_xos_spec(n, 3, rng)).table, 1.0, "xos"});
                break;
            case 2:
                pool.push_back(
                    {generate(random_cut_spec(n, rng)).table, 2.0, "cut"});
                break;
            default:
                pool.push_back({generate(random_dnf_spec(n, 2, 4, rng)).table,
                                2.0, "2-dnf"});
                break;
        }
    }
    return pool;
}

json run_suite(const std::string& name, uint64_t seed) {
    json checks = json::array();
    if (name == "thm31") {
        // 20 instances x 3 eps = 60 checks of the noisy-truncation bound.
        auto pool = suite_pool(20, seed + 31);
        for (size_t i = 0; i < pool.size(); ++i)
            for (double eps : {1.0, 0.75, 0.5}) {
                auto params =
                    derive_params(pool[i].a, eps, Recipe::Theorem31);
                int d = std::min(params.d, pool[i].f.n + 1);
                auto p = truncate_noisy(pool[i].f, params.rho, d);
                double slack =
                    eps * norm_l2(pool[i].f) - l1_error(pool[i].f, p);
                checks.push_back(check_entry(
                    "thm31/" + pool[i].kind + "#" + std::to_string(i) +
                        "/eps=" + std::to_string(eps),
                    slack >= -1e-9, slack));
            }
    } else if (name == "thm32") {
        auto pool = suite_pool(20, seed + 32);
        for (size_t i = 0; i < pool.size(); ++i)
            for (double eps : {1.0, 0.5}) {
                auto p = build_junta_polynomial(pool[i].f, pool[i].a, eps);
                double slack = eps - l1_error(pool[i].f, p);
                checks.push_back(check_entry(
                    "thm32/" + pool[i].kind + "#" + std::to_string(i) +
                        "/eps=" + std::to_string(eps),
                    slack >= -1e-9, slack));
            }
    } else if (name == "lemma32") {
        auto pool = suite_pool(20, seed + 320);
        for (size_t i = 0; i < pool.size(); ++i)
            for (double rho : {0.25, 0.5, 0.9}) {
                auto chk =
                    check_pointwise_noise_bound(pool[i].f, pool[i].a, rho);
                checks.push_back(check_entry(
                    "lemma32/#" + std::to_string(i) + "/rho=" +
                        std::to_string(rho),
                    chk.holds, chk.worst_slack));
            }
    } else if (name == "lemma34") {
        auto pool = suite_pool(20, seed + 34);
        for (size_t i = 0; i < pool.size(); ++i) {
            auto chk = check_norm_ratio(pool[i].f, pool[i].a);
            checks.push_back(check_entry("lemma34/#" + std::to_string(i),
                                         chk.holds, chk.worst_slack));
        }
    } else if (name == "lemma36") {
        auto pool = suite_pool(20, seed + 36);
        for (size_t i = 0; i < pool.size(); ++i) {
            double slack = pool[i].a * norm_l1(pool[i].f) -
                           influence_profile(pool[i].f, 1.0).total;
            checks.push_back(check_entry("lemma36/#" + std::to_string(i),
                                         slack >= -1e-9, slack));
        }
    } else if (name == "lemma37") {
        Rng root(seed + 37);
        for (int i = 0; i < 20; ++i) {
            Rng rng = root.split(uint64_t(i));
            TruthTable f;
            f.n = 10;
            f.values.resize(1024);
            for (double& v : f.values) v = rng.next_uniform(0.0, 1.0);
            for (double alpha : {0.01, 0.05})
                for (int d : {2, 4}) {
                    auto chk = check_tail_bound(f, 4.0 / 3.0, alpha, d);
                    checks.push_back(check_entry(
                        "lemma37/#" + std::to_string(i) + "/a=" +
                            std::to_string(alpha) + "/d=" + std::to_string(d),
                        chk.holds, chk.worst_slack));
                }
        }
    } else if (name == "lifting") {
        Rng root(seed + 53);
        for (int i = 0; i < 10; ++i) {
            Rng rng = root.split(uint64_t(i));
            int k = 1 + i % 3;
            auto f = generate(random_dnf_spec(10, k, 4, rng)).table;
            auto rep = minimal_self_bounding(f);
            auto g = lift(f, 2.0);
            double slack =
                rep.parameter / 2.0 - minimal_self_bounding(g).parameter;
            checks.push_back(check_entry(
                "lifting/#" + std::to_string(i),
                rep.parameter <= k + 1e-9 && slack >= -1e-9, slack));
        }
    } else if (name == "lowerbound") {
        for (int k = 1; k <= 3; ++k) {
            auto inst = build_parity_instance(1.0, 1.0 / (4.0 * k), 6);
            auto res = verify_degree_bound(inst);
            checks.push_back(check_entry(
                "lowerbound/k=" + std::to_string(k), res.holds,
                res.lifted_optimum - inst.eps));
        }
    } else {
        throw SchemaError("unknown suite: " + name);
    }
    return checks;
}

json cmd_suite(const json& cfg) {
    std::vector<std::string> names;
    if (cfg.contains("suites"))
        names = cfg.at("suites").get<std::vector<std::string>>();
    uint64_t seed = config_seed(cfg);
    static const std::vector<std::string> registry = {
        "thm31", "thm32",   "lemma32",    "lemma34",
        "lemma36", "lemma37", "lifting", "lowerbound"};
    json checks = json::array();
    std::vector<std::string> expanded;
    for (const auto& name : names) {
        if (name == "all")
            expanded.insert(expanded.end(), registry.begin(), registry.end());
        else
            expanded.push_back(name);
    }
    json summary = json::array();
    for (const auto& name : expanded) {
        json suite_checks = run_suite(name, seed);
        int pass = 0;
        double worst = 1e300;
        for (const auto& c : suite_checks) {
            if (c.at("holds").get<bool>()) ++pass;
            worst = std::min(worst, c.at("worst_slack").get<double>());
            checks.push_back(c);
        }
        summary.push_back({{"suite", name},
                           {"checks", suite_checks.size()},
                           {"passed", pass},
                           {"worst_slack",
                            suite_checks.empty() ? 0.0 : worst}});
    }
    return json{{"summary", summary}, {"checks", checks}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boolcube: exact desk-scale analysis of functions on the "
                 "Boolean cube"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::optional<int> n_override, jobs;
    std::optional<double> eps_override, a_override;
    std::optional<uint64_t> seed_override;

    std::vector<CLI::App*> subs;
    for (const char* name :
         {"transform", "verify", "approx", "learn", "lowerbound", "suite"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "config JSON file");
        sub->add_option("--n", n_override, "dimension override");
        sub->add_option("--eps", eps_override, "epsilon override");
        sub->add_option("--a", a_override, "self-bounding parameter override");
        sub->add_option("--seed", seed_override, "root seed override");
        sub->add_option("--out", out_path, "report output path");
        sub->add_option("--jobs", jobs, "parallelism degree");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("BOOLCUBE_MAX_N")) {
        double gib =
            std::ldexp(8.0, std::atoi(env)) / (1024.0 * 1024.0 * 1024.0);
        std::cerr << "warning: BOOLCUBE_MAX_N=" << env
                  << " raises the dimension cap; a dense table at that size "
                     "takes about "
                  << gib << " GiB\n";
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        json cfg = json::object();
        if (!config_path.empty()) cfg = load_json_file(config_path);
        if (!cfg.is_object()) throw SchemaError("config must be an object");
        if (n_override) cfg["n"] = *n_override;
        if (eps_override) cfg["eps"] = *eps_override;
        if (a_override) cfg["a"] = *a_override;
        if (seed_override) cfg["seed"] = *seed_override;
        if (jobs) cfg["jobs"] = *jobs;
        if (!out_path.empty()) cfg["out"] = out_path;

        json body;
        if (command == "transform") body = cmd_transform(cfg);
        else if (command == "verify") body = cmd_verify(cfg);
        else if (command == "approx") body = cmd_approx(cfg);
        else if (command == "learn") body = cmd_learn(cfg);
        else if (command == "lowerbound") body = cmd_lowerbound(cfg);
        else body = cmd_suite(cfg);

        bool all_passed = true;
        for (const auto& c : body.value("checks", json::array()))
            if (!c.at("holds").get<bool>()) all_passed = false;

        json report;
        report["schema_version"] = kSchemaVersion;
        report["tool_version"] = kVersion;
        report["command"] = command;
        report["config"] = cfg;
        report["seed"] = config_seed(cfg);
        report["jobs"] = cfg.value("jobs", 1);
        report["all_passed"] = all_passed;
        report.update(body);

        if (cfg.contains("out"))
            save_json_file(cfg.at("out").get<std::string>(), report);
        else
            std::cout << report.dump(2) << "\n";
        return all_passed ? 0 : 1;
    } catch (const GuardError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const SchemaError& e) {
        std::cerr << "schema violation: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "schema violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        if (msg.find("guard") != std::string::npos ||
            msg.find("dimension") != std::string::npos) {
            std::cerr << "resource guard: " << msg << "\n";
            return 3;
        }
        std::cerr << "schema violation: " << msg << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
