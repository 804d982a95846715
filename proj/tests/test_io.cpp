#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "boolcube/io.hpp"
#include "boolcube/rng.hpp"

using namespace boolcube;

TEST_CASE("truth table json round trip") {
    Rng rng(51);
    TruthTable f;
    f.n = 5;
    f.values.resize(32);
    for (double& v : f.values) v = rng.next_uniform(0.0, 1.0);
    f.range = {0.0, 1.0};

    auto j = truth_table_to_json(f);
    auto back = truth_table_from_json(j);
    CHECK(back.n == f.n);
    CHECK(back.values == f.values);
    REQUIRE(back.range.has_value());
    CHECK(back.range->first == 0.0);
    CHECK(back.range->second == 1.0);

    SUBCASE("rejects inconsistent payloads") {
        j["values"] = std::vector<double>{0.0, 1.0};  // wrong length for n=5
        CHECK_THROWS_AS(truth_table_from_json(j), std::invalid_argument);
        auto j2 = truth_table_to_json(f);
        j2["range"] = {0.0};
        CHECK_THROWS_AS(truth_table_from_json(j2), std::invalid_argument);
    }
}

TEST_CASE("truth table binary round trip") {
    Rng rng(52);
    TruthTable f;
    f.n = 7;
    f.values.resize(128);
    for (double& v : f.values) v = rng.next_uniform(-2.0, 2.0);

    std::ostringstream os;
    write_truth_table_binary(os, f);
    std::string blob = os.str();
    CHECK(blob.size() == 4 + 4 + 128 * 8);
    CHECK(blob.substr(0, 4) == "BCSB");

    std::istringstream is(blob);
    auto back = read_truth_table_binary(is);
    CHECK(back.n == f.n);
    CHECK(back.values == f.values);

    SUBCASE("bad magic and truncation are caught") {
        std::istringstream bad("XXXX" + blob.substr(4));
        CHECK_THROWS_AS(read_truth_table_binary(bad), std::invalid_argument);
        std::istringstream trunc(blob.substr(0, blob.size() / 2));
        CHECK_THROWS_AS(read_truth_table_binary(trunc), std::invalid_argument);
    }
}

TEST_CASE("function spec json round trip") {
    Rng rng(53);
    std::vector<FunctionSpec> specs;
    Rng s1 = rng.split(1), s2 = rng.split(2), s3 = rng.split(3),
        s4 = rng.split(4), s5 = rng.split(5);
    specs.push_back(random_cut_spec(6, s1));
    specs.push_back(random_coverage_spec(6, s2));
    specs.push_back(random_matroid_rank_spec(6, s3));
    specs.push_back(random_xos_spec(6, 3, s4));
    specs.push_back(random_dnf_spec(6, 2, 3, s5));

    FunctionSpec parity;
    parity.kind = FunctionKind::Parity;
    parity.n = 6;
    parity.variables = 0b111u;
    specs.push_back(parity);

    FunctionSpec lifted;
    lifted.kind = FunctionKind::Lifted;
    lifted.n = 6;
    lifted.inner = std::make_shared<FunctionSpec>(parity);
    lifted.lift_r = 2.0;
    specs.push_back(lifted);

    for (const auto& spec : specs) {
        auto j = function_spec_to_json(spec);
        auto back = function_spec_from_json(j);
        // Round-tripped specs generate identical tables.
        CHECK(generate(back).table.values == generate(spec).table.values);
        CHECK(function_spec_to_json(back) == j);
    }

    CHECK_THROWS(function_spec_from_json(
        nlohmann::json{{"kind", "nonsense"}, {"n", 4}}));
}

TEST_CASE("dnf text format") {
    DnfFormula phi;
    phi.n = 5;
    phi.terms = {{{0, true}, {2, false}}, {{4, true}}};
    std::string text = dnf_to_text(phi);
    CHECK(text == "1 -3\n5\n");
    auto back = dnf_from_text(text, 5);
    REQUIRE(back.terms.size() == 2);
    CHECK(back.terms[0][0].var == 0);
    CHECK(back.terms[0][0].positive);
    CHECK(back.terms[0][1].var == 2);
    CHECK_FALSE(back.terms[0][1].positive);
    CHECK(dnf_to_table(back).values == dnf_to_table(phi).values);

    CHECK_THROWS_AS(dnf_from_text("1 0\n", 5), std::invalid_argument);
    CHECK_THROWS_AS(dnf_from_text("9\n", 5), std::invalid_argument);
}

TEST_CASE("polynomial json round trip") {
    SparsePolynomial p;
    p.n = 6;
    p.degree = 2;
    p.support = 0b1011u;
    p.set(0, 0.5);
    p.set(0b11u, -0.25);
    p.set(0b1000u, 0.125);

    auto j = polynomial_to_json(p);
    CHECK(j["support"] == std::vector<int>{0, 1, 3});
    auto back = polynomial_from_json(j);
    CHECK(back.n == p.n);
    CHECK(back.degree == p.degree);
    CHECK(back.terms == p.terms);
    CHECK(back.support == p.support);

    SUBCASE("validation catches bad terms") {
        j["terms"].push_back({{"S", 0b111u}, {"c", 1.0}});  // degree 3 > 2
        CHECK_THROWS_AS(polynomial_from_json(j), std::invalid_argument);
    }
}

TEST_CASE("sample csv round trip") {
    SampleSet s;
    s.n = 4;
    s.records = {{0b0001u, 0.5}, {0b1010u, 1.0}, {0u, 0.0}};
    std::string csv = samples_to_csv(s);
    // Coordinate 1 is leftmost: x = 0b0001 prints as "1000".
    CHECK(csv.rfind("x,y\n1000,0.5\n", 0) == 0);
    auto back = samples_from_csv(csv);
    CHECK(back.n == 4);
    REQUIRE(back.records.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(back.records[i].x == s.records[i].x);
        CHECK(back.records[i].y == s.records[i].y);
    }

    CHECK_THROWS_AS(samples_from_csv("nope\n"), std::invalid_argument);
    CHECK_THROWS_AS(samples_from_csv("x,y\n10x0,0.5\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(samples_from_csv("x,y\n10,0.5\n100,0.5\n"),
                    std::invalid_argument);
}

TEST_CASE("sample json round trip") {
    SampleSet s;
    s.n = 3;
    s.seed = 777;
    s.records = {{0b101u, 0.25}, {0b010u, 0.75}};
    auto back = samples_from_json(samples_to_json(s));
    CHECK(back.n == 3);
    REQUIRE(back.seed.has_value());
    CHECK(*back.seed == 777);
    REQUIRE(back.records.size() == 2);
    CHECK(back.records[0].x == 0b101u);
    CHECK(back.records[1].y == 0.75);
}

TEST_CASE("json file round trip") {
    nlohmann::json j = {{"alpha", 1}, {"nested", {{"b", true}}}};
    std::string path = "io_test_tmp.json";
    save_json_file(path, j);
    CHECK(load_json_file(path) == j);
    CHECK_THROWS_AS(load_json_file("does_not_exist.json"),
                    std::runtime_error);
    std::remove(path.c_str());
}
