#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "boolcube/function_library.hpp"
#include "boolcube/regression.hpp"
#include "boolcube/sparse_poly.hpp"
#include "boolcube/truth_table.hpp"

namespace boolcube {

// TruthTable: JSON {"n": int, "values": [reals], "range": [lo,hi]?} and a
// binary form: magic "BCSB", u32 n (little endian), 2^n f64 values.
nlohmann::json truth_table_to_json(const TruthTable& f);
TruthTable truth_table_from_json(const nlohmann::json& j);
void write_truth_table_binary(std::ostream& os, const TruthTable& f);
TruthTable read_truth_table_binary(std::istream& is);

// FunctionSpec: JSON with a "kind" discriminant and kind-specific fields.
nlohmann::json function_spec_to_json(const FunctionSpec& spec);
FunctionSpec function_spec_from_json(const nlohmann::json& j);

// DNF text format: one term per line, literals as signed 1-based integers.
std::string dnf_to_text(const DnfFormula& phi);
DnfFormula dnf_from_text(const std::string& text, int n);

// SparsePolynomial: JSON {"n", "degree", "support"?, "terms": [{"S","c"}]}.
nlohmann::json polynomial_to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const nlohmann::json& j);

// SampleSet: CSV with header "x,y", x an n-character 0/1 string with
// coordinate 1 leftmost; JSON alternative mirroring the fields.
std::string samples_to_csv(const SampleSet& s);
SampleSet samples_from_csv(const std::string& text);
nlohmann::json samples_to_json(const SampleSet& s);
SampleSet samples_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace boolcube
