#include "boolcube/io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace boolcube {

using nlohmann::json;

json truth_table_to_json(const TruthTable& f) {
    json j;
    j["n"] = f.n;
    j["values"] = f.values;
    if (f.range) j["range"] = {f.range->first, f.range->second};
    return j;
}

TruthTable truth_table_from_json(const json& j) {
    TruthTable f;
    f.n = j.at("n").get<int>();
    f.values = j.at("values").get<std::vector<double>>();
    if (j.contains("range")) {
        auto r = j.at("range").get<std::vector<double>>();
        if (r.size() != 2)
            throw std::invalid_argument("truth table range must be [lo, hi]");
        f.range = std::make_pair(r[0], r[1]);
    }
    f.validate();
    return f;
}

void write_truth_table_binary(std::ostream& os, const TruthTable& f) {
    os.write("BCSB", 4);
    uint32_t n = uint32_t(f.n);
    os.write(reinterpret_cast<const char*>(&n), 4);
    os.write(reinterpret_cast<const char*>(f.values.data()),
             std::streamsize(f.values.size() * sizeof(double)));
}

TruthTable read_truth_table_binary(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "BCSB", 4) != 0)
        throw std::invalid_argument("bad truth table magic");
    uint32_t n = 0;
    is.read(reinterpret_cast<char*>(&n), 4);
    TruthTable f;
    f.n = int(n);
    if (f.n < 1 || f.n > max_dimension())
        throw std::invalid_argument("binary truth table: bad dimension");
    f.values.resize(size_t(1) << n);
    is.read(reinterpret_cast<char*>(f.values.data()),
            std::streamsize(f.values.size() * sizeof(double)));
    if (!is) throw std::invalid_argument("binary truth table: truncated");
    f.validate();
    return f;
}

json function_spec_to_json(const FunctionSpec& spec) {
    json j;
    j["kind"] = kind_name(spec.kind);
    j["n"] = spec.n;
    switch (spec.kind) {
        case FunctionKind::Cut: {
            json edges = json::array();
            for (const auto& e : spec.edges)
                edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.weight}});
            j["edges"] = edges;
            break;
        }
        case FunctionKind::Coverage:
            j["sets"] = spec.sets;
            j["universe_weights"] = spec.universe_weights;
            break;
        case FunctionKind::MatroidRankPartition:
            j["blocks"] = spec.blocks;
            j["capacities"] = spec.capacities;
            break;
        case FunctionKind::BudgetAdditive:
            j["item_weights"] = spec.item_weights;
            j["budget"] = spec.budget;
            break;
        case FunctionKind::Xos:
            j["weights"] = spec.xos_weights;
            break;
        case FunctionKind::Dnf:
            j["dnf"] = dnf_to_text(spec.dnf);
            break;
        case FunctionKind::Parity:
        case FunctionKind::Conjunction:
            j["variables"] = spec.variables;
            break;
        case FunctionKind::Lifted:
            j["inner"] = function_spec_to_json(*spec.inner);
            j["r"] = spec.lift_r;
            break;
        case FunctionKind::Scaled:
            j["inner"] = function_spec_to_json(*spec.inner);
            j["scale"] = spec.scale;
            break;
        case FunctionKind::Mixture: {
            json comps = json::array();
            for (const auto& [w, sub] : spec.mixture)
                comps.push_back(
                    {{"weight", w}, {"spec", function_spec_to_json(*sub)}});
            j["components"] = comps;
            break;
        }
    }
    return j;
}

FunctionSpec function_spec_from_json(const json& j) {
    FunctionSpec spec;
    spec.kind = kind_from_name(j.at("kind").get<std::string>());
    spec.n = j.at("n").get<int>();
    switch (spec.kind) {
        case FunctionKind::Cut:
            for (const auto& e : j.at("edges"))
                spec.edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                                      e.at("w").get<double>()});
            break;
        case FunctionKind::Coverage:
            spec.sets = j.at("sets").get<std::vector<std::vector<int>>>();
            spec.universe_weights =
                j.at("universe_weights").get<std::vector<double>>();
            break;
        case FunctionKind::MatroidRankPartition:
            spec.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
            spec.capacities = j.at("capacities").get<std::vector<int>>();
            break;
        case FunctionKind::BudgetAdditive:
            spec.item_weights = j.at("item_weights").get<std::vector<double>>();
            spec.budget = j.at("budget").get<double>();
            break;
        case FunctionKind::Xos:
            spec.xos_weights =
                j.at("weights").get<std::vector<std::vector<double>>>();
            break;
        case FunctionKind::Dnf:
            spec.dnf = dnf_from_text(j.at("dnf").get<std::string>(), spec.n);
            break;
        case FunctionKind::Parity:
        case FunctionKind::Conjunction:
            spec.variables = j.at("variables").get<uint32_t>();
            break;
        case FunctionKind::Lifted:
            spec.inner = std::make_shared<FunctionSpec>(
                function_spec_from_json(j.at("inner")));
            spec.lift_r = j.at("r").get<double>();
            break;
        case FunctionKind::Scaled:
            spec.inner = std::make_shared<FunctionSpec>(
                function_spec_from_json(j.at("inner")));
            spec.scale = j.at("scale").get<double>();
            break;
        case FunctionKind::Mixture:
            for (const auto& comp : j.at("components"))
                spec.mixture.emplace_back(
                    comp.at("weight").get<double>(),
                    std::make_shared<FunctionSpec>(
                        function_spec_from_json(comp.at("spec"))));
            break;
    }
    spec.validate();
    return spec;
}

std::string dnf_to_text(const DnfFormula& phi) {
    std::ostringstream os;
    for (const auto& term : phi.terms) {
        bool first = true;
        for (const auto& lit : term) {
            if (!first) os << ' ';
            first = false;
            os << (lit.positive ? lit.var + 1 : -(lit.var + 1));
        }
        os << '\n';
    }
    return os.str();
}

DnfFormula dnf_from_text(const std::string& text, int n) {
    DnfFormula phi;
    phi.n = n;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<DnfLiteral> term;
        int lit;
        while (ls >> lit) {
            if (lit == 0)
                throw std::invalid_argument("dnf text: zero literal");
            term.push_back({std::abs(lit) - 1, lit > 0});
        }
        phi.terms.push_back(std::move(term));
    }
    phi.validate();
    return phi;
}

json polynomial_to_json(const SparsePolynomial& p) {
    json j;
    j["n"] = p.n;
    j["degree"] = p.degree;
    if (p.support) {
        std::vector<int> vars;
        for (int i = 0; i < p.n; ++i)
            if ((*p.support >> i) & 1u) vars.push_back(i);
        j["support"] = vars;
    }
    json terms = json::array();
    for (const auto& [s, c] : p.terms) terms.push_back({{"S", s}, {"c", c}});
    j["terms"] = terms;
    return j;
}

SparsePolynomial polynomial_from_json(const json& j) {
    SparsePolynomial p;
    p.n = j.at("n").get<int>();
    p.degree = j.at("degree").get<int>();
    if (j.contains("support")) {
        uint32_t mask = 0;
        for (int v : j.at("support").get<std::vector<int>>())
            mask |= (1u << v);
        p.support = mask;
    }
    for (const auto& t : j.at("terms"))
        p.terms[t.at("S").get<uint32_t>()] = t.at("c").get<double>();
    p.validate();
    return p;
}

std::string samples_to_csv(const SampleSet& s) {
    std::ostringstream os;
    os << "x,y\n";
    os.precision(17);
    for (const auto& r : s.records)
        os << format_point(r.x, s.n) << ',' << r.y << '\n';
    return os.str();
}

SampleSet samples_from_csv(const std::string& text) {
    SampleSet set;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("x,y", 0) != 0)
        throw std::invalid_argument("sample csv: missing x,y header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("sample csv: malformed row");
        std::string xs = line.substr(0, comma);
        if (set.n == 0) set.n = int(xs.size());
        if (int(xs.size()) != set.n)
            throw std::invalid_argument("sample csv: inconsistent dimension");
        uint32_t x = 0;
        for (int i = 0; i < set.n; ++i) {
            if (xs[i] == '1') x |= (1u << i);
            else if (xs[i] != '0')
                throw std::invalid_argument("sample csv: bad coordinate");
        }
        set.records.push_back({x, std::stod(line.substr(comma + 1))});
    }
    set.validate();
    return set;
}

json samples_to_json(const SampleSet& s) {
    json j;
    j["n"] = s.n;
    json recs = json::array();
    for (const auto& r : s.records)
        recs.push_back({{"x", format_point(r.x, s.n)}, {"y", r.y}});
    j["records"] = recs;
    if (s.seed) j["seed"] = *s.seed;
    return j;
}

SampleSet samples_from_json(const json& j) {
    SampleSet set;
    set.n = j.at("n").get<int>();
    for (const auto& rec : j.at("records")) {
        std::string xs = rec.at("x").get<std::string>();
        uint32_t x = 0;
        for (size_t i = 0; i < xs.size(); ++i)
            if (xs[i] == '1') x |= (1u << i);
        set.records.push_back({x, rec.at("y").get<double>()});
    }
    if (j.contains("seed")) set.seed = j.at("seed").get<uint64_t>();
    set.validate();
    return set;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace boolcube
