#include "jfusion/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace jfusion {

json to_json(const IndexVector& a) {
    return json(std::vector<int>(a.entries().begin(), a.entries().end()));
}

IndexVector index_vector_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("index vector must be a JSON array");
    std::vector<int> entries;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument("index vector entries must be integers");
        entries.push_back(x.get<int>());
    }
    return IndexVector(std::move(entries));
}

json to_json(const RationalPolynomial& p) { return json(p.serialize()); }

RationalPolynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of strings");
    std::vector<std::string> coeffs;
    for (const auto& x : j) {
        if (!x.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
        coeffs.push_back(x.get<std::string>());
    }
    return RationalPolynomial::deserialize(coeffs);
}

json to_json(const FusionPartition& s) {
    json cells = json::array();
    for (std::size_t i = 0; i < s.cell_count(); ++i) {
        json cell = json::array();
        for (const auto& v : s.cell_vectors(i)) cell.push_back(to_json(v));
        cells.push_back(std::move(cell));
    }
    return {{"k", s.k()}, {"d", s.d()}, {"cells", std::move(cells)}};
}

FusionPartition partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("d") || !j.contains("cells")) {
        throw std::invalid_argument("partition JSON needs keys k, d and cells");
    }
    if (!j["k"].is_number_integer() || !j["d"].is_number_integer() || !j["cells"].is_array()) {
        throw std::invalid_argument("partition JSON has mistyped k, d or cells");
    }
    const int k = j["k"].get<int>();
    const int d = j["d"].get<int>();
    std::vector<std::vector<IndexVector>> cells;
    for (const auto& cell : j["cells"]) {
        if (!cell.is_array()) throw std::invalid_argument("each cell must be an array of vectors");
        std::vector<IndexVector> members;
        for (const auto& v : cell) members.push_back(index_vector_from_json(v));
        cells.push_back(std::move(members));
    }
    return FusionPartition(k, d, cells);
}

FusionPartition read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open partition file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return partition_from_json(j);
}

json to_json(const BlockStructure& b) {
    json blocks = json::array();
    for (const auto& block : b.blocks()) {
        json one = json::array();
        for (int c : block) one.push_back(c + 1);
        blocks.push_back(std::move(one));
    }
    return {{"e", b.e()}, {"blocks", std::move(blocks)}};
}

json to_json(const Classification& c) {
    json out;
    out["verdict"] = to_string(c.verdict());
    if (c.verdict() == Verdict::HammingSandwich) {
        const json first = to_json(c.hamming.front());
        out["e"] = first["e"];
        out["blocks"] = first["blocks"];
    }
    out["cameron"] = c.cameron;
    json witnesses = json::array();
    for (const auto& b : c.hamming) witnesses.push_back(to_json(b));
    out["hamming"] = std::move(witnesses);
    return out;
}

json to_json(const FusionWitness& w) {
    return {{"alpha", w.alpha},     {"beta", w.beta},
            {"gamma", w.gamma},     {"a", to_json(w.a)},
            {"a_prime", to_json(w.a_prime)}, {"value_a", to_json(w.value_a)},
            {"value_a_prime", to_json(w.value_a_prime)}};
}

json to_json(const FusionVerdict& v) {
    json out{{"valid", v.valid}};
    if (v.witness) out["witness"] = to_json(*v.witness);
    return out;
}

json to_json(const KeyPropReport& r) {
    return {{"cell", r.cell},
            {"part1", r.part1()},
            {"part2", r.constant_n},
            {"part3", r.unique_dominator},
            {"part4", r.weight_step_or_corner},
            {"star_factorials_equal", r.star_factorials_equal},
            {"n_self", r.n_self ? json(r.n_self->get_str()) : json(nullptr)},
            {"failures", r.failures}};
}

json to_json(const MinimalCellReport& r) {
    json supports = json::array();
    for (const auto& s : r.supports) {
        json one = json::array();
        for (int c : s) one.push_back(c + 1);
        supports.push_back(std::move(one));
    }
    return {{"cell", r.cell},       {"weight", r.weight},
            {"e", r.e},             {"supports", std::move(supports)},
            {"covers", r.covers},   {"disjoint_equal", r.disjoint_equal},
            {"passed", r.passed()}, {"failures", r.failures}};
}

json to_json(const EnumerationReport& r) {
    json fusions = json::array();
    for (const auto& f : r.fusions) {
        json one = to_json(f.partition);
        one.erase("k");
        one.erase("d");
        one["primitive"] = f.primitive;
        if (f.classification) one["classification"] = to_json(*f.classification);
        fusions.push_back(std::move(one));
    }
    return {{"k", r.k},
            {"d", r.d},
            {"mode", r.mode.to_string()},
            {"pruned", r.pruned},
            {"exhaustive", !r.forced},
            {"candidates", r.candidates},
            {"nodes", r.nodes},
            {"valid", r.valid_count},
            {"primitive", r.primitive_count},
            {"fusions", std::move(fusions)}};
}

json to_json(const TheoremReport& r) {
    json out = to_json(r.enumeration);
    out["passed"] = r.passed();
    out["outside"] = r.outside;
    out["structure_failures"] = r.structure_failures;
    return out;
}

json to_json(const SmallMReport& r) {
    auto list = [](const std::vector<FusionPartition>& xs) {
        json out = json::array();
        for (const auto& s : xs) out.push_back(to_json(s)["cells"]);
        return out;
    };
    return {{"k", r.k},
            {"d", r.d},
            {"m", r.m},
            {"generic_count", r.generic.size()},
            {"numeric_count", r.numeric.size()},
            {"generic_subset", r.generic_subset},
            {"numeric_only", list(r.numeric_only)}};
}

json to_json(const CrossValidationReport& r) {
    return {{"k", r.k},
            {"d", r.d},
            {"m", r.m},
            {"triples_checked", r.triples_checked},
            {"fusions_checked", r.fusions_checked},
            {"passed", r.passed()},
            {"mismatches", r.mismatches}};
}

json to_json(const LemmaSuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"failures", c.failures}});
    }
    return {{"seed", r.seed}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace jfusion
