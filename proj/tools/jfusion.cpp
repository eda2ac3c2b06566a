// jfusion: command-line front end.
//
// Exit codes: 0 success, 1 mathematical falsification or mismatch (including
// an invalid fusion passed to check-fusion), 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "jfusion/enumerate.hpp"
#include "jfusion/explicit_scheme.hpp"
#include "jfusion/johnson.hpp"
#include "jfusion/lemmas.hpp"
#include "jfusion/schemes.hpp"
#include "jfusion/serialize.hpp"
#include "jfusion/wl.hpp"

namespace {

using namespace jfusion;

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// "2", "1,0,2" or "[1,0,2]"
IndexVector parse_vector(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }),
               text.end());
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            entries.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("cannot parse '" + item + "' as an integer");
        }
    }
    if (entries.empty()) throw UsageError("empty index vector");
    return IndexVector(std::move(entries));
}

void write_report(const json& report, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << report.dump(2) << '\n';
}

Mode mode_from(const std::optional<long>& m, int k) {
    if (!m) return Mode::generic();
    if (*m < 3L * k) throw UsageError("numeric mode needs m >= 3k");
    return Mode::numeric(*m);
}

std::string fusion_line(const EnumeratedFusion& f) {
    std::string line = f.partition.to_string();
    if (f.primitive) {
        line += "  primitive, " + to_json(*f.classification).dump();
    } else {
        line += "  imprimitive";
    }
    return line;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fusions of tensor powers of Johnson schemes"};
    app.require_subcommand(1);

    // structure-constant
    auto* sc = app.add_subcommand("structure-constant", "Print p^a_{b,c}(m) of J(m,k)^d");
    int sc_k = 0;
    std::string sc_a, sc_b, sc_c;
    std::optional<long> sc_m;
    sc->add_option("--k", sc_k, "subset size")->required()->check(CLI::PositiveNumber);
    sc->add_option("--a", sc_a, "index vector a, e.g. 2 or 1,0,2")->required();
    sc->add_option("--b", sc_b, "index vector b")->required();
    sc->add_option("--c", sc_c, "index vector c")->required();
    sc->add_option("--m", sc_m, "evaluate at this m (>= 3k)");

    // check-fusion
    auto* cf = app.add_subcommand("check-fusion", "Check whether a partition file defines a fusion");
    std::string cf_file, cf_mode = "generic";
    std::optional<long> cf_m;
    cf->add_option("--file", cf_file, "partition JSON")->required();
    cf->add_option("--mode", cf_mode, "generic (default) or numeric")->check(CLI::IsMember({"generic", "numeric"}));
    cf->add_option("--m", cf_m, "concrete m (implies numeric mode)");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Enumerate all fusions of J(m,k)^d");
    int en_k = 0, en_d = 0;
    std::optional<long> en_m;
    bool en_primitive = false, en_force = false, en_no_prune = false;
    std::string en_out;
    unsigned en_workers = default_workers();
    en->add_option("--k", en_k)->required()->check(CLI::PositiveNumber);
    en->add_option("--d", en_d)->required()->check(CLI::PositiveNumber);
    en->add_option("--m", en_m, "numeric mode at this m");
    en->add_flag("--primitive-only", en_primitive);
    en->add_flag("--force", en_force, "run past the exhaustive size guard");
    en->add_flag("--no-prune", en_no_prune, "test complete partitions only");
    en->add_option("--out", en_out, "write the JSON report here");
    en->add_option("--workers", en_workers)->check(CLI::PositiveNumber);

    // verify-theorem
    auto* vt = app.add_subcommand("verify-theorem", "Check every primitive fusion is a Cameron or Hamming sandwich");
    int vt_k = 0, vt_d = 0;
    std::string vt_out;
    bool vt_force = false;
    unsigned vt_workers = default_workers();
    vt->add_option("--k", vt_k)->required()->check(CLI::PositiveNumber);
    vt->add_option("--d", vt_d)->required()->check(CLI::PositiveNumber);
    vt->add_option("--out", vt_out);
    vt->add_flag("--force", vt_force);
    vt->add_option("--workers", vt_workers)->check(CLI::PositiveNumber);

    // spot-check
    auto* sm = app.add_subcommand("spot-check", "Compare numeric-mode fusions at a small m with the generic list");
    int sm_k = 0, sm_d = 0;
    long sm_m = 0;
    std::string sm_out;
    unsigned sm_workers = default_workers();
    sm->add_option("--k", sm_k)->required()->check(CLI::PositiveNumber);
    sm->add_option("--d", sm_d)->required()->check(CLI::PositiveNumber);
    sm->add_option("--m", sm_m)->required();
    sm->add_option("--out", sm_out);
    sm->add_option("--workers", sm_workers)->check(CLI::PositiveNumber);

    // classify
    auto* cl = app.add_subcommand("classify", "Classify a primitive fusion");
    std::string cl_file;
    cl->add_option("--file", cl_file, "partition JSON")->required();

    // oracle
    auto* orc = app.add_subcommand("oracle", "Cross-check symbolic constants and primitivity by brute force");
    int or_k = 0, or_d = 0;
    long or_m = 0;
    std::string or_fusion, or_out;
    orc->add_option("--k", or_k)->required()->check(CLI::PositiveNumber);
    orc->add_option("--d", or_d)->required()->check(CLI::PositiveNumber);
    orc->add_option("--m", or_m)->required();
    orc->add_option("--fusion", or_fusion, "also compare primitivity for this partition");
    orc->add_option("--out", or_out);

    // wl
    auto* wl = app.add_subcommand("wl", "2-WL closure of a Cameron, Johnson or Hamming graph");
    std::string wl_graph;
    int wl_k = 0, wl_d = 1;
    long wl_m = 0;
    wl->add_option("--graph", wl_graph)->required()->check(CLI::IsMember({"cameron", "johnson", "hamming"}));
    wl->add_option("--k", wl_k)->required()->check(CLI::PositiveNumber);
    wl->add_option("--d", wl_d)->check(CLI::PositiveNumber);
    wl->add_option("--m", wl_m)->required();

    // verify-lemmas
    auto* vl = app.add_subcommand("verify-lemmas", "Run the structure-constant and fusion property suites");
    unsigned vl_seed = 1;
    unsigned vl_workers = default_workers();
    std::string vl_out;
    vl->add_option("--seed", vl_seed);
    vl->add_option("--workers", vl_workers)->check(CLI::PositiveNumber);
    vl->add_option("--out", vl_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*sc) {
            const auto a = parse_vector(sc_a);
            const auto b = parse_vector(sc_b);
            const auto c = parse_vector(sc_c);
            const auto p = vector_structure_constant(sc_k, a, b, c);
            json out{{"k", sc_k}, {"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)},
                     {"polynomial", p.to_string()}, {"coefficients", to_json(p)}};
            if (!p.is_zero()) {
                const auto lt = p.leading_term();
                out["leading_term"] = {{"coefficient", lt.coefficient.get_str()}, {"exponent", lt.exponent}};
            }
            if (sc_m) {
                Parameters(sc_k, static_cast<int>(a.size()), sc_m);
                out["m"] = *sc_m;
                out["value"] = p.evaluate(mpq_class(*sc_m)).get_str();
            }
            std::cout << out.dump() << '\n';
            return kOk;
        }

        if (*cf) {
            const auto s = read_partition_file(cf_file);
            if (cf_mode == "numeric" && !cf_m) throw UsageError("--mode numeric needs --m");
            const StructureTable table(s.k(), s.d(), mode_from(cf_m, s.k()));
            const auto verdict = is_valid_fusion(table, s);
            json out = to_json(verdict);
            if (verdict.valid) out["primitive"] = is_primitive(table, s);
            std::cout << out.dump() << '\n';
            return verdict.valid ? kOk : kFalsified;
        }

        if (*en) {
            EnumerationOptions options;
            options.mode = mode_from(en_m, en_k);
            options.primitive_only = en_primitive;
            options.force = en_force;
            options.prune = !en_no_prune;
            options.workers = en_workers;
            const auto report = enumerate_fusions(en_k, en_d, options);
            if (report.forced) std::cout << "NOTE: beyond the exhaustive guard; not exhaustive unless completed\n";
            std::cout << "k=" << en_k << " d=" << en_d << " mode=" << report.mode.to_string()
                      << " candidates=" << report.candidates << " nodes=" << report.nodes
                      << " valid=" << report.valid_count << " primitive=" << report.primitive_count
                      << " seconds=" << report.seconds << '\n';
            for (const auto& f : report.fusions) std::cout << "  " << fusion_line(f) << '\n';
            write_report(to_json(report), en_out);
            return kOk;
        }

        if (*vt) {
            const auto report = verify_theorem(vt_k, vt_d, vt_workers, vt_force);
            const auto& e = report.enumeration;
            std::cout << "k=" << vt_k << " d=" << vt_d << " valid=" << e.valid_count
                      << " primitive=" << e.primitive_count << " seconds=" << e.seconds << '\n';
            for (const auto& f : e.fusions) {
                if (f.primitive) std::cout << "  " << fusion_line(f) << '\n';
            }
            for (std::size_t i : report.outside) {
                std::cout << "FALSIFICATION CANDIDATE: " << e.fusions[i].partition.to_string() << '\n';
            }
            for (std::size_t i : report.structure_failures) {
                std::cout << "MINIMAL-CELL STRUCTURE FAILURE: " << e.fusions[i].partition.to_string() << '\n';
            }
            std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
            write_report(to_json(report), vt_out);
            return report.passed() ? kOk : kFalsified;
        }

        if (*sm) {
            const auto report = spot_check_small_m(sm_k, sm_d, sm_m, sm_workers);
            std::cout << to_json(report).dump() << '\n';
            write_report(to_json(report), sm_out);
            return report.generic_subset ? kOk : kFalsified;
        }

        if (*cl) {
            const auto s = read_partition_file(cl_file);
            const StructureTable table(s.k(), s.d());
            std::cout << to_json(classify(table, s)).dump() << '\n';
            return kOk;
        }

        if (*orc) {
            std::vector<FusionPartition> fusions;
            if (!or_fusion.empty()) fusions.push_back(read_partition_file(or_fusion));
            const auto report = cross_validate(or_k, or_d, or_m, fusions);
            std::cout << to_json(report).dump() << '\n';
            write_report(to_json(report), or_out);
            return report.passed() ? kOk : kFalsified;
        }

        if (*wl) {
            if (wl_graph == "johnson" && wl_d != 1) throw UsageError("--graph johnson needs d = 1");
            const ExplicitScheme raw(wl_k, wl_d, wl_m);
            const PairColoring input = wl_graph == "hamming" ? hamming_graph_coloring(raw) : cameron_graph_coloring(raw);
            const auto result = wl_closure(input);
            const FusionPartition target = wl_graph == "hamming"
                                               ? hamming_block_partition(wl_k, wl_d, block_structures(wl_d, 1).front())
                                               : cameron_partition(wl_k, wl_d);
            const PairColoring expected = scheme_coloring(ExplicitScheme(wl_k, wl_d, wl_m, target));
            json out{{"graph", wl_graph},
                     {"vertices", raw.vertex_count()},
                     {"rounds", result.rounds},
                     {"classes", result.coloring.color_count()},
                     {"class_sizes", result.coloring.class_sizes()},
                     {"symmetric", result.coloring.symmetric()},
                     {"equals_scheme", result.coloring == expected}};
            std::cout << out.dump() << '\n';
            return result.coloring == expected ? kOk : kFalsified;
        }

        if (*vl) {
            const auto report = run_lemma_suite(vl_seed, vl_workers);
            for (const auto& c : report.checks) {
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
                for (const auto& f : c.failures) std::cout << "    " << f << '\n';
            }
            write_report(to_json(report), vl_out);
            return report.passed() ? kOk : kFalsified;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << '\n';
        return kFalsified;
    }
    return kUsage;
}
