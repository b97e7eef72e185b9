// Command-line front end: construct, verify, search, and report on sum
// labellings of disjoint unions of cycles and paths.
//
// Exit codes: 0 success/valid/found, 1 invalid/refuted/mismatch, 2 usage or
// input-format error, 3 search budget exceeded.
//
// Determinism contract: identical command + flags + environment produce
// byte-identical stdout. Timing goes to stderr only.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sumlab/fixtures.hpp"
#include "sumlab/graph_model.hpp"
#include "sumlab/io.hpp"
#include "sumlab/metrics.hpp"
#include "sumlab/sigma_search.hpp"
#include "sumlab/strategy.hpp"
#include "sumlab/verifier.hpp"

using nlohmann::ordered_json;
using namespace sumlab;

namespace {

std::string kind_string(PieceShape s, std::size_t order) {
    char c = s == PieceShape::Cycle ? 'C' : s == PieceShape::Path ? 'P' : 'K';
    return c + std::to_string(order);
}

ordered_json labelling_json(const Labelling& l) {
    ordered_json out;
    out["components"] = ordered_json::array();
    for (const auto& comp : l.components) {
        ordered_json c;
        c["kind"] = kind_string(comp.shape, comp.labels.size());
        c["labels"] = ordered_json::array();
        for (const auto& v : comp.labels) c["labels"].push_back(v.str());
        out["components"].push_back(std::move(c));
    }
    out["isolates"] = ordered_json::array();
    for (const auto& v : l.isolates) out["isolates"].push_back(v.str());
    return out;
}

ordered_json violations_json(const Certificate& cert) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : cert.violations) {
        ordered_json j;
        j["kind"] = violation_kind_name(v.kind);
        j["a"] = v.a.str();
        j["b"] = v.b.str();
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string format_ratio(double r) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << r;
    return os.str();
}

int run_label(const std::string& specText, bool trace, bool json) {
    GraphSpec spec = parse_spec(specText);
    StrategyResult res = label_graph(spec);
    StorageEstimate storage = storage_bits(res.labelling, spec.vertex_count());
    Big range = range_of(res.labelling);

    if (json) {
        ordered_json out;
        out["command"] = "label";
        out["graph"] = to_canonical_string(spec);
        ordered_json lj = labelling_json(res.labelling);
        out["components"] = lj["components"];
        out["isolates"] = lj["isolates"];
        out["claimedSigma"] = res.sigmaClaimed;
        if (res.ntap) {
            out["ntap"]["first"] = res.ntap->first.str();
            out["ntap"]["offset"] = res.ntap->offset.str();
        } else {
            out["ntap"] = nullptr;
        }
        out["range"] = range.str();
        out["storage"]["bits"] = storage.bits.str();
        out["storage"]["headerBits"] = storage.headerBits.str();
        out["storage"]["perLabelBits"] = storage.perLabelBits.str();
        out["storage"]["labelCount"] = storage.labelCount.str();
        if (trace) {
            out["trace"] = ordered_json::array();
            for (const auto& step : res.trace) out["trace"].push_back(step);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "# graph: " << to_canonical_string(spec) << "\n";
    std::cout << "# isolates needed: " << res.sigmaClaimed << "\n";
    if (res.ntap)
        std::cout << "# progression hook: (" << res.ntap->first << ", "
                  << res.ntap->offset << ")\n";
    std::cout << "# range: " << range << "\n";
    std::cout << "# storage bits: " << storage.bits << " (header " << storage.headerBits
              << " + " << storage.labelCount << " labels x " << storage.perLabelBits
              << ")\n";
    if (trace)
        for (const auto& step : res.trace) std::cout << "# step: " << step << "\n";
    std::cout << to_document(res.labelling);
    return 0;
}

int run_verify(const std::string& file, bool json) {
    Labelling l;
    if (file == "-") {
        l = parse_document(std::cin);
    } else {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open '" << file << "'\n";
            return 2;
        }
        l = parse_document(in);
    }
    Certificate cert = verify(l);
    if (json) {
        ordered_json out;
        out["command"] = "verify";
        out["valid"] = cert.valid;
        out["violations"] = violations_json(cert);
        std::cout << out.dump(2) << "\n";
    } else if (cert.valid) {
        std::cout << "valid: " << l.components.size() << " component(s), "
                  << l.isolates.size() << " isolate(s)\n";
    } else {
        std::cout << "invalid: " << cert.violations.size() << " violation(s)\n";
        for (const auto& v : cert.violations) std::cout << "  " << describe(v) << "\n";
    }
    return cert.valid ? 0 : 1;
}

const char* status_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::RefutedUpTo: return "refuted-up-to";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

int status_exit(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return 0;
        case SearchStatus::RefutedUpTo: return 1;
        case SearchStatus::BudgetExceeded: return 3;
    }
    return 1;
}

int run_sigma(const std::string& specText, int B, int iMax, std::uint64_t nodeLimit,
              double timeLimit, bool json) {
    GraphSpec spec = parse_spec(specText);
    ConcreteGraph g = realize(spec);
    if (iMax < 0) iMax = spec.min_degree() + 2;
    SearchLimits limits{nodeLimit, timeLimit};
    SigmaSearchResult res = min_isolates_bounded(g, B, iMax, limits);
    std::cerr << "# elapsed: " << std::fixed << std::setprecision(3)
              << res.elapsedSeconds << "s\n";
    if (json) {
        ordered_json out;
        out["command"] = "sigma";
        out["graph"] = to_canonical_string(spec);
        out["maxLabel"] = B;
        out["maxIsolates"] = iMax;
        out["status"] = status_string(res.status);
        out["foundIsolates"] = res.foundIsolates;
        out["refutedUpTo"] = res.refutedUpToIsolates;
        out["witness"] = res.witness ? labelling_json(*res.witness) : ordered_json(nullptr);
        out["nodes"] = res.nodes;
        out["message"] = res.message;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "graph: " << to_canonical_string(spec) << "\n";
        std::cout << "status: " << status_string(res.status) << "\n";
        std::cout << "note: " << res.message << "\n";
        if (res.status == SearchStatus::Found) {
            std::cout << "minimum isolates (labels <= " << B << "): " << res.foundIsolates
                      << "\n";
            std::cout << "witness:\n" << to_document(*res.witness);
        } else if (res.status == SearchStatus::RefutedUpTo) {
            std::cout << "refuted isolate counts: up to " << res.refutedUpToIsolates
                      << " (labels <= " << B << ")\n";
        }
        std::cout << "nodes: " << res.nodes << "\n";
    }
    return status_exit(res.status);
}

int run_spum(const std::string& specText, int B, int budget, std::uint64_t nodeLimit,
             double timeLimit, bool json) {
    GraphSpec spec = parse_spec(specText);
    ConcreteGraph g = realize(spec);
    if (budget < 0) budget = spec.min_degree() + 2;
    SearchLimits limits{nodeLimit, timeLimit};
    RangeSearchResult res = min_range_bounded(g, budget, B, limits);
    std::cerr << "# elapsed: " << std::fixed << std::setprecision(3)
              << res.elapsedSeconds << "s\n";
    if (json) {
        ordered_json out;
        out["command"] = "spum";
        out["graph"] = to_canonical_string(spec);
        out["maxLabel"] = B;
        out["isolateBudget"] = budget;
        out["status"] = status_string(res.status);
        out["achievedRange"] = res.achievedRange;
        out["witness"] = res.witness ? labelling_json(*res.witness) : ordered_json(nullptr);
        out["nodes"] = res.nodes;
        out["message"] = res.message;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "graph: " << to_canonical_string(spec) << "\n";
        std::cout << "status: " << status_string(res.status) << "\n";
        std::cout << "note: " << res.message << "\n";
        if (res.status == SearchStatus::Found) {
            std::cout << "minimum range (labels <= " << B << ", isolates <= " << budget
                      << "): " << res.achievedRange << "\n";
            std::cout << "witness:\n" << to_document(*res.witness);
        }
        std::cout << "nodes: " << res.nodes << "\n";
    }
    return status_exit(res.status);
}

struct BenchPreset {
    const char* id;
    int from, to;
};

constexpr BenchPreset kBenchPresets[] = {
    {"kc4", 1, 8},
    {"c4_linear_exponential", 1, 10},
    {"matching_exponential", 1, 12},
    {"matching_arithmetic", 2, 24},
    {"fibonacci_path", 2, 20},
    {"fibonacci_cycle", 3, 16},
    {"triangles_chain", 1, 10},
};

int run_bench(const std::string& scheme, int from, int to, bool json) {
    std::vector<BenchPreset> jobs;
    if (scheme.empty()) {
        jobs.assign(std::begin(kBenchPresets), std::end(kBenchPresets));
    } else {
        BenchPreset p{"", from, to};
        for (const auto& preset : kBenchPresets)
            if (scheme == preset.id)
                p = {preset.id, from > 0 ? from : preset.from, to > 0 ? to : preset.to};
        if (p.id[0] == '\0') {
            std::cerr << "error: unknown scheme '" << scheme << "' (known:";
            for (const auto& preset : kBenchPresets) std::cerr << " " << preset.id;
            std::cerr << ")\n";
            return 2;
        }
        jobs.push_back(p);
    }

    ordered_json tables = ordered_json::array();
    for (const auto& job : jobs) {
        auto rows = growth_table(job.id, job.from, job.to);
        if (json) {
            ordered_json t;
            t["scheme"] = job.id;
            t["rows"] = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json rom;
                rom["param"] = r.param;
                rom["n"] = r.n;
                rom["maxLabel"] = r.maxLabel.str();
                rom["range"] = r.range.str();
                rom["ratio"] = format_ratio(r.ratio);
                t["rows"].push_back(std::move(rom));
            }
            tables.push_back(std::move(t));
        } else {
            std::cout << "scheme: " << job.id << "\n";
            std::cout << "  param\tn\tmax-label\trange\tratio\n";
            for (const auto& r : rows)
                std::cout << "  " << r.param << "\t" << r.n << "\t" << r.maxLabel << "\t"
                          << r.range << "\t" << format_ratio(r.ratio) << "\n";
        }
    }
    if (json) {
        ordered_json out;
        out["command"] = "bench";
        out["tables"] = tables;
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_demo(bool json) {
    int mismatches = 0;
    std::size_t total = 0;
    ordered_json rows = ordered_json::array();
    for (const auto& f : reference_fixtures()) {
        ++total;
        Certificate cert = verify(f.labelling);
        bool match = cert.valid == f.expectValid;
        if (!match) ++mismatches;
        if (json) {
            ordered_json r;
            r["id"] = f.id;
            r["expected"] = f.expectValid ? "valid" : "invalid";
            r["actual"] = cert.valid ? "valid" : "invalid";
            r["match"] = match;
            r["note"] = f.note;
            r["violations"] = violations_json(cert);
            rows.push_back(std::move(r));
        } else {
            std::cout << (match ? "[ok]   " : "[DIFF] ") << f.id << ": expected "
                      << (f.expectValid ? "valid" : "invalid") << ", got "
                      << (cert.valid ? "valid" : "invalid") << "\n";
            std::cout << "       " << f.note << "\n";
            for (const auto& v : cert.violations)
                std::cout << "       " << describe(v) << "\n";
        }
    }
    if (json) {
        ordered_json out;
        out["command"] = "demo";
        out["fixtures"] = rows;
        out["mismatches"] = mismatches;
        std::cout << out.dump(2) << "\n";
    } else if (mismatches) {
        std::cout << "MISMATCHES: " << mismatches << " of " << total << "\n";
    } else {
        std::cout << "all " << total << " reference labellings behave as expected\n";
    }
    return mismatches ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum labelling toolkit: optimal labellings, verification and bounded "
                 "search for disjoint unions of cycles and paths"};
    app.require_subcommand(1);
    bool json = false;

    std::string labelSpec;
    bool trace = false;
    auto* label = app.add_subcommand(
        "label", "construct a minimum-isolate sum labelling for a graph like '2C4+P3'");
    label->add_option("spec", labelSpec, "graph description, e.g. 'C5+C3' or '4P2'")
        ->required();
    label->add_flag("--trace", trace, "include construction steps as comments");
    label->add_flag("--json", json, "emit JSON");

    std::string verifyFile = "-";
    auto* verifyCmd = app.add_subcommand(
        "verify", "check a labelling document (default: stdin) against its claims");
    verifyCmd->add_option("file", verifyFile, "document path, or '-' for stdin");
    verifyCmd->add_flag("--json", json, "emit JSON");

    std::string sigmaSpec;
    int sigmaB = 45, sigmaIMax = -1;
    std::uint64_t nodeLimit = 0;
    double timeLimit = 0;
    auto* sigma = app.add_subcommand(
        "sigma", "bounded exhaustive search for the minimum isolate count");
    sigma->add_option("spec", sigmaSpec, "graph description")->required();
    sigma->add_option("--max-label", sigmaB, "largest label to try (default 45)")
        ->envname("SUMLAB_MAX_LABEL")
        ->check(CLI::Range(1, 500));
    sigma->add_option("--max-isolates", sigmaIMax,
                      "largest isolate count to try (default: min degree + 2)")
        ->envname("SUMLAB_MAX_ISOLATES");
    sigma->add_option("--node-limit", nodeLimit, "search node budget (default 1e10)")
        ->envname("SUMLAB_NODE_LIMIT");
    sigma->add_option("--time-limit", timeLimit, "seconds before giving up (default: off)")
        ->envname("SUMLAB_TIME_LIMIT");
    sigma->add_flag("--json", json, "emit JSON");

    std::string spumSpec;
    int spumB = 30, spumBudget = -1;
    auto* spum = app.add_subcommand(
        "spum", "bounded exhaustive search for the minimum label range");
    spum->add_option("spec", spumSpec, "graph description")->required();
    spum->add_option("--max-label", spumB, "largest label to try (default 30)")
        ->envname("SUMLAB_MAX_LABEL")
        ->check(CLI::Range(1, 500));
    spum->add_option("--max-isolates", spumBudget,
                     "isolate budget (default: min degree + 2)")
        ->envname("SUMLAB_MAX_ISOLATES");
    spum->add_option("--node-limit", nodeLimit, "search node budget (default 1e10)")
        ->envname("SUMLAB_NODE_LIMIT");
    spum->add_option("--time-limit", timeLimit, "seconds before giving up (default: off)")
        ->envname("SUMLAB_TIME_LIMIT");
    spum->add_flag("--json", json, "emit JSON");

    std::string benchScheme;
    int benchFrom = 0, benchTo = 0;
    auto* bench = app.add_subcommand("bench", "growth tables for the labelling schemes");
    bench->add_option("--scheme", benchScheme, "single scheme id (default: all)");
    bench->add_option("--from", benchFrom, "first parameter value")->check(CLI::Range(1, 64));
    bench->add_option("--to", benchTo, "last parameter value")->check(CLI::Range(1, 64));
    bench->add_flag("--json", json, "emit JSON");

    auto* demo =
        app.add_subcommand("demo", "verify the embedded reference labellings and diff "
                                   "the outcome against expectations");
    demo->add_flag("--json", json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(label)) return run_label(labelSpec, trace, json);
        if (app.got_subcommand(verifyCmd)) return run_verify(verifyFile, json);
        if (app.got_subcommand(sigma))
            return run_sigma(sigmaSpec, sigmaB, sigmaIMax, nodeLimit, timeLimit, json);
        if (app.got_subcommand(spum))
            return run_spum(spumSpec, spumB, spumBudget, nodeLimit, timeLimit, json);
        if (app.got_subcommand(bench)) return run_bench(benchScheme, benchFrom, benchTo, json);
        if (app.got_subcommand(demo)) return run_demo(json);
    } catch (const SpecParseError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const DocumentParseError& e) {
        std::cerr << "document error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
