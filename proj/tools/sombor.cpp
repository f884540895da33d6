// sombor: elliptic Sombor / Euler Sombor indices of graphs, their join and
// corona products, and brute-force verification of the product bounds.
//
// Exit codes: 0 success, 1 bound failures on corrected formulas (verify),
// 2 usage or parse errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sombor/bounds.hpp"
#include "sombor/graph6.hpp"
#include "sombor/indices.hpp"
#include "sombor/products.hpp"
#include "sombor/verify.hpp"

namespace {

using namespace sombor;
using ojson = nlohmann::ordered_json;

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

/// Raised for bad input; carries the message printed to stderr.
struct UsageError {
    std::string message;
};

struct OutputOptions {
    std::string format = "csv";
    int precision = 9;

    bool json() const { return format == "json"; }

    std::string real(double x) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        return buf;
    }
    // Rounds to the requested digits, then lets the JSON writer print the shortest form.
    double rounded(double x) const { return std::stod(real(x)); }
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--precision", out.precision, "Significant digits for reals")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

struct NamedGraph {
    std::string g6;
    Graph graph;
};

Graph parse_or_throw(const std::string& text, const std::string& where) {
    try {
        return parse_graph6(text);
    } catch (const Graph6Error& e) {
        throw UsageError{"parse error on " + where + ": " + e.what()};
    }
}

void read_lines(std::istream& in, const std::string& source, std::vector<NamedGraph>& out) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (number == 1 && line.starts_with(">>graph6<<")) line.erase(0, 10);
        if (line.empty()) continue;
        Graph g = parse_or_throw(line, source + "line " + std::to_string(number));
        out.push_back({write_graph6(g), std::move(g)});
    }
}

/// Positional arguments count as lines 1..k; "-" pulls lines from stdin.
std::vector<NamedGraph> collect_graphs(const std::vector<std::string>& positional, const std::string& file) {
    std::vector<NamedGraph> graphs;
    for (std::size_t i = 0; i < positional.size(); ++i) {
        if (positional[i] == "-") {
            read_lines(std::cin, "stdin ", graphs);
            continue;
        }
        Graph g = parse_or_throw(positional[i], "line " + std::to_string(i + 1));
        graphs.push_back({write_graph6(g), std::move(g)});
    }
    if (file == "-") {
        read_lines(std::cin, "stdin ", graphs);
    } else if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw UsageError{"cannot open " + file};
        read_lines(in, file + " ", graphs);
    }
    return graphs;
}

// --- index ---------------------------------------------------------------

struct IndexArgs {
    std::vector<std::string> graphs;
    std::string file;
    OutputOptions out;
};

int run_index(const IndexArgs& args) {
    const auto graphs = collect_graphs(args.graphs, args.file);
    if (graphs.empty()) throw UsageError{"index: no input graphs"};
    if (!args.out.json()) std::cout << "g6,n,m,eso,eu,so\n";
    for (const auto& [g6, g] : graphs) {
        const IndexReport r = index_report(g);
        if (args.out.json()) {
            ojson j;
            j["g6"] = g6;
            j["n"] = g.order();
            j["m"] = r.m;
            j["eso"] = args.out.rounded(r.eso);
            j["eu"] = args.out.rounded(r.eu);
            j["so"] = args.out.rounded(r.so);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << g6 << ',' << g.order() << ',' << r.m << ',' << args.out.real(r.eso) << ','
                      << args.out.real(r.eu) << ',' << args.out.real(r.so) << '\n';
        }
    }
    return 0;
}

// --- product -------------------------------------------------------------

struct ProductArgs {
    std::string kind;
    std::string g1;
    std::string g2;
};

int run_product(const ProductArgs& args) {
    const Graph g1 = parse_or_throw(args.g1, "line 1");
    const Graph g2 = parse_or_throw(args.g2, "line 2");
    const ProductKind kind = args.kind == "join" ? ProductKind::join : ProductKind::corona;
    std::cout << write_graph6(product(kind, g1, g2)) << '\n';
    return 0;
}

// --- bounds --------------------------------------------------------------

struct BoundsArgs {
    std::string kind;
    std::vector<std::string> graphs;
    std::vector<std::size_t> p1;
    std::vector<std::size_t> p2;
    std::string variant = "proof-conclusion";
    double tolerance = 1e-9;
    OutputOptions out;
};

GraphParams params_from(const std::vector<std::size_t>& v, const char* name) {
    try {
        return GraphParams::make(v[0], v[1], v[2], v[3]);
    } catch (const GraphError& e) {
        throw UsageError{std::string("invalid ") + name + ": " + e.what()};
    }
}

int run_bounds(const BoundsArgs& args) {
    const BoundKind kind = *parse_bound_kind(args.kind);
    const FormulaVariant variant = *parse_formula_variant(args.variant);

    std::optional<Graph> g1;
    std::optional<Graph> g2;
    GraphParams p1;
    GraphParams p2;
    if (!args.graphs.empty()) {
        if (args.graphs.size() != 2 || !args.p1.empty() || !args.p2.empty()) {
            throw UsageError{"bounds: give either two graph6 strings or --p1 and --p2"};
        }
        g1 = parse_or_throw(args.graphs[0], "line 1");
        g2 = parse_or_throw(args.graphs[1], "line 2");
        p1 = params_of(*g1);
        p2 = params_of(*g2);
    } else {
        if (args.p1.size() != 4 || args.p2.size() != 4) {
            throw UsageError{"bounds: give either two graph6 strings or --p1 and --p2 (n,m,max,min)"};
        }
        p1 = params_from(args.p1, "--p1");
        p2 = params_from(args.p2, "--p2");
    }

    const BoundPair bp = bounds_for(kind, p1, p2, variant);
    std::optional<double> exact;
    std::optional<double> printed;
    if (p1.is_regular() && p2.is_regular()) {
        exact = regular_exact(kind, p1, p2);
        printed = printed_proposition(kind, p1, p2);
    }
    std::optional<VerificationRecord> rec;
    if (g1) {
        auto recs = verify_pair(*g1, *g2, std::span(&kind, 1), std::span(&variant, 1), args.tolerance);
        if (recs.empty()) {
            // statement on a kind where it coincides with the corrected formula
            const FormulaVariant corrected = FormulaVariant::proof_conclusion;
            recs = verify_pair(*g1, *g2, std::span(&kind, 1), std::span(&corrected, 1), args.tolerance);
        }
        rec = recs.front();
    }
    auto tight = [&](double alpha) {
        return std::abs(rec->true_value - alpha) <= check_tolerance(rec->true_value, args.tolerance);
    };

    const auto& o = args.out;
    if (o.json()) {
        ojson j;
        j["kind"] = to_string(kind);
        j["variant"] = to_string(bp.variant);
        j["alpha1"] = o.rounded(bp.alpha1);
        j["alpha2"] = o.rounded(bp.alpha2);
        j["regular_exact"] = exact ? ojson(o.rounded(*exact)) : ojson(nullptr);
        j["printed_proposition"] = printed ? ojson(o.rounded(*printed)) : ojson(nullptr);
        if (rec) {
            j["true_value"] = o.rounded(rec->true_value);
            j["lower_ok"] = rec->lower_ok;
            j["upper_ok"] = rec->upper_ok;
            j["lower_tight"] = tight(bp.alpha1);
            j["upper_tight"] = tight(bp.alpha2);
        }
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "kind,variant,alpha1,alpha2,regular_exact,printed_proposition,true_value,lower_ok,upper_ok,"
                 "lower_tight,upper_tight\n";
    std::cout << to_string(kind) << ',' << to_string(bp.variant) << ',' << o.real(bp.alpha1) << ','
              << o.real(bp.alpha2) << ',' << (exact ? o.real(*exact) : "") << ','
              << (printed ? o.real(*printed) : "") << ',';
    if (rec) {
        auto b = [](bool x) { return x ? "true" : "false"; };
        std::cout << o.real(rec->true_value) << ',' << b(rec->lower_ok) << ',' << b(rec->upper_ok) << ','
                  << b(tight(bp.alpha1)) << ',' << b(tight(bp.alpha2)) << '\n';
    } else {
        std::cout << ",,,,\n";
    }
    return 0;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
    std::optional<std::size_t> max_order;
    std::optional<std::size_t> max_order_1;
    std::optional<std::size_t> max_order_2;
    std::string mode = "exhaustive";
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    std::vector<std::string> kinds{"all"};
    std::string variant = "proof-conclusion";
    std::string records;
    std::string records_format = "csv";
};

int run_verify(const VerifyArgs& args) {
    SweepConfig cfg;
    cfg.mode = args.mode == "random" ? SweepMode::random : SweepMode::exhaustive;
    const std::size_t fallback = args.max_order.value_or(4);
    cfg.max_order_1 = args.max_order_1.value_or(fallback);
    cfg.max_order_2 = args.max_order_2.value_or(fallback);
    cfg.sample_count = args.samples;
    cfg.rng_seed = args.seed;
    cfg.tolerance = args.tolerance;

    cfg.kinds.clear();
    for (const auto& k : args.kinds) {
        if (k == "all") {
            cfg.kinds.assign(std::begin(kAllBoundKinds), std::end(kAllBoundKinds));
            break;
        }
        cfg.kinds.push_back(*parse_bound_kind(k));
    }
    if (args.variant == "all") {
        cfg.variants = {FormulaVariant::proof_conclusion, FormulaVariant::statement};
    } else {
        cfg.variants = {*parse_formula_variant(args.variant)};
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError{std::string("verify: ") + e.what()};
    }

    std::ofstream records;
    std::optional<RecordWriter> writer;
    if (!args.records.empty()) {
        records.open(args.records, std::ios::binary);
        if (!records) throw UsageError{"cannot write " + args.records};
        writer.emplace(records, args.records_format == "json" ? RecordFormat::jsonl : RecordFormat::csv, cfg);
    }
    RecordSink sink;
    if (writer) sink = [&](const VerificationRecord& r) { (*writer)(r); };

    const SweepSummary summary = run_sweep(cfg, sink);
    std::cout << summary_to_json(summary) << '\n';
    for (const auto& s : summary.streams) {
        if (s.failures > 0) {
            std::cerr << to_string(s.kind) << " (" << to_string(s.variant) << "): " << s.failures << " of "
                      << s.pairs << " pairs violate the bounds; first counterexample "
                      << s.first_counterexample->first << ' ' << s.first_counterexample->second << '\n';
        }
    }
    return summary.corrected_failures() == 0 ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptic Sombor and Euler Sombor indices of graph join and corona products"};
    app.require_subcommand(1);

    IndexArgs index_args;
    auto* index = app.add_subcommand("index", "Compute ESO, EU and SO for graph6 inputs");
    index->add_option("graphs", index_args.graphs, "graph6 strings ('-' reads stdin)");
    index->add_option("-f,--file", index_args.file, "File with one graph6 record per line ('-' for stdin)");
    add_output_options(index, index_args.out);

    ProductArgs product_args;
    auto* prod = app.add_subcommand("product", "Print the graph6 of a join or corona product");
    prod->add_option("kind", product_args.kind, "join | corona")->required()->check(CLI::IsMember({"join", "corona"}));
    prod->add_option("g1", product_args.g1, "first factor (graph6)")->required();
    prod->add_option("g2", product_args.g2, "second factor (graph6)")->required();

    const std::vector<std::string> kind_names{"eso-join", "eu-join", "eso-corona", "eu-corona"};
    BoundsArgs bounds_args;
    auto* bnd = app.add_subcommand("bounds", "Evaluate a bound pair from graphs or parameters");
    bnd->add_option("kind", bounds_args.kind, "eso-join | eu-join | eso-corona | eu-corona")
        ->required()
        ->check(CLI::IsMember(kind_names));
    bnd->add_option("graphs", bounds_args.graphs, "two graph6 strings");
    bnd->add_option("--p1", bounds_args.p1, "first factor as n,m,max_deg,min_deg")->delimiter(',')->expected(4);
    bnd->add_option("--p2", bounds_args.p2, "second factor as n,m,max_deg,min_deg")->delimiter(',')->expected(4);
    bnd->add_option("--variant", bounds_args.variant, "proof-conclusion | statement")
        ->check(CLI::IsMember({"proof-conclusion", "corrected", "statement"}))
        ->capture_default_str();
    bnd->add_option("--tolerance", bounds_args.tolerance, "Relative tolerance for the flags")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(bnd, bounds_args.out);

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "Brute-force sweep of the product bounds");
    ver->add_option("--max-order", verify_args.max_order, "Maximum order of both factors (default 4)");
    ver->add_option("--max-order-1", verify_args.max_order_1, "Maximum order of the first factor");
    ver->add_option("--max-order-2", verify_args.max_order_2, "Maximum order of the second factor");
    ver->add_option("--mode", verify_args.mode, "exhaustive | random")
        ->check(CLI::IsMember({"exhaustive", "random"}))
        ->capture_default_str();
    ver->add_option("--samples", verify_args.samples, "Pairs drawn in random mode")->capture_default_str();
    ver->add_option("--seed", verify_args.seed, "RNG seed for random mode")->capture_default_str();
    ver->add_option("--tolerance", verify_args.tolerance, "Relative bracketing tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto kinds_check = kind_names;
    kinds_check.push_back("all");
    ver->add_option("--kinds", verify_args.kinds, "all or a comma-separated list of kinds")
        ->delimiter(',')
        ->check(CLI::IsMember(kinds_check));
    ver->add_option("--variant", verify_args.variant, "proof-conclusion | statement | all")
        ->check(CLI::IsMember({"proof-conclusion", "corrected", "statement", "all"}))
        ->capture_default_str();
    ver->add_option("--records", verify_args.records, "Write every record to this path");
    ver->add_option("--records-format", verify_args.records_format, "csv | json (JSON-lines)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*index) return run_index(index_args);
        if (*prod) return run_product(product_args);
        if (*bnd) return run_bounds(bounds_args);
        return run_verify(verify_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
