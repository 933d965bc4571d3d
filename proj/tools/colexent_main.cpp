#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "colexent/colex.hpp"
#include "colexent/entropy.hpp"
#include "colexent/oracle.hpp"
#include "colexent/report_io.hpp"
#include "colexent/serialize.hpp"

namespace {

using namespace colexent;

// Exit codes: 0 success / claim holds, 1 counterexample found, 2 usage or
// input error.
constexpr int kExitHolds = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("COLEXENT_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p;
}

void write_or_print(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    const auto p = resolve_output(output_path);
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot open output file: " + p.string());
    out << payload;
}

std::string serialize_graph(const Graph& g, const std::string& format, const std::string& name) {
    if (format == "edgelist") return to_edge_list(g);
    if (format == "graph6") return to_graph6(g) + "\n";
    return to_dot(g, name);
}

void print_sequence_summary(const DegreeSequence& ds, int precision) {
    std::cout << "m: " << ds.sum() / 2 << "\n";
    std::cout << "degree_sequence: " << to_string(ds) << "\n";
    std::cout << "h: " << format_double(h_value(ds), precision) << "\n";
    std::cout << "I: " << format_double(entropy(ds), precision) << "\n";
    std::cout << "exact_key: " << h_exact_key(ds).str() << "\n";
}

int run_build(long long m, int k, const std::string& format, const std::string& output,
              int precision) {
    const Graph g = k > 0 ? build_colex_k(m, k) : build_colex(m);
    const std::string name =
        k > 0 ? "C_" + std::to_string(m) + "_" + std::to_string(k) : "C_" + std::to_string(m);
    write_or_print(serialize_graph(g, format, name), output);
    const DegreeSequence ds = degree_sequence(g);
    std::cout << "graph: " << (k > 0 ? "C(" + std::to_string(m) + "," + std::to_string(k) + ")"
                                     : "C(" + std::to_string(m) + ")")
              << "\n";
    std::cout << "n: " << g.order() << "\n";
    print_sequence_summary(ds, precision);
    return kExitHolds;
}

int run_entropy(const std::string& sequence, const std::string& input,
                const std::string& input_format, int precision) {
    DegreeSequence ds;
    if (!sequence.empty()) {
        ds = parse_degree_sequence(sequence);
        if (const auto bad = erdos_gallai_violation(ds.values())) {
            if (*bad == 0)
                throw std::runtime_error("sequence is not graphical: odd degree sum");
            throw std::runtime_error(
                "sequence is not graphical: Erdos-Gallai inequality fails at prefix " +
                std::to_string(*bad));
        }
    } else {
        std::string text;
        if (input == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream in(input);
            if (!in) throw std::runtime_error("cannot open input file: " + input);
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        const Graph g = input_format == "graph6" ? from_graph6(text) : from_edge_list(text);
        ds = degree_sequence(g);
    }
    if (ds.empty()) throw std::runtime_error("empty graph or degree sequence");
    print_sequence_summary(ds, precision);
    return kExitHolds;
}

struct VerifyParams {
    long long m_max = 0;
    int k_max = 0;
    long long span = 500;
    int n_max = 0;
    long long t_max = 30;
    int ell_max = 5;
    std::vector<int> rs{2, 3, 4};
    int threads = 0;  // hardware concurrency
};

VerificationOutcome dispatch_verify(const std::string& claim, const VerifyParams& p) {
    const SweepOptions opts{p.threads};
    if (claim == "main") return verify_main_theorem(p.m_max > 0 ? p.m_max : 12, opts);
    if (claim == "maxentropy") return verify_max_entropy(p.m_max > 0 ? p.m_max : 15, opts);
    if (claim == "largeclique")
        return verify_lemma_largeclique(p.k_max > 0 ? p.k_max : 30, p.span, opts);
    if (claim == "boundary") return verify_equality_boundary(p.k_max > 0 ? p.k_max : 50);
    if (claim == "threshold") return verify_threshold_theorem(p.m_max > 0 ? p.m_max : 12, opts);
    if (claim == "extremal") return verify_extremal_is_threshold(p.m_max > 0 ? p.m_max : 15, opts);
    if (claim == "trees") return verify_trees(p.n_max > 0 ? p.n_max : 12, opts);
    if (claim == "balanced") return verify_balanced_gain(p.t_max, p.n_max > 0 ? p.n_max : 6, p.ell_max, opts);
    if (claim == "bounded") return verify_bounded_degree_sweep(p.m_max > 0 ? p.m_max : 15, p.rs, opts);
    if (claim == "telescoping") return verify_telescoping(p.k_max > 0 ? p.k_max : 200, opts);
    throw CLI::ValidationError("unknown claim '" + claim + "'");
}

int run_verify(const std::string& claim, const VerifyParams& params, const std::string& format,
               const std::string& output, int precision, bool timings) {
    const VerificationOutcome outcome = dispatch_verify(claim, params);
    const ReportFormat fmt{precision, timings};
    std::string payload;
    if (format == "json") payload = to_json(outcome, fmt);
    else if (format == "csv") payload = to_csv(outcome, fmt);
    else payload = to_text(outcome, fmt);
    write_or_print(payload, output);
    return outcome.holds ? kExitHolds : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colex graphs, degree-based graph entropy, and exhaustive verification"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Construct the extremal graph C(m) or C(m,k)");
    long long build_m = 0;
    int build_k = 0;
    std::string build_format = "edgelist";
    std::string build_output;
    int build_precision = 12;
    build->add_option("--m", build_m, "Number of edges")->required();
    build->add_option("--k", build_k, "Clique parameter (builds C(m,k) instead of C(m))");
    build->add_option("--format", build_format, "Graph output format")
        ->check(CLI::IsMember({"edgelist", "graph6", "dot"}));
    build->add_option("--output", build_output, "Write the graph to this file instead of stdout");
    build->add_option("--precision", build_precision, "Significant digits for floats");

    // entropy
    auto* ent = app.add_subcommand("entropy", "Entropy report for a graph or degree sequence");
    std::string ent_sequence;
    std::string ent_input;
    std::string ent_input_format = "edgelist";
    int ent_precision = 12;
    ent->add_option("--sequence", ent_sequence, "Inline degree sequence, e.g. 3,2,2,1");
    ent->add_option("--input", ent_input, "Graph file to read ('-' for stdin)");
    ent->add_option("--input-format", ent_input_format, "Input graph format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    ent->add_option("--precision", ent_precision, "Significant digits for floats");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a brute-force verification sweep");
    std::string claim;
    VerifyParams params;
    std::string verify_format = "text";
    std::string verify_output;
    int verify_precision = 12;
    bool verify_timings = false;
    verify
        ->add_option("claim", claim,
                     "One of: main, maxentropy, largeclique, boundary, threshold, extremal, "
                     "trees, balanced, bounded, telescoping")
        ->required()
        ->check(CLI::IsMember({"main", "maxentropy", "largeclique", "boundary", "threshold",
                               "extremal", "trees", "balanced", "bounded", "telescoping"}));
    verify->add_option("--m-max", params.m_max, "Upper bound of the size sweep");
    verify->add_option("--k-max", params.k_max, "Upper bound of the clique-parameter sweep");
    verify->add_option("--span", params.span, "Sizes past binom2(k) checked per k (largeclique)");
    verify->add_option("--n-max", params.n_max, "Upper bound on order (trees) or parts (balanced)");
    verify->add_option("--t-max", params.t_max, "Upper bound on the total t (balanced)");
    verify->add_option("--ell-max", params.ell_max, "Upper bound on ell (balanced)");
    verify->add_option("--r", params.rs, "Degree bounds to sweep (bounded)");
    verify->add_option("--threads", params.threads, "Parallel sweep width (0 = all cores)");
    verify->add_option("--format", verify_format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--output", verify_output, "Write the report to this file");
    verify->add_option("--precision", verify_precision, "Significant digits for floats");
    verify->add_flag("--timings", verify_timings, "Include elapsed time in reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (build->parsed()) return run_build(build_m, build_k, build_format, build_output, build_precision);
        if (ent->parsed()) {
            if (ent_sequence.empty() == ent_input.empty())
                throw std::runtime_error("exactly one of --sequence or --input is required");
            return run_entropy(ent_sequence, ent_input, ent_input_format, ent_precision);
        }
        return run_verify(claim, params, verify_format, verify_output, verify_precision,
                          verify_timings);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
