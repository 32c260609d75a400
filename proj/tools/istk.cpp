#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "istk/error.hpp"
#include "istk/exact_oracle.hpp"
#include "istk/generators.hpp"
#include "istk/io.hpp"
#include "istk/kernelizer.hpp"
#include "istk/report.hpp"
#include "selftest.hpp"

namespace {

using namespace istk;
using nlohmann::json;

constexpr int kExitReject = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTooLarge = 4;
constexpr int kExitInternal = 5;

constexpr const char* kCsvHeader =
    "instance,seed,n,m,k,kernel_n_2k,kernel_n_3k,exchange_steps,reductions,wall_ms,outcome_2k,outcome_3k,flag";

struct Options {
    std::string input;
    std::string gen;
    std::string format = "edgelist";
    std::optional<int> k;
    std::uint64_t seed = 1;
    bool json = false;
    std::optional<int> cap;
    std::string trace;
    std::string tree;
    int instances = 1;
};

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::Io:
        case ErrorCode::NotSimple:
        case ErrorCode::Disconnected:
        case ErrorCode::UnknownVertex:
        case ErrorCode::BadSpec: return kExitInput;
        case ErrorCode::TooLarge: return kExitTooLarge;
        case ErrorCode::InternalContradiction:
        case ErrorCode::LiftBoundViolated: return kExitInternal;
        default: return kExitPrecondition;
    }
}

// --cap beats ISTK_CAP, which beats the built-in default.
int oracle_cap(const Options& o) {
    if (o.cap) return *o.cap;
    if (const char* env = std::getenv("ISTK_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadSpec, "ISTK_CAP is not an integer");
        }
    }
    return kDefaultOracleCap;
}

Graph load(const Options& o, std::uint64_t seed) {
    if (!o.input.empty() && !o.gen.empty()) throw Error(ErrorCode::BadSpec, "use either --input or --gen");
    if (!o.gen.empty()) return generate(o.gen, seed);
    if (o.input.empty()) throw Error(ErrorCode::BadSpec, "missing --input or --gen");
    Format format = parse_format(o.format);
    if (o.input == "-") return parse_graph(std::cin, format);
    return read_graph_file(o.input, format);
}

int need_k(const Options& o) {
    if (!o.k) throw Error(ErrorCode::PreconditionViolation, "--k is required");
    return *o.k;
}

void write_trace(const Options& o, const json& report) {
    if (o.trace.empty()) return;
    std::ofstream out(o.trace);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + o.trace + "'");
    out << report["trace"].dump(2) << "\n";
}

void print_edges(const Graph& g, const SpanningTree& t) { std::cout << to_edgelist(g, t.edges()); }

int cmd_kernelize(const Options& o) {
    Graph g = load(o, o.seed);
    KernelOutcome outcome = kernelize(g, o.k);
    json report = outcome_json(g, o.k, outcome);
    write_trace(o, report);
    if (o.json) {
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    std::cout << "n = " << g.order() << ", m = " << g.size() << "\n";
    std::cout << "reductions = " << outcome.trace.size() << ", exchange steps = " << outcome.exchange_steps << "\n";
    if (const auto* s = std::get_if<Solved>(&outcome.result)) {
        std::cout << "solved: spanning tree with " << s->internal << " internal vertices\n";
        print_edges(g, s->certificate);
    } else if (const auto* a = std::get_if<Answered>(&outcome.result)) {
        std::cout << "answered: opt = " << a->opt << " (" << a->reason << ")";
        if (a->decision) std::cout << ", " << (*a->decision ? "YES" : "NO");
        std::cout << "\n";
    } else {
        const auto& kernel = std::get<Kernel>(outcome.result);
        std::cout << "kernel: n' = " << kernel.graph.order() << ", m' = " << kernel.graph.size();
        if (kernel.k) std::cout << ", k' = " << *kernel.k;
        std::cout << "\n" << to_edgelist(kernel.graph);
    }
    return 0;
}

int cmd_solve(const Options& o) {
    Graph g = load(o, o.seed);
    const int k = need_k(o);
    DecisionResult d = solve_decision(g, k, oracle_cap(o));
    json report = outcome_json(g, k, d.outcome);
    report["decision"] = d.yes;
    if (d.certificate) report["certificate"] = edges_json(g, d.certificate->edges());
    write_trace(o, report);
    if (o.json) {
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    std::cout << (d.yes ? "YES" : "NO") << "\n";
    if (d.certificate) print_edges(g, *d.certificate);
    return 0;
}

int cmd_oracle(const Options& o) {
    Graph g = load(o, o.seed);
    OptResult r = opt_bruteforce(g, oracle_cap(o));
    if (o.json) {
        std::cout << json{{"schema", kReportSchema}, {"opt", r.opt}, {"witness", edges_json(g, r.witness.edges())}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "opt = " << r.opt << "\n";
    print_edges(g, r.witness);
    return 0;
}

int cmd_verify(const Options& o) {
    Graph g = load(o, o.seed);
    const int k = need_k(o);
    if (o.tree.empty()) throw Error(ErrorCode::BadSpec, "--tree is required");
    std::ifstream in(o.tree);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + o.tree + "'");
    Verdict v;
    try {
        v = verify_certificate(g, parse_edges(in, g), k);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UnknownVertex) throw;
        v = {false, e.what()};
    }
    if (o.json) {
        std::cout << json{{"schema", kReportSchema}, {"accepted", v.accepted}, {"reason", v.reason}}.dump(2) << "\n";
    } else {
        std::cout << (v.accepted ? "accept" : "reject") << ": " << v.reason << "\n";
    }
    return v.accepted ? 0 : kExitReject;
}

const char* tag(const KernelOutcome& outcome) {
    if (outcome.solved()) return "solved";
    return outcome.answered() ? "answered" : "kernel";
}

int cmd_bench(const Options& o) {
    const int k = need_k(o);
    std::cout << kCsvHeader << "\n";
    for (int i = 0; i < o.instances; ++i) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
        Graph g = load(o, seed);
        auto start = std::chrono::steady_clock::now();
        KernelOutcome two = kernelize(g, k);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        KernelOutcome three = baseline_kernel_3k(g, k);

        auto kernel_n = [](const KernelOutcome& out) -> std::string {
            if (const auto* kernel = std::get_if<Kernel>(&out.result)) return std::to_string(kernel->graph.order());
            return "";
        };
        std::string flag;
        const auto* k2 = std::get_if<Kernel>(&two.result);
        const auto* k3 = std::get_if<Kernel>(&three.result);
        if (k2 && k3 && k2->graph.order() > k3->graph.order()) flag = "kernel_2k_larger";
        std::ostringstream ms_text;
        ms_text.setf(std::ios::fixed);
        ms_text.precision(3);
        ms_text << ms;
        std::cout << i << ',' << seed << ',' << g.order() << ',' << g.size() << ',' << k << ',' << kernel_n(two) << ','
                  << kernel_n(three) << ',' << two.exchange_steps << ',' << two.trace.size() << ',' << ms_text.str()
                  << ',' << tag(two) << ',' << tag(three) << ',' << flag << "\n";
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& o, bool graph = true) {
    if (graph) {
        cmd->add_option("--input", o.input, "Graph file ('-' for stdin)");
        cmd->add_option("--gen", o.gen, "Generator: path:n cycle:n star:n doublestar:a,b caterpillar:n,legs gnp:n=N,m=M");
        cmd->add_option("--format", o.format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
    }
    cmd->add_option("--k", o.k, "Parameter k");
    cmd->add_option("--seed", o.seed, "Seed for generators");
    cmd->add_flag("--json", o.json, "JSON output");
    cmd->add_option("--cap", o.cap, "Oracle vertex cap (default 16, or ISTK_CAP)");
    cmd->add_option("--trace", o.trace, "Write the reduction trace as JSON to this path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-internal spanning tree kernelization"};
    app.require_subcommand(1);
    Options o;
    tool::SelftestOptions self;

    auto* kernelize_cmd = app.add_subcommand("kernelize", "Reduce to a kernel with at most 2k'-2 vertices");
    add_common(kernelize_cmd, o);
    auto* solve_cmd = app.add_subcommand("solve", "Decide whether a spanning tree with k internal vertices exists");
    add_common(solve_cmd, o);
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact maximum internal-vertex count by exhaustive search");
    add_common(oracle_cmd, o);
    auto* verify_cmd = app.add_subcommand("verify", "Check a spanning tree certificate (exit 1 on reject)");
    add_common(verify_cmd, o);
    verify_cmd->add_option("--tree", o.tree, "Certificate edge list in graph labels")->required();
    auto* bench_cmd = app.add_subcommand(
        "bench", std::string("Compare the 2k and 3k kernels; CSV columns: ") + kCsvHeader);
    add_common(bench_cmd, o);
    bench_cmd->add_option("--instances", o.instances, "Number of seeds, starting at --seed")->check(CLI::PositiveNumber);
    auto* selftest_cmd = app.add_subcommand("selftest", "Invariant sweep over small graphs and a random corpus");
    selftest_cmd->add_option("--seed", self.seed, "Seed for the random corpus");
    selftest_cmd->add_option("--max-n", self.max_n, "Exhaustive sweep up to this many vertices")->check(CLI::Range(1, 8));
    selftest_cmd->add_option("--random", self.random_graphs, "Number of random graphs");
    selftest_cmd->add_option("--cap", o.cap, "Oracle vertex cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*kernelize_cmd) return cmd_kernelize(o);
        if (*solve_cmd) return cmd_solve(o);
        if (*oracle_cmd) return cmd_oracle(o);
        if (*verify_cmd) return cmd_verify(o);
        if (*bench_cmd) return cmd_bench(o);
        self.cap = oracle_cap(o);
        return tool::run_selftest(self, std::cout) == 0 ? 0 : kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
}
