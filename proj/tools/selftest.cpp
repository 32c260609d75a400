#include "selftest.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <string>

#include "istk/error.hpp"
#include "istk/exact_oracle.hpp"
#include "istk/generators.hpp"
#include "istk/kernelizer.hpp"
#include "istk/local_search.hpp"
#include "istk/reducible.hpp"

namespace istk::tool {

namespace {

class Tally {
public:
    void check(const std::string& family, bool ok) {
        auto& [runs, fails] = counts_[family];
        ++runs;
        if (!ok) ++fails;
    }
    int failures() const {
        int total = 0;
        for (const auto& [name, c] : counts_) total += c.second;
        return total;
    }
    void print(std::ostream& out) const {
        for (const auto& [name, c] : counts_)
            out << (c.second == 0 ? "ok   " : "FAIL ") << name << ": " << c.first << " checks, " << c.second
                << " failures\n";
    }

private:
    std::map<std::string, std::pair<long, long>> counts_;
};

void sweep_graph(const Graph& g, int cap, Tally& tally) {
    const int n = g.order();
    const int opt = opt_bruteforce(g, cap).opt;

    KernelHooks hooks;
    hooks.on_maximal = [&](const Graph& h, const MaximalTree& m) {
        bool ok = static_cast<int>(m.steps.size()) <= std::max(0, h.order() - 2);
        for (const auto& step : m.steps) ok = ok && step.internal_after >= step.internal_before + 1;
        tally.check("exchange progress", ok);
        tally.check("leaf identity", leaf_identity_holds(m.tree));
        if (h.order() <= cap) tally.check("local search below opt", opt_bruteforce(h, cap).opt >= m.tree.internal_count());
    };
    hooks.on_reducible = [&](const Graph& h, const SpanningTree& t, const ReducibleStructure& rs) {
        tally.check("dichotomy", rs.independent.size() >= 2 * h.neighborhood(rs.independent).size() &&
                                     h.is_independent(rs.independent));
        tally.check("separation", separation_violations(h, t).empty());
    };
    hooks.on_pair = [&](const Graph& h, const ExpansionPair& pair) {
        if (h.order() > cap) return;
        const int before = opt_bruteforce(h, cap).opt;
        auto result = apply_reduction(h, std::nullopt, pair);
        const int s = static_cast<int>(pair.s.size());
        if (auto* d = std::get_if<DegenerateAnswer>(&result)) {
            tally.check("reduction exactness", before == 2 * s - 1 && d->opt == before);
        } else {
            const int after = opt_bruteforce(std::get<Reduction>(result).reduced, cap).opt;
            tally.check("reduction exactness", after == before - 2 * s + 2);
        }
    };
    kernelize(g, std::nullopt, hooks);

    for (int k = 1; k <= n - 2; ++k) {
        DecisionResult d = solve_decision(g, k, cap);
        tally.check("oracle equivalence", d.yes == (opt >= k));
        if (d.yes) {
            bool ok = d.certificate && verify_certificate(g, d.certificate->edges(), k).accepted;
            tally.check("certificate", ok);
        }
        if (const auto* kernel = std::get_if<Kernel>(&d.outcome.result))
            tally.check("kernel bound 2k", kernel->graph.order() <= 2 * *kernel->k - 2 && *kernel->k <= k);
        KernelOutcome base = baseline_kernel_3k(g, k);
        if (const auto* kernel = std::get_if<Kernel>(&base.result))
            tally.check("kernel bound 3k", kernel->graph.order() <= 3 * *kernel->k - 3);
    }
}

}  // namespace

int run_selftest(const SelftestOptions& options, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Tally tally;
    long graphs = 0;
    auto guarded = [&](const Graph& g) {
        ++graphs;
        try {
            sweep_graph(g, options.cap, tally);
        } catch (const Error& e) {
            tally.check("no exceptions", false);
            out << "error on graph with " << g.order() << " vertices: " << e.what() << "\n";
        }
    };
    for (int n = 1; n <= options.max_n; ++n) for_each_connected_graph(n, guarded);

    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.random_graphs; ++i) {
        int n = std::uniform_int_distribution<int>(4, options.random_max_n)(rng);
        int m = std::uniform_int_distribution<int>(n - 1, n * (n - 1) / 2)(rng);
        guarded(random_connected(n, m, rng()));
    }

    tally.print(out);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << graphs << " graphs in " << seconds << " s, " << tally.failures() << " failures\n";
    return tally.failures();
}

}  // namespace istk::tool
