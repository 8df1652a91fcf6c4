// Compares the sequential engine against the task-parallel one on the
// Henneberg corpus and on one larger fixed graph; verifies identical counts.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "laman/engine.hpp"
#include "laman/generate.hpp"
#include "laman/rigidity.hpp"

using namespace laman;

namespace {

struct Workload {
    std::string name;
    std::vector<SimpleGraph> graphs;
};

double time_workload(const Workload& w, int jobs, std::vector<std::uint64_t>& counts) {
    EngineOptions opts;
    opts.jobs = jobs;
    LamanEngine engine(opts);
    counts.clear();
    const auto t0 = std::chrono::steady_clock::now();
    for (const SimpleGraph& g : w.graphs) counts.push_back(engine.laman_number_graph(g));
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

SimpleGraph fixed_large_graph(int n) {
    // deterministic alternation of the two Henneberg moves from a triangle;
    // {z-1, z-2} stays an edge after every step, so the type-II split is valid
    SimpleGraph g = SimpleGraph::from_edges({{0, 1}, {0, 2}, {1, 2}});
    for (VertexId z = 3; z < static_cast<VertexId>(n); ++z) {
        if (z % 2 == 1)
            g = henneberg_type1(g, z - 1, z - 2);
        else
            g = henneberg_type2(g, z - 1, z - 2, z - 3);
    }
    return g;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"engine benchmark: sequential vs task-parallel"};
    int max_vertices = 7;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    int large_n = 10;
    app.add_option("--max-vertices", max_vertices, "corpus bound (3..9)");
    app.add_option("--jobs", jobs, "parallel width to benchmark");
    app.add_option("--large-n", large_n, "size of the single large graph");
    CLI11_PARSE(app, argc, argv);
    if (jobs < 2) jobs = 2;

    std::vector<Workload> workloads;
    Workload corpus{"corpus n<=" + std::to_string(max_vertices), {}};
    for (int n = 3; n <= max_vertices; ++n)
        for (SimpleGraph& g : generate_laman(n)) corpus.graphs.push_back(std::move(g));
    workloads.push_back(std::move(corpus));
    workloads.push_back({"single n=" + std::to_string(large_n), {fixed_large_graph(large_n)}});

    std::cout << "workload,graphs,serial_ms,parallel_ms,jobs,speedup,match\n";
    bool all_match = true;
    for (const Workload& w : workloads) {
        std::vector<std::uint64_t> serial, parallel;
        double ms1 = time_workload(w, 1, serial);
        double msn = time_workload(w, jobs, parallel);
        bool match = serial == parallel;
        all_match = all_match && match;
        std::cout << w.name << ',' << w.graphs.size() << ',' << ms1 << ',' << msn << ',' << jobs
                  << ',' << (msn > 0 ? ms1 / msn : 0.0) << ',' << (match ? "yes" : "NO") << '\n';
    }
    if (!all_match) {
        std::cerr << "parallel results diverge from sequential results\n";
        return 1;
    }
    return 0;
}
