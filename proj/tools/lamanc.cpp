#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laman/edge_list.hpp"
#include "laman/engine.hpp"
#include "laman/errors.hpp"
#include "laman/exit_codes.hpp"
#include "laman/generate.hpp"
#include "laman/oracle.hpp"
#include "laman/rigidity.hpp"
#include "laman/run_record.hpp"
#include "laman/version.hpp"

namespace {

using namespace laman;

void print_stats(const RecursionStats& s) {
    std::cerr << "nodes=" << s.nodes << " cache_hits=" << s.cache_hits
              << " splits_enumerated=" << s.splits_enumerated
              << " splits_surviving=" << s.splits_surviving
              << " non_pseudo_laman_unary=" << s.non_pseudo_laman_unary
              << " elapsed_ms=" << s.elapsed_ms << '\n';
}

PivotStrategy strategy_from_name(const std::string& name) {
    if (name == "default") return PivotStrategy::MaxDegree;
    if (name == "first") return PivotStrategy::First;
    throw InputError("unknown pivot strategy: " + name);
}

int run_check(const std::string& path) {
    SimpleGraph g = read_edge_list_file(path);
    std::cout << (is_laman(g) ? "Laman" : "not Laman") << '\n';
    return kExitOk;
}

int run_count(const std::string& path, int jobs, const std::string& pivot_name, bool early_zero,
              const std::string& records_path) {
    SimpleGraph g = read_edge_list_file(path);
    if (!is_laman(g)) throw NotLamanError("input graph is not Laman");

    std::uint64_t value = 0;
    RecursionStats stats;
    if (pivot_name == "all") {
        // fresh engine per pivot so agreement is not masked by a shared cache
        const Bigraph b = doubled_bigraph(g);
        bool first = true;
        for (const MultiEdge& e : b.left().edges()) {
            EngineOptions opts;
            opts.jobs = jobs;
            opts.early_zero = early_zero;
            LamanEngine engine(opts);
            std::uint64_t v = engine.laman_number_with_root_pivot(b, e.id);
            if (first) {
                value = v;
                stats = engine.stats();
                first = false;
            } else if (v != value) {
                throw std::logic_error("pivot disagreement: biedge " + std::to_string(e.id) +
                                       " gives " + std::to_string(v) + ", expected " +
                                       std::to_string(value));
            }
        }
        std::cerr << "pivots agree across " << b.biedge_count() << " biedges\n";
    } else {
        EngineOptions opts;
        opts.pivot_strategy = strategy_from_name(pivot_name);
        opts.jobs = jobs;
        opts.early_zero = early_zero;
        LamanEngine engine(opts);
        value = engine.laman_number_graph(g);
        stats = engine.stats();
    }

    std::cout << value << '\n';
    print_stats(stats);

    if (!records_path.empty()) {
        RunRecord rec;
        rec.fingerprint = canonical_key(g).hex();
        rec.n_vertices = static_cast<std::uint32_t>(g.vertex_count());
        rec.n_edges = static_cast<std::uint32_t>(g.edge_count());
        rec.laman_number = value;
        rec.stats = stats;
        rec.version = kVersion;
        rec.timestamp = current_timestamp();
        append_run_record(records_path, rec);
    }
    return kExitOk;
}

int run_oracle(const std::string& path, std::uint64_t seed, std::uint32_t prime, int jobs) {
    SimpleGraph g = read_edge_list_file(path);
    OracleOptions opts;
    opts.prime = prime;
    opts.jobs = jobs;
    std::uint64_t value = oracle_laman_number(g, seed, opts);
    std::cout << value << '\n';
    return kExitOk;
}

int run_generate(int n, int jobs) {
    GenerateOptions opts;
    opts.jobs = jobs;
    std::vector<SimpleGraph> graphs = generate_laman(n, opts);
    std::size_t i = 0;
    for (const SimpleGraph& g : graphs) {
        std::cout << "# " << ++i << '/' << graphs.size() << " key=" << canonical_key(g).hex()
                  << '\n'
                  << write_edge_list(g) << '\n';
    }
    std::cerr << graphs.size() << " Laman graphs on " << n << " vertices\n";
    return kExitOk;
}

int run_bench(int max_vertices, int jobs, const std::string& format) {
    if (max_vertices < 3 || max_vertices > 9) throw InputError("--max-vertices must be in 3..9");
    const bool csv = format == "csv";
    if (!csv && format != "table") throw InputError("unknown format: " + format);

    EngineOptions eopts;
    eopts.jobs = jobs;
    LamanEngine engine(eopts); // one cache across the whole corpus
    if (csv)
        std::cout << "key,n_vertices,n_edges,laman_number,elapsed_ms\n";
    else
        std::cout << "key  n_vertices  n_edges  laman_number  elapsed_ms\n";
    for (int n = 3; n <= max_vertices; ++n) {
        GenerateOptions gopts;
        gopts.jobs = jobs;
        for (const SimpleGraph& g : generate_laman(n, gopts)) {
            const double before = engine.stats().elapsed_ms;
            std::uint64_t value = engine.laman_number_graph(g);
            const double ms = engine.stats().elapsed_ms - before;
            const std::string key = canonical_key(g).hex();
            if (csv)
                std::cout << key << ',' << g.vertex_count() << ',' << g.edge_count() << ','
                          << value << ',' << ms << '\n';
            else
                std::cout << key << "  " << g.vertex_count() << "  " << g.edge_count() << "  "
                          << value << "  " << ms << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laman number toolkit: realization counting for minimally rigid graphs"};
    app.set_version_flag("--version", laman::kVersion);
    app.require_subcommand(1);

    std::string path;
    int jobs = 1;
    std::string pivot_name = "default";
    bool no_early_zero = false;
    std::string records_path;
    std::uint64_t seed = 12345;
    std::uint32_t prime = laman::kDefaultPrime;
    int gen_n = 0;
    int max_vertices = 6;
    std::string format = "csv";

    CLI::App* check = app.add_subcommand("check", "decide whether a graph is Laman");
    check->add_option("file", path, "edge-list file")->required();

    CLI::App* count = app.add_subcommand("count", "Laman number via the bigraph recursion");
    count->add_option("file", path, "edge-list file")->required();
    count->add_option("--jobs", jobs, "parallel width (1 = sequential)");
    count->add_option("--pivot-strategy", pivot_name, "default | first | all")
        ->check(CLI::IsMember({"default", "first", "all"}));
    count->add_flag("--no-early-zero", no_early_zero, "disable the coincident-biedge shortcut");
    count->add_option("--records", records_path, "append the result to this JSONL file");

    CLI::App* oracle = app.add_subcommand("oracle", "algebraic solution count over a prime field");
    oracle->add_option("file", path, "edge-list file")->required();
    oracle->add_option("--seed", seed, "labeling seed");
    oracle->add_option("--prime", prime, "field modulus (prime > 2^20)");
    oracle->add_option("--jobs", jobs, "parallel trials");

    CLI::App* generate = app.add_subcommand("generate", "all Laman graphs on n vertices");
    generate->add_option("n", gen_n, "vertex count (3..9)")->required()->check(CLI::Range(3, 9));
    generate->add_option("--jobs", jobs, "parallel width");

    CLI::App* bench = app.add_subcommand("bench", "count every graph up to a vertex bound");
    bench->add_option("--max-vertices", max_vertices, "largest vertex count (3..9)")
        ->check(CLI::Range(3, 9));
    bench->add_option("--jobs", jobs, "parallel width");
    bench->add_option("--format", format, "csv | table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : laman::kExitParse;
    }

    try {
        if (*check) return run_check(path);
        if (*count) return run_count(path, jobs, pivot_name, !no_early_zero, records_path);
        if (*oracle) return run_oracle(path, seed, prime, jobs);
        if (*generate) return run_generate(gen_n, jobs);
        if (*bench) return run_bench(max_vertices, jobs, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return laman::exit_code_for(e);
    }
    return laman::kExitOther;
}
