// End-to-end acceptance gate. Each criterion prints one [PASS]/[FAIL] line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "helpers.hpp"
#include "laman/edge_list.hpp"
#include "laman/oracle.hpp"

using namespace laman;
using namespace testutil;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(const std::string& name, bool ok, double seconds, const std::string& note = "") {
    std::printf("[%s] %-34s %8.2fs%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), seconds,
                note.empty() ? "" : "  ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void criterion(const std::string& name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string note;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && budget_s > 0 && s > budget_s) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("over time budget");
    }
    report(name, ok, s, note);
}

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string tmp = "/tmp/acceptance_" + std::to_string(getpid()) + ".out";
    int raw = std::system((std::string(LAMANC_BIN) + " " + args + " >" + tmp + " 2>/dev/null").c_str());
    CliResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(tmp);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(tmp.c_str());
    return r;
}

std::string write_graph_file(const SimpleGraph& g, const std::string& tag) {
    std::string path = "/tmp/acceptance_" + std::to_string(getpid()) + "_" + tag + ".txt";
    std::ofstream(path) << write_edge_list(g);
    return path;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

int main() {
    // 1. K4 minus one edge counts its four realizations
    criterion("k4-minus-edge count", 1.0, [](std::string& note) {
        std::string f = write_graph_file(k4_minus_e(), "k4e");
        CliResult r = run_cli("count " + f);
        std::remove(f.c_str());
        note = "count=" + first_line(r.out);
        return r.code == 0 && r.out == "4\n";
    });

    // 2. triangle: recursion and oracle both give 2
    criterion("triangle count and oracle", 1.0, [](std::string& note) {
        std::string f = write_graph_file(triangle(), "tri");
        CliResult c = run_cli("count " + f);
        CliResult o = run_cli("oracle " + f);
        std::remove(f.c_str());
        note = "count=" + first_line(c.out) + " oracle=" + first_line(o.out);
        return c.code == 0 && o.code == 0 && c.out == "2\n" && o.out == "2\n";
    });

    // 3. recursion equals the algebraic count on every graph up to 6 vertices
    criterion("oracle equivalence to 6 vertices", 900.0, [](std::string& note) {
        int graphs = 0;
        for (int n = 3; n <= 6; ++n)
            for (const SimpleGraph& g : generate_laman(n)) {
                if (count_graph(g) != oracle_laman_number(g, 2024)) {
                    note = "mismatch on a " + std::to_string(n) + "-vertex graph";
                    return false;
                }
                ++graphs;
            }
        note = std::to_string(graphs) + " graphs agree";
        return true;
    });

    // 4. 3-prism has 24 realizations
    criterion("3-prism count", 60.0, [](std::string& note) {
        std::string f = write_graph_file(prism(), "prism");
        CliResult r = run_cli("count " + f);
        std::remove(f.c_str());
        note = "count=" + first_line(r.out);
        return r.code == 0 && r.out == "24\n";
    });

    // 5. every root pivot gives the same number on 20 sampled graphs
    criterion("pivot independence on 20 graphs", 600.0, [](std::string& note) {
        std::vector<SimpleGraph> pool;
        for (int n = 4; n <= 8; ++n)
            for (const SimpleGraph& g : generate_laman(n)) pool.push_back(g);
        std::mt19937_64 rng(505);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(20);
        for (std::size_t i = 0; i < pool.size(); ++i) {
            std::string f = write_graph_file(pool[i], "pivot" + std::to_string(i));
            CliResult r = run_cli("count " + f + " --pivot-strategy all");
            std::remove(f.c_str());
            if (r.code != 0) {
                note = "disagreement or failure on sample " + std::to_string(i);
                return false;
            }
        }
        note = "20 graphs, all pivots agree";
        return true;
    });

    // 6. attaching a degree-2 vertex doubles the count (all graphs to 7 vertices)
    criterion("henneberg-1 doubling to 7 vertices", 900.0, [](std::string& note) {
        LamanEngine engine; // shared cache: values are unaffected
        int checked = 0;
        for (int n = 3; n <= 7; ++n)
            for (const SimpleGraph& g : generate_laman(n)) {
                std::uint64_t base = engine.laman_number_graph(g);
                const auto& vs = g.vertices();
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = i + 1; j < vs.size(); ++j) {
                        if (engine.laman_number_graph(henneberg_type1(g, vs[i], vs[j])) !=
                            2 * base) {
                            note = "failed on a " + std::to_string(n) + "-vertex parent";
                            return false;
                        }
                        ++checked;
                    }
            }
        note = std::to_string(checked) + " extensions doubled";
        return true;
    });

    // 7. the two sides of a bigraph are interchangeable
    criterion("swap symmetry on 50 bigraphs", 600.0, [](std::string& note) {
        std::vector<Bigraph> corpus =
            traced_bigraphs({prism(), grow_alternating(7), grow_alternating(8)}, 400);
        std::mt19937_64 rng(707);
        std::shuffle(corpus.begin(), corpus.end(), rng);
        int checked = 0;
        for (const Bigraph& b : corpus) {
            if (checked == 50) break;
            if (b.biedge_count() > 11) continue;
            if (count_bigraph(b) != count_bigraph(swapped(b))) {
                note = "asymmetric count on bigraph " + canonical_key(b).hex().substr(0, 12);
                return false;
            }
            ++checked;
        }
        note = std::to_string(checked) + " bigraphs symmetric";
        return checked == 50;
    });

    // 8. scale: the full 8-vertex sweep plus two fixed larger graphs, each
    //    part under its own wall-clock budget
    criterion("scale check (bench 8, n=10, n=12)", 0.0, [](std::string& note) {
        auto timed = [](const std::string& args, double budget_s, CliResult& r) {
            auto t0 = Clock::now();
            r = run_cli(args);
            return std::chrono::duration<double>(Clock::now() - t0).count() <= budget_s;
        };
        CliResult r;
        if (!timed("bench --max-vertices 8", 600.0, r) || r.code != 0) {
            note = "bench sweep failed or over 10 min";
            return false;
        }
        int rows = -1; // header
        for (char ch : r.out) rows += ch == '\n';
        if (rows != 1 + 1 + 3 + 13 + 70 + 608) {
            note = "bench row count " + std::to_string(rows);
            return false;
        }
        std::string f10 = write_graph_file(grow_alternating(10), "g10");
        bool ok10 = timed("count " + f10, 60.0, r) && r.code == 0 && r.out == "256\n";
        std::remove(f10.c_str());
        if (!ok10) {
            note = "10-vertex count failed or over 60 s";
            return false;
        }
        std::string f12 = write_graph_file(grow_alternating(12), "g12");
        bool ok12 = timed("count " + f12, 1800.0, r) && r.code == 0 && r.out == "1024\n";
        std::remove(f12.c_str());
        if (!ok12) {
            note = "12-vertex count failed or over 30 min";
            return false;
        }
        note = std::to_string(rows) + " bench graphs; counts 256 and 1024";
        return true;
    });

    // 9. the fast Laman checker matches exhaustive subset enumeration
    criterion("checker cross-validation x1000", 600.0, [](std::string& note) {
        std::mt19937_64 rng(909);
        int lamans = 0;
        for (int it = 0; it < 1000; ++it) {
            SimpleGraph g = random_simple_graph(rng, 10);
            bool fast = is_laman(g);
            if (fast != is_laman_bruteforce(g)) {
                note = "divergence at iteration " + std::to_string(it);
                return false;
            }
            lamans += fast;
        }
        note = "1000 graphs, " + std::to_string(lamans) + " Laman";
        return true;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
