#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CliResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& tag) {
    static int counter = 0;
    return "/tmp/lamanc_test_" + std::to_string(getpid()) + "_" + tag + "_" +
           std::to_string(counter++);
}

CliResult run_cli(const std::string& args) {
    std::string out = temp_path("out"), err = temp_path("err");
    std::string cmd = std::string(LAMANC_BIN) + " " + args + " >" + out + " 2>" + err;
    int raw = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::remove(out.c_str());
    std::remove(err.c_str());
    return r;
}

std::string write_file(const std::string& tag, const std::string& body) {
    std::string path = temp_path(tag);
    std::ofstream(path) << body;
    return path;
}

const std::string kTriangle = "0 1\n0 2\n1 2\n";
const std::string kK4MinusE = "0 1\n0 2\n0 3\n1 2\n1 3\n";
const std::string kK4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const std::string kPrism = "0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n0 3\n1 4\n2 5\n";

} // namespace

TEST_CASE("check classifies graphs") {
    std::string laman = write_file("tri", kTriangle);
    std::string not_laman = write_file("k4", kK4);
    CliResult a = run_cli("check " + laman);
    CHECK(a.code == 0);
    CHECK(a.out == "Laman\n");
    CliResult b = run_cli("check " + not_laman);
    CHECK(b.code == 0);
    CHECK(b.out == "not Laman\n");
    std::remove(laman.c_str());
    std::remove(not_laman.c_str());
}

TEST_CASE("count prints the number and reports stats on stderr") {
    std::string tri = write_file("tri", kTriangle);
    std::string k4e = write_file("k4e", kK4MinusE);
    std::string prism = write_file("prism", kPrism);

    CliResult a = run_cli("count " + tri);
    CHECK(a.code == 0);
    CHECK(a.out == "2\n");
    CHECK(a.err.find("nodes=") != std::string::npos);
    CHECK(a.err.find("elapsed_ms=") != std::string::npos);

    CHECK(run_cli("count " + k4e).out == "4\n");
    CHECK(run_cli("count " + prism).out == "24\n");

    std::remove(tri.c_str());
    std::remove(k4e.c_str());
    std::remove(prism.c_str());
}

TEST_CASE("count options do not change the value") {
    std::string prism = write_file("prism", kPrism);
    CHECK(run_cli("count " + prism + " --jobs 3").out == "24\n");
    CHECK(run_cli("count " + prism + " --pivot-strategy first").out == "24\n");
    CHECK(run_cli("count " + prism + " --no-early-zero").out == "24\n");

    CliResult all = run_cli("count " + prism + " --pivot-strategy all");
    CHECK(all.code == 0);
    CHECK(all.out == "24\n");
    CHECK(all.err.find("pivots agree across 9 biedges") != std::string::npos);
    std::remove(prism.c_str());
}

TEST_CASE("count is invariant under relabeling the input") {
    std::string a = write_file("a", kK4MinusE);
    std::string b = write_file("b", "10 20\n10 30\n10 7\n20 30\n20 7\n");
    CHECK(run_cli("count " + a).out == run_cli("count " + b).out);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("oracle agrees with count") {
    std::string k4e = write_file("k4e", kK4MinusE);
    CliResult r = run_cli("oracle " + k4e);
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    CHECK(run_cli("oracle " + k4e + " --seed 99 --jobs 3").out == "4\n");
    CHECK(run_cli("oracle " + k4e + " --prime 1073741789").out == "4\n");
    std::remove(k4e.c_str());
}

TEST_CASE("exit codes distinguish failure classes") {
    std::string k4 = write_file("k4", kK4);
    CHECK(run_cli("count " + k4).code == 3); // not Laman
    CliResult r = run_cli("count " + k4);
    CHECK(r.err.find("error:") != std::string::npos);

    std::string bad = write_file("bad", "0 1\n0 x\n");
    CliResult p = run_cli("count " + bad);
    CHECK(p.code == 2);
    CHECK(p.err.find("line 2") != std::string::npos);
    CHECK(run_cli("check " + bad).code == 2);

    std::string dup = write_file("dup", "0 1\n1 0\n");
    CHECK(run_cli("check " + dup).code == 2); // duplicate edge

    std::string loop = write_file("loop", "0 0\n");
    CHECK(run_cli("check " + loop).code == 2);

    CHECK(run_cli("count /tmp/no_such_file_lamanc").code == 1);
    CHECK(run_cli("oracle " + k4).code == 3);

    std::remove(k4.c_str());
    std::remove(bad.c_str());
    std::remove(dup.c_str());
    std::remove(loop.c_str());
}

TEST_CASE("usage errors exit with the parse code") {
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("count").code == 2);                      // missing file argument
    CHECK(run_cli("generate 2").code == 2);                 // out of range
    CHECK(run_cli("bench --max-vertices 11").code == 2);
    std::string tri = write_file("tri", kTriangle);
    CHECK(run_cli("count " + tri + " --pivot-strategy bogus").code == 2);
    std::remove(tri.c_str());

    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("count --help").code == 0);
    CliResult v = run_cli("--version");
    CHECK(v.code == 0);
    CHECK(v.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("generate emits keyed edge lists") {
    CliResult r = run_cli("generate 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("# 1/1 key=") != std::string::npos);
    CHECK(r.err.find("1 Laman graphs on 4 vertices") != std::string::npos);
    // body: 5 edges + header + blank separator
    int edge_lines = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') ++edge_lines;
    CHECK(edge_lines == 5);

    CliResult r5 = run_cli("generate 5");
    CHECK(r5.out.find("# 3/3 key=") != std::string::npos);

    // output parses back: feed the first block to check
    std::istringstream blocks(r.out);
    std::string body;
    for (std::string line; std::getline(blocks, line);)
        if (!line.empty() && line[0] != '#') body += line + "\n";
    std::string back = write_file("roundtrip", body);
    CHECK(run_cli("check " + back).out == "Laman\n");
    std::remove(back.c_str());
}

TEST_CASE("bench prints the exact csv schema") {
    CliResult r = run_cli("bench --max-vertices 4");
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "key,n_vertices,n_edges,laman_number,elapsed_ms");
    int rows = 0;
    bool saw_triangle = false;
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        ++rows;
        if (line.find(",3,3,2,") != std::string::npos) saw_triangle = true;
        CHECK(std::count(line.begin(), line.end(), ',') == 4);
    }
    CHECK(rows == 2); // one graph each for n=3 and n=4
    CHECK(saw_triangle);

    CliResult t = run_cli("bench --max-vertices 4 --format table");
    CHECK(t.code == 0);
    CHECK(t.out.find("key,") == std::string::npos);
    CHECK(run_cli("bench --max-vertices 4 --format yaml").code != 0);
}

TEST_CASE("records accumulate and conflicts are refused") {
    std::string tri = write_file("tri", kTriangle);
    std::string rec = temp_path("records");

    CHECK(run_cli("count " + tri + " --records " + rec).code == 0);
    CHECK(run_cli("count " + tri + " --records " + rec).code == 0);
    std::string body = slurp(rec);
    CHECK(std::count(body.begin(), body.end(), '\n') == 2);
    CHECK(body.find("\"laman_number\":2") != std::string::npos);
    CHECK(body.find("\"version\":\"0.1.0\"") != std::string::npos);

    // hand-tamper the stored number: the next run must refuse to append
    std::string tampered;
    std::size_t at = body.find("\"laman_number\":2");
    tampered = body.substr(0, at) + "\"laman_number\":7" + body.substr(at + 16);
    std::ofstream(rec) << tampered;
    CliResult r = run_cli("count " + tri + " --records " + rec);
    CHECK(r.code == 1);
    CHECK(r.err.find("conflict") != std::string::npos);

    std::remove(tri.c_str());
    std::remove(rec.c_str());
}
