#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gssp/graph.hpp"
#include "gssp/matrix.hpp"

#ifndef GSSP_CLI_PATH
#error "GSSP_CLI_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(GSSP_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/gssp_cli_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

}  // namespace

TEST_CASE("certify exit codes follow the verdict lattice") {
    CHECK(run("certify --graph6 " + gssp::encode_graph6(gssp::path(5))).code == 0);
    CHECK(run("certify --graph6 " + gssp::encode_graph6(gssp::cycle(5))).code == 1);
    // C_5 with a pendant path of two: unknown
    gssp::Graph u(7);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}})
        u.add_edge(a, b);
    CHECK(run("certify --trials 5 --graph6 " + gssp::encode_graph6(u)).code == 2);
    CHECK(run("certify --graph6 '!!!'").code == 64);
    CHECK(run("certify --graph6 C~ --edges /nonexistent").code == 64);
    CHECK(run("certify").code == 64);
}

TEST_CASE("certify accepts edge lists and emits replayable certificates") {
    std::string edges = temp_path("lolli.edges");
    write_file(edges, gssp::format_edge_list(gssp::lollipop(3, 2)));
    std::string cert = temp_path("lolli.cert.json");
    RunResult r = run("certify --edges " + edges + " --emit-certificate " + cert);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\": \"in\"") != std::string::npos);
    CHECK(run("replay --certificate " + cert).code == 0);
}

TEST_CASE("emitted witness documents replay") {
    std::string doc = temp_path("c5.witness.json");
    CHECK(run("certify --graph6 " + gssp::encode_graph6(gssp::cycle(5)) +
              " --emit-certificate " + doc)
              .code == 1);
    CHECK(run("replay --certificate " + doc).code == 0);
}

TEST_CASE("replay rejects tampered and malformed documents") {
    std::string cert = temp_path("p8.cert.json");
    REQUIRE(run("certify --graph6 " + gssp::encode_graph6(gssp::path(8)) +
                " --emit-certificate " + cert)
                .code == 0);
    CHECK(run("replay --certificate " + cert).code == 0);

    std::ifstream in(cert);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto pos = text.find("\"final\"");
    REQUIRE(pos != std::string::npos);
    std::string tampered = text;
    tampered.replace(pos, 8, "\"final_\"");
    std::string bad = temp_path("p8.tampered.json");
    write_file(bad, tampered);
    CHECK(run("replay --certificate " + bad).code == 64);  // schema broken

    // flip the claimed final graph instead
    auto fpos = text.find("\"final\": \"");
    REQUIRE(fpos != std::string::npos);
    text.replace(fpos + 10, 1, text[fpos + 10] == 'G' ? "H" : "G");
    write_file(bad, text);
    CHECK(run("replay --certificate " + bad).code != 0);

    write_file(bad, "not json");
    CHECK(run("replay --certificate " + bad).code == 64);
}

TEST_CASE("check-matrix") {
    std::string m = temp_path("p3.matrix");
    write_file(m, gssp::format_matrix(gssp::adjacency_matrix(gssp::path(3))));
    RunResult r = run("check-matrix --matrix " + m + " --property ssp");
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");

    std::string c4 = temp_path("c4.matrix");
    write_file(c4, gssp::format_matrix(gssp::adjacency_matrix(gssp::cycle(4))));
    std::string wit = temp_path("c4.witness.json");
    RunResult f = run("check-matrix --matrix " + c4 + " --property ssp --emit-witness " + wit);
    CHECK(f.code == 1);
    CHECK(f.out == "false\n");
    CHECK(run("replay --certificate " + wit).code == 0);

    write_file(m, "2 2\n0 1\n2 0");
    CHECK(run("check-matrix --matrix " + m + " --property ssp").code == 64);
    write_file(m, "2 2\n0 1\n1 0");
    CHECK(run("check-matrix --matrix " + m + " --property bogus").code == 64);
}

TEST_CASE("census streams and reports per-line errors") {
    std::string in = temp_path("census.g6");
    write_file(in, gssp::encode_graph6(gssp::complete(4)) + "\n!!!\n" +
                       gssp::encode_graph6(gssp::cycle(5)) + "\n");
    std::string dir = temp_path("census.out");
    std::string mk = "mkdir -p " + dir;
    REQUIRE(std::system(mk.c_str()) == 0);
    RunResult r = run("census --trials 5 --in " + in + " --out " + dir);
    CHECK(r.code == 0);
    CHECK(r.out == "in 1 out 1 unknown 0 errors 1\n");
    CHECK(run("replay --certificate " + dir + "/0.json").code == 64);  // verdict, not a proof doc
    std::ifstream rec(dir + "/2.json");
    CHECK(rec.good());
}

TEST_CASE("forcing-trace") {
    RunResult r = run("forcing-trace --graph6 " + gssp::encode_graph6(gssp::path(6)));
    CHECK(r.code == 0);
    CHECK(r.out.find("forcing_certificate") != std::string::npos);
    CHECK(run("forcing-trace --graph6 " + gssp::encode_graph6(gssp::cycle(5))).code == 2);
}
