#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gssp/classify.hpp"
#include "gssp/docs.hpp"
#include "gssp/forcing.hpp"
#include "gssp/linalg.hpp"
#include "gssp/matrix.hpp"
#include "gssp/refute.hpp"
#include "gssp/strong.hpp"

namespace {

constexpr int kExitIn = 0;
constexpr int kExitOut = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitParse = 64;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

// --graph6 takes the literal string, --edges a file in edge-list format
gssp::Graph load_graph(const std::string& g6, const std::string& edges_path) {
    if (!g6.empty()) return gssp::parse_graph6(g6);
    return gssp::parse_edge_list(read_file(edges_path));
}

int run_certify(const std::string& g6, const std::string& edges_path, const std::string& emit,
                std::uint64_t seed, int trials) {
    gssp::Graph g = load_graph(g6, edges_path);
    gssp::Verdict v = gssp::classify(g, seed, trials);
    nlohmann::json doc = gssp::verdict_doc(g, v, seed);
    std::cout << doc.dump(2) << "\n";
    if (!emit.empty()) {
        if (v.certificate)
            write_file(emit, gssp::certificate_doc(*v.certificate).dump(2) + "\n");
        else if (v.witness)
            write_file(emit, gssp::witness_doc(*v.witness).dump(2) + "\n");
        else
            write_file(emit, doc.dump(2) + "\n");
    }
    switch (v.kind) {
        case gssp::VerdictKind::In: return kExitIn;
        case gssp::VerdictKind::Out: return kExitOut;
        default: return kExitUnknown;
    }
}

int run_check_matrix(const std::string& path, const std::string& prop_name,
                     const std::string& emit) {
    auto kind = gssp::property_from_name(prop_name);
    if (!kind) throw std::invalid_argument("unknown property '" + prop_name + "'");
    gssp::RatMatrix a = gssp::parse_matrix(read_file(path));
    if (!a.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
    if (gssp::has_property(a, *kind)) {
        std::cout << "true\n";
        return 0;
    }
    std::cout << "false\n";
    if (!emit.empty()) {
        auto x = gssp::property_witness(a, *kind);
        if (!x) throw std::runtime_error("property fails but no witness found");
        gssp::Witness w{gssp::support_graph(a), a, *x, "kernel"};
        write_file(emit, gssp::witness_doc(w).dump(2) + "\n");
    }
    return 1;
}

int run_witness(const std::string& g6, const std::string& edges_path, const std::string& out,
                std::uint64_t seed, int trials) {
    gssp::Graph g = load_graph(g6, edges_path);
    gssp::Verdict v = gssp::classify(g, seed, trials);
    if (v.kind != gssp::VerdictKind::Out) {
        std::cout << "no witness (verdict: "
                  << (v.kind == gssp::VerdictKind::In ? "in" : "unknown") << ")\n";
        return 1;
    }
    std::string text = gssp::witness_doc(*v.witness).dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
    return 0;
}

int run_replay(const std::string& path) {
    nlohmann::json doc = nlohmann::json::parse(read_file(path));
    std::string type = doc.is_object() ? doc.value("type", "") : "";
    bool ok = false;
    if (type == "forcing_certificate") {
        gssp::ForcingCertificate c = gssp::certificate_from_doc(doc);
        ok = gssp::replay(c);
    } else if (type == "witness") {
        ok = gssp::verify_witness(gssp::witness_from_doc(doc));
    } else {
        throw std::invalid_argument("unrecognized document type '" + type + "'");
    }
    std::cout << (ok ? "sound\n" : "unsound\n");
    return ok ? 0 : 1;
}

int run_census(const std::string& in_path, const std::string& out_dir, std::uint64_t seed,
               int trials) {
    std::vector<std::string> lines;
    std::string line;
    if (in_path.empty()) {
        while (std::getline(std::cin, line))
            if (!line.empty()) lines.push_back(line);
    } else {
        std::istringstream in(read_file(in_path));
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(line);
    }
    gssp::CensusResult res = gssp::census(lines, seed, trials);
    for (size_t i = 0; i < res.records.size(); ++i) {
        const auto& rec = res.records[i];
        if (!rec.error.empty()) {
            std::cerr << "line " << i + 1 << ": " << rec.error << "\n";
            continue;
        }
        if (!out_dir.empty()) {
            gssp::Graph g = gssp::parse_graph6(rec.line);
            nlohmann::json doc = gssp::verdict_doc(g, *rec.verdict, seed + i);
            write_file(out_dir + "/" + std::to_string(i) + ".json", doc.dump(2) + "\n");
        }
    }
    std::cout << "in " << res.in_count << " out " << res.out_count << " unknown "
              << res.unknown_count << " errors " << res.error_count << "\n";
    return 0;
}

int run_forcing_trace(const std::string& g6, const std::string& edges_path) {
    gssp::Graph g = load_graph(g6, edges_path);
    gssp::ForcingCertificate c = gssp::close(g);
    std::cout << gssp::certificate_doc(c).dump(2) << "\n";
    return c.conclusive() ? 0 : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong spectral property toolkit"};
    app.require_subcommand(1);

    std::string g6, edges_path, emit, matrix_path, prop = "ssp", cert_path, in_path, out_dir;
    std::uint64_t seed = 1;
    int trials = 50;

    auto add_graph_flags = [&](CLI::App* cmd) {
        cmd->add_option("--graph6", g6, "graph6 string");
        cmd->add_option("--edges", edges_path, "edge-list file");
    };

    CLI::App* certify = app.add_subcommand("certify", "classify a graph");
    add_graph_flags(certify);
    certify->add_option("--emit-certificate", emit, "write the certificate/witness document");
    certify->add_option("--seed", seed, "base random seed");
    certify->add_option("--trials", trials, "sampling trials for the last stage");

    CLI::App* check = app.add_subcommand("check-matrix", "test a matrix property");
    check->add_option("--matrix", matrix_path, "matrix file")->required();
    check->add_option("--property", prop, "ssp|smp|sap");
    check->add_option("--emit-witness", emit, "write a kernel witness on failure");

    CLI::App* wit = app.add_subcommand("witness", "produce a refuting witness if one is found");
    add_graph_flags(wit);
    wit->add_option("--out", out_dir, "output file (stdout when omitted)");
    wit->add_option("--seed", seed, "base random seed");
    wit->add_option("--trials", trials, "sampling trials");

    CLI::App* rep = app.add_subcommand("replay", "validate a certificate or witness document");
    rep->add_option("--certificate", cert_path, "document file")->required();

    CLI::App* cen = app.add_subcommand("census", "classify a stream of graph6 lines");
    cen->add_option("--in", in_path, "input file (stdin when omitted)");
    cen->add_option("--out", out_dir, "directory for per-graph records");
    cen->add_option("--seed", seed, "base random seed");
    cen->add_option("--trials", trials, "sampling trials per graph");

    CLI::App* trace = app.add_subcommand("forcing-trace", "print the forcing closure");
    add_graph_flags(trace);

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify->parsed()) {
            if (g6.empty() == edges_path.empty())
                throw std::invalid_argument("need exactly one of --graph6 / --edges");
            return run_certify(g6, edges_path, emit, seed, trials);
        }
        if (check->parsed()) return run_check_matrix(matrix_path, prop, emit);
        if (wit->parsed()) {
            if (g6.empty() == edges_path.empty())
                throw std::invalid_argument("need exactly one of --graph6 / --edges");
            return run_witness(g6, edges_path, out_dir, seed, trials);
        }
        if (rep->parsed()) return run_replay(cert_path);
        if (cen->parsed()) return run_census(in_path, out_dir, seed, trials);
        if (trace->parsed()) {
            if (g6.empty() == edges_path.empty())
                throw std::invalid_argument("need exactly one of --graph6 / --edges");
            return run_forcing_trace(g6, edges_path);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return kExitParse;
}
