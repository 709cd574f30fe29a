#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gssp/classify.hpp"
#include "gssp/docs.hpp"
#include "gssp/linalg.hpp"
#include "gssp/strong.hpp"
#include "test_util.hpp"

using namespace gssp;
using gssp_test::make_graph;

TEST_CASE("tree classification on the named examples") {
    CHECK(classify_tree(path(9)).kind == VerdictKind::In);
    CHECK(classify_tree(spider(2, 3, 4)).kind == VerdictKind::In);
    Verdict v = classify_tree(make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    CHECK(v.kind == VerdictKind::Out);
    REQUIRE(v.witness.has_value());
    CHECK(verify_witness(*v.witness));
    CHECK_THROWS_AS(classify_tree(cycle(4)), std::invalid_argument);
}

TEST_CASE("tree theorem matches barbell search and forcing on small trees") {
    for (int n = 2; n <= 6; ++n)
        gssp_test::for_all_trees(n, [](const Graph& t) {
            Verdict v = classify_tree(t);
            bool out_oracle = barbell_search(t).has_value();
            CHECK((v.kind == VerdictKind::Out) == out_oracle);
            if (v.kind == VerdictKind::In) {
                REQUIRE(v.certificate.has_value());
                CHECK(v.certificate->conclusive());
                CHECK(replay(*v.certificate));
            }
        });
}

TEST_CASE("pipeline verdicts on landmark graphs") {
    struct Row {
        Graph g;
        VerdictKind kind;
        int stage;
    };
    std::vector<Row> rows;
    rows.push_back({complete(5), VerdictKind::In, 1});
    rows.push_back({path(7), VerdictKind::In, 2});
    rows.push_back({cycle(5), VerdictKind::Out, 3});
    // unicyclic with a degree-4 vertex
    rows.push_back({make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {3, 5}}),
                    VerdictKind::Out, 4});
    // two triangles sharing a cut vertex
    rows.push_back({make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}),
                    VerdictKind::Out, 5});
    rows.push_back({complement(path(6)), VerdictKind::Out, 6});
    rows.push_back({complement(path(7)), VerdictKind::In, 6});
    rows.push_back({make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}), VerdictKind::In, 7});
    rows.push_back({lollipop(4, 3), VerdictKind::In, 8});
    rows.push_back({path_with_chord(7, 3), VerdictKind::In, 8});
    rows.push_back({complement(make_graph(6, {{0, 1}, {1, 2}, {0, 2}})), VerdictKind::In, 8});
    rows.push_back({join(path(4), path(4)), VerdictKind::In, 9});
    for (const auto& row : rows) {
        Verdict v = classify(row.g);
        CHECK(v.kind == row.kind);
        CHECK(v.stage == row.stage);
        if (v.kind == VerdictKind::Out) {
            REQUIRE(v.witness.has_value());
            CHECK(verify_witness(*v.witness));
            CHECK(v.witness->graph == row.g);
        }
        if (v.certificate) {
            CHECK(replay(*v.certificate));
            CHECK(v.certificate->base == row.g);
        }
    }
}

TEST_CASE("known table carries the paper matrices to relabeled inputs") {
    // G_98 relabeled: want the same graph under a permutation
    Graph g98 = make_graph(6, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {3, 5}});
    std::vector<int> perm{3, 5, 0, 2, 4, 1};
    Graph shuffled(6);
    for (auto [u, v] : g98.edges()) shuffled.add_edge(perm[u], perm[v]);
    Verdict v = classify(shuffled);
    CHECK(v.kind == VerdictKind::Out);
    CHECK(v.stage == 7);
    REQUIRE(v.witness.has_value());
    CHECK(verify_witness(*v.witness));
    CHECK(v.witness->graph == shuffled);
}

TEST_CASE("cocktail and K_n - C_4 families leave the pipeline refuted") {
    // K_7 - C_4 reaches the family detection
    Graph g(7);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) g.add_edge(i, j);
    Graph c4_removed = g;
    Verdict v = classify(complement(add_edges(complement(complete(7)),
                                              {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
    CHECK(v.kind == VerdictKind::Out);
    CHECK(v.stage == 7);
    // cocktail party graphs are regular, so they exit at stage 3
    Graph k6_minus = complement(make_graph(6, {{0, 1}, {2, 3}, {4, 5}}));
    Verdict cv = classify(k6_minus);
    CHECK(cv.kind == VerdictKind::Out);
    CHECK(cv.stage == 3);
}

TEST_CASE("generic unicyclic graph with one on-cycle branch is unknown") {
    Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}});
    Verdict v = classify(g, 1, 10);
    CHECK(v.kind == VerdictKind::Unknown);
    CHECK(v.samples_passed == 10);
    CHECK(v.stage == 12);
}

TEST_CASE("sampled stage can refute") {
    // C_6 escapes the structural stages only via its regularity; feed the
    // sampler directly to check Out witnesses from stage 12 verify
    auto w = sample_refute(cycle(6), 10, 3);
    if (w) CHECK(verify_witness(*w));
}

TEST_CASE("classification is deterministic") {
    Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}});
    auto d1 = verdict_doc(g, classify(g, 9, 10), 9).dump();
    auto d2 = verdict_doc(g, classify(g, 9, 10), 9).dump();
    CHECK(d1 == d2);
}

TEST_CASE("every In verdict passes a sampling spot check") {
    std::vector<Graph> ins{path(6), lollipop(3, 3), complement(path(7)),
                           make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}})};
    for (const Graph& g : ins) {
        Verdict v = classify(g);
        REQUIRE(v.kind == VerdictKind::In);
        for (std::uint64_t s = 0; s < 5; ++s)
            CHECK(has_property(sample_in_S(g, s), PropertyKind::SSP));
    }
}

TEST_CASE("census") {
    std::vector<std::string> lines{encode_graph6(complete(4)), "!!bad!!",
                                   encode_graph6(cycle(5)), encode_graph6(path(5))};
    CensusResult res = census(lines, 1, 5);
    REQUIRE(res.records.size() == 4);
    CHECK(res.in_count == 2);
    CHECK(res.out_count == 1);
    CHECK(res.unknown_count == 0);
    CHECK(res.error_count == 1);
    CHECK(!res.records[1].error.empty());
    CHECK(res.records[0].verdict->kind == VerdictKind::In);
    CHECK(res.records[2].verdict->kind == VerdictKind::Out);
    CHECK(census({}, 1, 5).records.empty());
}

TEST_CASE("documents round trip") {
    Verdict v = classify(lollipop(3, 2));
    REQUIRE(v.certificate.has_value());
    auto doc = certificate_doc(*v.certificate);
    ForcingCertificate back = certificate_from_doc(doc);
    CHECK(replay(back));
    CHECK(back.final == v.certificate->final);

    Verdict out = classify(cycle(5));
    REQUIRE(out.witness.has_value());
    Witness w = witness_from_doc(witness_doc(*out.witness));
    CHECK(verify_witness(w));
    CHECK_THROWS_AS(witness_from_doc(nlohmann::json{{"type", "nope"}}), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_doc(nlohmann::json::array()), std::invalid_argument);
}
