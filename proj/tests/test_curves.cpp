#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paf/curves.hpp"
#include "paf/family.hpp"
#include "paf/thurston.hpp"

using namespace paf;

namespace {

CurveSystem tiny(long long n00) {
    CurveSystem s;
    s.genus = 2;
    s.a_curves = {{"a", true, std::vector<long long>(4, 0), std::nullopt}};
    s.b_curves = {{"b", true, std::vector<long long>(4, 0), std::nullopt}};
    s.intersections = IMat(1, 1);
    s.intersections.at(0, 0) = n00;
    return s;
}

}  // namespace

TEST_CASE("validate accepts the f2 system") {
    CurveSystem s = build_family(2).system;
    CHECK(s.intersections.rows == 1);
    CHECK(s.intersections.at(0, 0) == 8);  // NN^T = (8)(8) = (64)
    CHECK(validate(s).ok());
}

TEST_CASE("validate flags negative intersection entries") {
    ValidationReport rep = validate(tiny(-1));
    CHECK_FALSE(rep.ok());
    CHECK(rep.has("nonnegative"));
}

TEST_CASE("validate flags disconnected systems") {
    CurveSystem s;
    s.genus = 2;
    s.a_curves = {{"a1", false, std::nullopt, std::nullopt},
                  {"a2", false, std::nullopt, std::nullopt}};
    s.b_curves = {{"b1", false, std::nullopt, std::nullopt},
                  {"b2", false, std::nullopt, std::nullopt}};
    s.intersections = IMat(2, 2);
    s.intersections.at(0, 0) = 2;
    s.intersections.at(1, 1) = 2;  // two blocks, no bridge
    ValidationReport rep = validate(s);
    CHECK_FALSE(rep.ok());
    CHECK(rep.has("connected"));
}

TEST_CASE("validate flags separating curves with nonzero class") {
    CurveSystem s = tiny(8);
    s.a_curves[0].homology = std::vector<long long>{1, 0, 0, 0};
    ValidationReport rep = validate(s);
    CHECK(rep.has("separating_homology"));
}

TEST_CASE("validate flags homology length and pair-sign violations") {
    CurveSystem s = tiny(8);
    s.a_curves[0].separating = false;
    s.a_curves[0].homology = std::vector<long long>{1, 0, 0};
    CHECK(validate(s).has("homology_length"));

    CurveSystem t = build_f2prime().system;
    t.a_curves[0].separating = false;
    t.a_curves[0].homology = std::vector<long long>{1, 1, 0, 0};
    t.a_curves[0].pair_id = "p";
    t.b_curves[0].pair_id = "p";  // homology e_1, neither equal nor opposite
    CHECK(validate(t).has("pair_sign"));
}

TEST_CASE("bipartite graph of f2prime is a path with two edges labeled 2") {
    CurveSystem s = build_f2prime().system;
    BipartiteGraph g = bipartite_graph(s);
    CHECK(g.n_a == 1);
    CHECK(g.n_b == 2);
    REQUIRE(g.edges.size() == 2);
    for (const auto& e : g.edges) CHECK(e.label == 2);
    auto deg = g.degrees();
    CHECK(deg[0] == 2);
    CHECK(deg[1] == 1);
    CHECK(deg[2] == 1);
}

TEST_CASE("zero intersection matrix yields an edgeless graph and fails connectivity") {
    CurveSystem s = tiny(0);
    CHECK_FALSE(validate(s).ok());
    CHECK(validate(s).has("connected"));
    CHECK_THROWS_AS(bipartite_graph(s), std::invalid_argument);
}

TEST_CASE("generated family graphs have all labels equal to two") {
    for (int g : {3, 6, 7, 9, 11, 12}) {
        BipartiteGraph gr = bipartite_graph(build_family(g).system);
        for (const auto& e : gr.edges) CHECK(e.label == 2);
    }
}

TEST_CASE("graph round-trips to the intersection matrix") {
    for (int g : {2, 3, 4, 5, 7, 8, 11}) {
        CurveSystem s = build_family(g).system;
        CHECK(bipartite_graph(s).to_matrix() == s.intersections);
    }
}

TEST_CASE("length-2 path row sums equal NN^T row sums on the fixture corpus") {
    std::vector<CurveSystem> corpus;
    for (int g : {2, 3, 4, 5, 6, 7, 8, 10, 11}) corpus.push_back(build_family(g).system);
    corpus.push_back(build_f2prime().system);
    auto [k3, k1] = build_k3_k1_examples();
    corpus.push_back(k3.system);
    corpus.push_back(k1.system);
    for (const auto& s : corpus) {
        BipartiteGraph gr = bipartite_graph(s);
        IMat m = gram(s.intersections);
        for (int i = 0; i < m.rows; ++i) {
            long long direct = 0;
            for (int j = 0; j < m.cols; ++j) direct += m.at(i, j);
            CHECK(gr.gram_row_sum(i) == direct);
        }
    }
}

TEST_CASE("curve system JSON round-trip") {
    for (int g : {2, 5, 7}) {
        CurveSystem s = build_family(g).system;
        CurveSystem t = system_from_json(nlohmann::json::parse(to_json(s).dump()));
        CHECK(t.genus == s.genus);
        CHECK(t.intersections == s.intersections);
        REQUIRE(t.a_curves.size() == s.a_curves.size());
        for (size_t i = 0; i < t.a_curves.size(); ++i) {
            CHECK(t.a_curves[i].id == s.a_curves[i].id);
            CHECK(t.a_curves[i].homology == s.a_curves[i].homology);
            CHECK(t.a_curves[i].pair_id == s.a_curves[i].pair_id);
        }
    }
}
