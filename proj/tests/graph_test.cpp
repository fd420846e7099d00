#include <doctest.h>

#include <random>

#include "lpa/fixtures.hpp"
#include "lpa/graph.hpp"
#include "oracles.hpp"

using namespace lpa;

namespace {

VertexSet by_names(const Graph& g, std::initializer_list<const char*> names) {
    VertexSet s;
    for (const char* n : names) s.add(g.index_checked(n));
    return s;
}

std::vector<VertexSet> sets(const Graph& g,
                            std::initializer_list<std::initializer_list<const char*>> lists) {
    std::vector<VertexSet> out;
    for (const auto& l : lists) out.push_back(by_names(g, l));
    return out;
}

Graph single_vertex() { return Graph({"v"}, {}); }
Graph single_loop() { return Graph({"v"}, {{"v", "v", EdgeMult(1)}}); }

}  // namespace

TEST_CASE("vertex_kind") {
    Graph g3 = fixtures::g3();
    CHECK(vertex_kind(g3, g3.index_checked("v")) == VertexKind::sink);
    Graph g4 = fixtures::g4();
    CHECK(vertex_kind(g4, g4.index_checked("v3")) == VertexKind::infinite_emitter);
    Graph one = single_vertex();
    CHECK(vertex_kind(one, 0) == VertexKind::sink);
    CHECK_THROWS_AS(vertex_kind(one, 5), std::invalid_argument);
}

TEST_CASE("reaches") {
    Graph g3 = fixtures::g3();
    CHECK(reaches(g3, g3.index_checked("u"), g3.index_checked("v")));
    CHECK_FALSE(reaches(g3, g3.index_checked("v"), g3.index_checked("u")));
    Graph g2 = fixtures::g2();
    CHECK(reaches(g2, g2.index_checked("v4"), g2.index_checked("v1")));
}

TEST_CASE("hs_closure") {
    Graph g4 = fixtures::g4();
    CHECK(hs_closure(g4, by_names(g4, {"v1", "v2"})) == by_names(g4, {"v1", "v2"}));
    Graph g2 = fixtures::g2();
    CHECK(hs_closure(g2, VertexSet()) == VertexSet());
    Graph g5 = fixtures::g5();
    CHECK(hs_closure(g5, by_names(g5, {"v1", "v3"})) == g5.all_vertices());
}

TEST_CASE("hs_closure is a closure operator") {
    std::mt19937 rng(3);
    for (int i = 0; i < 60; ++i) {
        Graph g = oracle::random_graph(rng);
        std::uniform_int_distribution<std::uint64_t> pick(0, g.all_vertices().bits());
        VertexSet x(pick(rng)), y(pick(rng));
        VertexSet cx = hs_closure(g, x);
        CHECK(x.subset_of(cx));                        // extensive
        CHECK(hs_closure(g, cx) == cx);                // idempotent
        CHECK(hs_closure(g, x & y).subset_of(cx));     // monotone
        // minimal hereditary saturated superset
        for (const auto& h : all_hs_subsets(g)) {
            if (x.subset_of(h)) CHECK(cx.subset_of(h));
        }
        CHECK(is_hereditary(g, cx));
        CHECK(is_saturated(g, cx));
    }
}

TEST_CASE("all_hs_subsets") {
    Graph g2 = fixtures::g2();
    CHECK(all_hs_subsets(g2) ==
          sets(g2, {{}, {"v1"}, {"v1", "v2"}, {"v1", "v2", "v3"}, {"v1", "v2", "v3", "v4"}}));
    Graph g3 = fixtures::g3();
    CHECK(all_hs_subsets(g3) == sets(g3, {{}, {"v"}, {"u", "v"}, {"v", "w"}, {"u", "v", "w"}}));
    Graph one = single_vertex();
    CHECK(all_hs_subsets(one) == sets(one, {{}, {"v"}}));
    CHECK_THROWS_AS(all_hs_subsets(g2, 3), std::invalid_argument);
}

TEST_CASE("breaking_vertices") {
    Graph g4 = fixtures::g4();
    CHECK(breaking_vertices(g4, by_names(g4, {"v1", "v2"})) == by_names(g4, {"v3", "v4"}));
    Graph g2 = fixtures::g2();
    CHECK(breaking_vertices(g2, by_names(g2, {"v1"})) == VertexSet());
    CHECK(breaking_vertices(g4, VertexSet()) == VertexSet());
    CHECK_THROWS_AS(breaking_vertices(g4, by_names(g4, {"v2"})), std::invalid_argument);
}

TEST_CASE("quotient") {
    Graph g5 = fixtures::g5();
    QuotientGraph q = quotient(g5, by_names(g5, {"v1"}), VertexSet());
    CHECK(q.graph.size() == 2);
    CHECK(q.graph.index("v2").has_value());
    CHECK(q.graph.index("v3").has_value());
    REQUIRE(q.graph.edges().size() == 2);

    Graph g4 = fixtures::g4();
    QuotientGraph q4 =
        quotient(g4, by_names(g4, {"v1", "v2"}), by_names(g4, {"v4"}));
    CHECK(q4.graph.size() == 3);
    CHECK(q4.graph.index("v3").has_value());
    CHECK(q4.graph.index("v4").has_value());
    CHECK(q4.graph.index("v3'").has_value());

    Graph g2 = fixtures::g2();
    QuotientGraph whole = quotient(g2, VertexSet(), VertexSet());
    CHECK(whole.graph.size() == g2.size());
    CHECK(whole.graph.edges().size() == g2.edges().size());

    CHECK_THROWS_AS(quotient(g4, by_names(g4, {"v2"}), VertexSet()), std::invalid_argument);
}

TEST_CASE("quotient invariants: primed vertices are sinks, real vertices survive") {
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        Graph g = oracle::random_graph(rng);
        for (const auto& h : all_hs_subsets(g)) {
            VertexSet b = breaking_vertices(g, h);
            QuotientGraph q = quotient(g, h, VertexSet());
            int real = 0;
            for (int v = 0; v < q.graph.size(); ++v) {
                if (q.primed[v]) {
                    CHECK(vertex_kind(q.graph, v) == VertexKind::sink);
                } else {
                    ++real;
                    CHECK_FALSE(h.contains(q.origin[v]));
                }
            }
            CHECK(real == g.size() - h.count());
            CHECK(q.primed_vertices().count() == b.count());
        }
    }
}

TEST_CASE("is_downward_directed") {
    Graph g3 = fixtures::g3();
    CHECK(is_downward_directed(g3));
    CHECK_FALSE(is_downward_directed(induced_subgraph(g3, by_names(g3, {"u", "w"}))));
    CHECK(is_downward_directed(single_vertex()));
}

TEST_CASE("maximal_tails") {
    Graph g3 = fixtures::g3();
    CHECK(maximal_tails(g3) == sets(g3, {{"u"}, {"w"}, {"u", "v", "w"}}));
    Graph g2 = fixtures::g2();
    CHECK(maximal_tails(g2) ==
          sets(g2, {{"v4"}, {"v3", "v4"}, {"v2", "v3", "v4"}, {"v1", "v2", "v3", "v4"}}));
    Graph one = single_vertex();
    CHECK(maximal_tails(one) == sets(one, {{"v"}}));
}

TEST_CASE("maximal_tails agrees with subset filtering") {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        Graph g = oracle::random_graph(rng);
        CHECK(maximal_tails(g) == oracle::maximal_tails(g));
    }
}

TEST_CASE("cycles_without_exits") {
    Graph g5 = fixtures::g5();
    auto cs = cycles_without_exits(g5);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].vertices == std::vector<int>{g5.index_checked("v3")});
    CHECK(cycles_without_exits(fixtures::g2()).empty());
    Graph g1 = fixtures::g1();
    QuotientGraph q = quotient(g1, by_names(g1, {"u", "v"}), VertexSet());
    auto qc = cycles_without_exits(q.graph);
    REQUIRE(qc.size() == 1);
    CHECK(q.graph.name(qc[0].base()) == "w");
}

TEST_CASE("condition_K") {
    CHECK(condition_K(fixtures::g2()));
    CHECK_FALSE(condition_K(fixtures::g5()));
    CHECK_FALSE(condition_K(single_loop()));
}

TEST_CASE("condition_K matches closed-path enumeration") {
    std::mt19937 rng(37);
    for (int i = 0; i < 60; ++i) {
        Graph g = oracle::random_graph(rng);
        CHECK(condition_K(g) == oracle::condition_K(g));
    }
}

TEST_CASE("condition_K holds iff every quotient is exit-free") {
    for (const Graph& g : {fixtures::g1(), fixtures::g2(), fixtures::g3(), fixtures::g4(),
                           fixtures::g5()}) {
        bool all_exit_free = true;
        for (const auto& h : all_hs_subsets(g)) {
            std::vector<int> b = breaking_vertices(g, h).to_vector();
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << b.size()); ++m) {
                VertexSet s;
                for (size_t x = 0; x < b.size(); ++x) {
                    if ((m >> x) & 1) s.add(b[x]);
                }
                all_exit_free =
                    all_exit_free && cycles_without_exits(quotient(g, h, s).graph).empty();
            }
        }
        CHECK(condition_K(g) == all_exit_free);
    }
}

TEST_CASE("strong_csp") {
    Graph g2 = fixtures::g2();
    CHECK(strong_csp(g2) == by_names(g2, {"v1"}));
    Graph g3 = fixtures::g3();
    CHECK(strong_csp(g3) == by_names(g3, {"v"}));
    Graph two_loops({"a", "b"}, {{"a", "a", EdgeMult(1)}, {"b", "b", EdgeMult(1)}});
    CHECK_FALSE(strong_csp(two_loops).has_value());
}

TEST_CASE("strong_csp witness sits inside every nonempty hereditary saturated set") {
    std::mt19937 rng(41);
    for (int i = 0; i < 60; ++i) {
        Graph g = oracle::random_graph(rng);
        auto x = strong_csp(g);
        if (!x) continue;
        for (const auto& h : all_hs_subsets(g)) {
            if (!h.empty()) CHECK(x->subset_of(h));
        }
    }
}

TEST_CASE("is_comet") {
    Graph g5 = fixtures::g5();
    QuotientGraph q = quotient(g5, by_names(g5, {"v1"}), VertexSet());
    auto c = is_comet(q.graph);
    REQUIRE(c.has_value());
    CHECK(q.graph.name(c->base()) == "v3");
    CHECK_FALSE(is_comet(fixtures::g2()).has_value());
    CHECK(is_comet(single_loop()).has_value());
}

TEST_CASE("comet_path_count") {
    Graph g5 = fixtures::g5();
    QuotientGraph q = quotient(g5, by_names(g5, {"v1"}), VertexSet());
    CHECK(comet_path_count(q.graph, *is_comet(q.graph)) == 2);
    Graph loop = single_loop();
    CHECK(comet_path_count(loop, *is_comet(loop)) == 1);
    Graph chain({"a", "b", "c"},
                {{"a", "b", EdgeMult(1)}, {"b", "c", EdgeMult(1)}, {"c", "c", EdgeMult(1)}});
    CHECK(comet_path_count(chain, *is_comet(chain)) == 3);
    CHECK_THROWS_AS(comet_path_count(fixtures::g2(), CycleId::from_path({0})),
                    std::invalid_argument);
}

TEST_CASE("maximal_tail_cover") {
    Graph g3 = fixtures::g3();
    auto cover = maximal_tail_cover(g3);
    REQUIRE(cover.has_value());
    CHECK(*cover == sets(g3, {{"u", "v", "w"}}));
    QuotientGraph q = quotient(g3, by_names(g3, {"v"}), VertexSet());
    auto split = maximal_tail_cover(q.graph);
    REQUIRE(split.has_value());
    CHECK(split->size() == 2);
    Graph one = single_vertex();
    CHECK(*maximal_tail_cover(one) == sets(one, {{"v"}}));
}

TEST_CASE("comet_cover") {
    Graph g5 = fixtures::g5();
    QuotientGraph q = quotient(g5, by_names(g5, {"v1"}), VertexSet());
    auto cover = comet_cover(q.graph);
    REQUIRE(cover.has_value());
    CHECK(cover->size() == 1);
    CHECK((*cover)[0] == q.graph.all_vertices());
    CHECK_FALSE(comet_cover(g5).has_value());
    Graph two_loops({"a", "b"}, {{"a", "a", EdgeMult(1)}, {"b", "b", EdgeMult(1)}});
    auto both = comet_cover(two_loops);
    REQUIRE(both.has_value());
    CHECK(both->size() == 2);
}

TEST_CASE("extreme_cycles") {
    Graph g3 = fixtures::g3();
    Graph u_only = induced_subgraph(g3, by_names(g3, {"u"}));
    auto ec = extreme_cycles(u_only);
    REQUIRE(ec.size() == 1);
    CHECK(u_only.name(ec[0].base()) == "u");
    Graph g5 = fixtures::g5();
    auto e5 = extreme_cycles(g5);
    REQUIRE(e5.size() == 1);
    CHECK(g5.name(e5[0].base()) == "v1");
    CHECK(extreme_cycles(single_loop()).empty());
}

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "b", EdgeMult(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "a", EdgeMult(1)}, {"a", "a", EdgeMult(2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(EdgeMult(0), std::invalid_argument);
}
