#include <doctest.h>

#include <random>

#include "lpa/fixtures.hpp"
#include "lpa/ideal.hpp"
#include "oracles.hpp"

using namespace lpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();

VertexSet by_names(const Graph& g, std::initializer_list<const char*> names) {
    VertexSet s;
    for (const char* n : names) s.add(g.index_checked(n));
    return s;
}

CycleId cyc(const Graph& g, std::initializer_list<const char*> names) {
    std::vector<int> v;
    for (const char* n : names) v.push_back(g.index_checked(n));
    return CycleId::from_path(std::move(v));
}

CanonicalIdeal g5_ideal(const Graph& g5, const char* poly) {
    return normalize(g5, {by_names(g5, {"v1"}), VertexSet()},
                     {{cyc(g5, {"v3"}), Poly::parse(Q, poly)}}, Q);
}

std::vector<CanonicalIdeal> graded_lattice(const Graph& g) {
    std::vector<CanonicalIdeal> out;
    for (const auto& p : all_admissible_pairs(g)) out.push_back(graded_ideal(g, p.H, p.S, Q));
    return out;
}

}  // namespace

TEST_CASE("normalize absorbs unit polynomials into H") {
    Graph g5 = fixtures::g5();
    // x^2 is a unit of K[x,x^-1]; v3 joins H and saturation pulls in v2
    CanonicalIdeal improper = g5_ideal(g5, "x^2");
    CHECK(improper.is_improper(g5));

    CanonicalIdeal p = g5_ideal(g5, "x - 1");
    CHECK(p.pair().H == by_names(g5, {"v1"}));
    CHECK(p.cycles().size() == 1);
    CHECK(p.cycles()[0].second == Poly::parse(Q, "x - 1"));

    // two entries on one cycle combine by gcd; here gcd = 1 collapses the cycle
    CanonicalIdeal collapsed =
        normalize(g5, {by_names(g5, {"v1"}), VertexSet()},
                  {{cyc(g5, {"v3"}), Poly::parse(Q, "x - 1")},
                   {cyc(g5, {"v3"}), Poly::parse(Q, "x + 1")}},
                  Q);
    CHECK(collapsed.is_graded());
    CHECK(collapsed.is_improper(g5));
}

TEST_CASE("normalize rejects invalid input") {
    Graph g3 = fixtures::g3();
    // loops at u have exits, so no entry may live there
    CHECK_THROWS_AS(normalize(g3, {VertexSet(), VertexSet()},
                              {{cyc(g3, {"u"}), Poly::parse(Q, "x - 1")}}, Q),
                    std::invalid_argument);
    // H not hereditary
    CHECK_THROWS_AS(normalize(g3, {by_names(g3, {"u"}), VertexSet()}, {}, Q),
                    std::invalid_argument);
    Graph g4 = fixtures::g4();
    // S must consist of breaking vertices
    CHECK_THROWS_AS(normalize(g4, {by_names(g4, {"v1"}), by_names(g4, {"v3"})}, {}, Q),
                    std::invalid_argument);
}

TEST_CASE("normalize is idempotent") {
    Graph g5 = fixtures::g5();
    CanonicalIdeal p = g5_ideal(g5, "x^2 - 2*x + 1");
    CanonicalIdeal again =
        normalize(g5, p.pair(), {p.cycles().begin(), p.cycles().end()}, p.field());
    CHECK(p == again);
}

TEST_CASE("graded_part") {
    Graph g5 = fixtures::g5();
    CanonicalIdeal p = g5_ideal(g5, "x - 1");
    CHECK(graded_part(p) == graded_ideal(g5, by_names(g5, {"v1"}), VertexSet(), Q));
    CanonicalIdeal zero = zero_ideal(g5, Q);
    CHECK(graded_part(zero) == zero);
}

TEST_CASE("leq on pairs and cycles") {
    Graph g4 = fixtures::g4();
    VertexSet h = by_names(g4, {"v1", "v2"});
    CanonicalIdeal smaller = graded_ideal(g4, h, by_names(g4, {"v4"}), Q);
    CanonicalIdeal larger = graded_ideal(g4, h, by_names(g4, {"v3", "v4"}), Q);
    CHECK(leq(g4, smaller, larger));
    CHECK_FALSE(leq(g4, larger, smaller));

    Graph g5 = fixtures::g5();
    CanonicalIdeal p = g5_ideal(g5, "x - 1");
    CanonicalIdeal p2 = g5_ideal(g5, "x^2 - 2*x + 1");
    CHECK(leq(g5, p2, p));  // divisibility: (x-1) | (x-1)^2
    CHECK_FALSE(leq(g5, p, p2));
    // cycle part is absorbed when the larger H swallows the cycle
    CHECK(leq(g5, p, improper_ideal(g5, Q)));
    // a graded ideal missing the cycle entry does not contain the non-graded one
    CHECK_FALSE(leq(g5, p, graded_part(p)));
    CHECK(leq(g5, graded_part(p), p));
}

TEST_CASE("leq is a partial order on normalized ideals") {
    for (const Graph& g : {fixtures::g1(), fixtures::g5()}) {
        auto lattice = graded_lattice(g);
        for (const auto& a : lattice) {
            CHECK(leq(g, a, a));
            for (const auto& b : lattice) {
                if (leq(g, a, b) && leq(g, b, a)) CHECK(a == b);
                for (const auto& c : lattice) {
                    if (leq(g, a, b) && leq(g, b, c)) CHECK(leq(g, a, c));
                }
            }
        }
    }
}

TEST_CASE("meet_graded matches the worked examples") {
    Graph g1 = fixtures::g1();
    CanonicalIdeal uv = graded_ideal(g1, by_names(g1, {"u", "v"}), VertexSet(), Q);
    CanonicalIdeal vw = graded_ideal(g1, by_names(g1, {"v", "w"}), VertexSet(), Q);
    CHECK(meet_graded(g1, uv, vw) == graded_ideal(g1, by_names(g1, {"v"}), VertexSet(), Q));
    CHECK(meet_graded(g1, uv, uv) == uv);

    Graph g4 = fixtures::g4();
    VertexSet h = by_names(g4, {"v1", "v2"});
    CanonicalIdeal a = graded_ideal(g4, h, by_names(g4, {"v3"}), Q);
    CanonicalIdeal b = graded_ideal(g4, h, by_names(g4, {"v4"}), Q);
    CHECK(meet_graded(g4, a, b) == graded_ideal(g4, h, VertexSet(), Q));
}

TEST_CASE("join_graded") {
    Graph g5 = fixtures::g5();
    CanonicalIdeal v1 = graded_ideal(g5, by_names(g5, {"v1"}), VertexSet(), Q);
    CanonicalIdeal v3 = graded_ideal(g5, by_names(g5, {"v3"}), VertexSet(), Q);
    CHECK(join_graded(g5, v1, v3).is_improper(g5));
    CHECK(join_graded(g5, v1, zero_ideal(g5, Q)) == v1);

    Graph g3 = fixtures::g3();
    CanonicalIdeal uv = graded_ideal(g3, by_names(g3, {"u", "v"}), VertexSet(), Q);
    CanonicalIdeal vw = graded_ideal(g3, by_names(g3, {"v", "w"}), VertexSet(), Q);
    CHECK(join_graded(g3, uv, vw).is_improper(g3));
}

TEST_CASE("graded meets and joins agree with the pair-order search") {
    std::mt19937 rng(47);
    for (int i = 0; i < 50; ++i) {
        Graph g = oracle::random_graph(rng);
        auto pairs = all_admissible_pairs(g);
        for (const auto& a : pairs) {
            for (const auto& b : pairs) {
                CanonicalIdeal ia = graded_ideal(g, a.H, a.S, Q);
                CanonicalIdeal ib = graded_ideal(g, b.H, b.S, Q);
                auto m = oracle::pair_meet(g, a, b);
                REQUIRE(m.has_value());
                CHECK(meet_graded(g, ia, ib).pair() == *m);
                auto j = oracle::pair_join(g, a, b);
                REQUIRE(j.has_value());
                CHECK(join_graded(g, ia, ib).pair() == *j);
            }
        }
    }
}

TEST_CASE("lattice laws hold on fixture pair lattices") {
    for (const Graph& g : {fixtures::g1(), fixtures::g2(), fixtures::g3(), fixtures::g4(),
                           fixtures::g5()}) {
        auto lattice = graded_lattice(g);
        for (const auto& a : lattice) {
            for (const auto& b : lattice) {
                CanonicalIdeal m = meet_graded(g, a, b);
                CanonicalIdeal j = join_graded(g, a, b);
                CHECK(leq(g, m, a));
                CHECK(leq(g, m, b));
                CHECK(leq(g, a, j));
                CHECK(leq(g, b, j));
                CHECK(meet_graded(g, a, j) == a);  // absorption
                CHECK(join_graded(g, a, m) == a);
                for (const auto& c : lattice) {
                    CHECK(meet_graded(g, a, join_graded(g, b, c)) ==
                          join_graded(g, meet_graded(g, a, b), meet_graded(g, a, c)));
                }
            }
        }
    }
}

TEST_CASE("product") {
    Graph g5 = fixtures::g5();
    CanonicalIdeal a = g5_ideal(g5, "x - 1");
    CanonicalIdeal b = g5_ideal(g5, "x + 1");
    CHECK(product(g5, a, b) == g5_ideal(g5, "x^2 - 1"));

    // a graded factor turns the product into the meet
    CanonicalIdeal graded = graded_ideal(g5, by_names(g5, {"v3"}), VertexSet(), Q);
    CHECK(product(g5, graded, a) == intersect(g5, graded, a));
    CHECK(product(g5, graded, graded) == graded);  // A^2 = A
}

TEST_CASE("product equals intersection whenever one factor is graded") {
    Graph g5 = fixtures::g5();
    std::vector<CanonicalIdeal> pool = graded_lattice(g5);
    pool.push_back(g5_ideal(g5, "x - 1"));
    pool.push_back(g5_ideal(g5, "x^2 + 1"));
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            if (!a.is_graded() && !b.is_graded()) continue;
            CHECK(product(g5, a, b) == intersect(g5, a, b));
            CHECK(product(g5, a, b) == product(g5, b, a));
        }
    }
}

TEST_CASE("intersect") {
    Graph g5 = fixtures::g5();
    CanonicalIdeal a = g5_ideal(g5, "x - 1");
    CanonicalIdeal b = g5_ideal(g5, "x + 1");
    CHECK(intersect(g5, a, b) == g5_ideal(g5, "x^2 - 1"));  // same pair, same cycle: lcm
    CHECK(intersect(g5, a, a) == a);
    CanonicalIdeal graded = graded_ideal(g5, by_names(g5, {"v1"}), VertexSet(), Q);
    CHECK(graded_part(intersect(g5, graded, a)) == meet_graded(g5, graded, graded_part(a)));
}

TEST_CASE("prime_power") {
    Graph g5 = fixtures::g5();
    CanonicalIdeal graded = graded_ideal(g5, by_names(g5, {"v1"}), VertexSet(), Q);
    CHECK(prime_power(g5, graded, 5) == graded);
    CanonicalIdeal p = g5_ideal(g5, "x - 1");
    CHECK(prime_power(g5, p, 2) == g5_ideal(g5, "x^2 - 2*x + 1"));
    CHECK(prime_power(g5, p, 1) == p);
    CanonicalIdeal notprime = g5_ideal(g5, "x^2 - 1");
    CHECK_THROWS_AS(prime_power(g5, notprime, 2), std::invalid_argument);
}

TEST_CASE("prime powers shrink as the exponent grows") {
    Graph g5 = fixtures::g5();
    CanonicalIdeal p = g5_ideal(g5, "x - 1");
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(leq(g5, prime_power(g5, p, n + 1), prime_power(g5, p, n)));
    }
}

TEST_CASE("admissible pair enumeration covers the breaking-vertex lattice") {
    Graph g4 = fixtures::g4();
    auto pairs = all_admissible_pairs(g4);
    int with_h12 = 0;
    for (const auto& p : pairs) {
        if (p.H == by_names(g4, {"v1", "v2"})) ++with_h12;
    }
    CHECK(with_h12 == 4);  // S ranges over the subsets of {v3, v4}
}

TEST_CASE("products and intersections across different graded parts") {
    // a single loop at each end of a two-pronged source: both loops are
    // exit-free, over incomparable hereditary saturated sets
    Graph g({"a", "b", "c"},
            {{"a", "a", EdgeMult(1)},
             {"b", "a", EdgeMult(1)},
             {"b", "c", EdgeMult(1)},
             {"c", "c", EdgeMult(1)}});
    auto loop = [&](const char* v) { return CycleId::from_path({g.index_checked(v)}); };
    CanonicalIdeal i = normalize(g, {VertexSet(), VertexSet()},
                                 {{loop("a"), Poly::parse(Q, "x - 1")}}, Q);
    CanonicalIdeal j = normalize(g, {by_names(g, {"a"}), VertexSet()},
                                 {{loop("c"), Poly::parse(Q, "x + 1")}}, Q);
    // i sits inside gr(j), so the product telescopes to i
    CHECK(product(g, i, j) == i);
    CHECK(intersect(g, i, j) == i);

    // two non-graded ideals over incomparable pairs combine cycle-by-cycle
    CanonicalIdeal left = normalize(g, {by_names(g, {"a"}), VertexSet()},
                                    {{loop("c"), Poly::parse(Q, "x + 1")}}, Q);
    CanonicalIdeal right = normalize(g, {by_names(g, {"c"}), VertexSet()},
                                     {{loop("a"), Poly::parse(Q, "x - 1")}}, Q);
    CanonicalIdeal both = product(g, left, right);
    CHECK(both.pair().H == VertexSet());
    REQUIRE(both.cycles().size() == 2);
    CHECK(both == intersect(g, left, right));
    CHECK(leq(g, both, left));
    CHECK(leq(g, both, right));

    // powers of one prime against the bare prime of the same pair
    CanonicalIdeal p2 = normalize(g, {by_names(g, {"a"}), VertexSet()},
                                  {{loop("c"), Poly::parse(Q, "x^2 + 2*x + 1")}}, Q);
    CanonicalIdeal bare = graded_ideal(g, by_names(g, {"a"}), VertexSet(), Q);
    CHECK(product(g, p2, bare) == meet_graded(g, graded_part(p2), bare));
}
