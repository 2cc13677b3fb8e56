#include "doctest.h"

#include <algorithm>

#include "lpa/cycles.hpp"
#include "lpa/graph.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace lpa;
using namespace lpa::testing;

TEST_CASE("graph construction validates ids") {
    CHECK_THROWS_AS(Graph({"u", "u"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"u"}, {{"e", "u", "x", m(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"u"}, {{"e", "x", "u", m(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"u"}, {{"e", "u", "u", m(1)}, {"e", "u", "u", m(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Multiplicity::finite(0), std::invalid_argument);
    // Ids must survive the file format.
    CHECK_THROWS_AS(Graph({"#u"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a b"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"u"}, {{"e f", "u", "u", m(1)}}), std::invalid_argument);
    CHECK_NOTHROW(Graph({"u#1", "v'"}, {{"w[e#2]", "u#1", "v'", m(1)}}));
}

TEST_CASE("vertex kinds") {
    Graph g = breaking_basic();
    CHECK(g.kind(g.vertex("v")) == VertexKind::InfiniteEmitter);
    CHECK(g.kind(g.vertex("w")) == VertexKind::Sink);
    Graph lx = loop_exit();
    CHECK(lx.kind(lx.vertex("u")) == VertexKind::Regular);
    CHECK(lx.kind(lx.vertex("v")) == VertexKind::Sink);
}

TEST_CASE("tree of a vertex set") {
    Graph lx = loop_exit();
    CHECK(tree(lx, lx.set_of({"v"})) == lx.set_of({"v"}));
    CHECK(tree(lx, lx.empty_set()) == lx.empty_set());

    Graph fk = fork_graph();
    CHECK(tree(fk, fk.set_of({"v"})) == fk.set_of({"u", "v", "w"}));

    CHECK_THROWS_AS(tree(lx, VertexSet(5)), std::invalid_argument);
}

TEST_CASE("root of a vertex set") {
    Graph lx = loop_exit();
    CHECK(root(lx, lx.set_of({"v"})) == lx.set_of({"u", "v"}));

    Graph fk = fork_graph();
    CHECK(root(fk, fk.set_of({"u"})) == fk.set_of({"u", "v"}));
    CHECK(root(fk, fk.full_set()) == fk.full_set());
}

TEST_CASE("tree and root agree with BFS on the corpus") {
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        const std::size_t n = g.vertex_count();
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            VertexSet v = VertexSet::from_mask(n, mask);
            CHECK(tree(g, v) == bfs_tree(g, v));
            CHECK(root(g, v) == bfs_root(g, v));
        }
    }
}

TEST_CASE("tree/root closure laws and adjointness") {
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        const std::size_t n = g.vertex_count();
        if (n > 4) continue;
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t vm = 0; vm < limit; ++vm) {
            VertexSet v = VertexSet::from_mask(n, vm);
            VertexSet tv = tree(g, v);
            VertexSet rv = root(g, v);
            CHECK(v.is_subset_of(tv));
            CHECK(v.is_subset_of(rv));
            CHECK(tree(g, tv) == tv);
            CHECK(root(g, rv) == rv);
            for (std::uint64_t wm = 0; wm < limit; ++wm) {
                VertexSet w = VertexSet::from_mask(n, wm);
                // Monotone.
                if (v.is_subset_of(w)) {
                    CHECK(tv.is_subset_of(tree(g, w)));
                    CHECK(rv.is_subset_of(root(g, w)));
                }
                // T(V) ∩ W ≠ ∅ ⇔ V ∩ R(W) ≠ ∅.
                CHECK(tv.intersects(w) == v.intersects(root(g, w)));
            }
        }
    }
}

TEST_CASE("strict reachability order matches strict root inclusion") {
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            VertexSet ru = root(g, g.singleton(u));
            VertexSet tu = tree(g, g.singleton(u));
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                VertexSet rv = root(g, g.singleton(v));
                bool u_geq_v = tu.contains(v);
                bool v_geq_u = tree(g, g.singleton(v)).contains(u);
                bool strict = u_geq_v && !v_geq_u;
                bool proper_inclusion = ru.is_subset_of(rv) && ru != rv;
                CHECK(strict == proper_inclusion);
            }
        }
    }
}

TEST_CASE("cycle enumeration and classification") {
    SUBCASE("loop with a non-returning exit is Neither") {
        Graph g = loop_exit();
        auto cycles = enumerate_cycles(g);
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].classification == CycleClass::Neither);
        CHECK(cycles[0].exit_witness.has_value());
        REQUIRE(cycles[0].non_return_witness.has_value());
        const auto& path = *cycles[0].non_return_witness;
        CHECK(cycles[0].vertices.contains(path.source));
        REQUIRE(!path.edges.empty());
        VertexId end = g.edge_class(path.edges.back()).range;
        CHECK(!root(g, cycles[0].vertices).contains(end));
    }
    SUBCASE("single loop has no exit") {
        auto cycles = enumerate_cycles(single_loop());
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].classification == CycleClass::NoExit);
        CHECK(!cycles[0].exit_witness.has_value());
    }
    SUBCASE("two petals are both extreme") {
        auto cycles = enumerate_cycles(two_petal_rose());
        REQUIRE(cycles.size() == 2);
        CHECK(cycles[0].classification == CycleClass::Extreme);
        CHECK(cycles[1].classification == CycleClass::Extreme);
    }
    SUBCASE("a multiplicity-2 loop class is one extreme cycle") {
        auto cycles = enumerate_cycles(loop_mult2());
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].classification == CycleClass::Extreme);
        CHECK(cycles[0].exit_witness.has_value());
    }
    SUBCASE("longer cycles are found once, rotated to the smallest vertex") {
        Graph g = omega_chord_cycle();
        auto cycles = enumerate_cycles(g);
        REQUIRE(cycles.size() == 2); // (e,f) and (g,f)
        for (const auto& c : cycles) {
            CHECK(g.edge_class(c.edges.front()).source == g.vertex("u"));
            CHECK(c.classification == CycleClass::Extreme);
        }
    }
}

TEST_CASE("extreme cycles: every departing walk can return") {
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        for (const auto& c : enumerate_cycles(g)) {
            if (c.classification != CycleClass::Extreme) continue;
            VertexSet reachable = tree(g, c.vertices);
            CHECK(reachable.is_subset_of(root(g, c.vertices)));
        }
    }
}

TEST_CASE("Conditions L and K") {
    CHECK(condition_L(single_loop()) == false);
    CHECK(condition_K(single_loop()) == false);

    CHECK(condition_L(two_petal_rose()) == true);
    CHECK(condition_K(two_petal_rose()) == true);

    CHECK(condition_L(loop_exit()) == true);
    CHECK(condition_K(loop_exit()) == false);

    // Parallel edges inside one class witness K.
    CHECK(condition_K(loop_mult2()) == true);
    CHECK(condition_K(omega_loop()) == true);

    // v → a with a loop at a and a return edge: infinitely many closed
    // simple paths from v, so K holds even though v is on a single cycle.
    Graph g({"v", "a"},
            {{"e", "v", "a", m(1)}, {"f", "a", "v", m(1)}, {"l", "a", "a", m(1)}});
    CHECK(condition_K(g) == true);
    CHECK(condition_L(g) == true);

    CHECK(condition_L(edgeless3()) == true);
    CHECK(condition_K(edgeless3()) == true);
}

TEST_CASE("structural checks for all-reflexivity") {
    SUBCASE("loop with exit fails the cycle-shape check") {
        auto check = check_cycles_no_exit_or_extreme(loop_exit());
        CHECK(!check.holds);
        REQUIRE(check.witness.has_value());
        CHECK(check.witness->classification == CycleClass::Neither);
    }
    SUBCASE("omega emitter into a sink fails the emitter check") {
        Graph g = omega_sink();
        auto check = check_infinite_emitters_on_cycles(g);
        CHECK(!check.holds);
        REQUIRE(check.witness.has_value());
        CHECK(*check.witness == g.vertex("u"));
    }
    SUBCASE("acyclic row-finite graph passes everything") {
        Graph g = line3();
        CHECK(check_cycles_no_exit_or_extreme(g).holds);
        CHECK(check_infinite_emitters_on_cycles(g).holds);
        CHECK(check_omega_bifurcations_return(g).holds);
    }
    SUBCASE("omega bifurcation off an infinite path is caught") {
        // A loop at u with an ω class into a sink: the infinite path around
        // the loop has infinitely many non-returning bifurcations.
        Graph g({"u", "h"}, {{"e", "u", "u", m(1)}, {"g", "u", "h", momega()}});
        auto check = check_omega_bifurcations_return(g);
        CHECK(!check.holds);
        REQUIRE(check.witness.has_value());
        CHECK(check.witness->start_vertex == g.vertex("u"));
        CHECK(check.witness->omega_class == *g.find_class("g"));
        CHECK(check.witness->avoided_set == g.set_of({"h"}));
    }
    SUBCASE("omega class whose range returns to the path is fine") {
        Graph g = omega_on_cycle();
        CHECK(check_omega_bifurcations_return(g).holds);
        CHECK(is_all_reflexive(g));
        CHECK(is_strongly_all_reflexive(g));
    }
}

TEST_CASE("all-reflexive and strongly all-reflexive flags") {
    CHECK(is_all_reflexive(two_petal_rose()));
    CHECK(is_strongly_all_reflexive(two_petal_rose()));

    CHECK(is_all_reflexive(single_loop()));
    CHECK(!is_strongly_all_reflexive(single_loop()));

    CHECK(!is_all_reflexive(loop_exit()));
    CHECK(!is_all_reflexive(omega_sink()));

    CHECK(is_all_reflexive(edgeless3()));
    CHECK(is_strongly_all_reflexive(edgeless3()));

    CHECK(is_all_reflexive(omega_loop()));
    CHECK(is_strongly_all_reflexive(omega_loop()));
}
