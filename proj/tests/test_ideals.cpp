#include "doctest.h"

#include <set>

#include "lpa/cycles.hpp"
#include "lpa/ideals.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace lpa;
using namespace lpa::testing;

TEST_CASE("hereditary and saturated checks") {
    Graph fk = fork_graph();
    // R({u}) = {u,v} is not hereditary: v also reaches w.
    CHECK(!is_hereditary(fk, fk.set_of({"u", "v"})));
    CHECK(is_hereditary(fk, fk.set_of({"u"})));

    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        CHECK(is_hereditary(g, g.empty_set()));
        CHECK(is_saturated(g, g.empty_set()));
        CHECK(is_hereditary(g, g.full_set()));
        CHECK(is_saturated(g, g.full_set()));
    }

    Graph lx = loop_exit();
    CHECK(is_hereditary(lx, lx.set_of({"v"})));
    CHECK(is_saturated(lx, lx.set_of({"v"})));

    // Definitional agreement across all subsets of every corpus graph.
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        const std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            VertexSet v = VertexSet::from_mask(g.vertex_count(), mask);
            CHECK(is_hereditary(g, v) == definitional_hereditary(g, v));
            CHECK(is_saturated(g, v) == definitional_saturated(g, v));
        }
    }
}

TEST_CASE("hereditary saturated closure") {
    Graph lx = loop_exit();
    CHECK(hereditary_saturated_closure(lx, lx.empty_set()) == lx.empty_set());
    CHECK(hereditary_saturated_closure(lx, lx.set_of({"v"})) == lx.set_of({"v"}));

    // u regular with exactly two edges to v and w: saturation pulls u in.
    Graph g({"u", "v", "w"}, {{"e", "u", "v", m(1)}, {"f", "u", "w", m(1)}});
    CHECK(hereditary_saturated_closure(g, g.set_of({"v", "w"})) == g.full_set());

    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& gr = named_graph.second;
        CAPTURE(name);
        if (gr.vertex_count() > 4) continue;
        const std::uint64_t limit = std::uint64_t{1} << gr.vertex_count();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            VertexSet v = VertexSet::from_mask(gr.vertex_count(), mask);
            VertexSet closed = hereditary_saturated_closure(gr, v);
            CHECK(closed == brute_force_hs_closure(gr, v));
            CHECK(v.is_subset_of(closed));
            CHECK(hereditary_saturated_closure(gr, closed) == closed);
            // Monotone.
            for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
                VertexSet w = VertexSet::from_mask(gr.vertex_count(), sub);
                CHECK(hereditary_saturated_closure(gr, w).is_subset_of(closed));
            }
        }
    }
}

TEST_CASE("breaking vertices") {
    Graph os = omega_sink();
    CHECK(breaking_vertices(os, os.set_of({"v"})).empty());

    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        if (!g.is_row_finite()) continue;
        for (const VertexSet& h : brute_force_hs_sets(g)) {
            CHECK(breaking_vertices(g, h).empty());
        }
    }

    Graph bb = breaking_basic();
    CHECK(breaking_vertices(bb, bb.set_of({"h"})) == bb.set_of({"v"}));
    // An ω class escaping into the complement disqualifies the emitter.
    CHECK(breaking_vertices(bb, bb.set_of({"w"})).empty());
    CHECK(breaking_vertices(bb, bb.empty_set()).empty());

    CHECK_THROWS_AS(breaking_vertices(fork_graph(), fork_graph().set_of({"u", "v"})),
                    std::invalid_argument);

    // B_H never meets H.
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        for (const VertexSet& h : brute_force_hs_sets(g))
            CHECK(!breaking_vertices(g, h).intersects(h));
    }
}

TEST_CASE("admissible pair enumeration") {
    Graph sl = single_loop();
    auto pairs = enumerate_pairs(sl);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].hereditary == sl.empty_set());
    CHECK(pairs[1].hereditary == sl.full_set());

    Graph lx = loop_exit();
    auto lx_pairs = enumerate_pairs(lx);
    std::set<std::uint64_t> hs;
    for (const auto& p : lx_pairs) hs.insert(p.hereditary.mask());
    CHECK(hs == std::set<std::uint64_t>{0, lx.set_of({"v"}).mask(), 3});

    Graph sv = single_vertex();
    auto sv_pairs = enumerate_pairs(sv);
    REQUIRE(sv_pairs.size() == 2);

    // Matches the subset-filter oracle everywhere, including S expansion.
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        auto got = enumerate_pairs(g);
        std::size_t expected = 0;
        for (const VertexSet& h : brute_force_hs_sets(g)) {
            expected += std::uint64_t{1} << breaking_vertices(g, h).count();
        }
        CHECK(got.size() == expected);
        // Deterministic and duplicate-free.
        std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
        for (const auto& p : got)
            CHECK(seen.insert({p.hereditary.mask(), p.breaking.mask()}).second);
    }

    CHECK_THROWS_AS(
        [] {
            std::vector<std::string> names;
            for (int i = 0; i < 20; ++i) names.push_back("v" + std::to_string(i));
            return enumerate_pairs(Graph(names, {}));
        }(),
        std::runtime_error);
}

TEST_CASE("pair order") {
    Graph lx = loop_exit();
    auto pairs = enumerate_pairs(lx);
    AdmissiblePair bottom{lx.empty_set(), lx.empty_set()};
    for (const auto& p : pairs) CHECK(pair_leq(bottom, p));

    AdmissiblePair hv{lx.set_of({"v"}), lx.empty_set()};
    CHECK(!pair_leq(hv, bottom));

    // (H,∅) ≤ (H,B_H) when B_H ≠ ∅.
    Graph bb = breaking_basic();
    AdmissiblePair no_breaking{bb.set_of({"h"}), bb.empty_set()};
    AdmissiblePair with_breaking{bb.set_of({"h"}), bb.set_of({"v"})};
    CHECK(pair_leq(no_breaking, with_breaking));
    CHECK(!pair_leq(with_breaking, no_breaking));

    // Partial order on every corpus graph.
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        auto ps = enumerate_pairs(g);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(pair_leq(ps[i], ps[i]));
            for (std::size_t j = 0; j < ps.size(); ++j) {
                if (pair_leq(ps[i], ps[j]) && pair_leq(ps[j], ps[i])) CHECK(i == j);
                for (std::size_t k = 0; k < ps.size(); ++k)
                    if (pair_leq(ps[i], ps[j]) && pair_leq(ps[j], ps[k]))
                        CHECK(pair_leq(ps[i], ps[k]));
            }
        }
    }
}

TEST_CASE("pair meet and join") {
    Graph fk = fork_graph();
    AdmissiblePair hu{fk.set_of({"u"}), fk.empty_set()};
    AdmissiblePair hw{fk.set_of({"w"}), fk.empty_set()};
    AdmissiblePair bottom{fk.empty_set(), fk.empty_set()};
    CHECK(pair_meet(fk, hu, hw) == bottom);

    CHECK(pair_meet(fk, hu, hu) == hu);
    CHECK(pair_join(fk, hu, bottom) == hu);

    Graph lx = loop_exit();
    AdmissiblePair hv{lx.set_of({"v"}), lx.empty_set()};
    CHECK(pair_join(lx, hv, hv) == hv);

    // Lattice laws on every corpus graph: absorption and compatibility.
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        PairPoset poset(g);
        const std::size_t n = poset.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t mij = poset.meet(i, j);
                std::size_t jij = poset.join(i, j);
                CHECK(poset.leq(mij, i));
                CHECK(poset.leq(mij, j));
                CHECK(poset.leq(i, jij));
                CHECK(poset.leq(j, jij));
                // Absorption.
                CHECK(poset.meet(i, jij) == i);
                CHECK(poset.join(i, mij) == i);
            }
        }
    }
}

TEST_CASE("no cycles or irregular vertices in R(H)-H under tame cycles") {
    // When every cycle is no-exit or extreme and every infinite emitter is
    // on a cycle, R(H) − H contains no cycle vertex and only regular
    // vertices; consequently B_H = ∅.
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        if (!check_cycles_no_exit_or_extreme(g).holds) continue;
        if (!check_infinite_emitters_on_cycles(g).holds) continue;
        for (const VertexSet& h : brute_force_hs_sets(g)) {
            VertexSet frontier = set_difference(root(g, h), h);
            frontier.for_each([&](VertexId v) {
                CHECK(!g.on_cycle(v));
                CHECK(g.kind(v) == VertexKind::Regular);
            });
            CHECK(breaking_vertices(g, h).empty());
        }
    }
}
