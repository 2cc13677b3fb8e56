#ifndef LPA_CYCLES_HPP
#define LPA_CYCLES_HPP

#include <optional>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

enum class CycleClass { NoExit, Extreme, Neither };

/// A cycle (closed walk of edge classes with pairwise-distinct sources,
/// canonicalized to start at its smallest vertex) together with its
/// classification. A class of multiplicity ≥ 2 on the cycle counts as an
/// exit, since its parallel edges leave the cycle-as-edge-set.
struct CycleReport {
    std::vector<EdgeId> edges;
    VertexSet vertices;
    CycleClass classification = CycleClass::NoExit;
    std::optional<EdgeId> exit_witness;
    std::optional<ClassPath> non_return_witness;
};

/// Witness that some infinite path has infinitely many bifurcations whose
/// ranges do not lead back: an ω class whose source sits on an infinite path
/// avoiding the tree of the class's range.
struct BifurcationWitness {
    EdgeId omega_class = 0;
    VertexId start_vertex = 0;
    VertexSet avoided_set;
};

struct CycleShapeCheck {
    bool holds = true;
    std::optional<CycleReport> witness;
};
struct EmitterCycleCheck {
    bool holds = true;
    std::optional<VertexId> witness;
};
struct BifurcationCheck {
    bool holds = true;
    std::optional<BifurcationWitness> witness;
};

/// All cycles up to rotation, each classified. Parallel classes give
/// distinct cycles; parallel edges within one class give one report.
std::vector<CycleReport> enumerate_cycles(const Graph& g);

/// Condition (L): every cycle has an exit.
bool condition_L(const Graph& g);

/// Condition (K): every vertex that is the source of a closed simple path is
/// the source of at least two distinct ones. Decided exactly: parallel edges
/// within a class count up to 2, ω counts as ≥ 2, and an unbounded family of
/// closed simple paths counts as ≥ 2.
bool condition_K(const Graph& g);

/// Every cycle is either without exits or extreme.
CycleShapeCheck check_cycles_no_exit_or_extreme(const Graph& g);

/// Every infinite emitter lies on a cycle.
EmitterCycleCheck check_infinite_emitters_on_cycles(const Graph& g);

/// Every infinite path has only finitely many bifurcations whose ranges do
/// not lead back to the path. In a finite presentation this reduces to: no
/// ω class e admits an infinite path through its source inside
/// E^0 − T(range(e)).
BifurcationCheck check_omega_bifurcations_return(const Graph& g);

bool is_all_reflexive(const Graph& g);
bool is_strongly_all_reflexive(const Graph& g);

const char* to_string(CycleClass c);

} // namespace lpa

#endif // LPA_CYCLES_HPP
