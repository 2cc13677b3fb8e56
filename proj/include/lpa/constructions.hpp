#ifndef LPA_CONSTRUCTIONS_HPP
#define LPA_CONSTRUCTIONS_HPP

#include <map>
#include <optional>

#include "lpa/ideals.hpp"
#include "lpa/path.hpp"

namespace lpa {

/// E/(H,S): the graph of the quotient algebra. Vertices are E^0 − H plus a
/// primed copy v' of each v ∈ B_H − S; every class with range in B_H − S is
/// doubled by a primed copy ending at the primed vertex.
struct QuotientGraph {
    Graph graph;
    /// Old vertex id (in the source graph) → its primed copy (in `graph`).
    std::map<VertexId, VertexId> primed_vertices;
    /// Old class id → its primed copy (in `graph`).
    std::map<EdgeId, EdgeId> primed_edges;
    /// Old vertex id → the same vertex inside `graph` (members of E^0 − H).
    std::map<VertexId, VertexId> kept_vertices;
};

/// P_(H,S): the graph of the ideal. The base is H ∪ S with the edges inside
/// H and the classes from S into H (ω classes retained); each path of
/// F_1 ∪ F_2 grows a hair vertex whose single edge points at the hair of its
/// suffix (or at the path's range, for length-1 paths).
struct PorcupineGraph {
    Graph graph;
    bool finite = true;
    /// Set when the full porcupine is infinite and only hairs for paths of
    /// length ≤ truncated_at were built. Truncated graphs are previews:
    /// classification on them is unsound and must be refused.
    std::optional<std::uint32_t> truncated_at;
    std::map<Path, VertexId> hair_vertices;
    std::map<Path, EdgeId> hair_edges;
    std::map<VertexId, VertexId> base_vertices; // old id → id in `graph`
};

QuotientGraph quotient(const Graph& g, const AdmissiblePair& p);

/// True iff F_1 ∪ F_2 is finite; decided structurally, without enumeration.
bool porcupine_is_finite(const Graph& g, const AdmissiblePair& p);

/// Builds the porcupine. `depth` is required when the porcupine is infinite
/// and ignored otherwise.
PorcupineGraph porcupine(const Graph& g, const AdmissiblePair& p,
                         std::optional<std::uint32_t> depth = std::nullopt);

/// Condition (L) on the quotient graph. Preconditions: g satisfies
/// Condition (L) and p is reflexive; both are enforced.
bool condition_L_preserved(const Graph& g, const AdmissiblePair& p);

/// Classification gates: truncated porcupines are previews and refuse to be
/// classified.
bool is_all_reflexive(const PorcupineGraph& p);
bool is_strongly_all_reflexive(const PorcupineGraph& p);

} // namespace lpa

#endif // LPA_CONSTRUCTIONS_HPP
