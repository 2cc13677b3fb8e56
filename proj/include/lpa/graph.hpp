#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpa/multiplicity.hpp"
#include "lpa/vertex_set.hpp"

namespace lpa {

using EdgeId = std::uint32_t;

enum class VertexKind { Sink, Regular, InfiniteEmitter };

/// One class of parallel edges between two vertices. A class of multiplicity
/// m stands for m distinct edges sharing source and range; m = ω stands for
/// infinitely many.
struct EdgeClass {
    std::string id;
    VertexId source = 0;
    VertexId range = 0;
    Multiplicity multiplicity = Multiplicity::finite(1);
};

struct EdgeClassSpec {
    std::string id;
    std::string source;
    std::string range;
    Multiplicity multiplicity = Multiplicity::finite(1);
};

/// A walk in the graph given by edge classes (one representative edge per
/// class); used for witnesses. A length-0 path is just its source vertex.
struct ClassPath {
    VertexId source = 0;
    std::vector<EdgeId> edges;
};

/// Finite presentation of a directed graph: named vertices plus edge classes
/// with multiplicities in ℕ₊ ∪ {ω}. Immutable after construction; all
/// operations on it are pure, so concurrent readers are safe.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertex_names, const std::vector<EdgeClassSpec>& classes);

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t class_count() const { return classes_.size(); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    std::optional<VertexId> find_vertex(const std::string& name) const;
    VertexId vertex(const std::string& name) const;

    const EdgeClass& edge_class(EdgeId e) const { return classes_.at(e); }
    const std::vector<EdgeClass>& edge_classes() const { return classes_; }
    std::optional<EdgeId> find_class(const std::string& id) const;

    const std::vector<EdgeId>& out_classes(VertexId v) const { return out_classes_.at(v); }
    const std::vector<EdgeId>& in_classes(VertexId v) const { return in_classes_.at(v); }

    /// Ranges of the classes leaving v, as a set.
    const VertexSet& out_neighbors(VertexId v) const { return out_adj_.at(v); }
    const VertexSet& in_neighbors(VertexId v) const { return in_adj_.at(v); }

    VertexKind kind(VertexId v) const;
    bool is_regular(VertexId v) const { return kind(v) == VertexKind::Regular; }
    bool is_infinite_emitter(VertexId v) const { return kind(v) == VertexKind::InfiniteEmitter; }
    bool is_sink(VertexId v) const { return kind(v) == VertexKind::Sink; }
    bool is_row_finite() const;

    /// Total number of edges leaving v (sum of multiplicities).
    EdgeCount out_degree(VertexId v) const;

    VertexSet empty_set() const { return VertexSet(vertex_count()); }
    VertexSet full_set() const { return VertexSet::all(vertex_count()); }
    VertexSet singleton(VertexId v) const;
    VertexSet set_of(std::initializer_list<const char*> names) const;

    /// Strongly connected component index of v (components are numbered in
    /// an arbitrary but fixed order).
    std::uint32_t scc_of(VertexId v) const { return scc_id_.at(v); }

    /// True when some cycle passes through v.
    bool on_cycle(VertexId v) const { return scc_cyclic_.at(scc_id_.at(v)); }

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void compute_sccs();

    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::vector<EdgeClass> classes_;
    std::unordered_map<std::string, EdgeId> class_index_;
    std::vector<std::vector<EdgeId>> out_classes_;
    std::vector<std::vector<EdgeId>> in_classes_;
    std::vector<VertexSet> out_adj_;
    std::vector<VertexSet> in_adj_;
    std::vector<std::uint32_t> scc_id_;
    std::vector<bool> scc_cyclic_;
};

/// T(V): vertices reachable from V, including V itself.
VertexSet tree(const Graph& g, const VertexSet& v);

/// R(V): vertices from which V is reachable, including V itself.
VertexSet root(const Graph& g, const VertexSet& v);

/// Forward closure of `start` inside the induced subgraph on `allowed`.
VertexSet tree_within(const Graph& g, const VertexSet& start, const VertexSet& allowed);

/// True when the induced subgraph on `vertices` contains a cycle.
bool contains_cycle_within(const Graph& g, const VertexSet& vertices);

/// True when the induced subgraph on `allowed` contains a cycle reachable
/// from `start` (equivalently: an infinite path from `start` stays inside
/// `allowed`).
bool reaches_cycle_within(const Graph& g, VertexId start, const VertexSet& allowed);

} // namespace lpa

#endif // LPA_GRAPH_HPP
