#ifndef LPA_PATH_HPP
#define LPA_PATH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// One concrete edge inside a multiplicity class: the class plus a 1-based
/// index among its parallel edges. Any positive index is allowed for ω
/// classes.
struct EdgeInstance {
    EdgeId cls = 0;
    std::uint32_t index = 1;

    auto operator<=>(const EdgeInstance&) const = default;
};

/// A path of edge instances; a length-0 path is a single vertex. Consecutive
/// ranges and sources must match.
class Path {
public:
    /// Length-0 path at a vertex.
    static Path vertex(const Graph& g, VertexId v);
    /// Nonempty path; validates matching endpoints and instance indices.
    static Path edges(const Graph& g, std::vector<EdgeInstance> steps);

    std::size_t length() const { return steps_.size(); }
    bool is_vertex() const { return steps_.empty(); }
    VertexId source() const { return source_; }
    VertexId range() const { return range_; }
    const std::vector<EdgeInstance>& steps() const { return steps_; }

    /// Append one instance (range must match its source).
    Path extended(const Graph& g, EdgeInstance step) const;
    /// Drop the first edge; length must be ≥ 1. A length-1 path becomes the
    /// vertex at its range.
    Path suffix(const Graph& g) const;
    /// Drop the last edge; length must be ≥ 1.
    Path shortened(const Graph& g) const;

    bool operator==(const Path& o) const {
        return source_ == o.source_ && steps_ == o.steps_;
    }
    bool operator!=(const Path& o) const { return !(*this == o); }

    /// Total order: by length, then lexicographically by instances, then by
    /// base vertex (which only matters for length 0).
    bool operator<(const Path& o) const {
        if (steps_.size() != o.steps_.size()) return steps_.size() < o.steps_.size();
        if (steps_ != o.steps_) return steps_ < o.steps_;
        return source_ < o.source_;
    }

    std::string to_string(const Graph& g) const;

private:
    VertexId source_ = 0;
    VertexId range_ = 0;
    std::vector<EdgeInstance> steps_;
};

/// Renders an instance as its class id, with a `#index` suffix when the
/// index is not 1.
std::string instance_to_string(const Graph& g, EdgeInstance inst);

void validate_instance(const Graph& g, EdgeInstance inst);

} // namespace lpa

#endif // LPA_PATH_HPP
