#ifndef LPA_IDEALS_HPP
#define LPA_IDEALS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// Index of a graded ideal: a hereditary saturated vertex set together with
/// a choice of its breaking vertices.
struct AdmissiblePair {
    VertexSet hereditary;
    VertexSet breaking;

    bool operator==(const AdmissiblePair& o) const {
        return hereditary == o.hereditary && breaking == o.breaking;
    }
    bool operator!=(const AdmissiblePair& o) const { return !(*this == o); }
    bool operator<(const AdmissiblePair& o) const {
        if (hereditary != o.hereditary) return hereditary < o.hereditary;
        return breaking < o.breaking;
    }
};

inline constexpr std::size_t kDefaultEnumerationCap = 16;

bool is_hereditary(const Graph& g, const VertexSet& v);
bool is_saturated(const Graph& g, const VertexSet& v);

/// Least hereditary and saturated superset of v.
VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& v);

/// B_H: infinite emitters outside H whose edge set into E^0 − H is nonempty
/// and of finite total multiplicity. Throws when H is not hereditary and
/// saturated.
VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

/// Throws when (H, S) is not admissible for g.
void require_admissible(const Graph& g, const AdmissiblePair& p);

/// All admissible pairs: H runs over hereditary saturated subsets in
/// increasing bitmask order (bit i = vertex i), S over subsets of B_H in the
/// same order. Throws when the graph exceeds the enumeration cap.
std::vector<AdmissiblePair> enumerate_pairs(const Graph& g,
                                            std::size_t cap = kDefaultEnumerationCap);

/// (H,S) ≤ (K,T) iff H ⊆ K and S ⊆ K ∪ T.
bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b);

AdmissiblePair pair_meet(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b,
                         std::size_t cap = kDefaultEnumerationCap);
AdmissiblePair pair_join(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b,
                         std::size_t cap = kDefaultEnumerationCap);

/// The admissible pairs of a graph with their order, supporting meet/join by
/// poset search. Meets and joins must exist and be unique (the pairs form a
/// lattice); anything else signals a bug and throws logic_error.
class PairPoset {
public:
    explicit PairPoset(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

    const std::vector<AdmissiblePair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool leq(std::size_t i, std::size_t j) const { return leq_[i * pairs_.size() + j]; }
    std::size_t index_of(const AdmissiblePair& p) const;
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }

    std::size_t meet(std::size_t i, std::size_t j) const;
    std::size_t join(std::size_t i, std::size_t j) const;

private:
    std::size_t unique_bound(std::size_t i, std::size_t j, bool lower) const;

    std::vector<AdmissiblePair> pairs_;
    std::vector<bool> leq_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

std::string to_string(const Graph& g, const VertexSet& v);
std::string to_string(const Graph& g, const AdmissiblePair& p);

} // namespace lpa

#endif // LPA_IDEALS_HPP
