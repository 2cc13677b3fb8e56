#ifndef LPA_ANNIHILATOR_HPP
#define LPA_ANNIHILATOR_HPP

#include <optional>
#include <utility>

#include "lpa/ideals.hpp"

namespace lpa {

/// Outcome of the reflexivity decision for one admissible pair. Both
/// characterizations are always computed; their agreement is an invariant
/// and disagreement throws.
struct ReflexivityVerdict {
    AdmissiblePair pair;
    bool reflexive = false;
    bool via_closure = false;    // (H,S) = (H,S)^⊥⊥
    bool via_condition3 = false; // R(H) − H ⊆ R(H^⊥) and S = B_H
    std::optional<VertexId> violation;
};

/// V^⊥ = E^0 − R(V). The result is hereditary and saturated.
VertexSet annihilator_set(const Graph& g, const VertexSet& v);

/// (H,S)^⊥ = (H^⊥, B_{H^⊥} − S); indexes the annihilator of the graded
/// ideal of (H,S), and of the corresponding closed gauge-invariant ideal.
AdmissiblePair annihilator_pair(const Graph& g, const AdmissiblePair& p);

/// The closure (H,S)^⊥⊥.
AdmissiblePair double_annihilator(const Graph& g, const AdmissiblePair& p);

ReflexivityVerdict is_reflexive(const Graph& g, const AdmissiblePair& p);

/// H^⊥⊥, which equals the largest hereditary subset of R(H). With
/// `brute_force_verify` the equality is re-derived by exhaustive search over
/// subsets of R(H) (exponential; test use only) and a mismatch throws.
VertexSet largest_hereditary_in_root(const Graph& g, const VertexSet& h,
                                     bool brute_force_verify = false);

/// True iff every admissible pair is reflexive; otherwise returns a
/// non-reflexive witness.
std::pair<bool, std::optional<AdmissiblePair>> all_pairs_reflexive(
    const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// For v ∈ B_{H^⊥}: checks that v ∈ R(H) − H and that the finite edge set
/// defining the breaking element of v over H^⊥ is exactly
/// s^{-1}(v) ∩ r^{-1}(R(H)). Throws when v ∉ B_{H^⊥}.
bool validate_complement_breaking_vertex(const Graph& g, const VertexSet& h, VertexId v);

} // namespace lpa

#endif // LPA_ANNIHILATOR_HPP
