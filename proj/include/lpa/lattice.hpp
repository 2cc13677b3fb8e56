#ifndef LPA_LATTICE_HPP
#define LPA_LATTICE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "lpa/annihilator.hpp"
#include "lpa/constructions.hpp"
#include "lpa/ideals.hpp"

namespace lpa {

enum class LatticeVerdictKind { Boolean, NotDistributive, NotComplemented };

struct LatticeVerdict {
    LatticeVerdictKind kind = LatticeVerdictKind::Boolean;
    /// Indices (a,b,c) with a∧(b∨c) ≠ (a∧b)∨(a∧c), when not distributive.
    std::array<std::size_t, 3> triple{};
    /// Index of an element with no complement, when not complemented.
    std::size_t witness = 0;
};

/// The finite lattice of admissible pairs: order matrix, meet/join tables,
/// and the Boolean-algebra verdict (distributivity checked over all triples,
/// complements searched exhaustively).
struct PairLattice {
    std::vector<AdmissiblePair> pairs;
    std::vector<bool> leq; // row-major: leq[i*n + j] means pairs[i] ≤ pairs[j]
    std::size_t bottom = 0;
    std::size_t top = 0;
    std::vector<std::size_t> meet; // row-major index tables
    std::vector<std::size_t> join;
    LatticeVerdict verdict;

    std::size_t size() const { return pairs.size(); }
    bool less_eq(std::size_t i, std::size_t j) const { return leq[i * pairs.size() + j]; }
    std::size_t meet_of(std::size_t i, std::size_t j) const { return meet[i * pairs.size() + j]; }
    std::size_t join_of(std::size_t i, std::size_t j) const { return join[i * pairs.size() + j]; }
    std::size_t index_of(const AdmissiblePair& p) const;
};

PairLattice build_lattice(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// The sublattice of reflexive pairs: meet as in the full lattice, join is
/// the double annihilator of the full-lattice join. It is a Boolean algebra
/// for every graph; any other verdict throws.
PairLattice annihilator_sublattice(const Graph& g, const PairLattice& full);

struct BooleanEquivalence {
    bool lattice_boolean = false;
    bool all_reflexive = false;
    bool strongly_all_reflexive = false;
    LatticeVerdict verdict;
};

/// Checks that the graded-ideal lattice is Boolean exactly when the graph is
/// all-reflexive, and reports the strongly-all-reflexive flag (the verdict
/// for the full ideal lattice, and for closed ideals of the graph
/// C*-algebra). A mismatch throws with a certificate.
BooleanEquivalence boolean_iff_all_reflexive(const Graph& g,
                                             std::size_t cap = kDefaultEnumerationCap);

/// The two biconditionals of all-reflexivity descent: graph vs quotient plus
/// porcupine, plain and strong. Preconditions: p reflexive with a finite
/// porcupine. Returns whether both biconditionals held.
bool quotient_porcupine_reflexivity_check(const Graph& g, const AdmissiblePair& p);

} // namespace lpa

#endif // LPA_LATTICE_HPP
