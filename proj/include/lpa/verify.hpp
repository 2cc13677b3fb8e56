#ifndef LPA_VERIFY_HPP
#define LPA_VERIFY_HPP

#include <string>
#include <vector>

#include "lpa/ideals.hpp"
#include "lpa/terms.hpp"

namespace lpa {

/// Deliberately injected defects, used by the self-test harness to prove the
/// oracles can fail and emit certificates. Production paths use None.
enum class Fault {
    None,
    FlipReflexiveVerdicts,  // negate every per-pair reflexivity verdict
    TamperAnnihilatorPair,  // compute S^⊥ as B_{H^⊥} ∪ S instead of B_{H^⊥} − S
    ForceNotDistributive,   // report every lattice as non-distributive
    CorruptGenerators,      // smuggle a non-member into the ideal generators
};

struct OracleResult {
    std::string name;
    bool passed = false;
    std::string certificate; // populated on failure
};

struct VerifyOptions {
    std::size_t cap = kDefaultEnumerationCap;
    GeneratorLimits limits{2, 3};
    Fault fault = Fault::None;
};

/// Runs every cross-check oracle on one graph: closure laws of ⊥ and ⊥⊥,
/// agreement of the two reflexivity criteria, the all-reflexive and Boolean
/// equivalences, Booleanness of the annihilator sublattice, the
/// quotient/porcupine biconditionals, Condition (L) preservation, and the
/// symbolic annihilation check.
std::vector<OracleResult> run_verification(const Graph& g, const VerifyOptions& opts = {});

bool all_passed(const std::vector<OracleResult>& results);

} // namespace lpa

#endif // LPA_VERIFY_HPP
