#ifndef LPA_TERMS_HPP
#define LPA_TERMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lpa/ideals.hpp"
#include "lpa/path.hpp"
#include "lpa/rational.hpp"

namespace lpa {

/// k · p·q* with paths p, q sharing a range and k an exact nonzero rational.
struct Monomial {
    Rational coeff = 1;
    Path left;        // p
    Path right;       // q, applied starred
};

/// An element of the rational Leavitt path algebra of a fixed graph, kept as
/// a canonical combination: keys (p,q) strictly increasing, no zero
/// coefficients. The zero element has no terms.
class LinearCombination {
public:
    explicit LinearCombination(const Graph& g) : graph_(&g) {}
    LinearCombination(const Graph& g, std::vector<Monomial> terms);

    static LinearCombination zero(const Graph& g) { return LinearCombination(g); }
    static LinearCombination vertex(const Graph& g, VertexId v);
    static LinearCombination path(const Graph& g, const Path& p);   // p·r(p)*
    static LinearCombination monomial(const Graph& g, Monomial m);

    const Graph& graph() const { return *graph_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LinearCombination operator+(const LinearCombination& o) const;
    LinearCombination operator-(const LinearCombination& o) const;
    LinearCombination scaled(const Rational& k) const;

    bool operator==(const LinearCombination& o) const;
    bool operator!=(const LinearCombination& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void canonicalize();

    const Graph* graph_;
    std::vector<Monomial> terms_;
};

/// Product under the path-algebra relations: (p q*)(r s*) collapses by
/// matching q against r at the instance level and vanishes when neither
/// extends the other. The result is canonical but not CK2-normalized.
LinearCombination multiply(const LinearCombination& a, const LinearCombination& b);

/// Counters reported by the normal-form rewriter.
struct RewriteStats {
    std::uint64_t steps = 0;
};

/// Unique basis representation: rewrites every monomial whose two paths end
/// with the same designated last out-instance of a regular vertex, to
/// fixpoint. The designated instance is the maximal one in (class
/// declaration order, instance index) — a convention that fixes the basis.
/// Every replacement strictly decreases the measure
/// (|p|+|q|, out-order index of the shared last instance); a violation
/// throws. Zero is the empty combination.
LinearCombination normal_form(const LinearCombination& x, RewriteStats* stats = nullptr);

/// Involution: swaps p and q in every monomial (rational coefficients are
/// their own conjugates).
LinearCombination involution(const LinearCombination& x);

/// v − Σ e e* over the instances from v into E^0 − H (finite and nonempty
/// exactly when v ∈ B_H; anything else throws).
LinearCombination breaking_element(const Graph& g, const VertexSet& h, VertexId v);

struct GeneratorLimits {
    std::uint32_t max_len = 2;
    std::uint32_t omega_instance_cap = 3;
};

/// Spanning elements of the graded ideal of (H,S) with path lengths ≤
/// max_len: p q* with r(p) = r(q) ∈ H, and p v^H q* with r(p) = r(q) = v ∈ S.
/// ω classes are expanded up to the instance cap.
std::vector<LinearCombination> ideal_generators(const Graph& g, const AdmissiblePair& p,
                                                GeneratorLimits limits = {});

/// Symbolic check that the annihilator pair annihilates the ideal: every
/// vertex of H^⊥ and every breaking element over H^⊥ of a vertex of S^⊥
/// multiplies every generator to zero, on both sides.
bool verify_annihilation(const Graph& g, const AdmissiblePair& p, GeneratorLimits limits = {});

} // namespace lpa

#endif // LPA_TERMS_HPP
