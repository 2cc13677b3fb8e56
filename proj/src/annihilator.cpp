#include "lpa/annihilator.hpp"

#include <stdexcept>

namespace lpa {

VertexSet annihilator_set(const Graph& g, const VertexSet& v) {
    // The complement of R(T(v)). For hereditary v this is E^0 − R(v); taking
    // the tree first keeps the result saturated for arbitrary inputs, and
    // saturation itself never changes the root, so this agrees with
    // E^0 − R(hereditary_saturated_closure(v)).
    return root(g, tree(g, v)).complement();
}

AdmissiblePair annihilator_pair(const Graph& g, const AdmissiblePair& p) {
    VertexSet h_bot = annihilator_set(g, p.hereditary);
    VertexSet s_bot = set_difference(breaking_vertices(g, h_bot), p.breaking);
    return {std::move(h_bot), std::move(s_bot)};
}

AdmissiblePair double_annihilator(const Graph& g, const AdmissiblePair& p) {
    return annihilator_pair(g, annihilator_pair(g, p));
}

ReflexivityVerdict is_reflexive(const Graph& g, const AdmissiblePair& p) {
    require_admissible(g, p);
    ReflexivityVerdict verdict;
    verdict.pair = p;

    verdict.via_closure = (double_annihilator(g, p) == p);

    VertexSet r_h = root(g, p.hereditary);
    VertexSet r_h_bot = root(g, annihilator_set(g, p.hereditary));
    VertexSet stray = set_difference(set_difference(r_h, p.hereditary), r_h_bot);
    VertexSet b_h = breaking_vertices(g, p.hereditary);
    verdict.via_condition3 = stray.empty() && p.breaking == b_h;

    if (verdict.via_closure != verdict.via_condition3)
        throw std::logic_error("is_reflexive: the two reflexivity criteria disagree on " +
                               to_string(g, p) + " (implementation bug)");
    verdict.reflexive = verdict.via_closure;

    if (!verdict.reflexive) {
        if (!stray.empty()) {
            verdict.violation = stray.to_vector().front();
        } else {
            VertexSet missing = set_difference(b_h, p.breaking);
            if (!missing.empty()) verdict.violation = missing.to_vector().front();
        }
    }
    return verdict;
}

VertexSet largest_hereditary_in_root(const Graph& g, const VertexSet& h,
                                     bool brute_force_verify) {
    if (!is_hereditary(g, h) || !is_saturated(g, h))
        throw std::invalid_argument("largest_hereditary_in_root: H not hereditary and saturated");
    VertexSet result = annihilator_set(g, annihilator_set(g, h));
    if (brute_force_verify) {
        // The hereditary subsets of R(H) are closed under union, so their
        // union is the unique maximum; compare against it.
        VertexSet r_h = root(g, h);
        std::vector<VertexId> members = r_h.to_vector();
        if (members.size() > 24)
            throw std::runtime_error("largest_hereditary_in_root: brute force too large");
        VertexSet best(g.vertex_count());
        const std::uint64_t limit = std::uint64_t{1} << members.size();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            VertexSet candidate(g.vertex_count());
            for (std::size_t i = 0; i < members.size(); ++i)
                if ((mask >> i) & 1) candidate.insert(members[i]);
            if (is_hereditary(g, candidate)) best.unite(candidate);
        }
        if (best != result)
            throw std::logic_error(
                "largest_hereditary_in_root: H^⊥⊥ differs from the brute-force maximum "
                "hereditary subset of R(H)");
    }
    return result;
}

std::pair<bool, std::optional<AdmissiblePair>> all_pairs_reflexive(const Graph& g,
                                                                   std::size_t cap) {
    for (const auto& p : enumerate_pairs(g, cap))
        if (!is_reflexive(g, p).reflexive) return {false, p};
    return {true, std::nullopt};
}

bool validate_complement_breaking_vertex(const Graph& g, const VertexSet& h, VertexId v) {
    VertexSet h_bot = annihilator_set(g, h);
    if (!breaking_vertices(g, h_bot).contains(v))
        throw std::invalid_argument("validate_complement_breaking_vertex: vertex is not in "
                                    "B_{H^⊥}");
    VertexSet r_h = root(g, h);
    if (!r_h.contains(v) || h.contains(v)) return false;

    // The defining edge set of the breaking element over H^⊥ must be exactly
    // the edges from v into R(H), and of finite nonzero total multiplicity.
    EdgeCount into_root;
    for (EdgeId e : g.out_classes(v)) {
        VertexId w = g.edge_class(e).range;
        bool escapes_h_bot = !h_bot.contains(w);
        bool lands_in_root = r_h.contains(w);
        if (escapes_h_bot != lands_in_root) return false;
        if (lands_in_root) into_root.add(g.edge_class(e).multiplicity);
    }
    return !into_root.infinite && into_root.finite >= 1;
}

} // namespace lpa
