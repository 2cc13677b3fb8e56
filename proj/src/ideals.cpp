#include "lpa/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

bool is_hereditary(const Graph& g, const VertexSet& v) {
    // Closure under single edges is enough.
    bool ok = true;
    v.for_each([&](VertexId u) {
        if (ok && !g.out_neighbors(u).is_subset_of(v)) ok = false;
    });
    return ok;
}

bool is_saturated(const Graph& g, const VertexSet& v) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (v.contains(u) || !g.is_regular(u)) continue;
        if (g.out_neighbors(u).is_subset_of(v)) return false;
    }
    return true;
}

VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& v) {
    if (v.universe() != g.vertex_count())
        throw std::invalid_argument("hereditary_saturated_closure: set universe mismatch");
    // Alternate tree closure and saturation to the least fixpoint; both steps
    // are forced, so the result is contained in every hereditary saturated
    // superset of v.
    VertexSet h = v;
    while (true) {
        bool changed = false;
        VertexSet closed = tree(g, h);
        if (closed != h) {
            h = std::move(closed);
            changed = true;
        }
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            if (!h.contains(u) && g.is_regular(u) && g.out_neighbors(u).is_subset_of(h)) {
                h.insert(u);
                changed = true;
            }
        }
        if (!changed) return h;
    }
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
    if (!is_hereditary(g, h) || !is_saturated(g, h))
        throw std::invalid_argument("breaking_vertices: set is not hereditary and saturated");
    VertexSet out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v) || !g.is_infinite_emitter(v)) continue;
        EdgeCount escaping;
        for (EdgeId e : g.out_classes(v))
            if (!h.contains(g.edge_class(e).range)) escaping.add(g.edge_class(e).multiplicity);
        if (!escaping.infinite && escaping.finite >= 1) out.insert(v);
    }
    return out;
}

void require_admissible(const Graph& g, const AdmissiblePair& p) {
    if (p.hereditary.universe() != g.vertex_count() ||
        p.breaking.universe() != g.vertex_count())
        throw std::invalid_argument("admissible pair: universe mismatch");
    if (!is_hereditary(g, p.hereditary))
        throw std::invalid_argument("admissible pair: H is not hereditary");
    if (!is_saturated(g, p.hereditary))
        throw std::invalid_argument("admissible pair: H is not saturated");
    if (!p.breaking.is_subset_of(breaking_vertices(g, p.hereditary)))
        throw std::invalid_argument("admissible pair: S is not a subset of B_H");
}

std::vector<AdmissiblePair> enumerate_pairs(const Graph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap || n > 63)
        throw std::runtime_error("enumerate_pairs: graph too large for exhaustive enumeration (" +
                                 std::to_string(n) + " vertices, cap " + std::to_string(cap) + ")");
    std::vector<AdmissiblePair> out;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        VertexSet h = VertexSet::from_mask(n, mask);
        if (!is_hereditary(g, h) || !is_saturated(g, h)) continue;
        VertexSet b = breaking_vertices(g, h);
        std::uint64_t bmask = b.mask();
        // Subsets of B_H in increasing mask order.
        std::vector<std::uint64_t> submasks;
        std::uint64_t s = bmask;
        while (true) {
            submasks.push_back(s);
            if (s == 0) break;
            s = (s - 1) & bmask;
        }
        std::reverse(submasks.begin(), submasks.end());
        for (std::uint64_t sm : submasks)
            out.push_back(AdmissiblePair{h, VertexSet::from_mask(n, sm)});
    }
    return out;
}

bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
    return a.hereditary.is_subset_of(b.hereditary) &&
           a.breaking.is_subset_of(set_union(b.hereditary, b.breaking));
}

PairPoset::PairPoset(const Graph& g, std::size_t cap) : pairs_(enumerate_pairs(g, cap)) {
    const std::size_t n = pairs_.size();
    leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            leq_[i * n + j] = pair_leq(pairs_[i], pairs_[j]);
    AdmissiblePair bottom{VertexSet(g.vertex_count()), VertexSet(g.vertex_count())};
    AdmissiblePair top{g.full_set(), VertexSet(g.vertex_count())};
    bottom_ = index_of(bottom);
    top_ = index_of(top);
}

std::size_t PairPoset::index_of(const AdmissiblePair& p) const {
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i] == p) return i;
    throw std::invalid_argument("PairPoset: pair is not admissible for this graph");
}

std::size_t PairPoset::unique_bound(std::size_t i, std::size_t j, bool lower) const {
    const std::size_t n = pairs_.size();
    auto below = [&](std::size_t a, std::size_t b) { return lower ? leq(a, b) : leq(b, a); };
    std::vector<std::size_t> bounds;
    for (std::size_t k = 0; k < n; ++k)
        if (below(k, i) && below(k, j)) bounds.push_back(k);
    // The greatest of the bounds, which must exist and be unique.
    std::vector<std::size_t> maximal;
    for (std::size_t k : bounds) {
        bool dominated = false;
        for (std::size_t m : bounds)
            if (m != k && below(k, m)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(k);
    }
    if (maximal.size() != 1)
        throw std::logic_error(
            "PairPoset: greatest lower / least upper bound missing or not unique "
            "(admissible pairs failed to form a lattice — implementation bug)");
    return maximal[0];
}

std::size_t PairPoset::meet(std::size_t i, std::size_t j) const {
    return unique_bound(i, j, /*lower=*/true);
}

std::size_t PairPoset::join(std::size_t i, std::size_t j) const {
    return unique_bound(i, j, /*lower=*/false);
}

AdmissiblePair pair_meet(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b,
                         std::size_t cap) {
    PairPoset poset(g, cap);
    return poset.pairs()[poset.meet(poset.index_of(a), poset.index_of(b))];
}

AdmissiblePair pair_join(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b,
                         std::size_t cap) {
    PairPoset poset(g, cap);
    return poset.pairs()[poset.join(poset.index_of(a), poset.index_of(b))];
}

std::string to_string(const Graph& g, const VertexSet& v) {
    std::string out = "{";
    bool first = true;
    v.for_each([&](VertexId u) {
        if (!first) out += ",";
        out += g.vertex_name(u);
        first = false;
    });
    out += "}";
    return out;
}

std::string to_string(const Graph& g, const AdmissiblePair& p) {
    return "(" + to_string(g, p.hereditary) + ", " + to_string(g, p.breaking) + ")";
}

} // namespace lpa
