#include "lpa/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lpa/annihilator.hpp"
#include "lpa/cycles.hpp"

namespace lpa {

namespace {

// Parallel-instance expansion for ω classes in truncated previews; finite
// porcupines never reach it.
constexpr std::uint32_t kOmegaPreviewInstances = 3;
constexpr std::size_t kHairBudget = 2'000'000;

std::string fresh_name(std::set<std::string>& taken, std::string base) {
    std::string name = base;
    for (unsigned k = 1; !taken.insert(name).second; ++k)
        name = base + "_" + std::to_string(k);
    return name;
}

} // namespace

QuotientGraph quotient(const Graph& g, const AdmissiblePair& p) {
    require_admissible(g, p);
    const VertexSet& h = p.hereditary;
    VertexSet primed_targets = set_difference(breaking_vertices(g, h), p.breaking);

    std::set<std::string> taken;
    std::vector<std::string> names;
    std::map<VertexId, VertexId> kept, primed;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v)) continue;
        kept[v] = static_cast<VertexId>(names.size());
        names.push_back(g.vertex_name(v));
        taken.insert(g.vertex_name(v));
    }
    std::vector<std::string> primed_names(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!primed_targets.contains(v)) continue;
        primed[v] = static_cast<VertexId>(names.size());
        primed_names[v] = fresh_name(taken, g.vertex_name(v) + "'");
        names.push_back(primed_names[v]);
    }

    std::vector<EdgeClassSpec> classes;
    std::map<EdgeId, EdgeId> primed_edges;
    std::set<std::string> taken_edges;
    for (EdgeId e = 0; e < g.class_count(); ++e) {
        const auto& cls = g.edge_class(e);
        if (h.contains(cls.range)) continue;
        classes.push_back({cls.id, g.vertex_name(cls.source), g.vertex_name(cls.range),
                           cls.multiplicity});
        taken_edges.insert(cls.id);
    }
    for (EdgeId e = 0; e < g.class_count(); ++e) {
        const auto& cls = g.edge_class(e);
        if (!primed_targets.contains(cls.range)) continue;
        primed_edges[e] = static_cast<EdgeId>(classes.size());
        classes.push_back({fresh_name(taken_edges, cls.id + "'"),
                           g.vertex_name(cls.source), primed_names[cls.range],
                           cls.multiplicity});
    }

    QuotientGraph out{Graph(std::move(names), classes), std::move(primed),
                      std::move(primed_edges), std::move(kept)};
    return out;
}

bool porcupine_is_finite(const Graph& g, const AdmissiblePair& p) {
    require_admissible(g, p);
    const VertexSet& h = p.hereditary;
    const VertexSet& s = p.breaking;
    VertexSet base = set_union(h, s);
    VertexSet reaches_base = root(g, base);

    // A cycle vertex outside H that reaches H ∪ S pumps unboundedly long
    // qualifying paths.
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.on_cycle(v) && !h.contains(v) && reaches_base.contains(v)) return false;

    // An ω class whose instances can sit inside a qualifying path adds
    // infinitely many parallel ones.
    for (EdgeId e = 0; e < g.class_count(); ++e) {
        const auto& cls = g.edge_class(e);
        if (!cls.multiplicity.is_omega() || h.contains(cls.source)) continue;
        if (s.contains(cls.range)) return false;
        if (h.contains(cls.range) && !s.contains(cls.source)) return false;
        if (reaches_base.contains(cls.range) && !base.contains(cls.range)) return false;
    }
    return true;
}

PorcupineGraph porcupine(const Graph& g, const AdmissiblePair& p,
                         std::optional<std::uint32_t> depth) {
    require_admissible(g, p);
    const VertexSet& h = p.hereditary;
    const VertexSet& s = p.breaking;

    PorcupineGraph out;
    out.finite = porcupine_is_finite(g, p);
    if (!out.finite) {
        if (!depth)
            throw std::invalid_argument(
                "porcupine: the porcupine graph is infinite; a truncation depth is required");
        out.truncated_at = *depth;
    }

    auto instances_of = [&](EdgeId e) -> std::uint32_t {
        const auto& m = g.edge_class(e).multiplicity;
        if (!m.is_omega()) return static_cast<std::uint32_t>(m.value());
        return kOmegaPreviewInstances; // truncated previews only
    };

    // Hair paths layer by layer; paths grow by prepending, since suffixes of
    // qualifying paths qualify.
    std::uint32_t max_len = out.finite ? UINT32_MAX : *depth;
    std::vector<std::vector<Path>> layers;
    std::vector<Path> first;
    if (max_len >= 1) {
        for (EdgeId e = 0; e < g.class_count(); ++e) {
            const auto& cls = g.edge_class(e);
            bool f1 =
                h.contains(cls.range) && !h.contains(cls.source) && !s.contains(cls.source);
            bool f2 = s.contains(cls.range);
            if (!f1 && !f2) continue;
            for (std::uint32_t i = 1; i <= instances_of(e); ++i)
                first.push_back(Path::edges(g, {{e, i}}));
        }
    }
    std::sort(first.begin(), first.end());
    std::size_t hair_total = first.size();
    if (!first.empty()) layers.push_back(std::move(first));
    while (!layers.empty() && layers.size() < max_len) {
        const auto& prev = layers.back();
        std::vector<Path> next;
        for (const Path& q : prev) {
            for (EdgeId e : g.in_classes(q.source())) {
                if (h.contains(g.edge_class(e).source)) continue;
                for (std::uint32_t i = 1; i <= instances_of(e); ++i) {
                    std::vector<EdgeInstance> steps;
                    steps.reserve(q.length() + 1);
                    steps.push_back({e, i});
                    steps.insert(steps.end(), q.steps().begin(), q.steps().end());
                    next.push_back(Path::edges(g, std::move(steps)));
                }
            }
        }
        if (next.empty()) break;
        hair_total += next.size();
        if (hair_total > kHairBudget)
            throw std::runtime_error("porcupine: hair budget exceeded");
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(next));
    }

    // Assemble the graph: base vertices first, then hairs by layer.
    std::set<std::string> taken;
    std::vector<std::string> names;
    VertexSet base = set_union(h, s);
    base.for_each([&](VertexId v) {
        out.base_vertices[v] = static_cast<VertexId>(names.size());
        names.push_back(g.vertex_name(v));
        taken.insert(g.vertex_name(v));
    });
    std::map<Path, std::string> hair_names;
    for (const auto& layer : layers) {
        for (const Path& path : layer) {
            VertexId id = static_cast<VertexId>(names.size());
            std::string name = fresh_name(taken, "w[" + path.to_string(g) + "]");
            names.push_back(name);
            hair_names[path] = name;
            out.hair_vertices[path] = id;
        }
    }

    std::vector<EdgeClassSpec> classes;
    std::set<std::string> taken_edges;
    for (EdgeId e = 0; e < g.class_count(); ++e) {
        const auto& cls = g.edge_class(e);
        bool inside = h.contains(cls.source);
        bool from_s = s.contains(cls.source) && h.contains(cls.range);
        if (!inside && !from_s) continue;
        classes.push_back({cls.id, g.vertex_name(cls.source), g.vertex_name(cls.range),
                           cls.multiplicity});
        taken_edges.insert(cls.id);
    }
    for (const auto& layer : layers) {
        for (const Path& path : layer) {
            std::string target = path.length() == 1 ? g.vertex_name(path.range())
                                                    : hair_names.at(path.suffix(g));
            EdgeId id = static_cast<EdgeId>(classes.size());
            classes.push_back({fresh_name(taken_edges, "f[" + path.to_string(g) + "]"),
                               hair_names.at(path), target, Multiplicity::finite(1)});
            out.hair_edges[path] = id;
        }
    }

    out.graph = Graph(std::move(names), classes);
    return out;
}

bool condition_L_preserved(const Graph& g, const AdmissiblePair& p) {
    if (!condition_L(g))
        throw std::invalid_argument("condition_L_preserved: the graph fails Condition (L)");
    if (!is_reflexive(g, p).reflexive)
        throw std::invalid_argument("condition_L_preserved: the pair is not reflexive");
    return condition_L(quotient(g, p).graph);
}

namespace {

void require_classifiable(const PorcupineGraph& p) {
    if (!p.finite)
        throw std::invalid_argument(
            "porcupine: a truncated porcupine is a preview and cannot be classified");
}

} // namespace

bool is_all_reflexive(const PorcupineGraph& p) {
    require_classifiable(p);
    return is_all_reflexive(p.graph);
}

bool is_strongly_all_reflexive(const PorcupineGraph& p) {
    require_classifiable(p);
    return is_strongly_all_reflexive(p.graph);
}

} // namespace lpa
