#include "lpa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lpa {

namespace {

// Ids must survive the whitespace-separated file format, where '#' after
// whitespace opens a comment.
void validate_id(const std::string& id, const char* what) {
    if (id.empty()) throw std::invalid_argument(std::string("Graph: empty ") + what + " id");
    if (id.front() == '#')
        throw std::invalid_argument(std::string("Graph: ") + what + " id '" + id +
                                    "' may not start with '#'");
    for (char c : id)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("Graph: ") + what + " id '" + id +
                                        "' may not contain whitespace");
}

} // namespace

Graph::Graph(std::vector<std::string> vertex_names, const std::vector<EdgeClassSpec>& classes)
    : vertex_names_(std::move(vertex_names)) {
    vertex_index_.reserve(vertex_names_.size());
    for (VertexId v = 0; v < vertex_names_.size(); ++v) {
        validate_id(vertex_names_[v], "vertex");
        if (!vertex_index_.emplace(vertex_names_[v], v).second)
            throw std::invalid_argument("Graph: duplicate vertex id '" + vertex_names_[v] + "'");
    }

    out_classes_.resize(vertex_count());
    in_classes_.resize(vertex_count());
    out_adj_.assign(vertex_count(), VertexSet(vertex_count()));
    in_adj_.assign(vertex_count(), VertexSet(vertex_count()));

    classes_.reserve(classes.size());
    for (const auto& spec : classes) {
        validate_id(spec.id, "edge");
        auto src = find_vertex(spec.source);
        auto dst = find_vertex(spec.range);
        if (!src)
            throw std::invalid_argument("Graph: edge '" + spec.id + "' has unknown source '" +
                                        spec.source + "'");
        if (!dst)
            throw std::invalid_argument("Graph: edge '" + spec.id + "' has unknown range '" +
                                        spec.range + "'");
        EdgeId e = static_cast<EdgeId>(classes_.size());
        if (!class_index_.emplace(spec.id, e).second)
            throw std::invalid_argument("Graph: duplicate edge id '" + spec.id + "'");
        classes_.push_back(EdgeClass{spec.id, *src, *dst, spec.multiplicity});
        out_classes_[*src].push_back(e);
        in_classes_[*dst].push_back(e);
        out_adj_[*src].insert(*dst);
        in_adj_[*dst].insert(*src);
    }

    compute_sccs();
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::vertex(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw std::invalid_argument("Graph: unknown vertex id '" + name + "'");
    return *v;
}

std::optional<EdgeId> Graph::find_class(const std::string& id) const {
    auto it = class_index_.find(id);
    if (it == class_index_.end()) return std::nullopt;
    return it->second;
}

VertexKind Graph::kind(VertexId v) const {
    const auto& outs = out_classes_.at(v);
    if (outs.empty()) return VertexKind::Sink;
    for (EdgeId e : outs)
        if (classes_[e].multiplicity.is_omega()) return VertexKind::InfiniteEmitter;
    return VertexKind::Regular;
}

bool Graph::is_row_finite() const {
    for (const auto& c : classes_)
        if (c.multiplicity.is_omega()) return false;
    return true;
}

EdgeCount Graph::out_degree(VertexId v) const {
    EdgeCount n;
    for (EdgeId e : out_classes_.at(v)) n.add(classes_[e].multiplicity);
    return n;
}

VertexSet Graph::singleton(VertexId v) const {
    VertexSet s(vertex_count());
    s.insert(v);
    return s;
}

VertexSet Graph::set_of(std::initializer_list<const char*> names) const {
    VertexSet s(vertex_count());
    for (const char* name : names) s.insert(vertex(name));
    return s;
}

bool Graph::operator==(const Graph& other) const {
    if (vertex_names_ != other.vertex_names_) return false;
    if (classes_.size() != other.classes_.size()) return false;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        const auto& a = classes_[i];
        const auto& b = other.classes_[i];
        if (a.id != b.id || a.source != b.source || a.range != b.range ||
            a.multiplicity != b.multiplicity)
            return false;
    }
    return true;
}

// Iterative Tarjan; recursion depth on porcupine graphs can be large.
void Graph::compute_sccs() {
    const std::size_t n = vertex_count();
    scc_id_.assign(n, 0);
    std::vector<std::uint32_t> index(n, UINT32_MAX), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::uint32_t next_index = 0, next_scc = 0;

    struct Frame {
        VertexId v;
        std::size_t child;
    };
    std::vector<Frame> call;

    for (VertexId start = 0; start < n; ++start) {
        if (index[start] != UINT32_MAX) continue;
        call.push_back({start, 0});
        while (!call.empty()) {
            auto& fr = call.back();
            VertexId v = fr.v;
            if (fr.child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            const auto& outs = out_classes_[v];
            while (fr.child < outs.size()) {
                VertexId w = classes_[outs[fr.child]].range;
                ++fr.child;
                if (index[w] == UINT32_MAX) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                std::size_t size = 0;
                while (true) {
                    VertexId w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    scc_id_[w] = next_scc;
                    ++size;
                    if (w == v) break;
                }
                scc_cyclic_.push_back(size > 1);
                ++next_scc;
            }
            call.pop_back();
            if (!call.empty()) {
                VertexId parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    // Singleton components are cyclic exactly when a self-loop class exists.
    for (const auto& c : classes_)
        if (c.source == c.range) scc_cyclic_[scc_id_[c.source]] = true;
}

namespace {

template <typename Adjacency>
VertexSet closure(const Graph& g, const VertexSet& start, Adjacency&& adjacency) {
    if (start.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set does not belong to this graph");
    VertexSet seen = start;
    VertexSet frontier = start;
    while (!frontier.empty()) {
        VertexSet next(g.vertex_count());
        frontier.for_each([&](VertexId v) { next.unite(adjacency(v)); });
        next.subtract(seen);
        seen.unite(next);
        frontier = std::move(next);
    }
    return seen;
}

} // namespace

VertexSet tree(const Graph& g, const VertexSet& v) {
    return closure(g, v, [&](VertexId u) -> const VertexSet& { return g.out_neighbors(u); });
}

VertexSet root(const Graph& g, const VertexSet& v) {
    return closure(g, v, [&](VertexId u) -> const VertexSet& { return g.in_neighbors(u); });
}

VertexSet tree_within(const Graph& g, const VertexSet& start, const VertexSet& allowed) {
    VertexSet seen = set_intersection(start, allowed);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(g.vertex_count());
        frontier.for_each([&](VertexId v) { next.unite(g.out_neighbors(v)); });
        next.intersect(allowed);
        next.subtract(seen);
        seen.unite(next);
        frontier = std::move(next);
    }
    return seen;
}

bool contains_cycle_within(const Graph& g, const VertexSet& vertices) {
    // Peel vertices with no successor inside the set; a nonempty residue
    // contains a cycle (finitely many vertices force infinite paths onto
    // cycles).
    std::vector<VertexId> members = vertices.to_vector();
    std::vector<std::uint32_t> succ(g.vertex_count(), 0);
    std::vector<VertexId> queue;
    for (VertexId v : members) {
        std::uint32_t c = 0;
        for (EdgeId e : g.out_classes(v))
            if (vertices.contains(g.edge_class(e).range)) ++c;
        succ[v] = c;
        if (c == 0) queue.push_back(v);
    }
    VertexSet residue = vertices;
    std::size_t removed = 0;
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        residue.erase(v);
        ++removed;
        for (EdgeId e : g.in_classes(v)) {
            VertexId u = g.edge_class(e).source;
            if (residue.contains(u) && --succ[u] == 0) queue.push_back(u);
        }
    }
    return removed < members.size();
}

bool reaches_cycle_within(const Graph& g, VertexId start, const VertexSet& allowed) {
    if (!allowed.contains(start)) return false;
    return contains_cycle_within(g, tree_within(g, g.singleton(start), allowed));
}

} // namespace lpa
