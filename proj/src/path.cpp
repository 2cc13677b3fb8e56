#include "lpa/path.hpp"

#include <stdexcept>

namespace lpa {

void validate_instance(const Graph& g, EdgeInstance inst) {
    if (inst.cls >= g.class_count())
        throw std::invalid_argument("edge instance references an unknown class");
    if (inst.index == 0)
        throw std::invalid_argument("edge instance indices are 1-based");
    const auto& m = g.edge_class(inst.cls).multiplicity;
    if (!m.is_omega() && inst.index > m.value())
        throw std::invalid_argument("edge instance index exceeds the class multiplicity");
}

Path Path::vertex(const Graph& g, VertexId v) {
    if (v >= g.vertex_count()) throw std::invalid_argument("Path: unknown vertex");
    Path p;
    p.source_ = v;
    p.range_ = v;
    return p;
}

Path Path::edges(const Graph& g, std::vector<EdgeInstance> steps) {
    if (steps.empty()) throw std::invalid_argument("Path::edges: no edges given");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        validate_instance(g, steps[i]);
        if (i > 0 &&
            g.edge_class(steps[i - 1].cls).range != g.edge_class(steps[i].cls).source)
            throw std::invalid_argument("Path: consecutive edges do not compose");
    }
    Path p;
    p.source_ = g.edge_class(steps.front().cls).source;
    p.range_ = g.edge_class(steps.back().cls).range;
    p.steps_ = std::move(steps);
    return p;
}

Path Path::extended(const Graph& g, EdgeInstance step) const {
    validate_instance(g, step);
    if (g.edge_class(step.cls).source != range_)
        throw std::invalid_argument("Path::extended: edge does not start at the path range");
    Path p = *this;
    p.steps_.push_back(step);
    p.range_ = g.edge_class(step.cls).range;
    return p;
}

Path Path::suffix(const Graph& g) const {
    if (steps_.empty()) throw std::logic_error("Path::suffix: path has length 0");
    if (steps_.size() == 1) return vertex(g, range_);
    return edges(g, std::vector<EdgeInstance>(steps_.begin() + 1, steps_.end()));
}

Path Path::shortened(const Graph& g) const {
    if (steps_.empty()) throw std::logic_error("Path::shortened: path has length 0");
    if (steps_.size() == 1) return vertex(g, source_);
    return edges(g, std::vector<EdgeInstance>(steps_.begin(), steps_.end() - 1));
}

std::string instance_to_string(const Graph& g, EdgeInstance inst) {
    std::string out = g.edge_class(inst.cls).id;
    if (inst.index != 1) out += "#" + std::to_string(inst.index);
    return out;
}

std::string Path::to_string(const Graph& g) const {
    if (steps_.empty()) return g.vertex_name(source_);
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) out += ".";
        out += instance_to_string(g, steps_[i]);
    }
    return out;
}

} // namespace lpa
