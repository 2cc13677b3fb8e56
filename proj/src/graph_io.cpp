#include "lpa/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lpa {

namespace {

// Strips a comment: `#` at the start of the line or after whitespace (ids
// may contain `#`, e.g. instance-derived hair names).
std::string strip_comment(const std::string& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t'))
            return line.substr(0, i);
    }
    return line;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (in >> field) fields.push_back(field);
    return fields;
}

Multiplicity parse_multiplicity(const std::string& token, std::size_t line_no) {
    if (token == "w") return Multiplicity::omega();
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(line_no, "multiplicity must be a positive integer or 'w', got '" +
                                          token + "'");
    errno = 0;
    unsigned long long value = std::strtoull(token.c_str(), nullptr, 10);
    if (errno != 0 || value == 0)
        throw ParseError(line_no, "multiplicity must be at least 1, got '" + token + "'");
    return Multiplicity::finite(value);
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<EdgeClassSpec> classes;
    std::set<std::string> vertex_ids, edge_ids;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto fields = split_fields(strip_comment(raw));
        if (fields.empty()) continue;
        if (fields[0] == "vertex") {
            if (fields.size() != 2)
                throw ParseError(line_no, "expected: vertex <id>");
            if (!vertex_ids.insert(fields[1]).second)
                throw ParseError(line_no, "duplicate vertex id '" + fields[1] + "'");
            vertices.push_back(fields[1]);
        } else if (fields[0] == "edge") {
            if (fields.size() != 5)
                throw ParseError(line_no, "expected: edge <id> <src> <dst> <mult>");
            if (!edge_ids.insert(fields[1]).second)
                throw ParseError(line_no, "duplicate edge id '" + fields[1] + "'");
            if (!vertex_ids.count(fields[2]))
                throw ParseError(line_no, "unknown source vertex '" + fields[2] + "'");
            if (!vertex_ids.count(fields[3]))
                throw ParseError(line_no, "unknown range vertex '" + fields[3] + "'");
            classes.push_back(
                {fields[1], fields[2], fields[3], parse_multiplicity(fields[4], line_no)});
        } else {
            throw ParseError(line_no, "unknown directive '" + fields[0] + "'");
        }
    }
    return Graph(std::move(vertices), classes);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string render_graph(const Graph& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "vertex " << g.vertex_name(v) << "\n";
    for (const auto& cls : g.edge_classes())
        out << "edge " << cls.id << " " << g.vertex_name(cls.source) << " "
            << g.vertex_name(cls.range) << " " << cls.multiplicity.to_string() << "\n";
    return out.str();
}

AdmissiblePair parse_pair(const Graph& g, const std::string& spec) {
    std::string h_part, s_part;
    std::size_t semi = spec.find(';');
    h_part = spec.substr(0, semi);
    if (semi != std::string::npos) s_part = spec.substr(semi + 1);

    auto parse_side = [&](const std::string& side, const std::string& tag) -> VertexSet {
        VertexSet out(g.vertex_count());
        std::string body = side;
        if (body.rfind(tag + "=", 0) != 0)
            throw std::invalid_argument("pair syntax: expected '" + tag + "=...', got '" + side +
                                        "'");
        body = body.substr(tag.size() + 1);
        std::istringstream in(body);
        std::string name;
        while (std::getline(in, name, ',')) {
            if (name.empty()) continue;
            auto v = g.find_vertex(name);
            if (!v) throw std::invalid_argument("pair syntax: unknown vertex '" + name + "'");
            out.insert(*v);
        }
        return out;
    };

    AdmissiblePair p{parse_side(h_part, "H"),
                     s_part.empty() ? VertexSet(g.vertex_count()) : parse_side(s_part, "S")};
    require_admissible(g, p);
    return p;
}

std::string render_pair(const Graph& g, const AdmissiblePair& p) {
    auto side = [&](const VertexSet& set) {
        std::string out;
        set.for_each([&](VertexId v) {
            if (!out.empty()) out += ",";
            out += g.vertex_name(v);
        });
        return out;
    };
    return "H=" + side(p.hereditary) + ";S=" + side(p.breaking);
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string dot_body(const Graph& g, const std::set<VertexId>& accented,
                     const char* accent_shape) {
    std::ostringstream out;
    out << "digraph E {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  \"" << dot_escape(g.vertex_name(v)) << "\"";
        if (accented.count(v)) out << " [shape=" << accent_shape << "]";
        out << ";\n";
    }
    for (const auto& cls : g.edge_classes()) {
        out << "  \"" << dot_escape(g.vertex_name(cls.source)) << "\" -> \""
            << dot_escape(g.vertex_name(cls.range)) << "\" [label=\"" << dot_escape(cls.id);
        if (cls.multiplicity.is_omega())
            out << " (x\xCF\x89)\"][style=bold][penwidth=2";
        else if (cls.multiplicity.value() > 1)
            out << " (x" << cls.multiplicity.value() << ")\"";
        else
            out << "\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string graph_to_dot(const Graph& g) { return dot_body(g, {}, "box"); }

std::string quotient_to_dot(const QuotientGraph& q) {
    std::set<VertexId> primed;
    for (const auto& [old_id, new_id] : q.primed_vertices) primed.insert(new_id);
    return dot_body(q.graph, primed, "diamond");
}

std::string porcupine_to_dot(const PorcupineGraph& p) {
    std::set<VertexId> hairs;
    for (const auto& [path, id] : p.hair_vertices) hairs.insert(id);
    return dot_body(p.graph, hairs, "circle");
}

} // namespace lpa
