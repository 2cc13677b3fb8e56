#ifndef LPA_GRAPH_IO_HPP
#define LPA_GRAPH_IO_HPP

#include <string>

#include "lpa/constructions.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideals.hpp"

namespace lpa {

/// Thrown on malformed graph files; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Graph file text: `vertex <id>` and `edge <id> <src> <dst> <mult>` lines,
/// `<mult>` a positive integer or `w` for ω, `#` comments (at line start or
/// after whitespace).
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string render_graph(const Graph& g);

/// Pair syntax on the command line: `H=v1,v2;S=v3`, either side may be
/// empty. Validates admissibility.
AdmissiblePair parse_pair(const Graph& g, const std::string& spec);
std::string render_pair(const Graph& g, const AdmissiblePair& p);

std::string graph_to_dot(const Graph& g);
std::string quotient_to_dot(const QuotientGraph& q);
std::string porcupine_to_dot(const PorcupineGraph& p);

} // namespace lpa

#endif // LPA_GRAPH_IO_HPP
