// Command-line front end: classification, pair/lattice reports, quotient and
// porcupine construction, cross-check verification, element evaluation,
// witness replay, and random graph generation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lpa/annihilator.hpp"
#include "lpa/constructions.hpp"
#include "lpa/cycles.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/lattice.hpp"
#include "lpa/random_graph.hpp"
#include "lpa/report.hpp"
#include "lpa/term_parser.hpp"
#include "lpa/terms.hpp"
#include "lpa/verify.hpp"

namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

// Stdout gets the human rendering (or JSON under --json); --out always
// receives the JSON document.
void emit(const json& report, const std::string& human, bool as_json,
          const std::string& out_path) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
    if (!out_path.empty()) write_file(out_path, report.dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded-ideal structure of Leavitt path algebras and graph C*-algebras"};
    app.require_subcommand(1);

    std::string file, out_path, pair_spec, expr, hasse_path, dot_path, level = "full";
    std::string cycle_csv, emitter, omega_id, triple_spec;
    bool as_json = false;
    std::size_t cap = lpa::kDefaultEnumerationCap;
    std::uint32_t maxlen = 2;
    std::optional<std::uint32_t> depth;
    lpa::RandomGraphParams random_params;

    auto add_common = [&](CLI::App* cmd, bool with_cap = true) {
        cmd->add_option("file", file, "graph file")->required();
        cmd->add_flag("--json", as_json, "print the JSON report instead of text");
        cmd->add_option("--out", out_path, "write the JSON report to a file");
        if (with_cap) cmd->add_option("--cap", cap, "pair-enumeration vertex cap");
    };

    auto* classify = app.add_subcommand("classify", "cycles, conditions, reflexivity flags");
    add_common(classify, false);

    auto* pairs = app.add_subcommand("pairs", "admissible pairs with annihilators");
    add_common(pairs);

    auto* lattice = app.add_subcommand("lattice", "pair lattice and Boolean verdict");
    add_common(lattice);
    lattice->add_option("--hasse", hasse_path, "write the Hasse diagram as DOT");

    auto* quotient_cmd = app.add_subcommand("quotient", "quotient graph by a pair");
    add_common(quotient_cmd, false);
    quotient_cmd->add_option("--pair", pair_spec, "admissible pair, e.g. H=v1,v2;S=v3")
        ->required();
    quotient_cmd->add_option("--dot", dot_path, "write the construction as DOT");

    auto* porcupine_cmd = app.add_subcommand("porcupine", "porcupine graph of a pair");
    add_common(porcupine_cmd, false);
    porcupine_cmd->add_option("--pair", pair_spec, "admissible pair, e.g. H=v1,v2;S=v3")
        ->required();
    porcupine_cmd->add_option("--depth", depth, "truncation depth for infinite porcupines");
    porcupine_cmd->add_option("--dot", dot_path, "write the construction as DOT");

    auto* verify = app.add_subcommand("verify", "run every cross-check oracle");
    add_common(verify);
    verify->add_option("--level", level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--maxlen", maxlen, "generator path length for symbolic checks");
    std::uint32_t omega_cap = 3;
    verify->add_option("--omega-cap", omega_cap,
                       "instances exposed per ω class in symbolic checks");

    auto* random_cmd = app.add_subcommand("random", "generate a random graph file");
    random_cmd->add_option("--vertices", random_params.vertices, "vertex count");
    random_cmd->add_option("--density", random_params.density, "edge probability per pair");
    random_cmd->add_option("--omega-prob", random_params.omega_prob, "ω probability per class");
    random_cmd->add_option("--seed", random_params.seed, "PRNG seed");
    random_cmd->add_option("--out", out_path, "write the graph file here");

    auto* eval = app.add_subcommand("eval", "normal form of an element");
    add_common(eval, false);
    eval->add_option("--expr", expr, "element expression, e.g. 'v f (u + e)'")->required();

    auto* witness = app.add_subcommand("witness", "replay a reported witness");
    add_common(witness, false);
    witness->add_option("--cycle", cycle_csv, "comma-separated cycle edge ids");
    witness->add_option("--emitter", emitter, "infinite emitter expected off every cycle");
    witness->add_option("--omega", omega_id, "ω class with an escaping infinite path");
    witness->add_option("--pair", pair_spec, "pair expected non-reflexive");
    witness->add_option("--triple", triple_spec, "three pairs 'P1|P2|P3' failing distributivity");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) {
            lpa::Graph g = lpa::load_graph_file(file);
            json report = lpa::classify_report(g);
            emit(report, lpa::human_classify(report), as_json, out_path);
            return 0;
        }
        if (pairs->parsed()) {
            lpa::Graph g = lpa::load_graph_file(file);
            json report = lpa::pairs_report(g, cap);
            emit(report, lpa::human_pairs(report), as_json, out_path);
            return 0;
        }
        if (lattice->parsed()) {
            lpa::Graph g = lpa::load_graph_file(file);
            json report = lpa::lattice_report(g, cap);
            if (!hasse_path.empty()) write_file(hasse_path, lpa::lattice_hasse_dot(g, cap));
            emit(report, lpa::human_lattice(report), as_json, out_path);
            return 0;
        }
        if (quotient_cmd->parsed()) {
            lpa::Graph g = lpa::load_graph_file(file);
            lpa::AdmissiblePair p = lpa::parse_pair(g, pair_spec);
            lpa::QuotientGraph q = lpa::quotient(g, p);
            std::cout << lpa::render_graph(q.graph);
            if (!dot_path.empty()) write_file(dot_path, lpa::quotient_to_dot(q));
            if (!out_path.empty()) write_file(out_path, lpa::render_graph(q.graph));
            return 0;
        }
        if (porcupine_cmd->parsed()) {
            lpa::Graph g = lpa::load_graph_file(file);
            lpa::AdmissiblePair p = lpa::parse_pair(g, pair_spec);
            lpa::PorcupineGraph pg = lpa::porcupine(g, p, depth);
            if (!pg.finite)
                std::cout << "# truncated preview: porcupine is infinite, depth "
                          << *pg.truncated_at << "; not classifiable\n";
            std::cout << lpa::render_graph(pg.graph);
            if (!dot_path.empty()) write_file(dot_path, lpa::porcupine_to_dot(pg));
            if (!out_path.empty()) write_file(out_path, lpa::render_graph(pg.graph));
            return 0;
        }
        if (verify->parsed()) {
            lpa::Graph g = lpa::load_graph_file(file);
            lpa::VerifyOptions opts;
            opts.cap = cap;
            opts.limits.max_len = level == "fast" ? std::min<std::uint32_t>(maxlen, 1) : maxlen;
            opts.limits.omega_instance_cap = omega_cap;
            json report = lpa::verify_report(g, opts, level.c_str());
            emit(report, lpa::human_verify(report), as_json, out_path);
            return report["all_passed"].get<bool>() ? 0 : 1;
        }
        if (random_cmd->parsed()) {
            lpa::Graph g = lpa::random_graph(random_params);
            std::string text = lpa::render_graph(g);
            std::cout << text;
            if (!out_path.empty()) write_file(out_path, text);
            return 0;
        }
        if (eval->parsed()) {
            lpa::Graph g = lpa::load_graph_file(file);
            lpa::LinearCombination value = lpa::parse_element(g, expr);
            lpa::LinearCombination nf = lpa::normal_form(value);
            if (as_json) {
                json report;
                report["tool"] = "lpa";
                report["format_version"] = lpa::kReportFormatVersion;
                report["command"] = "eval";
                report["input"] = expr;
                report["product_form"] = value.to_string();
                report["normal_form"] = nf.to_string();
                report["is_zero"] = nf.is_zero();
                std::cout << report.dump(2) << "\n";
                if (!out_path.empty()) write_file(out_path, report.dump(2) + "\n");
            } else {
                std::cout << nf.to_string() << "\n";
            }
            return 0;
        }
        if (witness->parsed()) {
            lpa::Graph g = lpa::load_graph_file(file);
            bool confirmed = false;
            if (!cycle_csv.empty()) {
                // Re-derive the classification of the cycle with these edges.
                std::vector<std::string> ids;
                std::string token;
                std::istringstream in(cycle_csv);
                while (std::getline(in, token, ',')) ids.push_back(token);
                for (const auto& c : lpa::enumerate_cycles(g)) {
                    if (c.edges.size() != ids.size()) continue;
                    bool same = true;
                    std::size_t offset = 0;
                    for (; offset < c.edges.size(); ++offset)
                        if (g.edge_class(c.edges[offset]).id == ids[0]) break;
                    if (offset == c.edges.size()) continue;
                    for (std::size_t i = 0; i < ids.size(); ++i)
                        if (g.edge_class(c.edges[(offset + i) % c.edges.size()]).id != ids[i])
                            same = false;
                    if (!same) continue;
                    std::cout << "cycle [" << cycle_csv << "] is "
                              << lpa::to_string(c.classification) << "\n";
                    confirmed = c.classification == lpa::CycleClass::Neither;
                }
            } else if (!emitter.empty()) {
                lpa::VertexId v = g.vertex(emitter);
                confirmed = g.is_infinite_emitter(v) && !g.on_cycle(v);
                std::cout << emitter << (confirmed ? " is" : " is not")
                          << " an infinite emitter off every cycle\n";
            } else if (!omega_id.empty()) {
                auto e = g.find_class(omega_id);
                if (!e) throw std::runtime_error("unknown edge class '" + omega_id + "'");
                const auto& cls = g.edge_class(*e);
                lpa::VertexSet avoided = lpa::tree(g, g.singleton(cls.range));
                confirmed = cls.multiplicity.is_omega() && !avoided.contains(cls.source) &&
                            lpa::reaches_cycle_within(g, cls.source, avoided.complement());
                std::cout << "class " << omega_id
                          << (confirmed ? " admits" : " does not admit")
                          << " an escaping infinite path\n";
            } else if (!triple_spec.empty()) {
                std::vector<lpa::AdmissiblePair> triple;
                std::string part;
                std::istringstream in(triple_spec);
                while (std::getline(in, part, '|')) triple.push_back(lpa::parse_pair(g, part));
                if (triple.size() != 3) throw std::runtime_error("expected three pairs");
                lpa::PairLattice lat = lpa::build_lattice(g, cap);
                std::size_t a = lat.index_of(triple[0]), b = lat.index_of(triple[1]),
                            c = lat.index_of(triple[2]);
                confirmed = lat.meet_of(a, lat.join_of(b, c)) !=
                            lat.join_of(lat.meet_of(a, b), lat.meet_of(a, c));
                std::cout << "distributivity " << (confirmed ? "fails" : "holds")
                          << " on the triple\n";
            } else if (!pair_spec.empty()) {
                lpa::AdmissiblePair p = lpa::parse_pair(g, pair_spec);
                auto verdict = lpa::is_reflexive(g, p);
                confirmed = !verdict.reflexive;
                std::cout << lpa::render_pair(g, p) << " is "
                          << (verdict.reflexive ? "reflexive" : "not reflexive");
                if (verdict.violation)
                    std::cout << " (violation at " << g.vertex_name(*verdict.violation) << ")";
                std::cout << "\n";
            } else {
                throw std::runtime_error("witness: choose one of --cycle/--emitter/--omega/"
                                         "--pair/--triple");
            }
            return confirmed ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
