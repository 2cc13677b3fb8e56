#include "lpa/report.hpp"

#include <sstream>

#include "lpa/annihilator.hpp"
#include "lpa/cycles.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/lattice.hpp"

namespace lpa {

using nlohmann::json;

namespace {

json names_of(const Graph& g, const VertexSet& set) {
    json out = json::array();
    set.for_each([&](VertexId v) { out.push_back(g.vertex_name(v)); });
    return out;
}

json cycle_to_json(const Graph& g, const CycleReport& c) {
    json out;
    json edges = json::array();
    std::string edge_csv;
    for (EdgeId e : c.edges) {
        edges.push_back(g.edge_class(e).id);
        if (!edge_csv.empty()) edge_csv += ",";
        edge_csv += g.edge_class(e).id;
    }
    out["edges"] = edges;
    out["vertices"] = names_of(g, c.vertices);
    out["classification"] = to_string(c.classification);
    out["exit"] = c.exit_witness ? json(g.edge_class(*c.exit_witness).id) : json();
    if (c.non_return_witness) {
        json path;
        path["source"] = g.vertex_name(c.non_return_witness->source);
        json steps = json::array();
        for (EdgeId e : c.non_return_witness->edges) steps.push_back(g.edge_class(e).id);
        path["edges"] = steps;
        out["non_return_path"] = path;
    } else {
        out["non_return_path"] = json();
    }
    out["replay"] = "witness --cycle " + edge_csv;
    return out;
}

json pair_to_json(const Graph& g, const AdmissiblePair& p) {
    json out;
    out["H"] = names_of(g, p.hereditary);
    out["S"] = names_of(g, p.breaking);
    return out;
}

json header(const Graph& g, const char* command) {
    json out;
    out["tool"] = "lpa";
    out["format_version"] = kReportFormatVersion;
    out["command"] = command;
    out["graph"]["vertex_count"] = g.vertex_count();
    out["graph"]["edge_class_count"] = g.class_count();
    return out;
}

} // namespace

json classify_report(const Graph& g) {
    json out = header(g, "classify");

    json cycles = json::array();
    for (const auto& c : enumerate_cycles(g)) cycles.push_back(cycle_to_json(g, c));
    out["cycles"] = cycles;

    out["condition_L"] = condition_L(g);
    out["condition_K"] = condition_K(g);

    auto shape = check_cycles_no_exit_or_extreme(g);
    out["checks"]["cycles_no_exit_or_extreme"]["holds"] = shape.holds;
    out["checks"]["cycles_no_exit_or_extreme"]["witness"] =
        shape.witness ? cycle_to_json(g, *shape.witness) : json();

    auto emitters = check_infinite_emitters_on_cycles(g);
    out["checks"]["infinite_emitters_on_cycles"]["holds"] = emitters.holds;
    out["checks"]["infinite_emitters_on_cycles"]["witness"] =
        emitters.witness ? json(g.vertex_name(*emitters.witness)) : json();
    if (emitters.witness)
        out["checks"]["infinite_emitters_on_cycles"]["replay"] =
            "witness --emitter " + g.vertex_name(*emitters.witness);

    auto bifurcations = check_omega_bifurcations_return(g);
    out["checks"]["omega_bifurcations_return"]["holds"] = bifurcations.holds;
    if (bifurcations.witness) {
        json w;
        w["omega_class"] = g.edge_class(bifurcations.witness->omega_class).id;
        w["start_vertex"] = g.vertex_name(bifurcations.witness->start_vertex);
        w["avoided_set"] = names_of(g, bifurcations.witness->avoided_set);
        out["checks"]["omega_bifurcations_return"]["witness"] = w;
        out["checks"]["omega_bifurcations_return"]["replay"] =
            "witness --omega " + g.edge_class(bifurcations.witness->omega_class).id;
    } else {
        out["checks"]["omega_bifurcations_return"]["witness"] = json();
    }

    out["all_reflexive"] = is_all_reflexive(g);
    out["strongly_all_reflexive"] = is_strongly_all_reflexive(g);
    return out;
}

json pairs_report(const Graph& g, std::size_t cap) {
    json out = header(g, "pairs");
    json pairs = json::array();
    for (const auto& p : enumerate_pairs(g, cap)) {
        json row = pair_to_json(g, p);
        row["B_H"] = names_of(g, breaking_vertices(g, p.hereditary));
        auto verdict = is_reflexive(g, p);
        row["reflexive"] = verdict.reflexive;
        row["via_closure"] = verdict.via_closure;
        row["via_condition3"] = verdict.via_condition3;
        row["violation"] = verdict.violation ? json(g.vertex_name(*verdict.violation)) : json();
        row["annihilator"] = pair_to_json(g, annihilator_pair(g, p));
        row["double_annihilator"] = pair_to_json(g, double_annihilator(g, p));
        if (!verdict.reflexive) row["replay"] = "witness --pair \"" + render_pair(g, p) + "\"";
        pairs.push_back(row);
    }
    out["pairs"] = pairs;
    return out;
}

json lattice_report(const Graph& g, std::size_t cap) {
    json out = header(g, "lattice");
    PairLattice lat = build_lattice(g, cap);

    json pairs = json::array();
    for (const auto& p : lat.pairs) pairs.push_back(pair_to_json(g, p));
    out["pairs"] = pairs;
    out["bottom"] = lat.bottom;
    out["top"] = lat.top;

    json rows = json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < lat.size(); ++j) row.push_back(lat.less_eq(i, j) ? 1 : 0);
        rows.push_back(row);
    }
    out["leq"] = rows;

    json verdict;
    switch (lat.verdict.kind) {
        case LatticeVerdictKind::Boolean:
            verdict["kind"] = "boolean";
            break;
        case LatticeVerdictKind::NotDistributive:
            verdict["kind"] = "not_distributive";
            verdict["witness_triple"] = {lat.verdict.triple[0], lat.verdict.triple[1],
                                         lat.verdict.triple[2]};
            verdict["replay"] = "witness --triple \"" +
                                render_pair(g, lat.pairs[lat.verdict.triple[0]]) + "|" +
                                render_pair(g, lat.pairs[lat.verdict.triple[1]]) + "|" +
                                render_pair(g, lat.pairs[lat.verdict.triple[2]]) + "\"";
            break;
        case LatticeVerdictKind::NotComplemented:
            verdict["kind"] = "not_complemented";
            verdict["witness"] = lat.verdict.witness;
            verdict["replay"] =
                "witness --pair \"" + render_pair(g, lat.pairs[lat.verdict.witness]) + "\"";
            break;
    }
    out["verdict"] = verdict;

    PairLattice sub = annihilator_sublattice(g, lat);
    json members = json::array();
    json complements = json::array();
    for (std::size_t i = 0; i < sub.size(); ++i) {
        members.push_back(lat.index_of(sub.pairs[i]));
        complements.push_back(
            json::array({i, sub.index_of(annihilator_pair(g, sub.pairs[i]))}));
    }
    out["annihilator_sublattice"]["members"] = members;
    out["annihilator_sublattice"]["verdict"] = "boolean";
    out["annihilator_sublattice"]["complements"] = complements;

    bool all_reflexive = is_all_reflexive(g);
    bool strongly = is_strongly_all_reflexive(g);
    out["all_reflexive"] = all_reflexive;
    out["strongly_all_reflexive"] = strongly;
    // The same combinatorics decide the operator-algebra lattices: closed
    // gauge-invariant ideals mirror the graded-ideal lattice, and the full
    // ideal lattices (algebraic and closed) are Boolean exactly in the
    // strong case.
    out["verdicts"]["graded_ideals_boolean"] = all_reflexive;
    out["verdicts"]["gauge_invariant_ideals_boolean"] = all_reflexive;
    out["verdicts"]["all_ideals_boolean"] = strongly;
    out["verdicts"]["closed_ideals_boolean"] = strongly;
    return out;
}

json verify_report(const Graph& g, const VerifyOptions& opts, const char* level) {
    json out = header(g, "verify");
    out["level"] = level;
    out["maxlen"] = opts.limits.max_len;
    out["omega_instance_cap"] = opts.limits.omega_instance_cap;
    auto results = run_verification(g, opts);
    json oracles = json::array();
    for (const auto& r : results) {
        json row;
        row["name"] = r.name;
        row["passed"] = r.passed;
        row["certificate"] = r.passed ? json() : json(r.certificate);
        oracles.push_back(row);
    }
    out["oracles"] = oracles;
    out["all_passed"] = all_passed(results);
    return out;
}

std::string lattice_hasse_dot(const Graph& g, std::size_t cap) {
    PairLattice lat = build_lattice(g, cap);
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
        out << "  n" << i << " [label=\"" << to_string(g, lat.pairs[i]) << "\"";
        if (is_reflexive(g, lat.pairs[i]).reflexive) out << ", style=bold";
        out << "];\n";
    }
    for (std::size_t i = 0; i < lat.size(); ++i) {
        for (std::size_t j = 0; j < lat.size(); ++j) {
            if (i == j || !lat.less_eq(i, j)) continue;
            bool covers = true;
            for (std::size_t k = 0; k < lat.size() && covers; ++k)
                if (k != i && k != j && lat.less_eq(i, k) && lat.less_eq(k, j)) covers = false;
            if (covers) out << "  n" << i << " -> n" << j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

namespace {

std::string join_names(const json& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ",";
        out += names[i].get<std::string>();
    }
    return out + "}";
}

std::string pair_text(const json& pair) {
    return "(" + join_names(pair["H"]) + ", " + join_names(pair["S"]) + ")";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string human_classify(const json& report) {
    std::ostringstream out;
    out << "cycles: " << report["cycles"].size() << "\n";
    for (const auto& c : report["cycles"]) {
        out << "  [";
        for (std::size_t i = 0; i < c["edges"].size(); ++i)
            out << (i ? " " : "") << c["edges"][i].get<std::string>();
        out << "] " << c["classification"].get<std::string>();
        if (!c["exit"].is_null()) out << " (exit " << c["exit"].get<std::string>() << ")";
        out << "\n";
    }
    out << "condition_L: " << yesno(report["condition_L"]) << "\n";
    out << "condition_K: " << yesno(report["condition_K"]) << "\n";
    const auto& checks = report["checks"];
    out << "cycles_no_exit_or_extreme: "
        << yesno(checks["cycles_no_exit_or_extreme"]["holds"]) << "\n";
    out << "infinite_emitters_on_cycles: "
        << yesno(checks["infinite_emitters_on_cycles"]["holds"]) << "\n";
    out << "omega_bifurcations_return: "
        << yesno(checks["omega_bifurcations_return"]["holds"]) << "\n";
    out << "all_reflexive: " << yesno(report["all_reflexive"]) << "\n";
    out << "strongly_all_reflexive: " << yesno(report["strongly_all_reflexive"]) << "\n";
    return out.str();
}

std::string human_pairs(const json& report) {
    std::ostringstream out;
    out << report["pairs"].size() << " admissible pairs\n";
    for (const auto& row : report["pairs"]) {
        out << "  " << pair_text(row) << "  B_H=" << join_names(row["B_H"])
            << "  reflexive=" << yesno(row["reflexive"])
            << "  annihilator=" << pair_text(row["annihilator"])
            << "  closure=" << pair_text(row["double_annihilator"]);
        if (!row["violation"].is_null())
            out << "  violation=" << row["violation"].get<std::string>();
        out << "\n";
    }
    return out.str();
}

std::string human_lattice(const json& report) {
    std::ostringstream out;
    out << "lattice on " << report["pairs"].size() << " pairs, verdict "
        << report["verdict"]["kind"].get<std::string>() << "\n";
    out << "annihilator sublattice: " << report["annihilator_sublattice"]["members"].size()
        << " reflexive pairs, verdict boolean\n";
    out << "all_reflexive: " << yesno(report["all_reflexive"]) << "\n";
    out << "strongly_all_reflexive: " << yesno(report["strongly_all_reflexive"]) << "\n";
    const auto& v = report["verdicts"];
    out << "graded ideals Boolean: " << yesno(v["graded_ideals_boolean"])
        << "   closed gauge-invariant ideals Boolean: "
        << yesno(v["gauge_invariant_ideals_boolean"]) << "\n";
    out << "all ideals Boolean: " << yesno(v["all_ideals_boolean"])
        << "   all closed ideals Boolean: " << yesno(v["closed_ideals_boolean"]) << "\n";
    return out.str();
}

std::string human_verify(const json& report) {
    std::ostringstream out;
    for (const auto& row : report["oracles"]) {
        out << (row["passed"].get<bool>() ? "pass" : "FAIL") << "  "
            << row["name"].get<std::string>();
        if (!row["certificate"].is_null())
            out << "  [" << row["certificate"].get<std::string>() << "]";
        out << "\n";
    }
    out << (report["all_passed"].get<bool>() ? "all oracles passed" : "oracle failures present")
        << "\n";
    return out.str();
}

} // namespace lpa
