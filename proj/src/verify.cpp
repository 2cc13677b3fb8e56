#include "lpa/verify.hpp"

#include <functional>

#include "lpa/annihilator.hpp"
#include "lpa/constructions.hpp"
#include "lpa/cycles.hpp"
#include "lpa/lattice.hpp"

namespace lpa {

namespace {

using PairAnnihilator = std::function<AdmissiblePair(const Graph&, const AdmissiblePair&)>;

OracleResult run_one(const std::string& name, const std::function<std::string()>& body) {
    OracleResult result;
    result.name = name;
    try {
        result.certificate = body();
        result.passed = result.certificate.empty();
    } catch (const std::exception& e) {
        result.passed = false;
        result.certificate = e.what();
    }
    return result;
}

} // namespace

std::vector<OracleResult> run_verification(const Graph& g, const VerifyOptions& opts) {
    std::vector<OracleResult> out;
    const Fault fault = opts.fault;

    PairAnnihilator bot = [fault](const Graph& gr, const AdmissiblePair& p) {
        AdmissiblePair real = annihilator_pair(gr, p);
        if (fault == Fault::TamperAnnihilatorPair)
            real.breaking = set_union(real.breaking, p.breaking);
        return real;
    };
    auto pair_reflexive = [&](const AdmissiblePair& p) {
        bool verdict = is_reflexive(g, p).reflexive;
        return fault == Fault::FlipReflexiveVerdicts ? !verdict : verdict;
    };

    std::vector<AdmissiblePair> pairs = enumerate_pairs(g, opts.cap);

    out.push_back(run_one("closure_laws", [&]() -> std::string {
        for (const auto& p : pairs) {
            AdmissiblePair b = bot(g, p);
            require_admissible(g, b);
            AdmissiblePair dd = bot(g, b);
            if (!pair_leq(p, dd))
                return "double annihilator not extensive at " + to_string(g, p);
            if (bot(g, dd) != b)
                return "triple annihilator differs from single at " + to_string(g, p);
            if (dd.hereditary == p.hereditary &&
                dd.breaking != breaking_vertices(g, p.hereditary))
                return "closed hereditary part without full breaking closure at " +
                       to_string(g, p);
        }
        for (const auto& a : pairs) {
            for (const auto& c : pairs) {
                if (!pair_leq(a, c)) continue;
                if (!pair_leq(bot(g, c), bot(g, a)))
                    return "annihilator not order-reversing at " + to_string(g, a) + " ≤ " +
                           to_string(g, c);
                if (!pair_leq(bot(g, bot(g, a)), bot(g, bot(g, c))))
                    return "double annihilator not monotone at " + to_string(g, a) + " ≤ " +
                           to_string(g, c);
            }
        }
        return "";
    }));

    out.push_back(run_one("reflexivity_criteria_agree", [&]() -> std::string {
        for (const auto& p : pairs) {
            auto verdict = is_reflexive(g, p); // throws on disagreement
            if (verdict.via_closure != verdict.via_condition3)
                return "criteria disagree at " + to_string(g, p);
        }
        return "";
    }));

    out.push_back(run_one("all_reflexive_equivalence", [&]() -> std::string {
        bool structural = is_all_reflexive(g);
        for (const auto& p : pairs) {
            if (!pair_reflexive(p)) {
                if (structural)
                    return "graph classified all-reflexive but " + to_string(g, p) +
                           " is not reflexive";
                return "";
            }
        }
        if (!structural)
            return "every pair reflexive but the graph is not classified all-reflexive";
        return "";
    }));

    out.push_back(run_one("boolean_iff_all_reflexive", [&]() -> std::string {
        PairLattice lat = build_lattice(g, opts.cap);
        bool boolean = lat.verdict.kind == LatticeVerdictKind::Boolean;
        if (fault == Fault::ForceNotDistributive) boolean = false;
        if (boolean != is_all_reflexive(g)) {
            std::string certificate = "lattice verdict and structural classification differ";
            if (lat.verdict.kind == LatticeVerdictKind::NotComplemented)
                certificate +=
                    "; uncomplemented " + to_string(g, lat.pairs[lat.verdict.witness]);
            return certificate;
        }
        return "";
    }));

    out.push_back(run_one("annihilator_sublattice_boolean", [&]() -> std::string {
        PairLattice lat = build_lattice(g, opts.cap);
        annihilator_sublattice(g, lat); // throws if not Boolean
        return "";
    }));

    out.push_back(run_one("quotient_porcupine_biconditional", [&]() -> std::string {
        for (const auto& p : pairs) {
            if (!pair_reflexive(p) || !porcupine_is_finite(g, p)) continue;
            if (!quotient_porcupine_reflexivity_check(g, p))
                return "biconditional failed at " + to_string(g, p);
        }
        return "";
    }));

    out.push_back(run_one("condition_L_preserved", [&]() -> std::string {
        if (!condition_L(g)) return "";
        for (const auto& p : pairs) {
            if (!is_reflexive(g, p).reflexive) continue;
            if (!condition_L_preserved(g, p))
                return "Condition (L) lost in the quotient by " + to_string(g, p);
        }
        return "";
    }));

    out.push_back(run_one("symbolic_annihilation", [&]() -> std::string {
        for (const auto& p : pairs) {
            AdmissiblePair b = annihilator_pair(g, p);
            std::vector<LinearCombination> annihilators;
            b.hereditary.for_each(
                [&](VertexId u) { annihilators.push_back(LinearCombination::vertex(g, u)); });
            b.breaking.for_each([&](VertexId w) {
                annihilators.push_back(breaking_element(g, b.hereditary, w));
            });
            auto generators = ideal_generators(g, p, opts.limits);
            if (fault == Fault::CorruptGenerators && !b.hereditary.empty())
                generators.push_back(
                    LinearCombination::vertex(g, b.hereditary.to_vector().front()));
            for (const auto& a : annihilators) {
                for (const auto& x : generators) {
                    if (!normal_form(multiply(a, x)).is_zero() ||
                        !normal_form(multiply(x, a)).is_zero())
                        return "nonzero product of " + a.to_string() + " against " +
                               x.to_string() + " for " + to_string(g, p);
                }
            }
        }
        return "";
    }));

    return out;
}

bool all_passed(const std::vector<OracleResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace lpa
