#include "lpa/lattice.hpp"

#include <stdexcept>

#include "lpa/cycles.hpp"

namespace lpa {

namespace {

// Meet/join tables by poset search; existence and uniqueness are asserted
// (the admissible pairs form a lattice, and the reflexive pairs do too).
void fill_tables(PairLattice& lat, const char* what) {
    const std::size_t n = lat.size();
    lat.meet.assign(n * n, 0);
    lat.join.assign(n * n, 0);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (int lower = 0; lower < 2; ++lower) {
                candidates.clear();
                for (std::size_t k = 0; k < n; ++k) {
                    bool ok = lower ? (lat.less_eq(k, i) && lat.less_eq(k, j))
                                    : (lat.less_eq(i, k) && lat.less_eq(j, k));
                    if (ok) candidates.push_back(k);
                }
                std::size_t found = n;
                for (std::size_t k : candidates) {
                    bool extreme = true;
                    for (std::size_t m : candidates) {
                        bool dominates = lower ? lat.less_eq(m, k) : lat.less_eq(k, m);
                        if (!dominates) {
                            extreme = false;
                            break;
                        }
                    }
                    if (extreme) {
                        found = k;
                        break;
                    }
                }
                if (found == n)
                    throw std::logic_error(std::string(what) +
                                           ": meet/join missing or not unique "
                                           "(implementation bug)");
                (lower ? lat.meet : lat.join)[i * n + j] = found;
            }
        }
    }
}

void check_order_axioms(const PairLattice& lat, const char* what) {
    const std::size_t n = lat.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!lat.less_eq(i, i)) throw std::logic_error(std::string(what) + ": not reflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && lat.less_eq(i, j) && lat.less_eq(j, i))
                throw std::logic_error(std::string(what) + ": not antisymmetric");
            if (!lat.less_eq(i, j)) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (lat.less_eq(j, k) && !lat.less_eq(i, k))
                    throw std::logic_error(std::string(what) + ": not transitive");
        }
    }
}

LatticeVerdict compute_verdict(const PairLattice& lat) {
    const std::size_t n = lat.size();
    LatticeVerdict verdict;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t left = lat.meet_of(a, lat.join_of(b, c));
                std::size_t right = lat.join_of(lat.meet_of(a, b), lat.meet_of(a, c));
                if (left != right) {
                    verdict.kind = LatticeVerdictKind::NotDistributive;
                    verdict.triple = {a, b, c};
                    return verdict;
                }
            }
    for (std::size_t a = 0; a < n; ++a) {
        bool complemented = false;
        for (std::size_t b = 0; b < n; ++b) {
            if (lat.meet_of(a, b) == lat.bottom && lat.join_of(a, b) == lat.top) {
                complemented = true;
                break;
            }
        }
        if (!complemented) {
            verdict.kind = LatticeVerdictKind::NotComplemented;
            verdict.witness = a;
            return verdict;
        }
    }
    return verdict;
}

} // namespace

std::size_t PairLattice::index_of(const AdmissiblePair& p) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i] == p) return i;
    throw std::invalid_argument("PairLattice: pair not present");
}

PairLattice build_lattice(const Graph& g, std::size_t cap) {
    PairLattice lat;
    lat.pairs = enumerate_pairs(g, cap);
    const std::size_t n = lat.pairs.size();
    lat.leq.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            lat.leq[i * n + j] = pair_leq(lat.pairs[i], lat.pairs[j]);
    lat.bottom = lat.index_of({g.empty_set(), g.empty_set()});
    lat.top = lat.index_of({g.full_set(), g.empty_set()});
    check_order_axioms(lat, "build_lattice");
    fill_tables(lat, "build_lattice");
    lat.verdict = compute_verdict(lat);
    return lat;
}

PairLattice annihilator_sublattice(const Graph& g, const PairLattice& full) {
    PairLattice sub;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (is_reflexive(g, full.pairs[i]).reflexive) {
            members.push_back(i);
            sub.pairs.push_back(full.pairs[i]);
        }
    }
    const std::size_t n = sub.pairs.size();
    sub.leq.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sub.leq[i * n + j] = full.less_eq(members[i], members[j]);
    sub.bottom = sub.index_of({g.empty_set(), g.empty_set()});
    sub.top = sub.index_of({g.full_set(), g.empty_set()});
    check_order_axioms(sub, "annihilator_sublattice");

    // Meet as in the full lattice (ideal intersection); join is the double
    // annihilator of the full-lattice join. Both land back among the
    // reflexive pairs.
    sub.meet.assign(n * n, 0);
    sub.join.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const AdmissiblePair& meet_pair =
                full.pairs[full.meet_of(members[i], members[j])];
            AdmissiblePair join_pair = double_annihilator(
                g, full.pairs[full.join_of(members[i], members[j])]);
            sub.meet[i * n + j] = sub.index_of(meet_pair);
            sub.join[i * n + j] = sub.index_of(join_pair);
        }
    }
    sub.verdict = compute_verdict(sub);
    if (sub.verdict.kind != LatticeVerdictKind::Boolean)
        throw std::logic_error(
            "annihilator_sublattice: the annihilator-ideal lattice must be Boolean "
            "(implementation bug); offending graph pair index " +
            std::to_string(sub.verdict.kind == LatticeVerdictKind::NotComplemented
                               ? sub.verdict.witness
                               : sub.verdict.triple[0]));
    return sub;
}

BooleanEquivalence boolean_iff_all_reflexive(const Graph& g, std::size_t cap) {
    BooleanEquivalence out;
    PairLattice lat = build_lattice(g, cap);
    out.verdict = lat.verdict;
    out.lattice_boolean = lat.verdict.kind == LatticeVerdictKind::Boolean;
    out.all_reflexive = is_all_reflexive(g);
    out.strongly_all_reflexive = is_strongly_all_reflexive(g);
    if (out.lattice_boolean != out.all_reflexive) {
        std::string certificate = "boolean_iff_all_reflexive: equivalence failed: lattice is ";
        certificate += out.lattice_boolean ? "Boolean" : "not Boolean";
        certificate += ", graph is ";
        certificate += out.all_reflexive ? "all-reflexive" : "not all-reflexive";
        if (lat.verdict.kind == LatticeVerdictKind::NotComplemented)
            certificate += "; uncomplemented pair " + to_string(g, lat.pairs[lat.verdict.witness]);
        if (lat.verdict.kind == LatticeVerdictKind::NotDistributive)
            certificate += "; non-distributive triple at indices (" +
                           std::to_string(lat.verdict.triple[0]) + "," +
                           std::to_string(lat.verdict.triple[1]) + "," +
                           std::to_string(lat.verdict.triple[2]) + ")";
        throw std::logic_error(certificate);
    }
    return out;
}

bool quotient_porcupine_reflexivity_check(const Graph& g, const AdmissiblePair& p) {
    if (!is_reflexive(g, p).reflexive)
        throw std::invalid_argument("quotient_porcupine_reflexivity_check: pair not reflexive");
    if (!porcupine_is_finite(g, p))
        throw std::invalid_argument(
            "quotient_porcupine_reflexivity_check: porcupine graph is infinite");
    Graph quot = quotient(g, p).graph;
    PorcupineGraph porc = porcupine(g, p);
    bool plain = is_all_reflexive(g) == (is_all_reflexive(quot) && is_all_reflexive(porc));
    bool strong = is_strongly_all_reflexive(g) ==
                  (is_strongly_all_reflexive(quot) && is_strongly_all_reflexive(porc));
    return plain && strong;
}

} // namespace lpa
