#include "lpa/terms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lpa/annihilator.hpp"

namespace lpa {

namespace {

void validate_monomial(const Graph& g, const Monomial& m) {
    for (auto inst : m.left.steps()) validate_instance(g, inst);
    for (auto inst : m.right.steps()) validate_instance(g, inst);
    if (m.left.range() != m.right.range())
        throw std::invalid_argument("Monomial: the two paths must share a range");
}

using Key = std::pair<Path, Path>;
using TermMap = std::map<Key, Rational>;

void add_term(TermMap& acc, const Path& left, const Path& right, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = acc.emplace(Key{left, right}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) acc.erase(it);
    }
}

LinearCombination from_map(const Graph& g, const TermMap& acc) {
    std::vector<Monomial> terms;
    terms.reserve(acc.size());
    for (const auto& [key, coeff] : acc) terms.push_back({coeff, key.first, key.second});
    return LinearCombination(g, std::move(terms));
}

// Out-instances of a regular vertex in (class declaration order, index)
// order; the last one is the designated instance of the CK2 rewrite.
std::vector<EdgeInstance> out_instances(const Graph& g, VertexId v) {
    std::vector<EdgeInstance> out;
    for (EdgeId e : g.out_classes(v)) {
        const auto& m = g.edge_class(e).multiplicity;
        if (m.is_omega())
            throw std::logic_error("out_instances: vertex is an infinite emitter");
        for (std::uint32_t i = 1; i <= m.value(); ++i) out.push_back({e, i});
    }
    return out;
}

// 1-based position of `inst` in the out-instance order of its source, or 0
// when the monomial shape rules a redex out.
std::uint32_t shared_last_index(const Graph& g, const Path& left, const Path& right) {
    if (left.is_vertex() || right.is_vertex()) return 0;
    EdgeInstance a = left.steps().back();
    if (a != right.steps().back()) return 0;
    VertexId v = g.edge_class(a.cls).source;
    if (!g.is_regular(v)) return 0;
    std::uint32_t pos = 0;
    for (EdgeId e : g.out_classes(v)) {
        const auto& m = g.edge_class(e).multiplicity;
        if (e == a.cls) return pos + a.index;
        pos += static_cast<std::uint32_t>(m.value());
    }
    return 0; // unreachable for valid paths
}

struct Measure {
    std::size_t total_len;
    std::uint32_t shared_index;
    bool operator<(const Measure& o) const {
        if (total_len != o.total_len) return total_len < o.total_len;
        return shared_index < o.shared_index;
    }
};

Measure measure_of(const Graph& g, const Path& left, const Path& right) {
    return {left.length() + right.length(), shared_last_index(g, left, right)};
}

} // namespace

LinearCombination::LinearCombination(const Graph& g, std::vector<Monomial> terms)
    : graph_(&g), terms_(std::move(terms)) {
    for (const auto& m : terms_) validate_monomial(g, m);
    canonicalize();
}

void LinearCombination::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
        if (a.left != b.left) return a.left < b.left;
        return a.right < b.right;
    });
    std::vector<Monomial> merged;
    for (auto& m : terms_) {
        if (!merged.empty() && merged.back().left == m.left && merged.back().right == m.right) {
            merged.back().coeff += m.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else if (!m.coeff.is_zero()) {
            merged.push_back(std::move(m));
        }
    }
    terms_ = std::move(merged);
}

LinearCombination LinearCombination::vertex(const Graph& g, VertexId v) {
    Path p = Path::vertex(g, v);
    return LinearCombination(g, {Monomial{1, p, p}});
}

LinearCombination LinearCombination::path(const Graph& g, const Path& p) {
    return LinearCombination(g, {Monomial{1, p, Path::vertex(g, p.range())}});
}

LinearCombination LinearCombination::monomial(const Graph& g, Monomial m) {
    return LinearCombination(g, {std::move(m)});
}

LinearCombination LinearCombination::operator+(const LinearCombination& o) const {
    if (graph_ != o.graph_)
        throw std::invalid_argument("LinearCombination: operands from different graphs");
    std::vector<Monomial> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return LinearCombination(*graph_, std::move(all));
}

LinearCombination LinearCombination::operator-(const LinearCombination& o) const {
    return *this + o.scaled(-1);
}

LinearCombination LinearCombination::scaled(const Rational& k) const {
    std::vector<Monomial> scaled_terms;
    if (!k.is_zero()) {
        scaled_terms = terms_;
        for (auto& m : scaled_terms) m.coeff *= k;
    }
    return LinearCombination(*graph_, std::move(scaled_terms));
}

bool LinearCombination::operator==(const LinearCombination& o) const {
    if (graph_ != o.graph_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].left != o.terms_[i].left ||
            terms_[i].right != o.terms_[i].right)
            return false;
    }
    return true;
}

std::string LinearCombination::to_string() const {
    if (terms_.empty()) return "0";
    const Graph& g = *graph_;
    auto render = [&](const Monomial& m) {
        std::string body;
        if (m.left.is_vertex() && m.right.is_vertex()) {
            body = g.vertex_name(m.left.source());
        } else {
            for (auto inst : m.left.steps()) {
                if (!body.empty()) body += " ";
                body += instance_to_string(g, inst);
            }
            for (std::size_t i = m.right.length(); i-- > 0;) {
                if (!body.empty()) body += " ";
                body += instance_to_string(g, m.right.steps()[i]) + "*";
            }
        }
        return body;
    };
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Monomial& m = terms_[i];
        Rational c = m.coeff;
        bool negative = c.numerator() < 0;
        Rational abs = negative ? -c : c;
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (abs != Rational(1)) out += abs.to_string() + " ";
        out += render(m);
    }
    return out;
}

LinearCombination multiply(const LinearCombination& a, const LinearCombination& b) {
    if (&a.graph() != &b.graph())
        throw std::invalid_argument("multiply: operands from different graphs");
    const Graph& g = a.graph();
    TermMap acc;
    for (const auto& ma : a.terms()) {
        for (const auto& mb : b.terms()) {
            const Path& q = ma.right;
            const Path& r = mb.left;
            Rational coeff = ma.coeff * mb.coeff;
            if (r.length() >= q.length()) {
                // r = q·t ⇒ p t s*; the leftover t composes onto p because
                // r(p) = r(q) by the monomial invariant.
                if (q.is_vertex() ? (r.source() != q.source())
                                  : !std::equal(q.steps().begin(), q.steps().end(),
                                                r.steps().begin()))
                    continue;
                Path extended = ma.left;
                for (std::size_t i = q.length(); i < r.length(); ++i)
                    extended = extended.extended(g, r.steps()[i]);
                add_term(acc, extended, mb.right, coeff);
            } else {
                // q = r·t ⇒ p (s·t)*
                if (r.is_vertex() ? (q.source() != r.source())
                                  : !std::equal(r.steps().begin(), r.steps().end(),
                                                q.steps().begin()))
                    continue;
                Path extended = mb.right;
                for (std::size_t i = r.length(); i < q.length(); ++i)
                    extended = extended.extended(g, q.steps()[i]);
                add_term(acc, ma.left, extended, coeff);
            }
        }
    }
    return from_map(g, acc);
}

LinearCombination normal_form(const LinearCombination& x, RewriteStats* stats) {
    const Graph& g = x.graph();
    TermMap acc;
    for (const auto& m : x.terms()) add_term(acc, m.left, m.right, m.coeff);

    while (true) {
        auto redex = acc.end();
        std::uint32_t redex_index = 0;
        for (auto it = acc.begin(); it != acc.end(); ++it) {
            redex_index = shared_last_index(g, it->first.first, it->first.second);
            if (redex_index == 0) continue;
            // The shared last instance must be the designated (maximal) one.
            VertexId v = g.edge_class(it->first.first.steps().back().cls).source;
            auto instances = out_instances(g, v);
            if (it->first.first.steps().back() == instances.back()) {
                redex = it;
                break;
            }
        }
        if (redex == acc.end()) break;

        Path left = redex->first.first;
        Path right = redex->first.second;
        Rational coeff = redex->second;
        acc.erase(redex);

        Measure before = measure_of(g, left, right);
        Path p = left.shortened(g);
        Path q = right.shortened(g);
        VertexId v = g.edge_class(left.steps().back().cls).source;
        auto instances = out_instances(g, v);

        auto guard = [&](const Path& nl, const Path& nr) {
            if (!(measure_of(g, nl, nr) < before))
                throw std::logic_error("normal_form: rewrite failed to decrease the measure");
        };
        guard(p, q);
        add_term(acc, p, q, coeff);
        for (std::size_t i = 0; i + 1 < instances.size(); ++i) {
            Path nl = p.extended(g, instances[i]);
            Path nr = q.extended(g, instances[i]);
            guard(nl, nr);
            add_term(acc, nl, nr, -coeff);
        }
        if (stats) ++stats->steps;
    }
    return from_map(g, acc);
}

LinearCombination involution(const LinearCombination& x) {
    std::vector<Monomial> terms;
    terms.reserve(x.terms().size());
    for (const auto& m : x.terms()) terms.push_back({m.coeff, m.right, m.left});
    return LinearCombination(x.graph(), std::move(terms));
}

LinearCombination breaking_element(const Graph& g, const VertexSet& h, VertexId v) {
    if (!breaking_vertices(g, h).contains(v))
        throw std::invalid_argument("breaking_element: vertex is not a breaking vertex of H");
    std::vector<Monomial> terms;
    Path vert = Path::vertex(g, v);
    terms.push_back({1, vert, vert});
    for (EdgeId e : g.out_classes(v)) {
        const auto& cls = g.edge_class(e);
        if (h.contains(cls.range)) continue;
        // Finite by the breaking-vertex definition.
        for (std::uint32_t i = 1; i <= cls.multiplicity.value(); ++i) {
            Path step = Path::edges(g, {{e, i}});
            terms.push_back({-1, step, step});
        }
    }
    return LinearCombination(g, std::move(terms));
}

namespace {

// All instance paths of length ≤ max_len grouped by range, ω classes capped.
std::vector<std::vector<Path>> paths_by_range(const Graph& g, const GeneratorLimits& limits) {
    std::vector<std::vector<Path>> by_range(g.vertex_count());
    std::vector<Path> frontier;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Path p = Path::vertex(g, v);
        by_range[v].push_back(p);
        frontier.push_back(p);
    }
    for (std::uint32_t len = 1; len <= limits.max_len; ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier) {
            for (EdgeId e : g.out_classes(p.range())) {
                const auto& m = g.edge_class(e).multiplicity;
                std::uint32_t count = m.is_omega()
                                          ? limits.omega_instance_cap
                                          : static_cast<std::uint32_t>(m.value());
                for (std::uint32_t i = 1; i <= count; ++i) {
                    Path ext = p.extended(g, {e, i});
                    by_range[ext.range()].push_back(ext);
                    next.push_back(ext);
                }
            }
        }
        frontier = std::move(next);
    }
    return by_range;
}

} // namespace

std::vector<LinearCombination> ideal_generators(const Graph& g, const AdmissiblePair& p,
                                                GeneratorLimits limits) {
    require_admissible(g, p);
    auto by_range = paths_by_range(g, limits);
    std::vector<LinearCombination> out;
    p.hereditary.for_each([&](VertexId r) {
        for (const Path& left : by_range[r])
            for (const Path& right : by_range[r])
                out.push_back(LinearCombination::monomial(g, {1, left, right}));
    });
    p.breaking.for_each([&](VertexId v) {
        LinearCombination core = breaking_element(g, p.hereditary, v);
        for (const Path& left : by_range[v]) {
            LinearCombination lhs =
                multiply(LinearCombination::path(g, left), core);
            for (const Path& right : by_range[v]) {
                LinearCombination rhs = involution(LinearCombination::path(g, right));
                out.push_back(multiply(lhs, rhs));
            }
        }
    });
    return out;
}

bool verify_annihilation(const Graph& g, const AdmissiblePair& p, GeneratorLimits limits) {
    AdmissiblePair bot = annihilator_pair(g, p);
    std::vector<LinearCombination> annihilators;
    bot.hereditary.for_each(
        [&](VertexId u) { annihilators.push_back(LinearCombination::vertex(g, u)); });
    bot.breaking.for_each([&](VertexId w) {
        annihilators.push_back(breaking_element(g, bot.hereditary, w));
    });
    auto generators = ideal_generators(g, p, limits);
    for (const auto& a : annihilators) {
        for (const auto& x : generators) {
            if (!normal_form(multiply(a, x)).is_zero()) return false;
            if (!normal_form(multiply(x, a)).is_zero()) return false;
        }
    }
    return true;
}

} // namespace lpa
