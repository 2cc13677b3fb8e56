#include "lpa/random_graph.hpp"

#include <random>

namespace lpa {

namespace {

bool bernoulli(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng()) < p * 18446744073709551616.0; // 2^64
}

} // namespace

Graph random_graph(const RandomGraphParams& params) {
    std::mt19937_64 rng(params.seed);
    std::vector<std::string> names;
    names.reserve(params.vertices);
    for (std::uint32_t i = 0; i < params.vertices; ++i) names.push_back("v" + std::to_string(i));

    std::vector<EdgeClassSpec> classes;
    std::uint32_t next_edge = 0;
    for (std::uint32_t u = 0; u < params.vertices; ++u) {
        for (std::uint32_t v = 0; v < params.vertices; ++v) {
            if (!bernoulli(rng, params.density)) continue;
            Multiplicity mult = Multiplicity::finite(1);
            if (bernoulli(rng, params.omega_prob))
                mult = Multiplicity::omega();
            else if (bernoulli(rng, 0.25))
                mult = Multiplicity::finite(2);
            classes.push_back({"e" + std::to_string(next_edge++), names[u], names[v], mult});
        }
    }
    return Graph(std::move(names), classes);
}

} // namespace lpa
