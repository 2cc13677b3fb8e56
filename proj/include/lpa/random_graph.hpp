#ifndef LPA_RANDOM_GRAPH_HPP
#define LPA_RANDOM_GRAPH_HPP

#include <cstdint>

#include "lpa/graph.hpp"

namespace lpa {

struct RandomGraphParams {
    std::uint32_t vertices = 4;
    double density = 0.3;    // probability of a class on each ordered pair
    double omega_prob = 0.1; // probability that a class has multiplicity ω
    std::uint64_t seed = 1;
};

/// Deterministic per seed, across platforms: raw engine draws compared
/// against fixed thresholds, no library distributions.
Graph random_graph(const RandomGraphParams& params);

} // namespace lpa

#endif // LPA_RANDOM_GRAPH_HPP
