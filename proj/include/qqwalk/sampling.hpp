#pragma once

#include "qqwalk/graph.hpp"

#include <cstdint>
#include <random>

namespace qqwalk
{

// Hand-rolled draws on top of mt19937_64 so seeded streams are identical
// across standard libraries (the <random> distributions are not).

/// Uniform in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform in [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Integer in [lo, hi].
inline int uniform_int(std::mt19937_64& rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Each component uniform in [lo, hi).
Quaternion random_quaternion(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0);

/// Random spanning tree (vertex v joins a uniformly chosen earlier vertex)
/// plus every remaining pair independently with probability `extra`.
Graph random_connected_graph(std::mt19937_64& rng, int n, double extra = 0.3);

/// As above, retried until the graph has a cycle.
Graph random_cyclic_graph(std::mt19937_64& rng, int n, double extra = 0.3);

} // namespace qqwalk
