#include "qqwalk/sampling.hpp"

namespace qqwalk
{

Quaternion random_quaternion(std::mt19937_64& rng, double lo, double hi)
{
    const double a = uniform(rng, lo, hi);
    const double b = uniform(rng, lo, hi);
    const double c = uniform(rng, lo, hi);
    const double d = uniform(rng, lo, hi);
    return {a, b, c, d};
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double extra)
{
    if (n < 2)
        throw ContractViolation("random_connected_graph: need n >= 2");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int v = 1; v < n; ++v)
    {
        const int u = uniform_int(rng, 0, v - 1);
        edges.emplace_back(u, v);
        used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] && uniform01(rng) < extra)
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_cyclic_graph(std::mt19937_64& rng, int n, double extra)
{
    if (n < 3 || !(extra > 0.0))
        throw ContractViolation("random_cyclic_graph: need n >= 3 and extra > 0");
    for (;;)
    {
        Graph g = random_connected_graph(rng, n, extra);
        if (!g.is_tree())
            return g;
    }
}

} // namespace qqwalk
