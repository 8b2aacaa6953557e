#include "qqwalk/graph.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qqwalk
{

namespace
{

bool connected(int n, const std::vector<std::vector<int>>& out, const std::vector<Arc>& arcs)
{
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty())
    {
        const int u = stack.back();
        stack.pop_back();
        for (int a : out[static_cast<std::size_t>(u)])
        {
            const int v = arcs[static_cast<std::size_t>(a)].terminal;
            if (!seen[static_cast<std::size_t>(v)])
            {
                seen[static_cast<std::size_t>(v)] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

} // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges))
{
    if (n_ < 2 || edges_.empty())
        throw ContractViolation("graph needs at least two vertices and one edge");
    out_.resize(static_cast<std::size_t>(n_));
    std::set<std::pair<int, int>> seen;
    for (std::size_t r = 0; r < edges_.size(); ++r)
    {
        const auto [u, v] = edges_[r];
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw ContractViolation("edge " + std::to_string(r) + ": vertex index out of range");
        if (u == v)
            throw ContractViolation("edge " + std::to_string(r) + ": loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ContractViolation("edge " + std::to_string(r) + ": duplicate edge");
        const int base = static_cast<int>(2 * r);
        arcs_.push_back({u, v, base});
        arcs_.push_back({v, u, base + 1});
        out_[static_cast<std::size_t>(u)].push_back(base);
        out_[static_cast<std::size_t>(v)].push_back(base + 1);
    }
    if (!connected(n_, out_, arcs_))
        throw ContractViolation("graph is disconnected");
}

const Arc& Graph::arc(int index) const
{
    if (index < 0 || index >= arc_count())
        throw ContractViolation("arc index " + std::to_string(index) + " out of range");
    return arcs_[static_cast<std::size_t>(index)];
}

std::span<const int> Graph::out_arcs(int u) const
{
    if (u < 0 || u >= n_)
        throw ContractViolation("vertex " + std::to_string(u) + " out of range");
    return out_[static_cast<std::size_t>(u)];
}

int Graph::degree(int u) const { return static_cast<int>(out_arcs(u).size()); }

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int header_line = 0;
    int n = -1;
    int m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line))
    {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        long long a = 0;
        long long b = 0;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw ParseError(lineno, "expected two integers");

        if (n < 0)
        {
            if (a < 2 || b < 1)
                throw ParseError(lineno, "header needs n >= 2 vertices and m >= 1 edges");
            n = static_cast<int>(a);
            m = static_cast<int>(b);
            header_line = lineno;
            continue;
        }
        if (static_cast<int>(edges.size()) == m)
            throw ParseError(lineno, "more edge lines than the declared m = " + std::to_string(m));
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError(lineno, "vertex index out of range (n = " + std::to_string(n) + ")");
        if (a == b)
            throw ParseError(lineno, "loop edge " + std::to_string(a) + "-" + std::to_string(b));
        const auto key = std::make_pair(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
        if (!seen.insert(key).second)
            throw ParseError(lineno, "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }

    if (n < 0)
        throw ParseError(lineno, "missing header line \"n m\"");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    try
    {
        return Graph(n, std::move(edges));
    }
    catch (const ContractViolation& e)
    {
        throw ParseError(header_line, e.what());
    }
}

Graph load_graph(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open graph file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try
    {
        return parse_graph(buf.str());
    }
    catch (const ParseError& e)
    {
        throw ParseError(e.line(), path.string() + ": " + std::string(e.what()));
    }
}

ComplexMatrix adjacency_matrix(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    ComplexMatrix a(n, n);
    for (const Arc& e : g.arcs())
        a(static_cast<std::size_t>(e.origin), static_cast<std::size_t>(e.terminal)) = 1.0;
    return a;
}

ComplexMatrix degree_matrix(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    ComplexMatrix d(n, n);
    for (std::size_t u = 0; u < n; ++u)
        d(u, u) = static_cast<double>(g.degree(static_cast<int>(u)));
    return d;
}

ComplexMatrix transition_matrix_T(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    ComplexMatrix t(n, n);
    for (const Arc& e : g.arcs())
        t(static_cast<std::size_t>(e.origin), static_cast<std::size_t>(e.terminal)) = 1.0 / g.degree(e.origin);
    return t;
}

Graph complete_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < leaves; ++i)
        edges.emplace_back(i, leaves);
    return Graph(leaves + 1, std::move(edges));
}

Graph path_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, u + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        edges.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(edges));
}

} // namespace qqwalk
