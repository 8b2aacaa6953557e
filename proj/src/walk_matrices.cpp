#include "qqwalk/walk_matrices.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qqwalk
{

namespace
{

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require_total(const Graph& g, const ArcWeights& w, const char* who)
{
    if (w.size() != idx(g.arc_count()))
        throw ContractViolation(std::string(who) + ": weight map has " + std::to_string(w.size()) +
                                " entries for " + std::to_string(g.arc_count()) + " arcs");
}

} // namespace

ArcWeights ArcWeights::per_vertex(const Graph& g, std::span<const Quaternion> value)
{
    if (value.size() != idx(g.vertex_count()))
        throw ContractViolation("per_vertex: need one value per vertex");
    std::vector<Quaternion> out;
    out.reserve(idx(g.arc_count()));
    for (const Arc& e : g.arcs())
        out.push_back(value[idx(e.origin)]);
    return ArcWeights(std::move(out));
}

ArcWeights ArcWeights::alpha_coin(const Graph& g, const Quaternion& alpha)
{
    std::vector<Quaternion> out;
    out.reserve(idx(g.arc_count()));
    for (const Arc& e : g.arcs())
        out.push_back(alpha / static_cast<double>(g.degree(e.origin)));
    return ArcWeights(std::move(out));
}

ArcWeights ArcWeights::constant(const Graph& g, const Quaternion& value)
{
    return ArcWeights(std::vector<Quaternion>(idx(g.arc_count()), value));
}

bool ArcWeights::is_complex(double tol) const noexcept
{
    return std::all_of(values_.begin(), values_.end(), [tol](const Quaternion& q) { return q.is_complex(tol); });
}

ArcWeights parse_coin(std::string_view text, const Graph& g)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    char kind = 0;
    std::vector<Quaternion> vertex_value(idx(g.vertex_count()));
    std::vector<Quaternion> arc_value(idx(g.arc_count()));
    std::vector<bool> assigned;

    while (std::getline(in, line))
    {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        std::string tag;
        long long target = 0;
        std::string literal;
        std::string extra;
        if (!(fields >> tag >> target >> literal) || (fields >> extra))
            throw ParseError(lineno, "expected '<v|a> <index> <quaternion>'");
        if (tag != "v" && tag != "a")
            throw ParseError(lineno, "unknown entry kind '" + tag + "' (use 'v' or 'a')");
        if (kind == 0)
        {
            kind = tag[0];
            assigned.assign(kind == 'v' ? vertex_value.size() : arc_value.size(), false);
        }
        else if (kind != tag[0])
        {
            throw ParseError(lineno, "per-vertex and per-arc entries cannot be mixed");
        }
        if (target < 0 || target >= static_cast<long long>(assigned.size()))
            throw ParseError(lineno, std::string(kind == 'v' ? "vertex" : "arc") + " index out of range");
        if (assigned[idx(static_cast<int>(target))])
            throw ParseError(lineno, "index " + std::to_string(target) + " assigned twice");
        assigned[idx(static_cast<int>(target))] = true;

        Quaternion value;
        try
        {
            value = parse_quaternion(literal);
        }
        catch (const ParseError& e)
        {
            throw ParseError(lineno, e.what());
        }
        (kind == 'v' ? vertex_value : arc_value)[idx(static_cast<int>(target))] = value;
    }

    if (kind == 'v')
        return ArcWeights::per_vertex(g, vertex_value);
    return ArcWeights(std::move(arc_value));
}

QuatMatrix grover_matrix(const Graph& g) { return build_U(g, ArcWeights::grover(g)); }

QuatMatrix build_U(const Graph& g, const CoinMap& q)
{
    require_total(g, q, "build_U");
    const auto n = idx(g.arc_count());
    QuatMatrix u(n, n);
    for (const Arc& e : g.arcs())
        for (int f : g.out_arcs(e.origin))
        {
            // arcs entering o(e) are exactly the inverses of arcs leaving it
            const int in = f ^ 1;
            u(idx(e.index), idx(in)) = in == e.inverse_index() ? q[e.index] - 1.0 : q[e.index];
        }
    return u;
}

UnitarityCheck unitarity_condition(const Graph& g, const CoinMap& q, double tol)
{
    require_total(g, q, "unitarity_condition");
    UnitarityCheck check;
    for (const Arc& e : g.arcs())
    {
        const Quaternion& v = q[e.index];
        const double residual = v.norm_sq() - 2.0 * v.x0 / g.degree(e.origin);
        check.quadratic_residual = std::max(check.quadratic_residual, std::abs(residual));
    }
    for (int u = 0; u < g.vertex_count(); ++u)
    {
        const auto out = g.out_arcs(u);
        for (int f : out)
            check.origin_spread = std::max(check.origin_spread, (q[f] - q[out.front()]).norm());
    }
    check.quadratic_ok = check.quadratic_residual <= tol;
    check.origin_constant = check.origin_spread <= tol;
    check.holds = check.quadratic_ok && check.origin_constant;
    return check;
}

std::pair<QuatMatrix, QuatMatrix> build_B_and_J0(const Graph& g)
{
    const auto n = idx(g.arc_count());
    QuatMatrix b(n, n);
    QuatMatrix j0(n, n);
    for (const Arc& e : g.arcs())
    {
        for (int f : g.out_arcs(e.terminal))
            b(idx(e.index), idx(f)) = 1.0;
        j0(idx(e.index), idx(e.inverse_index())) = 1.0;
    }
    return {std::move(b), std::move(j0)};
}

QuatMatrix build_Bw(const Graph& g, const WeightMap& w)
{
    require_total(g, w, "build_Bw");
    const auto n = idx(g.arc_count());
    QuatMatrix b(n, n);
    for (const Arc& e : g.arcs())
        for (int f : g.out_arcs(e.terminal))
            b(idx(e.index), idx(f)) = w[f];
    return b;
}

std::pair<QuatMatrix, QuatMatrix> build_K_L(const Graph& g, const WeightMap& w)
{
    require_total(g, w, "build_K_L");
    const auto arcs = idx(g.arc_count());
    const auto n = idx(g.vertex_count());
    QuatMatrix k(arcs, n);
    QuatMatrix l(arcs, n);
    for (const Arc& e : g.arcs())
    {
        k(idx(e.index), idx(e.origin)) = w[e.index];
        l(idx(e.index), idx(e.terminal)) = 1.0;
    }
    return {std::move(k), std::move(l)};
}

std::pair<QuatMatrix, QuatMatrix> build_W_Dw(const Graph& g, const WeightMap& w)
{
    require_total(g, w, "build_W_Dw");
    const auto n = idx(g.vertex_count());
    QuatMatrix wm(n, n);
    QuatMatrix dw(n, n);
    for (const Arc& e : g.arcs())
    {
        wm(idx(e.origin), idx(e.terminal)) = w[e.index];
        dw(idx(e.origin), idx(e.origin)) += w[e.index];
    }
    return {std::move(wm), std::move(dw)};
}

QuatCondResult quat_cond_check(const Graph& g, const CoinMap& q, double tol)
{
    require_total(g, q, "quat_cond_check");
    QuatCondResult r;
    std::vector<Quaternion> sums(idx(g.vertex_count()));
    for (const Arc& e : g.arcs())
        sums[idx(e.origin)] += q[e.index];
    for (const auto& s : sums)
        r.spread = std::max(r.spread, (s - sums.front()).norm());
    r.holds = r.spread <= tol;
    if (r.holds)
        r.alpha = sums.front();

    const auto [w, dw] = build_W_Dw(g, q);
    r.commutator = commutator_norm(w.transpose(), dw);
    r.commutes = r.commutator <= tol;
    return r;
}

} // namespace qqwalk
