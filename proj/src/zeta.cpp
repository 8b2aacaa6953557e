#include "qqwalk/zeta.hpp"

#include "qqwalk/complex_linalg.hpp"
#include "qqwalk/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qqwalk
{

namespace
{

constexpr double kPoleGuard = 1e-6;

bool near_pole(cx t) { return std::abs(t * t - 1.0) < kPoleGuard; }

// (1 − t²)^k for integer k.
cx pole_power(cx t, int k)
{
    const cx base = 1.0 - t * t;
    if (k < 0 && std::abs(base) < kPoleGuard)
        throw DomainError("(1 - t^2)^" + std::to_string(k) + " has a pole at t = " + std::to_string(t.real()) +
                          (t.imag() < 0 ? "" : "+") + std::to_string(t.imag()) + "i");
    cx acc = 1.0;
    for (int i = 0; i < std::abs(k); ++i)
        acc *= base;
    return k < 0 ? 1.0 / acc : acc;
}

ComplexMatrix complex_part(const QuatMatrix& m) { return symplectic_parts(m).first; }

// det(I − tX + t²(Y − I))
cx bass_det(const ComplexMatrix& x, const ComplexMatrix& y, cx t)
{
    const auto id = ComplexMatrix::identity(x.rows());
    return determinant(id - t * x + (t * t) * (y - id));
}

cx hashimoto_det(const ComplexMatrix& b_minus_j0, cx t)
{
    return determinant(ComplexMatrix::identity(b_minus_j0.rows()) - t * b_minus_j0);
}

std::vector<cx> sorted_samples(std::span<const cx> samples)
{
    std::vector<cx> out(samples.begin(), samples.end());
    std::sort(out.begin(), out.end(), [](cx a, cx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

template <class Lhs, class Rhs>
IdentityReport compare_sides(std::span<const cx> samples, double tol, Lhs lhs, Rhs rhs)
{
    IdentityReport report;
    report.tolerance = tol;
    for (cx t : sorted_samples(samples))
    {
        if (near_pole(t))
        {
            report.skipped.push_back(t);
            report.warnings.push_back("skipped sample t = " + std::to_string(t.real()) + (t.imag() < 0 ? "" : "+") +
                                      std::to_string(t.imag()) + "i: |t^2 - 1| < 1e-6");
            continue;
        }
        IdentitySample s{t, lhs(t), rhs(t), 0.0};
        s.rel_err = relative_error(s.lhs, s.rhs);
        report.max_rel_err = std::max(report.max_rel_err, s.rel_err);
        report.samples.push_back(s);
    }
    return report;
}

void finish(IdentityReport& report)
{
    report.verdict = report.max_rel_err <= report.tolerance &&
                     std::all_of(report.aux.begin(), report.aux.end(), [](const AuxCheck& a) { return a.ok(); });
}

} // namespace

std::vector<cx> default_samples(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<cx> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i)
    {
        const double radius = 0.8 * std::sqrt(uniform01(rng));
        const double angle = 2.0 * std::numbers::pi * uniform01(rng);
        out.push_back(std::polar(radius, angle));
    }
    return sorted_samples(out);
}

double relative_error(cx lhs, cx rhs) noexcept
{
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

cx ihara_hashimoto(const Graph& g, cx t)
{
    const auto [b, j0] = build_B_and_J0(g);
    return hashimoto_det(complex_part(b - j0), t);
}

cx ihara_bass(const Graph& g, cx t)
{
    const cx factor = pole_power(t, g.betti_number() - 1);
    return factor * bass_det(adjacency_matrix(g), degree_matrix(g), t);
}

IdentityReport ihara_identity(const Graph& g, std::span<const cx> samples, double tol)
{
    const auto [b, j0] = build_B_and_J0(g);
    const ComplexMatrix bj = complex_part(b - j0);
    const ComplexMatrix a = adjacency_matrix(g);
    const ComplexMatrix d = degree_matrix(g);
    const int exponent = g.betti_number() - 1;
    auto report = compare_sides(
        samples, tol, [&](cx t) { return hashimoto_det(bj, t); },
        [&](cx t) { return pole_power(t, exponent) * bass_det(a, d, t); });
    finish(report);
    return report;
}

namespace
{

void require_complex(const WeightMap& w, const char* who)
{
    if (!w.is_complex())
        throw ContractViolation(std::string(who) +
                                ": weights have j or k parts; use the quaternionic identity instead");
}

} // namespace

cx weighted_hashimoto(const Graph& g, const WeightMap& w, cx t)
{
    require_complex(w, "weighted_hashimoto");
    const auto j0 = build_B_and_J0(g).second;
    return hashimoto_det(complex_part(build_Bw(g, w) - j0), t);
}

cx weighted_bass(const Graph& g, const WeightMap& w, cx t)
{
    require_complex(w, "weighted_bass");
    const auto [wm, dw] = build_W_Dw(g, w);
    return pole_power(t, g.edge_count() - g.vertex_count()) * bass_det(complex_part(wm), complex_part(dw), t);
}

IdentityReport weighted_zeta_identity(const Graph& g, const WeightMap& w, std::span<const cx> samples, double tol)
{
    require_complex(w, "weighted_zeta_identity");
    const auto j0 = complex_part(build_B_and_J0(g).second);
    const ComplexMatrix bw = complex_part(build_Bw(g, w));
    const auto [wq, dwq] = build_W_Dw(g, w);
    const ComplexMatrix wm = complex_part(wq);
    const ComplexMatrix dw = complex_part(dwq);
    const int exponent = g.edge_count() - g.vertex_count();

    auto report = compare_sides(
        samples, tol, [&](cx t) { return hashimoto_det(bw - j0, t); },
        [&](cx t) { return pole_power(t, exponent) * bass_det(wm, dw, t); });

    const ComplexMatrix bw_t = bw.transpose() - j0;
    const ComplexMatrix wm_t = wm.transpose();
    double transposed = 0.0;
    for (const auto& s : report.samples)
        transposed = std::max(transposed, relative_error(hashimoto_det(bw_t, s.t),
                                                         pole_power(s.t, exponent) * bass_det(wm_t, dw, s.t)));
    report.aux.push_back({"transposed_max_rel_err", transposed, tol});
    finish(report);
    return report;
}

namespace
{

struct QuatSides
{
    ComplexMatrix lhs_operator;   // ψ(ᵀB_w − J0)
    ComplexMatrix psi_wt;         // ψ(ᵀW)
    ComplexMatrix psi_dw;         // ψ(D_w)
    int exponent = 0;             // 2m − 2n

    QuatSides(const Graph& g, const WeightMap& w)
    {
        const auto j0 = build_B_and_J0(g).second;
        lhs_operator = psi(build_Bw(g, w).transpose() - j0);
        const auto [wm, dw] = build_W_Dw(g, w);
        psi_wt = psi(wm.transpose());
        psi_dw = psi(dw);
        exponent = 2 * (g.edge_count() - g.vertex_count());
    }

    cx lhs(cx t) const { return hashimoto_det(lhs_operator, t); }
    cx rhs(cx t) const { return pole_power(t, exponent) * bass_det(psi_wt, psi_dw, t); }
};

} // namespace

cx quaternionic_lhs(const Graph& g, const WeightMap& w, cx t) { return QuatSides(g, w).lhs(t); }

cx quaternionic_rhs(const Graph& g, const WeightMap& w, cx t) { return QuatSides(g, w).rhs(t); }

IdentityReport quaternionic_identity(const Graph& g, const WeightMap& w, std::span<const cx> samples, double tol)
{
    const QuatSides sides(g, w);
    auto report = compare_sides(
        samples, tol, [&](cx t) { return sides.lhs(t); }, [&](cx t) { return sides.rhs(t); });

    const auto [k, l] = build_K_L(g, w);
    const ComplexMatrix psi_lt = psi(l.transpose());
    const ComplexMatrix psi_k = psi(k);
    const ComplexMatrix psi_j0 = psi(build_B_and_J0(g).second);
    const auto id = ComplexMatrix::identity(psi_j0.rows());
    double worst = 0.0;
    double scale = 1.0;
    for (const auto& s : report.samples)
    {
        const cx t = s.t;
        const ComplexMatrix left = psi_lt * inverse(id + t * psi_j0) * psi_k;
        const ComplexMatrix right = (1.0 / (1.0 - t * t)) * sides.psi_wt - (t / (1.0 - t * t)) * sides.psi_dw;
        worst = std::max(worst, max_abs_diff(left, right));
        scale = std::max(scale, max_abs(right));
    }
    report.aux.push_back({"intermediate_max_err", worst, 1e-10 * scale});
    finish(report);
    return report;
}

std::vector<cx> interpolate_on_circle(const std::function<cx(cx)>& p, int n_points)
{
    if (n_points < 2 || n_points % 2 != 0)
        throw ContractViolation("interpolate_on_circle: need an even number of points");
    const double step = std::numbers::pi / n_points;
    std::vector<cx> values(static_cast<std::size_t>(n_points));
    // t_j = e^{iπ(2j+1)/N}; t_j² = 1 would need N | 2j+1, impossible for even N
    for (int j = 0; j < n_points; ++j)
        values[static_cast<std::size_t>(j)] = p(std::polar(1.0, step * (2 * j + 1)));
    std::vector<cx> coeffs(values.size());
    for (int k = 0; k < n_points; ++k)
    {
        cx acc = 0.0;
        for (int j = 0; j < n_points; ++j)
            acc += values[static_cast<std::size_t>(j)] * std::polar(1.0, -step * (2 * j + 1) * k);
        coeffs[static_cast<std::size_t>(k)] = acc / static_cast<double>(n_points);
    }
    return coeffs;
}

namespace
{

int numeric_degree(const std::vector<cx>& c)
{
    double top = 0.0;
    for (cx v : c)
        top = std::max(top, std::abs(v));
    for (int k = static_cast<int>(c.size()) - 1; k > 0; --k)
        if (std::abs(c[static_cast<std::size_t>(k)]) > 1e-8 * top)
            return k;
    return 0;
}

} // namespace

PolynomialComparison quaternionic_polynomials(const Graph& g, const WeightMap& w, double tol)
{
    const QuatSides sides(g, w);
    const int points = 4 * g.edge_count() + 2;
    PolynomialComparison cmp;
    cmp.lhs = interpolate_on_circle([&](cx t) { return sides.lhs(t); }, points);
    cmp.rhs = interpolate_on_circle([&](cx t) { return sides.rhs(t); }, points);
    double top = 1.0;
    for (cx v : cmp.lhs)
        top = std::max(top, std::abs(v));
    for (std::size_t k = 0; k < cmp.lhs.size(); ++k)
        cmp.max_coeff_diff = std::max(cmp.max_coeff_diff, std::abs(cmp.lhs[k] - cmp.rhs[k]) / top);
    cmp.lhs_degree = numeric_degree(cmp.lhs);
    cmp.rhs_degree = numeric_degree(cmp.rhs);
    cmp.agree = cmp.max_coeff_diff <= tol && cmp.lhs_degree == cmp.rhs_degree;
    return cmp;
}

} // namespace qqwalk
