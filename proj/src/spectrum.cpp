#include "qqwalk/spectrum.hpp"

#include "qqwalk/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace qqwalk
{

namespace
{

constexpr double kClassTol = 1e-6;
constexpr double kTreeTol = 1e-6;

bool by_re_im(cx a, cx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); }

std::vector<cx> finalize(std::span<const cx> values)
{
    auto out = pair_conjugates(values);
    std::sort(out.begin(), out.end(), by_re_im);
    return out;
}

void append_quadratic_roots(std::vector<cx>& out, cx mu, cx xi)
{
    // A discriminant at rounding level is a double root; the square root would
    // otherwise blow 1e-16 noise up to 1e-8.
    cx disc = mu * mu - 4.0 * (xi - 1.0);
    const double scale = std::max({1.0, std::norm(mu), 4.0 * std::abs(xi - 1.0)});
    if (std::abs(disc) <= 16.0 * std::numeric_limits<double>::epsilon() * scale)
        disc = 0.0;
    const cx root = std::sqrt(disc);
    out.push_back(0.5 * (mu + root));
    out.push_back(0.5 * (mu - root));
}

void remove_one(std::vector<cx>& values, cx target, const char* method)
{
    auto best = values.end();
    double best_d = kTreeTol;
    for (auto it = values.begin(); it != values.end(); ++it)
        if (std::abs(*it - target) <= best_d)
        {
            best_d = std::abs(*it - target);
            best = it;
        }
    if (best == values.end())
        throw NumericalError(method,
                             "internal consistency: tree case expects eigenvalue " +
                                 std::to_string(target.real()) + " among the quadratic-formula values",
                             best_d);
    values.erase(best);
}

// Non-trees get `copies` of each of ±1; trees lose `copies_removed` of each.
void pad_or_trim(std::vector<cx>& values, const Graph& g, int copies, int copies_removed, const char* method)
{
    if (g.is_tree())
    {
        for (int i = 0; i < copies_removed; ++i)
        {
            remove_one(values, 1.0, method);
            remove_one(values, -1.0, method);
        }
        return;
    }
    for (int i = 0; i < copies; ++i)
    {
        values.push_back(1.0);
        values.push_back(-1.0);
    }
}

void attach_cross_check(SpectrumReport& report, const Graph& g, const CoinMap& q)
{
    const auto direct = spectrum_direct(g, q);
    report.cross_check = compare_spectra(report, direct, kRouteTolerance);
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

} // namespace

std::string_view to_string(Method m) noexcept
{
    switch (m)
    {
    case Method::direct: return "direct";
    case Method::theorem8: return "theorem8";
    case Method::theorem10: return "theorem10";
    case Method::grover: return "grover";
    }
    return "direct";
}

Method parse_method(std::string_view name)
{
    for (Method m : {Method::direct, Method::theorem8, Method::theorem10, Method::grover})
        if (to_string(m) == name)
            return m;
    throw ContractViolation("unknown method '" + std::string(name) + "'");
}

std::vector<cx> right_eigenvalues(const QuatMatrix& m)
{
    if (!m.is_square())
        throw ContractViolation("right_eigenvalues: matrix must be square");
    return finalize(eigenvalues(psi(m)).eigenvalues);
}

std::vector<ClassRep> class_reps(std::span<const cx> psi_spectrum)
{
    std::vector<SimilarityClassRep> reps;
    reps.reserve(psi_spectrum.size());
    for (cx z : psi_spectrum)
        reps.push_back(canonical_class_rep(z));
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.re != b.re ? a.re < b.re : a.im < b.im; });

    std::vector<ClassRep> out;
    for (const auto& r : reps)
    {
        auto hit = std::find_if(out.begin(), out.end(), [&](const ClassRep& c) {
            return std::hypot(c.rep.re - r.re, c.rep.im - r.im) <= kClassTol;
        });
        if (hit == out.end())
        {
            out.push_back({r, 1});
            continue;
        }
        ++hit->multiplicity;
    }
    for (auto& c : out)
        c.multiplicity = (c.multiplicity + 1) / 2;
    return out;
}

SpectrumReport spectrum_direct(const Graph& g, const CoinMap& q)
{
    SpectrumReport report;
    report.method = Method::direct;
    report.psi_spectrum = finalize(eigenvalues(psi(build_U(g, q))).eigenvalues);
    report.class_reps = class_reps(report.psi_spectrum);
    return report;
}

SpectrumReport spectrum_theorem8(const Graph& g, const CoinMap& q)
{
    const auto [w, dw] = build_W_Dw(g, q);
    const ComplexMatrix wt = psi(w.transpose());
    const ComplexMatrix d = psi(dw);

    Triangularization tri;
    try
    {
        tri = simultaneous_triangularize(wt, d);
    }
    catch (const NumericalError& e)
    {
        throw NumericalError("theorem8",
                             std::string("psi(W^T) and psi(D_w) could not be triangularized together; use the "
                                         "direct method (") + e.what() + ")",
                             e.residual());
    }

    std::vector<cx> values;
    values.reserve(2 * tri.diag_a.size());
    for (std::size_t r = 0; r < tri.diag_a.size(); ++r)
        append_quadratic_roots(values, tri.diag_a[r], tri.diag_b[r]);
    const int extra = 2 * (g.edge_count() - g.vertex_count());
    pad_or_trim(values, g, extra, 2, "theorem8");

    SpectrumReport report;
    report.method = Method::theorem8;
    report.psi_spectrum = finalize(values);
    report.class_reps = class_reps(report.psi_spectrum);
    report.notes.push_back("joint triangularization via " + tri.route + " (residual " + fmt(tri.residual) + ")");
    attach_cross_check(report, g, q);
    return report;
}

SpectrumReport spectrum_theorem10(const Graph& g, const Quaternion& alpha)
{
    const double spread = alpha.imag_norm();
    const cx alpha_plus(alpha.x0, spread);
    const ComplexMatrix t_transposed = transition_matrix_T(g).transpose();

    std::vector<cx> plus;
    std::vector<cx> minus;
    for (cx mu : eigenvalues(alpha_plus * t_transposed).eigenvalues)
        append_quadratic_roots(plus, mu, alpha_plus);
    for (cx mu : eigenvalues(std::conj(alpha_plus) * t_transposed).eigenvalues)
        append_quadratic_roots(minus, mu, std::conj(alpha_plus));

    SpectrumReport report;
    report.method = Method::theorem10;

    std::vector<cx> plus_conj(plus.size());
    std::transform(plus.begin(), plus.end(), plus_conj.begin(), [](cx z) { return std::conj(z); });
    const auto pairing = match_multisets(plus_conj, minus);
    if (pairing.size_mismatch || pairing.max_dist > kRouteTolerance)
        report.notes.push_back("Spec(U-) differs from the conjugate of Spec(U+) by " + fmt(pairing.max_dist));

    std::vector<cx> values = plus;
    values.insert(values.end(), minus.begin(), minus.end());
    const int extra = 2 * (g.edge_count() - g.vertex_count());
    pad_or_trim(values, g, extra, 2, "theorem10");

    report.psi_spectrum = finalize(values);
    report.class_reps = class_reps(report.psi_spectrum);
    if (spread == 0.0)
        report.notes.push_back("real alpha: U+ and U- coincide");
    attach_cross_check(report, g, ArcWeights::alpha_coin(g, alpha));
    return report;
}

SpectrumReport spectrum_grover(const Graph& g)
{
    constexpr double kStochasticTol = 1e-9;
    std::vector<cx> walk;
    for (cx lt : eigenvalues(transition_matrix_T(g)).eigenvalues)
    {
        double x = lt.real();
        if (std::abs(x) > 1.0 + kStochasticTol || std::abs(lt.imag()) > kStochasticTol)
            throw NumericalError("grover", "eigenvalue of T outside [-1, 1]",
                                 std::max(std::abs(x) - 1.0, std::abs(lt.imag())));
        // ±1 is an exact eigenvalue of T; keep rounding noise out of the square root
        const bool edge = 1.0 - std::abs(x) < 1e-12;
        if (edge)
            x = x > 0.0 ? 1.0 : -1.0;
        const double s = edge ? 0.0 : std::sqrt(std::max(0.0, 1.0 - x * x));
        walk.emplace_back(x, s);
        walk.emplace_back(x, -s);
    }
    pad_or_trim(walk, g, g.edge_count() - g.vertex_count(), 1, "grover");

    SpectrumReport report;
    report.method = Method::grover;
    report.walk_spectrum = finalize(walk);
    std::vector<cx> doubled = report.walk_spectrum;
    for (cx z : report.walk_spectrum)
        doubled.push_back(std::conj(z));
    report.psi_spectrum = finalize(doubled);
    report.class_reps = class_reps(report.psi_spectrum);
    if (g.is_tree())
        report.notes.push_back("tree: one 1 and one -1 removed from the mapped values; checked against the direct "
                               "eigensolve");
    attach_cross_check(report, g, ArcWeights::grover(g));
    return report;
}

SpectrumComparison compare_spectra(const SpectrumReport& a, const SpectrumReport& b, double tol)
{
    SpectrumComparison cmp;
    cmp.against = std::string(to_string(b.method));
    cmp.size = a.psi_spectrum.size();
    cmp.other_size = b.psi_spectrum.size();
    cmp.tolerance = tol;
    const auto match = match_multisets(a.psi_spectrum, b.psi_spectrum);
    cmp.size_mismatch = match.size_mismatch;
    cmp.max_dist = match.max_dist;
    if (match.worst)
        cmp.culprit = std::make_pair(a.psi_spectrum[*match.worst], b.psi_spectrum[match.assignment[*match.worst]]);
    cmp.verdict = !cmp.size_mismatch && cmp.max_dist <= tol;
    return cmp;
}

} // namespace qqwalk
