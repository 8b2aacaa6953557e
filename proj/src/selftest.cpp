#include "qqwalk/cli.hpp"

#include "qqwalk/complex_linalg.hpp"
#include "qqwalk/sampling.hpp"
#include "qqwalk/spectrum.hpp"
#include "qqwalk/zeta.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace qqwalk::cli
{

namespace
{

constexpr double kGoldenTol = 1e-9;

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::string load_text(const std::optional<std::filesystem::path>& dir, const char* name, std::string_view fallback)
{
    if (!dir)
        return std::string(fallback);
    std::ifstream in(*dir / name);
    if (!in)
        throw ParseError(0, "cannot open fixture " + (*dir / name).string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<cx> with_conjugates(std::vector<cx> values)
{
    const auto n = values.size();
    for (std::size_t i = 0; i < n; ++i)
        values.push_back(std::conj(values[i]));
    return values;
}

std::string distance_detail(std::span<const cx> got, std::span<const cx> want, double tol, bool& ok)
{
    const auto m = match_multisets(got, want);
    ok = !m.size_mismatch && m.max_dist <= tol;
    if (m.size_mismatch)
        return "size " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
    return "max_dist " + sci(m.max_dist);
}

class Suite
{
public:
    void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body)
    {
        Check c{name, false, {}};
        try
        {
            std::tie(c.passed, c.detail) = body();
        }
        catch (const std::exception& e)
        {
            c.detail = std::string("threw: ") + e.what();
        }
        checks_.push_back(std::move(c));
    }

    void spectrum(const std::string& name, const std::function<std::vector<cx>()>& got, std::vector<cx> want,
                  double tol = kGoldenTol)
    {
        check(name, [&] {
            bool ok = false;
            auto detail = distance_detail(got(), want, tol, ok);
            return std::make_pair(ok, detail);
        });
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::vector<Check> checks_;
};

} // namespace

std::vector<Check> selftest_checks(const std::optional<std::filesystem::path>& fixtures, std::uint64_t seed)
{
    Suite suite;
    const double r2 = 1.0 / std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    const cx i(0.0, 1.0);
    const cx w(-0.5, s3 / 2.0);

    std::optional<Graph> k3;
    std::optional<Graph> k13;
    suite.check("fixture_k3_graph", [&] {
        k3 = parse_graph(load_text(fixtures, "k3.g", golden::k3_g));
        return std::make_pair(k3->vertex_count() == 3 && k3->edge_count() == 3, std::string());
    });
    suite.check("fixture_k13_graph", [&] {
        k13 = parse_graph(load_text(fixtures, "k13.g", golden::k13_g));
        return std::make_pair(k13->vertex_count() == 4 && k13->edge_count() == 3 && k13->is_tree(), std::string());
    });
    if (!k3 || !k13)
        return suite.take();

    auto coin = [&](const Graph& g, const char* name, std::string_view fallback) {
        return parse_coin(load_text(fixtures, name, fallback), g);
    };

    // Grover walk on K3: {1, 1, w, w, w̄, w̄} with w = (−1 + √3 i)/2.
    const std::vector<cx> k3_walk{1.0, 1.0, w, w, std::conj(w), std::conj(w)};
    suite.spectrum("k3_grover_direct",
                   [&] { return spectrum_direct(*k3, coin(*k3, "k3_grover.w", golden::k3_grover_w)).psi_spectrum; },
                   with_conjugates(k3_walk));
    suite.spectrum("k3_grover_mapping", [&] { return spectrum_grover(*k3).walk_spectrum; }, k3_walk);

    // Grover walk on K1,3: {i, i, −i, −i, 1, −1}.
    const std::vector<cx> k13_walk{i, i, -i, -i, 1.0, -1.0};
    suite.spectrum(
        "k13_grover_direct",
        [&] { return spectrum_direct(*k13, coin(*k13, "k13_grover.w", golden::k13_grover_w)).psi_spectrum; },
        with_conjugates(k13_walk));
    suite.spectrum("k13_grover_mapping", [&] { return spectrum_grover(*k13).walk_spectrum; }, k13_walk);

    suite.spectrum("diagonal_right_eigenvalues",
                   [&] { return right_eigenvalues(QuatMatrix{{1.0, 0.0}, {0.0, Quaternion::unit_i()}}); },
                   {1.0, 1.0, i, -i});
    const double a = (1.0 + s3) / 2.0;
    const double b = (1.0 - s3) / 2.0;
    suite.spectrum("offdiagonal_right_eigenvalues",
                   [&] {
                       return right_eigenvalues(
                           QuatMatrix{{1.0, Quaternion::unit_j()}, {Quaternion::unit_k(), Quaternion::unit_i()}});
                   },
                   {cx(a, b), cx(a, -b), cx(b, a), cx(b, -a)});

    const std::vector<cx> ex5{cx(r2, -r2), cx(r2, -r2), cx(-r2, r2), cx(-r2, r2), cx(r2, r2), cx(r2, r2),
                              cx(-r2, -r2), cx(-r2, -r2), i, i, -i, -i};
    suite.spectrum("weighted_star_direct",
                   [&] { return spectrum_direct(*k13, coin(*k13, "ex5.w", golden::ex5_w)).psi_spectrum; }, ex5);
    suite.spectrum("weighted_star_theorem8",
                   [&] { return spectrum_theorem8(*k13, coin(*k13, "ex5.w", golden::ex5_w)).psi_spectrum; }, ex5,
                   kRouteTolerance);
    suite.check("weighted_star_class_reps", [&] {
        const auto reps = spectrum_direct(*k13, coin(*k13, "ex5.w", golden::ex5_w)).class_reps;
        const std::vector<std::pair<double, double>> want{{-r2, r2}, {0.0, 1.0}, {r2, r2}};
        bool ok = reps.size() == want.size();
        for (std::size_t k = 0; ok && k < reps.size(); ++k)
            ok = std::hypot(reps[k].rep.re - want[k].first, reps[k].rep.im - want[k].second) <= kGoldenTol &&
                 reps[k].multiplicity == 2;
        return std::make_pair(ok, std::to_string(reps.size()) + " classes");
    });
    suite.check("weighted_star_identity", [&] {
        const std::vector<cx> ts{0.3, cx(0.3, 0.2), -0.7};
        const auto r = quaternionic_identity(*k13, coin(*k13, "ex5.w", golden::ex5_w), ts, 1e-8);
        return std::make_pair(r.verdict, "max_rel_err " + sci(r.max_rel_err));
    });
    suite.check("k3_ihara_closed_form", [&] {
        double worst = 0.0;
        for (cx t : default_samples(8, seed))
        {
            const cx closed = (1.0 - t * t * t) * (1.0 - t * t * t);
            worst = std::max({worst, relative_error(ihara_hashimoto(*k3, t), closed),
                              relative_error(ihara_bass(*k3, t), closed)});
        }
        return std::make_pair(worst <= 1e-10, "max_rel_err " + sci(worst));
    });

    std::mt19937_64 rng(seed);
    for (int k = 1; k <= 20; ++k)
    {
        char name[32];
        std::snprintf(name, sizeof name, "random_%02d", k);
        const int n = uniform_int(rng, 4, 8);
        const Graph g = random_connected_graph(rng, n);
        const Quaternion alpha = random_quaternion(rng);
        std::vector<Quaternion> weights;
        for (int e = 0; e < g.arc_count(); ++e)
            weights.push_back(random_quaternion(rng));
        suite.check(name, [&] {
            std::string failures;
            auto route = [&](const char* label, const SpectrumReport& r) {
                if (!r.cross_check || !r.cross_check->verdict)
                    failures += std::string(failures.empty() ? "" : ", ") + label;
            };
            route("theorem10", spectrum_theorem10(g, alpha));
            route("theorem8", spectrum_theorem8(g, ArcWeights::alpha_coin(g, alpha)));
            route("grover", spectrum_grover(g));
            const auto id = quaternionic_identity(g, ArcWeights(weights), default_samples(8, seed + k), 1e-8);
            if (!id.verdict)
                failures += std::string(failures.empty() ? "" : ", ") + "quaternionic identity";
            const std::string shape = "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
            return std::make_pair(failures.empty(), failures.empty() ? shape : shape + " failed: " + failures);
        });
    }
    return suite.take();
}

} // namespace qqwalk::cli
