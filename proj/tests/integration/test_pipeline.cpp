// End-to-end runs: files on disk -> CLI -> JSON/CSV, checked against oracles
// that never touch the library's eigen or determinant code.

#include "oracles.hpp"

#include "qqwalk/cli.hpp"
#include "qqwalk/quat_matrix.hpp"
#include "qqwalk/sampling.hpp"
#include "qqwalk/walk_matrices.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qqwalk;
using nlohmann::json;
namespace fs = std::filesystem;

namespace
{

class Workspace
{
public:
    Workspace() : dir_(fs::temp_directory_path() / ("qqwalk_it_" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string graph(const std::string& name, const Graph& g) const
    {
        std::ostringstream out;
        out << "# " << name << '\n' << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return write(name + ".g", out.str());
    }

    std::string coin(const std::string& name, std::span<const Quaternion> q) const
    {
        std::ostringstream out;
        for (std::size_t e = 0; e < q.size(); ++e)
            out << "a " << e << ' ' << to_string(q[e]) << '\n';
        return write(name + ".w", out.str());
    }

    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(dir_ / name) << text;
        return (dir_ / name).string();
    }

private:
    fs::path dir_;
};

json run_json(const std::vector<std::string>& args, int expected_exit = 0)
{
    const auto r = cli::run(args);
    INFO(r.err);
    REQUIRE(r.exit_code == expected_exit);
    return json::parse(r.out);
}

std::vector<cx> expand(const json& rows)
{
    std::vector<cx> out;
    for (const auto& r : rows)
        for (int k = 0; k < r["mult"].get<int>(); ++k)
            out.emplace_back(r["re"].get<double>(), r["im"].get<double>());
    return out;
}

cx to_cx(const json& v) { return {v["re"].get<double>(), v["im"].get<double>()}; }

} // namespace

TEST_CASE("Petersen Grover walk through files matches the closed form")
{
    // Adjacency spectrum {3, 1^5, (-2)^4}; T = A/3; m - n = 5 extra copies of ±1.
    Workspace ws;
    const auto path = ws.graph("petersen", oracle::petersen_graph());
    std::vector<cx> walk{1.0, 1.0};
    auto push = [&](double lt, int mult) {
        const double s = std::sqrt(1.0 - lt * lt);
        for (int k = 0; k < mult; ++k)
        {
            walk.emplace_back(lt, s);
            walk.emplace_back(lt, -s);
        }
    };
    push(1.0 / 3.0, 5);
    push(-2.0 / 3.0, 4);
    for (int k = 0; k < 5; ++k)
    {
        walk.emplace_back(1.0);
        walk.emplace_back(-1.0);
    }
    std::vector<cx> psi_walk = walk;
    for (cx z : walk)
        psi_walk.push_back(std::conj(z));

    const auto grover = run_json({"grover", "--graph", path});
    CHECK(oracle::multiset_distance(expand(grover["walk_spectrum"]), walk) < 1e-9);
    CHECK(oracle::multiset_distance(expand(grover["psi_spectrum"]), psi_walk) < 1e-9);

    const auto direct = run_json({"spectrum", "--graph", path, "--grover"});
    CHECK(oracle::multiset_distance(expand(direct["psi_spectrum"]), psi_walk) < 1e-9);

    const auto t8 = run_json({"spectrum", "--graph", path, "--grover", "--method", "theorem8"});
    CHECK(t8["cross_check"]["verdict"] == true);
    CHECK(oracle::multiset_distance(expand(t8["psi_spectrum"]), psi_walk) < 1e-7);
}

TEST_CASE("random coins written to disk: direct spectrum matches an independent eigensolver")
{
    Workspace ws;
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 6; ++trial)
    {
        const Graph g = random_connected_graph(rng, uniform_int(rng, 3, 7));
        std::vector<Quaternion> q;
        for (int e = 0; e < g.arc_count(); ++e)
            q.push_back(random_quaternion(rng));
        const auto gp = ws.graph("g" + std::to_string(trial), g);
        const auto cp = ws.coin("q" + std::to_string(trial), q);

        const auto j = run_json({"spectrum", "--graph", gp, "--coin", cp});
        const auto want = oracle::eigenvalues(psi(oracle::transition_by_definition(g, q)));
        const auto got = expand(j["psi_spectrum"]);
        REQUIRE(got.size() == want.size());
        CHECK(oracle::multiset_distance(got, want) < 1e-7);

        const auto csv = cli::run({"spectrum", "--graph", gp, "--coin", cp, "--output", "csv"});
        CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == static_cast<long>(j["psi_spectrum"].size()) + 1);
    }
}

TEST_CASE("quaternionic identity through files: reported sides match oracle determinants")
{
    Workspace ws;
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 4; ++trial)
    {
        const Graph g = random_connected_graph(rng, uniform_int(rng, 3, 6));
        std::vector<Quaternion> w;
        for (int e = 0; e < g.arc_count(); ++e)
            w.push_back(random_quaternion(rng));
        const auto gp = ws.graph("z" + std::to_string(trial), g);
        const auto wp = ws.coin("w" + std::to_string(trial), w);

        const auto j = run_json({"zeta-quat", "--graph", gp, "--coin", wp, "--samples", "5", "--seed",
                                 std::to_string(trial)});
        CHECK(j["verdict"] == true);
        CHECK(j["polynomial"]["agree"] == true);
        const auto big_u = psi(oracle::transition_by_definition(g, w));
        for (const auto& s : j["samples"])
        {
            const cx t = to_cx(s["t"]);
            ComplexMatrix m(big_u.rows(), big_u.cols());
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m(r, c) = (r == c ? 1.0 : 0.0) - t * big_u(r, c);
            const cx want = oracle::eigen_determinant(m);
            CHECK(std::abs(to_cx(s["lhs"]) - want) <= 1e-8 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("unitarity verdicts from files agree with the numerical check")
{
    Workspace ws;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial)
    {
        const Graph g = random_connected_graph(rng, uniform_int(rng, 3, 7));
        // unitary per-vertex coin: q0 in [0, 2/d], |Im q|^2 = 2 q0 / d - q0^2
        std::vector<Quaternion> per_vertex;
        for (int v = 0; v < g.vertex_count(); ++v)
        {
            const double d = g.degree(v);
            const double q0 = uniform(rng, 0.0, 2.0 / d);
            const double r = std::sqrt(std::max(0.0, 2.0 * q0 / d - q0 * q0));
            Quaternion dir{0.0, uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
            dir = dir / dir.norm();
            per_vertex.push_back(Quaternion{q0, 0.0, 0.0, 0.0} + dir * r);
        }
        const auto coin = ArcWeights::per_vertex(g, per_vertex);
        const auto q = coin.values();
        const auto gp = ws.graph("u" + std::to_string(trial), g);

        const auto good = run_json({"unitarity", "--graph", gp, "--coin", ws.coin("good", q), "--tol", "1e-8"});
        CHECK(good["unitary"] == true);
        CHECK(good["agrees"] == true);

        std::vector<Quaternion> bent(q.begin(), q.end());
        bent[0] = bent[0] + Quaternion{0.05, 0.0, 0.0, 0.0};
        const auto bad = run_json({"unitarity", "--graph", gp, "--coin", ws.coin("bad", bent), "--tol", "1e-8"});
        CHECK(bad["unitary"] == false);
        CHECK(bad["numeric_unitary"] == false);
        CHECK(bad["agrees"] == true);
    }
}
