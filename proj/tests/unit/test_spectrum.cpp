#include "oracles.hpp"

#include "qqwalk/spectrum.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qqwalk;

namespace
{

const cx i1(0.0, 1.0);
const double r2 = 1.0 / std::sqrt(2.0);
const cx w3(-0.5, std::sqrt(3.0) / 2.0);

const Graph& k3()
{
    static const Graph g = parse_graph("3 3\n0 1\n1 2\n2 0\n");
    return g;
}

const Graph& k13()
{
    static const Graph g = parse_graph("4 3\n0 3\n1 3\n2 3\n");
    return g;
}

ArcWeights ex5_weights() { return parse_coin("a 0 1+i\na 2 1-j\na 4 2\n", k13()); }

std::vector<cx> doubled(std::vector<cx> v)
{
    const auto n = v.size();
    for (std::size_t k = 0; k < n; ++k)
        v.push_back(std::conj(v[k]));
    return v;
}

double dist(std::span<const cx> a, std::span<const cx> b) { return oracle::multiset_distance(a, b); }

const std::vector<cx> kEx5{cx(r2, -r2), cx(r2, -r2), cx(-r2, r2), cx(-r2, r2), cx(r2, r2), cx(r2, r2),
                           cx(-r2, -r2), cx(-r2, -r2), i1, i1, -i1, -i1};

} // namespace

TEST_CASE("Grover spectrum of K3 by direct eigensolve")
{
    const auto r = spectrum_direct(k3(), ArcWeights::grover(k3()));
    CHECK(r.method == Method::direct);
    CHECK(r.psi_spectrum.size() == 12);
    CHECK(dist(r.psi_spectrum, doubled({1.0, 1.0, w3, w3, std::conj(w3), std::conj(w3)})) <= 1e-9);
    CHECK_FALSE(r.cross_check);
}

TEST_CASE("Grover spectrum of K1,3 by direct eigensolve")
{
    const auto r = spectrum_direct(k13(), ArcWeights::grover(k13()));
    CHECK(dist(r.psi_spectrum, doubled({i1, i1, -i1, -i1, 1.0, -1.0})) <= 1e-9);
}

TEST_CASE("right eigenvalues of the two 2x2 examples")
{
    const auto diag = right_eigenvalues(QuatMatrix{{1.0, 0.0}, {0.0, Quaternion::unit_i()}});
    CHECK(dist(diag, std::vector<cx>{1.0, 1.0, i1, -i1}) <= 1e-9);
    const double a = (1.0 + std::sqrt(3.0)) / 2.0;
    const double b = (1.0 - std::sqrt(3.0)) / 2.0;
    const auto full = right_eigenvalues(QuatMatrix{{1.0, Quaternion::unit_j()}, {Quaternion::unit_k(), Quaternion::unit_i()}});
    CHECK(dist(full, std::vector<cx>{cx(a, b), cx(a, -b), cx(b, a), cx(b, -a)}) <= 1e-9);
    CHECK_THROWS_AS(right_eigenvalues(QuatMatrix(2, 3)), ContractViolation);
}

TEST_CASE("quaternionic star example: direct and joint-triangular routes")
{
    const auto direct = spectrum_direct(k13(), ex5_weights());
    CHECK(dist(direct.psi_spectrum, kEx5) <= 1e-9);
    const auto t8 = spectrum_theorem8(k13(), ex5_weights());
    CHECK(dist(t8.psi_spectrum, kEx5) <= 1e-7);
    REQUIRE(t8.cross_check);
    CHECK(t8.cross_check->verdict);
    CHECK(t8.cross_check->max_dist <= 1e-7);
    CHECK(t8.cross_check->against == "direct");

    REQUIRE(direct.class_reps.size() == 3);
    CHECK(direct.class_reps[0].rep.re == doctest::Approx(-r2));
    CHECK(direct.class_reps[0].rep.im == doctest::Approx(r2));
    CHECK(direct.class_reps[1].rep.re == doctest::Approx(0.0));
    CHECK(direct.class_reps[1].rep.im == doctest::Approx(1.0));
    CHECK(direct.class_reps[2].rep.re == doctest::Approx(r2));
    for (const auto& c : direct.class_reps)
        CHECK(c.multiplicity == 2);
}

TEST_CASE("joint-triangular route on commuting Grover cases")
{
    for (const Graph& g : {k3(), cycle_graph(4), complete_graph(4), oracle::petersen_graph()})
    {
        const auto r = spectrum_theorem8(g, ArcWeights::grover(g));
        REQUIRE(r.cross_check);
        CHECK(r.cross_check->verdict);
        CHECK(r.psi_spectrum.size() == static_cast<std::size_t>(4 * g.edge_count()));
    }
}

TEST_CASE("joint-triangular route rejects pairs it cannot triangularize")
{
    std::mt19937_64 rng(41);
    std::vector<Quaternion> q;
    for (int e = 0; e < complete_graph(4).arc_count(); ++e)
        q.push_back(random_quaternion(rng));
    try
    {
        spectrum_theorem8(complete_graph(4), ArcWeights(q));
        FAIL("expected a numerical error");
    }
    catch (const NumericalError& e)
    {
        CHECK(e.method() == "theorem8");
        CHECK(std::string(e.what()).find("direct") != std::string::npos);
    }
}

TEST_CASE("alpha-coin route")
{
    const auto grover = spectrum_theorem10(k3(), 2.0);
    CHECK(dist(grover.psi_spectrum, doubled({1.0, 1.0, w3, w3, std::conj(w3), std::conj(w3)})) <= 1e-7);
    CHECK(std::find(grover.notes.begin(), grover.notes.end(), "real alpha: U+ and U- coincide") != grover.notes.end());

    for (const Graph& g : {k3(), cycle_graph(4), k13(), oracle::petersen_graph()})
        for (const Quaternion& alpha : {Quaternion(2.0), Quaternion(1, 1, 0, 0), Quaternion(1, 1, 1, 1), Quaternion(0.5, 0, 0.5, 0)})
        {
            CAPTURE(alpha);
            const auto r = spectrum_theorem10(g, alpha);
            REQUIRE(r.cross_check);
            CHECK(r.cross_check->verdict);
        }
}

TEST_CASE("Grover route from Spec(T)")
{
    const auto r3 = spectrum_grover(k3());
    CHECK(dist(r3.walk_spectrum, std::vector<cx>{1.0, 1.0, w3, w3, std::conj(w3), std::conj(w3)}) <= 1e-9);
    CHECK(r3.psi_spectrum.size() == 12);
    CHECK(r3.cross_check->verdict);

    const auto star = spectrum_grover(k13());
    CHECK(dist(star.walk_spectrum, std::vector<cx>{i1, i1, -i1, -i1, 1.0, -1.0}) <= 1e-9);
    CHECK(star.cross_check->verdict);
    CHECK_FALSE(star.notes.empty());

    // a single edge: U^Gro = [[0, 1], [1, 0]]
    const auto p2 = spectrum_grover(path_graph(2));
    const ComplexMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(dist(p2.walk_spectrum, oracle::eigenvalues(swap)) <= 1e-12);
    CHECK(p2.cross_check->verdict);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial)
    {
        const Graph g = random_connected_graph(rng, uniform_int(rng, 2, 8));
        const auto r = spectrum_grover(g);
        CHECK(r.walk_spectrum.size() == static_cast<std::size_t>(g.arc_count()));
        CHECK(r.cross_check->verdict);
    }
}

TEST_CASE("direct route against an independent eigensolver")
{
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 5; ++trial)
    {
        const Graph g = random_connected_graph(rng, uniform_int(rng, 3, 7));
        std::vector<Quaternion> q;
        for (int e = 0; e < g.arc_count(); ++e)
            q.push_back(random_quaternion(rng));
        const ArcWeights coin(q);
        const auto r = spectrum_direct(g, coin);
        CHECK(dist(r.psi_spectrum, oracle::eigenvalues(psi(oracle::transition_by_definition(g, q)))) < 1e-7);
    }
}

TEST_CASE("spectra are closed under conjugation and class reps under conjugate input")
{
    std::mt19937_64 rng(45);
    const Graph g = complete_graph(4);
    std::vector<Quaternion> q;
    for (int e = 0; e < g.arc_count(); ++e)
        q.push_back(random_quaternion(rng));
    const auto r = spectrum_direct(g, ArcWeights(q));
    std::vector<cx> conj(r.psi_spectrum.size());
    std::transform(r.psi_spectrum.begin(), r.psi_spectrum.end(), conj.begin(), [](cx z) { return std::conj(z); });
    CHECK(dist(r.psi_spectrum, conj) == 0.0);
    const auto reps = class_reps(r.psi_spectrum);
    const auto reps_conj = class_reps(conj);
    REQUIRE(reps.size() == reps_conj.size());
    for (std::size_t k = 0; k < reps.size(); ++k)
        CHECK(reps[k].rep.value() == reps_conj[k].rep.value());
}

TEST_CASE("compare_spectra")
{
    const auto a = spectrum_direct(k13(), ex5_weights());
    const auto self = compare_spectra(a, a);
    CHECK(self.verdict);
    CHECK(self.max_dist == 0.0);

    auto b = a;
    b.psi_spectrum[3] += 1e-3;
    const auto bad = compare_spectra(a, b);
    CHECK_FALSE(bad.verdict);
    CHECK(bad.max_dist == doctest::Approx(1e-3));
    REQUIRE(bad.culprit);
    CHECK(std::abs(bad.culprit->second - b.psi_spectrum[3]) == 0.0);

    b.psi_spectrum.pop_back();
    const auto mismatch = compare_spectra(a, b);
    CHECK(mismatch.size_mismatch);
    CHECK(mismatch.size == 12);
    CHECK(mismatch.other_size == 11);
    CHECK_FALSE(mismatch.verdict);
}

TEST_CASE("method names")
{
    for (Method m : {Method::direct, Method::theorem8, Method::theorem10, Method::grover})
        CHECK(parse_method(to_string(m)) == m);
    CHECK_THROWS_AS(parse_method("eigen"), ContractViolation);
}
