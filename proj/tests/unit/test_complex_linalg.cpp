#include "oracles.hpp"

#include "qqwalk/complex_linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace qqwalk;

namespace
{

const cx i1(0.0, 1.0);

double brute_bottleneck(std::vector<cx> a, std::vector<cx> b)
{
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = 1e300;
    do
    {
        double worst = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            worst = std::max(worst, std::abs(a[k] - b[perm[k]]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

TEST_CASE("eigenvalues agree with an independent solver")
{
    std::mt19937_64 rng(99);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 30u})
    {
        CAPTURE(n);
        const auto a = oracle::random_complex_matrix(rng, n, n);
        const auto mine = eigenvalues(a);
        CHECK(mine.converged);
        CHECK(oracle::multiset_distance(mine.eigenvalues, oracle::eigenvalues(a)) < 1e-9);
    }
}

TEST_CASE("eigenvalues of structured matrices")
{
    // Jordan block: defective, eigenvalue 2 three times
    const ComplexMatrix jordan{{2.0, 1.0, 0.0}, {0.0, 2.0, 1.0}, {0.0, 0.0, 2.0}};
    for (cx z : eigenvalues(jordan).eigenvalues)
        CHECK(std::abs(z - 2.0) < 1e-4);
    // permutation of order 3: cube roots of unity
    const ComplexMatrix cyc{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}};
    const cx w(-0.5, std::sqrt(3.0) / 2.0);
    CHECK(oracle::multiset_distance(eigenvalues(cyc).eigenvalues, std::vector<cx>{1.0, w, std::conj(w)}) < 1e-12);
    // zero and diagonal
    CHECK(oracle::multiset_distance(eigenvalues(ComplexMatrix(4, 4)).eigenvalues, std::vector<cx>(4, 0.0)) == 0.0);
    const ComplexMatrix diag{{3.0, 0.0}, {0.0, i1}};
    CHECK(oracle::multiset_distance(eigenvalues(diag).eigenvalues, std::vector<cx>{3.0, i1}) < 1e-15);
    // badly scaled: balancing keeps this accurate
    const ComplexMatrix scaled{{1.0, 1e8}, {1e-8, 1.0}};
    CHECK(oracle::multiset_distance(eigenvalues(scaled).eigenvalues, std::vector<cx>{0.0, 2.0}) < 1e-9);
    CHECK_THROWS_AS(eigenvalues(ComplexMatrix(2, 3)), ContractViolation);
}

TEST_CASE("Schur form is unitary and reproduces A")
{
    std::mt19937_64 rng(8);
    for (std::size_t n : {1u, 4u, 12u})
    {
        const auto a = oracle::random_complex_matrix(rng, n, n);
        const auto s = schur(a);
        CHECK(is_unitary(s.q, 1e-12));
        CHECK(strictly_lower_max(s.t) == 0.0);
        CHECK(max_abs_diff(s.q * s.t * conj_transpose(s.q), a) < 1e-12);
    }
}

TEST_CASE("determinant against cofactor expansion and Eigen")
{
    std::mt19937_64 rng(12);
    for (std::size_t n : {1u, 2u, 3u, 5u, 6u})
    {
        const auto a = oracle::random_complex_matrix(rng, n, n);
        const cx want = oracle::cofactor_determinant(a);
        CHECK(std::abs(determinant(a) - want) < 1e-12 * std::max(1.0, std::abs(want)));
    }
    const auto big = oracle::random_complex_matrix(rng, 20, 20);
    const cx want = oracle::eigen_determinant(big);
    CHECK(std::abs(determinant(big) - want) < 1e-10 * std::abs(want));
    CHECK(determinant(ComplexMatrix{{1.0, 2.0}, {2.0, 4.0}}) == cx(0.0));
    CHECK(determinant(ComplexMatrix::identity(7)) == cx(1.0));
}

TEST_CASE("inverse")
{
    std::mt19937_64 rng(13);
    const auto a = oracle::random_complex_matrix(rng, 6, 6);
    CHECK(max_abs_diff(a * inverse(a), ComplexMatrix::identity(6)) < 1e-12);
    CHECK_THROWS_AS(inverse(ComplexMatrix{{1.0, 2.0}, {2.0, 4.0}}), DomainError);
}

TEST_CASE("right singular values")
{
    const ComplexMatrix a{{3.0, 0.0}, {0.0, -2.0 * i1}, {0.0, 0.0}};
    const auto s = svd_right(a);
    REQUIRE(s.values.size() == 2);
    CHECK(s.values[0] == doctest::Approx(3.0));
    CHECK(s.values[1] == doctest::Approx(2.0));
    CHECK(is_unitary(s.v, 1e-12));
    std::mt19937_64 rng(14);
    const auto r = oracle::random_complex_matrix(rng, 7, 4);
    const auto sv = svd_right(r);
    const Eigen::JacobiSVD<Eigen::MatrixXcd> ref(oracle::to_eigen(r));
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(sv.values[k] == doctest::Approx(ref.singularValues()(static_cast<Eigen::Index>(k))).epsilon(1e-10));
}

TEST_CASE("simultaneous triangularization of a commuting pair uses Schur")
{
    std::mt19937_64 rng(15);
    const auto x = oracle::random_complex_matrix(rng, 5, 5);
    const ComplexMatrix b = x * x + 2.0 * x;   // polynomial in x commutes with x
    const auto tri = simultaneous_triangularize(x, b);
    CHECK(tri.route == "schur");
    CHECK(tri.residual < 1e-8);
    CHECK(is_unitary(tri.p, 1e-10));
    for (std::size_t r = 0; r < 5; ++r)
        CHECK(std::abs(tri.diag_b[r] - (tri.diag_a[r] * tri.diag_a[r] + 2.0 * tri.diag_a[r])) < 1e-9);
}

TEST_CASE("simultaneous triangularization of a non-commuting triangularizable pair")
{
    std::mt19937_64 rng(16);
    // common upper-triangular pair conjugated by a random unitary
    ComplexMatrix ta(4, 4);
    ComplexMatrix tb(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = r; c < 4; ++c)
        {
            ta(r, c) = oracle::random_complex(rng);
            tb(r, c) = oracle::random_complex(rng);
        }
    const auto q = schur(oracle::random_complex_matrix(rng, 4, 4)).q;
    const ComplexMatrix a = q * ta * conj_transpose(q);
    const ComplexMatrix b = q * tb * conj_transpose(q);
    REQUIRE(commutator_norm(a, b) > 1e-3);
    const auto tri = simultaneous_triangularize(a, b);
    CHECK(tri.route == "deflation");
    CHECK(tri.residual < 1e-8);
    std::vector<cx> want_a;
    std::vector<cx> want_b;
    for (std::size_t r = 0; r < 4; ++r)
    {
        want_a.push_back(ta(r, r));
        want_b.push_back(tb(r, r));
    }
    // pairs, not just the two multisets, must survive
    for (std::size_t r = 0; r < 4; ++r)
    {
        bool found = false;
        for (std::size_t s = 0; s < 4; ++s)
            found = found || (std::abs(tri.diag_a[r] - want_a[s]) < 1e-8 && std::abs(tri.diag_b[r] - want_b[s]) < 1e-8);
        CHECK(found);
    }
}

TEST_CASE("pairs without a common eigenvector are rejected")
{
    const ComplexMatrix a{{1.0, 0.0}, {0.0, 2.0}};
    const ComplexMatrix b{{1.0, 1.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(simultaneous_triangularize(a, b), NumericalError);
}

TEST_CASE("pair_conjugates")
{
    const std::vector<cx> noisy{cx(0.5, 0.5 + 1e-12), cx(0.5 - 1e-12, -0.5), cx(1.0, 1e-13), cx(-1.0, -1e-13)};
    const auto out = pair_conjugates(noisy);
    CHECK(out[0] == std::conj(out[1]));
    CHECK(out[2] == cx(1.0, 0.0));
    CHECK(out[3] == cx(-1.0, 0.0));
}

TEST_CASE("bottleneck matching matches brute force")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial)
    {
        std::vector<cx> a;
        std::vector<cx> b;
        for (int k = 0; k < 6; ++k)
        {
            a.push_back(oracle::random_complex(rng));
            b.push_back(oracle::random_complex(rng));
        }
        const auto m = match_multisets(a, b);
        CHECK(m.max_dist == doctest::Approx(brute_bottleneck(a, b)).epsilon(1e-14));
        REQUIRE(m.worst.has_value());
        CHECK(std::abs(a[*m.worst] - b[m.assignment[*m.worst]]) == doctest::Approx(m.max_dist));
    }
    const std::vector<cx> x{1.0, 2.0};
    const std::vector<cx> y{1.0};
    CHECK(match_multisets(x, y).size_mismatch);
    CHECK_FALSE(multisets_match(x, y));
    CHECK(multisets_match(x, std::vector<cx>{2.0, 1.0 + 1e-9}, 1e-8));
}
