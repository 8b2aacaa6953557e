#pragma once

// Randomized property checks shared by the property suite and the acceptance
// binary. Each returns how many of `count` cases failed and the worst residual.

#include "oracles.hpp"

#include "qqwalk/quat_matrix.hpp"
#include "qqwalk/walk_matrices.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace property
{

using namespace qqwalk;

struct Outcome
{
    int cases = 0;
    int failures = 0;
    double worst = 0.0;
    std::string first_failure;

    void record(bool ok, double residual, const std::string& what)
    {
        ++cases;
        worst = std::max(worst, residual);
        if (!ok && failures++ == 0)
            first_failure = what;
    }
    bool passed() const { return failures == 0; }
};

/// Quaternion with components in [−1, 1) scaled by 10^[−3, 3).
inline Quaternion random_scaled_quaternion(std::mt19937_64& rng)
{
    return random_quaternion(rng) * std::pow(10.0, uniform(rng, -3.0, 3.0));
}

/// Per-vertex coin meeting the closed-form unitarity condition:
/// q0 ∈ [0, 2/d], |Im q|² = 2q0/d − q0², one random direction per vertex.
inline ArcWeights random_unitary_coin(std::mt19937_64& rng, const Graph& g)
{
    std::vector<Quaternion> per_vertex;
    for (int v = 0; v < g.vertex_count(); ++v)
    {
        const double d = g.degree(v);
        const double q0 = uniform(rng, 0.0, 2.0 / d);
        const double r = std::sqrt(std::max(0.0, 2.0 * q0 / d - q0 * q0));
        Quaternion dir{0.0, uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        dir = dir / dir.norm();
        per_vertex.push_back(Quaternion{q0, 0.0, 0.0, 0.0} + dir * r);
    }
    return ArcWeights::per_vertex(g, per_vertex);
}

/// ψ(MN) = ψ(M)ψ(N), ψ(M + N') = ψ(M) + ψ(N'), ψ(M*) = ψ(M)^H on random shapes.
inline Outcome psi_homomorphism(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    Outcome out;
    for (int c = 0; c < count; ++c)
    {
        const auto r = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const auto k = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const auto s = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        const QuatMatrix m = oracle::random_quat_matrix(rng, r, k);
        const QuatMatrix n = oracle::random_quat_matrix(rng, k, s);
        const QuatMatrix m2 = oracle::random_quat_matrix(rng, r, k);
        const double residual = std::max({max_abs_diff(psi(m * n), psi(m) * psi(n)),
                                          max_abs_diff(psi(m + m2), psi(m) + psi(m2)),
                                          max_abs_diff(psi(conj_transpose(m)), conj_transpose(psi(m)))});
        out.record(residual <= 1e-12, residual, "case " + std::to_string(c));
    }
    return out;
}

/// Eigenvalues of ψ(M) are closed under conjugation. Checked structurally
/// (J·conj ψ(M) = ψ(M)·J) and on the computed spectrum.
inline Outcome conjugate_pairing(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    Outcome out;
    for (int c = 0; c < count; ++c)
    {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 5));
        const ComplexMatrix p = psi(oracle::random_quat_matrix(rng, n, n));
        ComplexMatrix jm(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
        {
            jm(i, n + i) = -1.0;
            jm(n + i, i) = 1.0;
        }
        const double structural = max_abs_diff(jm * conj(p), p * jm);
        const auto values = eigenvalues(p).eigenvalues;
        std::vector<cx> conjugated;
        for (cx z : values)
            conjugated.push_back(std::conj(z));
        const double spectral = oracle::multiset_distance(values, conjugated);
        out.record(structural <= 1e-15 && spectral <= 1e-8, std::max(structural, spectral),
                   "case " + std::to_string(c) + " n=" + std::to_string(n));
    }
    return out;
}

/// |pq| = |p||q|, and the product agrees with the 4×4 real matrix form.
inline Outcome norm_multiplicativity(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    Outcome out;
    for (int c = 0; c < count; ++c)
    {
        const Quaternion p = random_scaled_quaternion(rng);
        const Quaternion q = random_scaled_quaternion(rng);
        const Quaternion pq = p * q;
        const double scale = p.norm() * q.norm();
        const double rel = std::abs(pq.norm() - scale) / scale;
        const double product = (pq - oracle::left_multiply(p, q)).norm() / scale;
        const double residual = std::max(rel, product);
        out.record(residual <= 1e-13, residual, "case " + std::to_string(c));
    }
    return out;
}

/// A coin meeting the unitarity condition gives a unitary ψ(U) whose
/// eigenvalues all have modulus 1.
inline Outcome unit_modulus_under_unitarity(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    Outcome out;
    for (int c = 0; c < count; ++c)
    {
        const Graph g = random_connected_graph(rng, uniform_int(rng, 2, 6));
        const ArcWeights q = random_unitary_coin(rng, g);
        const bool condition = unitarity_condition(g, q, 1e-9).holds;
        const ComplexMatrix p = psi(build_U(g, q));
        const ComplexMatrix gram = conj_transpose(p) * p;
        const double unitary = max_abs_diff(gram, ComplexMatrix::identity(gram.rows()));
        double modulus = 0.0;
        for (cx z : eigenvalues(p).eigenvalues)
            modulus = std::max(modulus, std::abs(std::abs(z) - 1.0));
        const double residual = std::max(unitary, modulus);
        out.record(condition && unitary <= 1e-12 && modulus <= 1e-8, residual,
                   "case " + std::to_string(c) + " n=" + std::to_string(g.vertex_count()));
    }
    return out;
}

} // namespace property
