#pragma once

#include "qqwalk/walk_matrices.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qqwalk
{

struct IdentitySample
{
    cx t;
    cx lhs;
    cx rhs;
    double rel_err = 0.0;
};

struct AuxCheck
{
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool ok() const noexcept { return value <= threshold; }
};

/**
 * Outcome of comparing the two sides of a determinant identity at a set of
 * complex sample points. Samples are sorted by (re, im).
 *
 * verdict = max_rel_err ≤ tolerance and every auxiliary check is within its
 * threshold.
 */
struct IdentityReport
{
    std::vector<IdentitySample> samples;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
    std::vector<AuxCheck> aux;
    std::vector<cx> skipped;              // points too close to t² = 1
    std::vector<std::string> warnings;
};

/// `count` points of modulus ≤ 0.8 drawn from mt19937_64(seed), sorted by (re, im).
std::vector<cx> default_samples(int count = 8, std::uint64_t seed = 0);

/// |lhs − rhs| / max(|lhs|, |rhs|, 1).
double relative_error(cx lhs, cx rhs) noexcept;

/// det(I_2m − t(B − J0)).
cx ihara_hashimoto(const Graph& g, cx t);

/// (1 − t²)^{r−1} det(I_n − tA + t²(D − I_n)). Throws DomainError at t = ±1
/// for trees, where the exponent is negative.
cx ihara_bass(const Graph& g, cx t);

IdentityReport ihara_identity(const Graph& g, std::span<const cx> samples, double tol = 1e-10);

/// det(I_2m − t(B_w − J0)) for complex weights.
cx weighted_hashimoto(const Graph& g, const WeightMap& w, cx t);
/// (1 − t²)^{m−n} det(I_n − tW + t²(D_w − I_n)) for complex weights.
cx weighted_bass(const Graph& g, const WeightMap& w, cx t);

/**
 * Checks weighted_hashimoto = weighted_bass and the transposed form
 * det(I − t(ᵀB_w − J0)) = (1 − t²)^{m−n} det(I − tᵀW + t²(D_w − I)), reported
 * as aux check "transposed_max_rel_err".
 *
 * Throws ContractViolation when some weight has a j or k part; those go to
 * quaternionic_identity.
 */
IdentityReport weighted_zeta_identity(const Graph& g, const WeightMap& w, std::span<const cx> samples,
                                      double tol = 1e-8);

/// det(I_4m − tψ(ᵀB_w − J0)).
cx quaternionic_lhs(const Graph& g, const WeightMap& w, cx t);
/// (1 − t²)^{2m−2n} det(I_2n − tψ(ᵀW) + t²(ψ(D_w) − I_2n)).
cx quaternionic_rhs(const Graph& g, const WeightMap& w, cx t);

/**
 * Checks quaternionic_lhs = quaternionic_rhs for arbitrary quaternion weights.
 *
 * Also checks the factorization step
 *   ψ(ᵀL)(I + tψ(J0))⁻¹ψ(K) = ψ(ᵀW)/(1 − t²) − tψ(D_w)/(1 − t²)
 * entrywise at every sample (aux check "intermediate_max_err", threshold 1e−10
 * scaled by the size of the entries).
 */
IdentityReport quaternionic_identity(const Graph& g, const WeightMap& w, std::span<const cx> samples,
                                     double tol = 1e-8);

/// Coefficients c_0..c_{N−1} of a polynomial of degree < N, recovered from its
/// values at N points on the unit circle that avoid t = ±1 (N must be even).
std::vector<cx> interpolate_on_circle(const std::function<cx(cx)>& p, int n_points);

struct PolynomialComparison
{
    std::vector<cx> lhs;
    std::vector<cx> rhs;
    int lhs_degree = 0;
    int rhs_degree = 0;
    double max_coeff_diff = 0.0;    // relative to max(‖lhs‖∞, 1)
    bool agree = false;
};

/// Interpolates both sides of the quaternionic identity at 4m + 2 points and
/// compares coefficient vectors and numeric degrees (coefficients below
/// 1e−8·‖c‖∞ count as zero).
PolynomialComparison quaternionic_polynomials(const Graph& g, const WeightMap& w, double tol = 1e-6);

} // namespace qqwalk
