#pragma once

#include "qqwalk/walk_matrices.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qqwalk
{

enum class Method
{
    direct,
    theorem8,
    theorem10,
    grover,
};

std::string_view to_string(Method m) noexcept;
/// Throws ContractViolation for an unknown name.
Method parse_method(std::string_view name);

/// One similarity class λ^{ℍ*} of σ_r(U). `multiplicity` is half the number of
/// ψ-spectrum values in the class (λ and its conjugate come together).
struct ClassRep
{
    SimilarityClassRep rep;
    int multiplicity = 0;
};

struct SpectrumComparison
{
    std::string against = "direct";
    bool size_mismatch = false;
    std::size_t size = 0;
    std::size_t other_size = 0;
    double max_dist = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
    std::optional<std::pair<cx, cx>> culprit;   // pair realising max_dist
};

struct SpectrumReport
{
    Method method = Method::direct;
    std::vector<cx> psi_spectrum;          // 4m values sorted by (re, im); grover: 4m as well
    std::vector<ClassRep> class_reps;
    std::optional<SpectrumComparison> cross_check;
    std::vector<std::string> notes;
    std::vector<cx> walk_spectrum;         // grover only: the 2m eigenvalues of U^Gro itself
};

/// Tolerance used by every route's cross-check against the direct eigensolve.
inline constexpr double kRouteTolerance = 1e-7;

/// Right eigenvalues of a square quaternion matrix: Spec(ψ(M)) with exact
/// conjugate pairing, sorted by (re, im).
std::vector<cx> right_eigenvalues(const QuatMatrix& m);

/// Distinct similarity classes of a ψ spectrum (clustered within 1e−6).
std::vector<ClassRep> class_reps(std::span<const cx> psi_spectrum);

/// Eigenvalues of ψ(build_U(g, q)).
SpectrumReport spectrum_direct(const Graph& g, const CoinMap& q);

/**
 * λ = (μ ± √(μ² − 4(ξ − 1)))/2 over aligned diagonal pairs (μ, ξ) of a joint
 * triangular form of ψ(ᵀW) and ψ(D_w), padded with 2(m − n) copies each of
 * ±1; for trees one pair {1, 1, −1, −1} is removed instead.
 *
 * Throws NumericalError when the pair cannot be triangularized together.
 */
SpectrumReport spectrum_theorem8(const Graph& g, const CoinMap& q);

/// The coin q(e) = α/d_{o(e)} through the complex reductions α± = a0 ± |Im α|·i
/// and W± = α±·T.
SpectrumReport spectrum_theorem10(const Graph& g, const Quaternion& alpha);

/// λ_T ± i√(1 − λ_T²) over Spec(T), padded with m − n copies each of ±1
/// (trees: one 1 and one −1 removed), then doubled by ψ.
SpectrumReport spectrum_grover(const Graph& g);

/// Bottleneck matching of the two ψ spectra. Size differences give a
/// mismatch record, not an exception.
SpectrumComparison compare_spectra(const SpectrumReport& a, const SpectrumReport& b, double tol = kRouteTolerance);

} // namespace qqwalk
