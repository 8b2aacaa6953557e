#pragma once

#include "qqwalk/errors.hpp"
#include "qqwalk/quat_matrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qqwalk
{

struct EigenResult
{
    std::vector<cx> eigenvalues;
    bool converged = true;
    int iterations = 0;
};

/// The QR iteration ran out of sweeps. Carries whatever eigenvalues had
/// deflated plus the current diagonal for the rest.
class ConvergenceError : public NumericalError
{
public:
    ConvergenceError(EigenResult partial, double residual)
        : NumericalError("eigenvalues", "QR iteration did not converge", residual), partial_(std::move(partial))
    {
    }

    const EigenResult& partial() const noexcept { return partial_; }

private:
    EigenResult partial_;
};

/// Upper-triangular Schur form A = Q T Q* with Q unitary.
struct SchurForm
{
    ComplexMatrix q;
    ComplexMatrix t;
    int iterations = 0;
};

/// Hessenberg reduction followed by single-shift complex QR with deflation
/// (at most 100·n sweeps). Throws ContractViolation for non-square input and
/// ConvergenceError when the budget is exhausted.
SchurForm schur(const ComplexMatrix& a);

/// All eigenvalues with multiplicity. Balances first, then runs the same QR
/// iteration as `schur` without accumulating Q.
EigenResult eigenvalues(const ComplexMatrix& a);

/// LU with partial pivoting.
cx determinant(const ComplexMatrix& a);

/// LU-based inverse. Throws DomainError when a pivot vanishes exactly.
ComplexMatrix inverse(const ComplexMatrix& a);

/// Singular values (descending) and right singular vectors (columns of v,
/// matched to `values`) from one-sided Jacobi.
struct SingularValues
{
    std::vector<double> values;
    ComplexMatrix v;
};

SingularValues svd_right(const ComplexMatrix& a);

/// max |T_ij| over i > j.
double strictly_lower_max(const ComplexMatrix& t);

struct Triangularization
{
    ComplexMatrix p;          // unitary; P* A P and P* B P are upper triangular
    std::vector<cx> diag_a;   // aligned diagonals: (diag_a[r], diag_b[r]) belong together
    std::vector<cx> diag_b;
    double residual = 0.0;    // max strictly-lower entry of the two triangular forms
    std::string route;        // "schur" or "deflation"
};

/**
 * One unitary P triangularizing A and B together.
 *
 * Commuting pairs go through the Schur form of A + θB (θ = 0.6180339887, retried
 * at 0.4142135623). Pairs that do not commute, or whose Schur attempt leaves a
 * residual above `tol`, are handled by repeatedly extracting a common
 * eigenvector and deflating. Throws NumericalError when no common eigenvector
 * exists at some step or the final residual exceeds `tol`.
 */
Triangularization simultaneous_triangularize(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-8);

/// Greedily pairs every value with its nearest conjugate partner and replaces
/// both by the averaged exact conjugate pair; a value closer to its own
/// conjugate than to any partner becomes real. Intended for spectra of ψ images.
std::vector<cx> pair_conjugates(std::span<const cx> values);

/// Bottleneck matching between two multisets of complex numbers.
struct MultisetMatch
{
    bool size_mismatch = false;
    double max_dist = 0.0;
    std::vector<std::size_t> assignment;        // assignment[i] = index in b matched to a[i]
    std::optional<std::size_t> worst;           // index in a of the pair realising max_dist
};

MultisetMatch match_multisets(std::span<const cx> a, std::span<const cx> b);

/// Convenience: sizes agree and the bottleneck distance is ≤ tol.
bool multisets_match(std::span<const cx> a, std::span<const cx> b, double tol = 1e-7);

} // namespace qqwalk
