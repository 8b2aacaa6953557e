#pragma once

#include "qqwalk/matrix.hpp"
#include "qqwalk/quaternion.hpp"

#include <utility>

namespace qqwalk
{

using ComplexMatrix = Matrix<cx>;
using QuatMatrix = Matrix<Quaternion>;

/// M = Mˢ + j Mᵖ with Mˢ, Mᵖ complex; unique.
std::pair<ComplexMatrix, ComplexMatrix> symplectic_parts(const QuatMatrix& m);

/// Inverse of symplectic_parts.
QuatMatrix from_symplectic(const ComplexMatrix& simplex, const ComplexMatrix& perplex);

/// Complex matrix viewed as a quaternionic one (zero perplex part).
QuatMatrix to_quat(const ComplexMatrix& m);

/**
 * The complexification ψ : Mat(r×c, ℍ) → Mat(2r×2c, ℂ),
 *
 *     ψ(M) = [ Mˢ  −conj(Mᵖ) ]
 *            [ Mᵖ   conj(Mˢ) ]
 *
 * Rows and columns are laid out as all "+" copies first, then all "−" copies.
 * ψ is real-linear and multiplicative, and injective on square matrices.
 */
ComplexMatrix psi(const QuatMatrix& m);

/// ‖ψ(MN) − ψ(M)ψ(N)‖_max ≤ tol. Throws ContractViolation unless M.cols == N.rows.
bool psi_homomorphism_check(const QuatMatrix& m, const QuatMatrix& n, double tol = 1e-12);

/// (M*)_uv = conj(M_vu).
QuatMatrix conj_transpose(const QuatMatrix& m);
ComplexMatrix conj_transpose(const ComplexMatrix& m);

/// Entrywise complex conjugate.
ComplexMatrix conj(const ComplexMatrix& m);

/// max |entry|; quaternion entries use the quaternion norm.
double max_abs(const ComplexMatrix& m);
double max_abs(const QuatMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const QuatMatrix& a, const QuatMatrix& b);

/// M*M = MM* = I within tol (max-entry norm). Throws ContractViolation for non-square M.
bool is_unitary(const QuatMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

/// ‖AB − BA‖_max.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);
double commutator_norm(const QuatMatrix& a, const QuatMatrix& b);

} // namespace qqwalk
