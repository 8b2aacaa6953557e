#include "qqwalk/quat_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qqwalk
{

std::pair<ComplexMatrix, ComplexMatrix> symplectic_parts(const QuatMatrix& m)
{
    ComplexMatrix s(m.rows(), m.cols());
    ComplexMatrix p(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
        {
            const auto parts = symplectic_parts(m(r, c));
            s(r, c) = parts.simplex;
            p(r, c) = parts.perplex;
        }
    return {std::move(s), std::move(p)};
}

QuatMatrix from_symplectic(const ComplexMatrix& simplex, const ComplexMatrix& perplex)
{
    if (simplex.rows() != perplex.rows() || simplex.cols() != perplex.cols())
        throw ContractViolation("from_symplectic: simplex and perplex parts differ in shape");
    QuatMatrix m(simplex.rows(), simplex.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = from_symplectic(simplex(r, c), perplex(r, c));
    return m;
}

QuatMatrix to_quat(const ComplexMatrix& m)
{
    QuatMatrix q(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            q(r, c) = Quaternion::from_complex(m(r, c));
    return q;
}

ComplexMatrix psi(const QuatMatrix& m)
{
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    ComplexMatrix out(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
        {
            const auto [s, p] = symplectic_parts(m(i, j));
            out(i, j) = s;
            out(i, c + j) = -std::conj(p);
            out(r + i, j) = p;
            out(r + i, c + j) = std::conj(s);
        }
    return out;
}

bool psi_homomorphism_check(const QuatMatrix& m, const QuatMatrix& n, double tol)
{
    if (m.cols() != n.rows())
        throw ContractViolation("psi_homomorphism_check: M.cols != N.rows");
    return max_abs_diff(psi(m * n), psi(m) * psi(n)) <= tol;
}

QuatMatrix conj_transpose(const QuatMatrix& m)
{
    QuatMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            t(c, r) = conjugate(m(r, c));
    return t;
}

ComplexMatrix conj_transpose(const ComplexMatrix& m)
{
    ComplexMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            t(c, r) = std::conj(m(r, c));
    return t;
}

ComplexMatrix conj(const ComplexMatrix& m)
{
    ComplexMatrix out = m;
    for (auto& z : out.data())
        z = std::conj(z);
    return out;
}

double max_abs(const ComplexMatrix& m)
{
    double best = 0.0;
    for (const auto& z : m.data())
        best = std::max(best, std::abs(z));
    return best;
}

double max_abs(const QuatMatrix& m)
{
    double best = 0.0;
    for (const auto& q : m.data())
        best = std::max(best, q.norm());
    return best;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }

double max_abs_diff(const QuatMatrix& a, const QuatMatrix& b) { return max_abs(a - b); }

namespace
{

template <class M>
bool unitary_impl(const M& m, double tol)
{
    if (!m.is_square())
        throw ContractViolation("is_unitary: matrix is not square");
    const M id = M::identity(m.rows());
    const M h = conj_transpose(m);
    return max_abs_diff(h * m, id) <= tol && max_abs_diff(m * h, id) <= tol;
}

} // namespace

bool is_unitary(const QuatMatrix& m, double tol) { return unitary_impl(m, tol); }

bool is_unitary(const ComplexMatrix& m, double tol) { return unitary_impl(m, tol); }

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs_diff(a * b, b * a); }

double commutator_norm(const QuatMatrix& a, const QuatMatrix& b) { return max_abs_diff(a * b, b * a); }

} // namespace qqwalk
