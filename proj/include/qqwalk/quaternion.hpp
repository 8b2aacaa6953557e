#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qqwalk
{

using cx = std::complex<double>;

/**
 * A real quaternion x0 + x1 i + x2 j + x3 k.
 *
 * Multiplication follows i² = j² = k² = −1, ij = k, jk = i, ki = j and is
 * therefore not commutative; matrix code must keep operand order.
 */
struct Quaternion
{
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr Quaternion() noexcept = default;
    constexpr Quaternion(double re) noexcept : x0(re) {}
    constexpr Quaternion(double a, double b, double c, double d) noexcept : x0(a), x1(b), x2(c), x3(d) {}

    /// Embeds a + bi ∈ ℂ as a + bi + 0j + 0k.
    static constexpr Quaternion from_complex(cx z) noexcept { return {z.real(), z.imag(), 0.0, 0.0}; }

    static constexpr Quaternion unit_i() noexcept { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() noexcept { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() noexcept { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double real() const noexcept { return x0; }
    double imag_norm() const noexcept;
    constexpr double norm_sq() const noexcept { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    double norm() const noexcept;

    /// True when the j and k coordinates vanish within `tol`.
    bool is_complex(double tol = 0.0) const noexcept;

    constexpr Quaternion& operator+=(const Quaternion& o) noexcept
    {
        x0 += o.x0;
        x1 += o.x1;
        x2 += o.x2;
        x3 += o.x3;
        return *this;
    }

    constexpr Quaternion& operator-=(const Quaternion& o) noexcept
    {
        x0 -= o.x0;
        x1 -= o.x1;
        x2 -= o.x2;
        x3 -= o.x3;
        return *this;
    }

    constexpr Quaternion& operator*=(double s) noexcept
    {
        x0 *= s;
        x1 *= s;
        x2 *= s;
        x3 *= s;
        return *this;
    }

    constexpr Quaternion& operator/=(double s) noexcept
    {
        x0 /= s;
        x1 /= s;
        x2 /= s;
        x3 /= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) noexcept = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) noexcept { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) noexcept { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) noexcept { return {-q.x0, -q.x1, -q.x2, -q.x3}; }
constexpr Quaternion operator*(Quaternion p, double s) noexcept { return p *= s; }
constexpr Quaternion operator*(double s, Quaternion p) noexcept { return p *= s; }
constexpr Quaternion operator/(Quaternion p, double s) noexcept { return p /= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept
{
    return {p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
            p.x0 * q.x1 + p.x1 * q.x0 + p.x2 * q.x3 - p.x3 * q.x2,
            p.x0 * q.x2 - p.x1 * q.x3 + p.x2 * q.x0 + p.x3 * q.x1,
            p.x0 * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.x0};
}

constexpr Quaternion multiply(const Quaternion& p, const Quaternion& q) noexcept { return p * q; }

constexpr Quaternion conjugate(const Quaternion& q) noexcept { return {q.x0, -q.x1, -q.x2, -q.x3}; }

/// q⁻¹ = q*/|q|². Throws DomainError("non-invertible") for q = 0.
Quaternion inverse(const Quaternion& q);

/// Component-wise comparison with absolute tolerance.
bool approx_equal(const Quaternion& p, const Quaternion& q, double tol = 1e-10) noexcept;

/// Simplex / perplex parts of a single quaternion: q = s + j p with s, p ∈ ℂ.
/// For q = a + bi + cj + dk this gives s = a + bi and p = c − di (since ji = −k).
struct SymplecticPair
{
    cx simplex;
    cx perplex;
};

constexpr SymplecticPair symplectic_parts(const Quaternion& q) noexcept
{
    return {cx(q.x0, q.x1), cx(q.x2, -q.x3)};
}

constexpr Quaternion from_symplectic(cx simplex, cx perplex) noexcept
{
    return {simplex.real(), simplex.imag(), perplex.real(), -perplex.imag()};
}

/**
 * Canonical label of the similarity class {h⁻¹ q h : h ≠ 0}.
 *
 * Two quaternions are similar iff they share the real part and the norm of the
 * imaginary part, so the class is labelled by the complex number re + im·i with
 * im ≥ 0.
 */
struct SimilarityClassRep
{
    double re = 0.0;
    double im = 0.0;

    cx value() const noexcept { return {re, im}; }
};

SimilarityClassRep canonical_class_rep(const Quaternion& q) noexcept;
SimilarityClassRep canonical_class_rep(cx z) noexcept;

/// Parses `a+bi+cj+dk` with every term optional (`1`, `-0.5+0.5i`, `1-j`, `2k`).
/// No whitespace; basis letters are lower case. Throws ParseError.
Quaternion parse_quaternion(std::string_view text);

/// Shortest round-trip text in the literal format accepted by parse_quaternion.
std::string to_string(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

} // namespace qqwalk
