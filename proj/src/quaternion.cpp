#include "qqwalk/quaternion.hpp"

#include "qqwalk/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>

namespace qqwalk
{

double Quaternion::imag_norm() const noexcept { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

double Quaternion::norm() const noexcept { return std::sqrt(norm_sq()); }

bool Quaternion::is_complex(double tol) const noexcept { return std::abs(x2) <= tol && std::abs(x3) <= tol; }

Quaternion inverse(const Quaternion& q)
{
    const double n2 = q.norm_sq();
    if (n2 == 0.0)
        throw DomainError("non-invertible: zero quaternion has no inverse");
    return conjugate(q) / n2;
}

bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) noexcept
{
    return std::abs(p.x0 - q.x0) <= tol && std::abs(p.x1 - q.x1) <= tol && std::abs(p.x2 - q.x2) <= tol &&
           std::abs(p.x3 - q.x3) <= tol;
}

SimilarityClassRep canonical_class_rep(const Quaternion& q) noexcept { return {q.x0, q.imag_norm()}; }

SimilarityClassRep canonical_class_rep(cx z) noexcept { return {z.real(), std::abs(z.imag())}; }

Quaternion parse_quaternion(std::string_view text)
{
    if (text.empty())
        throw ParseError(0, "empty quaternion literal");

    double coeff[4] = {0.0, 0.0, 0.0, 0.0};
    bool seen[4] = {false, false, false, false};
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) -> ParseError {
        return ParseError(0, "bad quaternion literal '" + std::string(text) + "': " + why);
    };

    while (pos < text.size())
    {
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-')
        {
            sign = text[pos] == '-' ? -1.0 : 1.0;
            ++pos;
        }
        else if (pos != 0)
        {
            throw fail("expected '+' or '-' between terms");
        }

        double magnitude = 1.0;
        bool has_number = false;
        if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
        {
            const char* first = text.data() + pos;
            const char* last = text.data() + text.size();
            auto [ptr, ec] = std::from_chars(first, last, magnitude);
            if (ec != std::errc())
                throw fail("malformed number");
            pos += static_cast<std::size_t>(ptr - first);
            has_number = true;
        }

        int basis = 0;
        if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k'))
        {
            basis = 1 + (text[pos] - 'i');
            ++pos;
        }
        else if (!has_number)
        {
            throw fail("term has neither a number nor a basis letter");
        }

        if (seen[basis])
            throw fail("repeated term");
        seen[basis] = true;
        coeff[basis] = sign * magnitude;
    }

    return {coeff[0], coeff[1], coeff[2], coeff[3]};
}

namespace
{

std::string shortest(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

} // namespace

std::string to_string(const Quaternion& q)
{
    std::string out;
    const double c[4] = {q.x0, q.x1, q.x2, q.x3};
    const char* basis[4] = {"", "i", "j", "k"};
    for (int b = 0; b < 4; ++b)
    {
        if (c[b] == 0.0)
            continue;
        std::string term = shortest(c[b]);
        if (b > 0 && (c[b] == 1.0 || c[b] == -1.0))
            term.pop_back();
        if (!out.empty() && (term.empty() || term.front() != '-'))
            out += '+';
        out += term;
        out += basis[b];
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

} // namespace qqwalk
