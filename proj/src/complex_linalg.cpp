#include "qqwalk/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qqwalk
{

namespace
{

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_square(const ComplexMatrix& a, const char* who)
{
    if (!a.is_square())
        throw ContractViolation(std::string(who) + ": matrix is not square (" + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ")");
}

double frobenius(const ComplexMatrix& a)
{
    double s = 0.0;
    for (const auto& z : a.data())
        s += std::norm(z);
    return std::sqrt(s);
}

// Plane rotation G = [[c, s], [-conj(s), c]] with G·[x; y] = [r; 0].
struct Rotation
{
    double c = 1.0;
    cx s = 0.0;
};

Rotation make_rotation(cx x, cx y)
{
    if (y == cx(0.0))
        return {1.0, 0.0};
    if (x == cx(0.0))
        return {0.0, std::conj(y) / std::abs(y)};
    const double ax = std::abs(x);
    const double nrm = std::hypot(ax, std::abs(y));
    return {ax / nrm, (x / ax) * std::conj(y) / nrm};
}

// Rows i, i+1 ← G · rows, over columns [c0, c1].
void rotate_rows(ComplexMatrix& t, const Rotation& g, std::size_t i, std::size_t c0, std::size_t c1)
{
    for (std::size_t c = c0; c <= c1; ++c)
    {
        const cx a = t(i, c);
        const cx b = t(i + 1, c);
        t(i, c) = g.c * a + g.s * b;
        t(i + 1, c) = -std::conj(g.s) * a + g.c * b;
    }
}

// Columns i, i+1 ← columns · G*, over rows [r0, r1].
void rotate_cols(ComplexMatrix& t, const Rotation& g, std::size_t i, std::size_t r0, std::size_t r1)
{
    for (std::size_t r = r0; r <= r1; ++r)
    {
        const cx a = t(r, i);
        const cx b = t(r, i + 1);
        t(r, i) = a * g.c + b * std::conj(g.s);
        t(r, i + 1) = -a * g.s + b * g.c;
    }
}

// Householder reduction to upper Hessenberg form; q accumulates the
// similarity when non-null.
void hessenberg(ComplexMatrix& a, ComplexMatrix* q)
{
    const std::size_t n = a.rows();
    if (n < 3)
        return;
    std::vector<cx> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k)
    {
        double tail = 0.0;
        for (std::size_t i = k + 2; i < n; ++i)
            tail += std::norm(a(i, k));
        if (tail == 0.0)
            continue;
        const cx x0 = a(k + 1, k);
        const double alpha = std::sqrt(tail + std::norm(x0));
        const cx phase = std::abs(x0) == 0.0 ? cx(1.0) : x0 / std::abs(x0);

        std::fill(v.begin(), v.end(), cx(0.0));
        v[k + 1] = x0 + phase * alpha;
        for (std::size_t i = k + 2; i < n; ++i)
            v[i] = a(i, k);
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            vnorm2 += std::norm(v[i]);
        const double beta = 2.0 / vnorm2;

        // A ← H A
        for (std::size_t c = k; c < n; ++c)
        {
            cx dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i)
                dot += std::conj(v[i]) * a(i, c);
            dot *= beta;
            for (std::size_t i = k + 1; i < n; ++i)
                a(i, c) -= v[i] * dot;
        }
        // A ← A H
        for (std::size_t r = 0; r < n; ++r)
        {
            cx dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i)
                dot += a(r, i) * v[i];
            dot *= beta;
            for (std::size_t i = k + 1; i < n; ++i)
                a(r, i) -= dot * std::conj(v[i]);
        }
        if (q != nullptr)
        {
            for (std::size_t r = 0; r < n; ++r)
            {
                cx dot = 0.0;
                for (std::size_t i = k + 1; i < n; ++i)
                    dot += (*q)(r, i) * v[i];
                dot *= beta;
                for (std::size_t i = k + 1; i < n; ++i)
                    (*q)(r, i) -= dot * std::conj(v[i]);
            }
        }
        for (std::size_t i = k + 2; i < n; ++i)
            a(i, k) = 0.0;
    }
}

cx wilkinson_shift(const ComplexMatrix& t, std::size_t iu, int iter)
{
    if (iter == 10 || iter == 30)
    {
        double bump = std::abs(t(iu, iu - 1).real());
        if (iu >= 2)
            bump += std::abs(t(iu - 1, iu - 2).real());
        return t(iu, iu) + bump;
    }
    const cx a = t(iu - 1, iu - 1);
    const cx b = t(iu - 1, iu);
    const cx c = t(iu, iu - 1);
    const cx d = t(iu, iu);
    const cx mean = 0.5 * (a + d);
    const cx disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    const cx e1 = mean + disc;
    const cx e2 = mean - disc;
    return std::abs(e1 - d) <= std::abs(e2 - d) ? e1 : e2;
}

// Single-shift complex QR on an upper Hessenberg matrix. Returns the number
// of sweeps; throws ConvergenceError when the 100·n budget runs out.
int hessenberg_qr(ComplexMatrix& t, ComplexMatrix* q)
{
    const std::size_t n = t.rows();
    if (n < 2)
        return 0;
    const double scale = std::max(frobenius(t), std::numeric_limits<double>::min());
    const auto negligible = [&](std::size_t i) {
        // subdiagonal entry t(i+1, i)
        const double sd = std::abs(t(i + 1, i));
        const double dd = std::abs(t(i, i)) + std::abs(t(i + 1, i + 1));
        return sd <= kEps * std::max(dd, 0.1 * scale);
    };

    const int max_iters = static_cast<int>(100 * n);
    int total = 0;
    int iter = 0;
    std::size_t iu = n - 1;
    while (true)
    {
        while (iu > 0)
        {
            if (!negligible(iu - 1))
                break;
            t(iu, iu - 1) = 0.0;
            iter = 0;
            --iu;
        }
        if (iu == 0)
            break;
        ++iter;
        ++total;
        if (total > max_iters)
        {
            EigenResult partial;
            partial.converged = false;
            partial.iterations = total;
            for (std::size_t i = 0; i < n; ++i)
                partial.eigenvalues.push_back(t(i, i));
            throw ConvergenceError(std::move(partial), std::abs(t(iu, iu - 1)));
        }

        std::size_t il = iu - 1;
        while (il > 0 && !negligible(il - 1))
            --il;

        const cx shift = wilkinson_shift(t, iu, iter);
        Rotation g = make_rotation(t(il, il) - shift, t(il + 1, il));
        rotate_rows(t, g, il, il, n - 1);
        rotate_cols(t, g, il, 0, std::min(il + 2, iu));
        if (q != nullptr)
            rotate_cols(*q, g, il, 0, n - 1);

        for (std::size_t i = il + 1; i < iu; ++i)
        {
            g = make_rotation(t(i, i - 1), t(i + 1, i - 1));
            rotate_rows(t, g, i, i - 1, n - 1);
            t(i + 1, i - 1) = 0.0;
            rotate_cols(t, g, i, 0, std::min(i + 2, iu));
            if (q != nullptr)
                rotate_cols(*q, g, i, 0, n - 1);
        }
    }
    return total;
}

// Parlett–Reinsch diagonal scaling by powers of two.
void balance(ComplexMatrix& a)
{
    const std::size_t n = a.rows();
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    bool done = false;
    while (!done)
    {
        done = true;
        for (std::size_t i = 0; i < n; ++i)
        {
            double r = 0.0;
            double c = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c == 0.0 || r == 0.0)
                continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g)
            {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g)
            {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s)
            {
                done = false;
                const double inv = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) *= inv;
                for (std::size_t j = 0; j < n; ++j)
                    a(j, i) *= f;
            }
        }
    }
}

struct LU
{
    ComplexMatrix lu;
    std::vector<std::size_t> perm;
    int sign = 1;
    bool singular = false;
};

LU lu_decompose(const ComplexMatrix& a)
{
    const std::size_t n = a.rows();
    LU f{a, std::vector<std::size_t>(n), 1, false};
    std::iota(f.perm.begin(), f.perm.end(), 0);
    for (std::size_t k = 0; k < n; ++k)
    {
        std::size_t piv = k;
        double best = std::abs(f.lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(f.lu(i, k)) > best)
            {
                best = std::abs(f.lu(i, k));
                piv = i;
            }
        if (best == 0.0)
        {
            f.singular = true;
            continue;
        }
        if (piv != k)
        {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(f.lu(k, c), f.lu(piv, c));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        const cx inv = 1.0 / f.lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i)
        {
            const cx m = f.lu(i, k) * inv;
            f.lu(i, k) = m;
            if (m == cx(0.0))
                continue;
            for (std::size_t c = k + 1; c < n; ++c)
                f.lu(i, c) -= m * f.lu(k, c);
        }
    }
    return f;
}

// Unitary H (Hermitian reflector) whose first column is a unit-modulus
// multiple of the unit vector v.
ComplexMatrix reflector_with_first_column(const std::vector<cx>& v)
{
    const std::size_t n = v.size();
    const cx phase = std::abs(v[0]) == 0.0 ? cx(1.0) : v[0] / std::abs(v[0]);
    std::vector<cx> u = v;
    u[0] += phase;
    double u2 = 0.0;
    for (const auto& z : u)
        u2 += std::norm(z);
    ComplexMatrix h = ComplexMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            h(r, c) -= 2.0 * u[r] * std::conj(u[c]) / u2;
    return h;
}

std::vector<cx> cluster_means(const std::vector<cx>& values, double tol)
{
    const std::size_t n = values.size();
    std::vector<int> label(n, -1);
    std::vector<cx> means;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (label[i] >= 0)
            continue;
        const int id = static_cast<int>(means.size());
        std::vector<std::size_t> members{i};
        label[i] = id;
        for (std::size_t m = 0; m < members.size(); ++m)
            for (std::size_t j = 0; j < n; ++j)
                if (label[j] < 0 && std::abs(values[j] - values[members[m]]) <= tol)
                {
                    label[j] = id;
                    members.push_back(j);
                }
        cx sum = 0.0;
        for (auto j : members)
            sum += values[j];
        means.push_back(sum / static_cast<double>(members.size()));
    }
    return means;
}

void append_distinct(std::vector<cx>& out, const std::vector<cx>& in, double tol)
{
    for (const auto& z : in)
    {
        const bool present = std::any_of(out.begin(), out.end(), [&](const cx& w) { return std::abs(w - z) <= tol; });
        if (!present)
            out.push_back(z);
    }
}

// Orthonormal columns of v whose singular values are ≤ tol.
ComplexMatrix null_basis(const ComplexMatrix& m, double tol)
{
    const auto sv = svd_right(m);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < sv.values.size(); ++i)
        if (sv.values[i] <= tol)
            keep.push_back(i);
    ComplexMatrix basis(m.cols(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t r = 0; r < m.cols(); ++r)
            basis(r, c) = sv.v(r, keep[c]);
    return basis;
}

ComplexMatrix shifted(const ComplexMatrix& a, cx s)
{
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        out(i, i) -= s;
    return out;
}

struct CommonVector
{
    std::vector<cx> v;
    double residual = std::numeric_limits<double>::infinity();
};

// Unit v with Av = λv and Bv = μv, searched over eigenvalue candidates of A.
CommonVector common_eigenvector(const ComplexMatrix& a, const ComplexMatrix& b, double scale)
{
    const std::size_t k = a.rows();
    const double null_tol = 1e-7 * scale;

    std::vector<cx> lambdas;
    const auto ea = eigenvalues(a).eigenvalues;
    append_distinct(lambdas, cluster_means(ea, 1e-4 * scale), 1e-13 * scale);
    append_distinct(lambdas, ea, 1e-13 * scale);

    CommonVector best;
    for (const cx& lambda : lambdas)
    {
        const ComplexMatrix v = null_basis(shifted(a, lambda), null_tol);
        if (v.cols() == 0)
            continue;
        // Directions inside ker(A − λ) that B keeps inside ker(A − λ).
        const ComplexMatrix bv = b * v;
        const ComplexMatrix leak = bv - v * (conj_transpose(v) * bv);
        const ComplexMatrix z = null_basis(leak, null_tol);
        if (z.cols() == 0)
            continue;
        const ComplexMatrix vz = v * z;
        const ComplexMatrix compressed = conj_transpose(vz) * b * vz;
        std::vector<cx> mus;
        append_distinct(mus, eigenvalues(compressed).eigenvalues, 1e-13 * scale);
        for (const cx& mu : mus)
        {
            const ComplexMatrix ra = shifted(a, lambda) * vz;
            const ComplexMatrix rb = shifted(b, mu) * vz;
            ComplexMatrix stacked(2 * k, vz.cols());
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < vz.cols(); ++c)
                {
                    stacked(r, c) = ra(r, c);
                    stacked(k + r, c) = rb(r, c);
                }
            const auto sv = svd_right(stacked);
            const std::size_t last = sv.values.size() - 1;
            if (sv.values[last] < best.residual)
            {
                best.residual = sv.values[last];
                best.v.assign(k, 0.0);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < vz.cols(); ++c)
                        best.v[r] += vz(r, c) * sv.v(c, last);
            }
        }
        if (best.residual <= 1e-12 * scale)
            break;
    }
    if (!best.v.empty())
    {
        double nrm = 0.0;
        for (const auto& x : best.v)
            nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        for (auto& x : best.v)
            x /= nrm;
    }
    return best;
}

std::vector<cx> diagonal(const ComplexMatrix& t)
{
    std::vector<cx> d(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i)
        d[i] = t(i, i);
    return d;
}

} // namespace

SchurForm schur(const ComplexMatrix& a)
{
    require_square(a, "schur");
    SchurForm s{ComplexMatrix::identity(a.rows()), a, 0};
    hessenberg(s.t, &s.q);
    s.iterations = hessenberg_qr(s.t, &s.q);
    return s;
}

EigenResult eigenvalues(const ComplexMatrix& a)
{
    require_square(a, "eigenvalues");
    ComplexMatrix t = a;
    balance(t);
    hessenberg(t, nullptr);
    EigenResult r;
    r.iterations = hessenberg_qr(t, nullptr);
    r.eigenvalues = diagonal(t);
    return r;
}

cx determinant(const ComplexMatrix& a)
{
    require_square(a, "determinant");
    const LU f = lu_decompose(a);
    if (f.singular)
        return 0.0;
    cx det = static_cast<double>(f.sign);
    for (std::size_t i = 0; i < a.rows(); ++i)
        det *= f.lu(i, i);
    return det;
}

ComplexMatrix inverse(const ComplexMatrix& a)
{
    require_square(a, "inverse");
    const std::size_t n = a.rows();
    const LU f = lu_decompose(a);
    if (f.singular)
        throw DomainError("inverse: matrix is singular");
    ComplexMatrix inv(n, n);
    std::vector<cx> x(n);
    for (std::size_t col = 0; col < n; ++col)
    {
        for (std::size_t i = 0; i < n; ++i)
            x[i] = f.perm[i] == col ? cx(1.0) : cx(0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                x[i] -= f.lu(i, j) * x[j];
        for (std::size_t i = n; i-- > 0;)
        {
            for (std::size_t j = i + 1; j < n; ++j)
                x[i] -= f.lu(i, j) * x[j];
            x[i] /= f.lu(i, i);
        }
        for (std::size_t i = 0; i < n; ++i)
            inv(i, col) = x[i];
    }
    return inv;
}

SingularValues svd_right(const ComplexMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ComplexMatrix u = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    for (int sweep = 0; sweep < 80; ++sweep)
    {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
            {
                double alpha = 0.0;
                double beta = 0.0;
                cx gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i)
                {
                    alpha += std::norm(u(i, p));
                    beta += std::norm(u(i, q));
                    gamma += std::conj(u(i, p)) * u(i, q);
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta))
                    continue;
                rotated = true;
                const cx phase = std::conj(gamma / g);
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i)
                {
                    const cx up = u(i, p);
                    const cx uq = u(i, q) * phase;
                    u(i, p) = c * up - s * uq;
                    u(i, q) = s * up + c * uq;
                }
                for (std::size_t i = 0; i < n; ++i)
                {
                    const cx vp = v(i, p);
                    const cx vq = v(i, q) * phase;
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        if (!rotated)
            break;
    }

    std::vector<double> norms(n);
    for (std::size_t c = 0; c < n; ++c)
    {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            s += std::norm(u(i, c));
        norms[c] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SingularValues out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t c = 0; c < n; ++c)
    {
        out.values[c] = norms[order[c]];
        for (std::size_t r = 0; r < n; ++r)
            out.v(r, c) = v(r, order[c]);
    }
    return out;
}

double strictly_lower_max(const ComplexMatrix& t)
{
    double best = 0.0;
    for (std::size_t r = 1; r < t.rows(); ++r)
        for (std::size_t c = 0; c < std::min(r, t.cols()); ++c)
            best = std::max(best, std::abs(t(r, c)));
    return best;
}

Triangularization simultaneous_triangularize(const ComplexMatrix& a, const ComplexMatrix& b, double tol)
{
    require_square(a, "simultaneous_triangularize");
    require_square(b, "simultaneous_triangularize");
    if (a.rows() != b.rows())
        throw ContractViolation("simultaneous_triangularize: A and B differ in dimension");
    const std::size_t n = a.rows();
    const double scale = std::max({1.0, max_abs(a), max_abs(b)});

    if (commutator_norm(a, b) <= tol * scale)
    {
        for (const double theta : {0.6180339887, 0.4142135623})
        {
            ComplexMatrix combo = a;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    combo(i, j) += theta * b(i, j);
            SchurForm s = schur(combo);
            const ComplexMatrix qh = conj_transpose(s.q);
            const ComplexMatrix ta = qh * a * s.q;
            const ComplexMatrix tb = qh * b * s.q;
            const double res = std::max(strictly_lower_max(ta), strictly_lower_max(tb));
            if (res <= tol * scale)
                return {std::move(s.q), diagonal(ta), diagonal(tb), res, "schur"};
        }
    }

    ComplexMatrix p = ComplexMatrix::identity(n);
    ComplexMatrix ta = a;
    ComplexMatrix tb = b;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        const std::size_t rest = n - k;
        const CommonVector cv = common_eigenvector(ta.block(k, k, rest, rest), tb.block(k, k, rest, rest), scale);
        if (cv.v.empty() || cv.residual > tol * scale)
            throw NumericalError("simultaneous_triangularize", "not simultaneously triangularizable by this method",
                                 cv.residual);
        const ComplexMatrix h = reflector_with_first_column(cv.v);
        ComplexMatrix g = ComplexMatrix::identity(n);
        for (std::size_t r = 0; r < rest; ++r)
            for (std::size_t c = 0; c < rest; ++c)
                g(k + r, k + c) = h(r, c);
        const ComplexMatrix gh = conj_transpose(g);
        ta = gh * ta * g;
        tb = gh * tb * g;
        p = p * g;
    }
    const double res = std::max(strictly_lower_max(ta), strictly_lower_max(tb));
    if (res > tol * scale)
        throw NumericalError("simultaneous_triangularize", "triangularity check failed after deflation", res);
    return {std::move(p), diagonal(ta), diagonal(tb), res, "deflation"};
}

std::vector<cx> pair_conjugates(std::span<const cx> values)
{
    const std::size_t n = values.size();
    std::vector<cx> out(values.begin(), values.end());
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i)
    {
        if (used[i])
            continue;
        used[i] = true;
        const cx target = std::conj(values[i]);
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j] && std::abs(values[j] - target) < best_d)
            {
                best_d = std::abs(values[j] - target);
                best = j;
            }
        // a near-real value is its own partner
        if (best == n || 2.0 * std::abs(values[i].imag()) <= best_d)
        {
            out[i] = values[i].real();
            continue;
        }
        used[best] = true;
        const cx z = 0.5 * (values[i] + std::conj(values[best]));
        out[i] = z;
        out[best] = std::conj(z);
    }
    return out;
}

namespace
{

bool augment(std::size_t i, const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& seen,
             std::vector<std::size_t>& match_b)
{
    for (std::size_t j : adj[i])
    {
        if (seen[j])
            continue;
        seen[j] = true;
        if (match_b[j] == SIZE_MAX || augment(match_b[j], adj, seen, match_b))
        {
            match_b[j] = i;
            return true;
        }
    }
    return false;
}

// Perfect matching using only pairs with distance ≤ limit; empty when none.
std::vector<std::size_t> perfect_matching(const std::vector<double>& dist, std::size_t n, double limit)
{
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (dist[i * n + j] <= limit)
                adj[i].push_back(j);
    std::vector<std::size_t> match_b(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::vector<bool> seen(n, false);
        if (!augment(i, adj, seen, match_b))
            return {};
    }
    std::vector<std::size_t> assignment(n);
    for (std::size_t j = 0; j < n; ++j)
        assignment[match_b[j]] = j;
    return assignment;
}

} // namespace

MultisetMatch match_multisets(std::span<const cx> a, std::span<const cx> b)
{
    MultisetMatch m;
    if (a.size() != b.size())
    {
        m.size_mismatch = true;
        m.max_dist = std::numeric_limits<double>::infinity();
        return m;
    }
    const std::size_t n = a.size();
    if (n == 0)
        return m;
    std::vector<double> dist(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dist[i * n + j] = std::abs(a[i] - b[j]);
    std::vector<double> levels = dist;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::size_t lo = 0;
    std::size_t hi = levels.size() - 1;
    while (lo < hi)
    {
        const std::size_t mid = (lo + hi) / 2;
        if (perfect_matching(dist, n, levels[mid]).empty())
            lo = mid + 1;
        else
            hi = mid;
    }
    m.assignment = perfect_matching(dist, n, levels[lo]);
    std::size_t worst = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (dist[i * n + m.assignment[i]] > dist[worst * n + m.assignment[worst]])
            worst = i;
    m.max_dist = dist[worst * n + m.assignment[worst]];
    m.worst = worst;
    return m;
}

bool multisets_match(std::span<const cx> a, std::span<const cx> b, double tol)
{
    const auto m = match_multisets(a, b);
    return !m.size_mismatch && m.max_dist <= tol;
}

} // namespace qqwalk
