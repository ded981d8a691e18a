#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cleanmat/matrix2.hpp"

namespace cleanmat {

enum class CompanionKind { CleanCase, PiCase };

/// conjugate(transform, A) == [[0, top_right], [1, bottom_right]].
///
/// CleanCase reads the parameters as w0 = top_right, w1 = bottom_right - 1,
/// both in J(R). PiCase reads them as w = top_right in J(R), r = bottom_right.
struct CompanionForm {
    CompanionKind kind;
    Element top_right;
    Element bottom_right;
    Mat2 transform;

    Element w0() const { return top_right; }
    Element w1() const { return bottom_right - bottom_right.ring().one(); }
    Element w() const { return top_right; }
    Element r() const { return bottom_right; }

    Mat2 matrix() const
    {
        LocalRing R = top_right.ring();
        return {R.zero(), top_right, R.one(), bottom_right};
    }
};

namespace detail {

/// Lexicographically first nonzero vector of the kernel of a singular 2x2
/// matrix over a finite or prime residue field. Field elements are ordered
/// by their enumeration index.
inline Vec2 first_kernel_vector(const Mat2 &m)
{
    LocalRing F = m.ring();
    const Element first_nonzero = F.element_at(1);
    if (m.is_zero())
        return {F.zero(), first_nonzero};
    if (field_rank(m) != 1)
        contract_violation("kernel requested for a nonsingular residue matrix");
    Vec2 k = !(m(0, 0).is_zero() && m(0, 1).is_zero()) ? Vec2{m(0, 1), -m(0, 0)} : Vec2{m(1, 1), -m(1, 0)};
    // the line {c k}: scale so the first nonzero coordinate is the smallest
    // nonzero field element
    const Element &lead = k.a.is_zero() ? k.b : k.a;
    Element c = first_nonzero * F.invert(lead);
    return {c * k.a, c * k.b};
}

inline Vec2 lift(const ResidueView &view, const Vec2 &v) { return {view.lift(v.a), view.lift(v.b)}; }

/// Builds the cyclic basis {x, Ax} and reads off the companion entries.
inline CompanionForm cyclic_companion(const Mat2 &a, const Vec2 &x, CompanionKind kind)
{
    Mat2 basis = Mat2::from_columns(x, a * x);
    if (!is_invertible(basis))
        contract_violation("cyclic basis {x, Ax} is not a basis");
    Mat2 p = invert2(basis);
    Mat2 c = p * a * basis;
    LocalRing R = a.ring();
    if (!c(0, 0).is_zero() || !(c(1, 0) == R.one()))
        contract_violation("change of basis did not produce companion shape");
    return {kind, c(0, 1), c(1, 1), p};
}

} // namespace detail

/// Similarity to [[0, w0], [1, 1 + w1]] with w0, w1 in J(R), for A such that
/// neither A nor I - A is invertible. The cyclic vector is the lift of v + w
/// for v in ker(A-bar) and w in ker(I - A-bar).
inline CompanionForm reduce_to_companion(const Mat2 &a)
{
    LocalRing R = a.ring();
    detail::require_local(R, "reduce_to_companion");
    const Mat2 id = Mat2::identity(R);
    if (is_invertible(a) || is_invertible(id - a))
        throw Error(ErrorKind::NotApplicable, a.to_string() + " has A or I-A invertible");
    auto view = R.residue();
    Mat2 abar = residue_matrix(a);
    Vec2 v = detail::first_kernel_vector(abar);
    Vec2 w = detail::first_kernel_vector(Mat2::identity(view.field()) - abar);
    Vec2 x = detail::lift(view, {v.a + w.a, v.b + w.b});
    CompanionForm form = detail::cyclic_companion(a, x, CompanionKind::CleanCase);
    if (!R.in_radical(form.w0()) || !R.in_radical(form.w1()))
        detail::contract_violation("companion parameters outside J(R)");
    return form;
}

/// Similarity to [[0, w], [1, r]] with w in J(R), for A outside
/// M_2(J(R)) and GL_2(R). The cyclic vector lifts the first v outside
/// ker(A-bar) and Im(A-bar).
inline CompanionForm reduce_to_companion_pi(const Mat2 &a)
{
    LocalRing R = a.ring();
    detail::require_local(R, "reduce_to_companion_pi");
    if (in_radical(a) || is_invertible(a))
        throw Error(ErrorKind::NotApplicable, a.to_string() + " lies in M_2(J) or GL_2");
    auto view = R.residue();
    LocalRing F = view.field();
    Mat2 abar = residue_matrix(a);
    // Im(A-bar) is the line through a nonzero column
    Vec2 image = abar.column(0);
    if (image.a.is_zero() && image.b.is_zero())
        image = abar.column(1);
    std::optional<Vec2> chosen;
    const std::uint64_t q = *F.cardinality();
    for (std::uint64_t i = 0; i < q && !chosen; ++i) {
        for (std::uint64_t j = 0; j < q && !chosen; ++j) {
            Vec2 v{F.element_at(i), F.element_at(j)};
            Vec2 av = abar * v;
            bool in_kernel = av.a.is_zero() && av.b.is_zero();
            bool in_image = (v.a * image.b - v.b * image.a).is_zero();
            if (!in_kernel && !in_image)
                chosen = v;
        }
    }
    if (!chosen)
        detail::contract_violation("residue plane is a union of kernel and image");
    CompanionForm form = detail::cyclic_companion(a, detail::lift(view, *chosen), CompanionKind::PiCase);
    if (!R.in_radical(form.w()))
        detail::contract_violation("companion parameter w outside J(R)");
    return form;
}

// --- n x n companion identity ----------------------------------------------

using MatN = std::vector<std::vector<Element>>;

inline MatN matn_mul(const MatN &x, const MatN &y)
{
    const std::size_t n = x.size();
    LocalRing R = x[0][0].ring();
    MatN out(n, std::vector<Element>(n, R.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out[i][j] += x[i][k] * y[k][j];
    return out;
}

/// Companion matrix of t^n + a_{n-1} t^{n-1} + ... + a_0, given the
/// non-leading coefficients a_0..a_{n-1}.
inline MatN companion_matrix(std::span<const Element> lower)
{
    const std::size_t n = lower.size();
    if (n == 0)
        throw Error(ErrorKind::NotApplicable, "companion matrix needs degree >= 1");
    LocalRing R = lower[0].ring();
    MatN c(n, std::vector<Element>(n, R.zero()));
    for (std::size_t i = 0; i + 1 < n; ++i)
        c[i + 1][i] = R.one();
    for (std::size_t i = 0; i < n; ++i)
        c[i][n - 1] = -lower[i];
    return c;
}

/// Checks C^n + C^{n-1} a_{n-1} + ... + C a_1 + I a_0 = 0, where each
/// coefficient multiplies the matrix power from the right.
inline bool check_companion_identity(std::span<const Element> lower)
{
    const std::size_t n = lower.size();
    LocalRing R = lower[0].ring();
    for (const auto &a : lower)
        R.check_owner(a);
    MatN c = companion_matrix(lower);
    MatN power(n, std::vector<Element>(n, R.zero()));
    for (std::size_t i = 0; i < n; ++i)
        power[i][i] = R.one();
    MatN total(n, std::vector<Element>(n, R.zero()));
    for (std::size_t deg = 0; deg <= n; ++deg) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                total[i][j] += deg == n ? power[i][j] : power[i][j] * lower[deg];
        if (deg < n)
            power = matn_mul(power, c);
    }
    for (const auto &row : total)
        for (const auto &x : row)
            if (!x.is_zero())
                return false;
    return true;
}

} // namespace cleanmat
