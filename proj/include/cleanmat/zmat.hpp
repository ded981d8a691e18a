#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <utility>

#include "cleanmat/matrix2.hpp"
#include "cleanmat/roots.hpp"

namespace cleanmat {

enum class IntCleanTag { TrivialUnit, TrivialOneMinusUnit, Diag, NotClean };

inline const char *to_string(IntCleanTag t)
{
    switch (t) {
    case IntCleanTag::TrivialUnit: return "TrivialUnit";
    case IntCleanTag::TrivialOneMinusUnit: return "TrivialOneMinusUnit";
    case IntCleanTag::Diag: return "Diag";
    case IntCleanTag::NotClean: return "NotClean";
    }
    return "?";
}

/// Strong-cleanness class of an integer 2x2 matrix. For Diag,
/// transform * A * transform^{-1} = diag(d1, d2) with d1 = +-1, d2 in {0, 2}.
struct IntCleanClass {
    IntCleanTag tag;
    int d1 = 0;
    int d2 = 0;
    std::optional<Mat2> transform;
};

namespace zmat {

using IntMat = std::array<Integer, 4>;

inline IntMat entries(const Mat2 &a)
{
    if (a.ring().spec().family != Family::Integers)
        throw Error(ErrorKind::NotApplicable, "integer classification needs a matrix over Z, got " + a.ring().name());
    IntMat m;
    for (int i = 0; i < 4; ++i)
        m[i] = std::get<Integer>(a.entries()[i].payload());
    return m;
}

inline Mat2 to_matrix(const IntMat &m)
{
    LocalRing z = LocalRing::make(RingSpec::integers());
    return {z.from_integer(m[0]), z.from_integer(m[1]), z.from_integer(m[2]), z.from_integer(m[3])};
}

inline Integer det(const IntMat &m) { return m[0] * m[3] - m[1] * m[2]; }
inline Integer trace(const IntMat &m) { return m[0] + m[3]; }

inline bool unimodular(const Integer &d) { return d == 1 || d == -1; }

inline IntMat mul(const IntMat &x, const IntMat &y)
{
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

/// Primitive integer vector spanning ker(A - dI), with its first nonzero
/// coordinate positive. Requires A - dI of rank 1.
inline std::pair<Integer, Integer> primitive_kernel_vector(const IntMat &a, const Integer &d)
{
    IntMat m{a[0] - d, a[1], a[2], a[3] - d};
    Integer x, y;
    if (m[0] != 0 || m[1] != 0) {
        x = m[1];
        y = -m[0];
    } else {
        x = m[3];
        y = -m[2];
    }
    Integer g = detail::integer_gcd(x, y);
    if (g == 0)
        detail::contract_violation("eigenvalue matrix of rank 0 for a non-scalar matrix");
    x /= g;
    y /= g;
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

/// P with P A P^{-1} = diag(d1, d2), when the primitive eigenvectors of the
/// two distinct integer eigenvalues form a unimodular basis.
inline std::optional<IntMat> eigen_transform(const IntMat &a, const Integer &d1, const Integer &d2)
{
    auto [x1, y1] = primitive_kernel_vector(a, d1);
    auto [x2, y2] = primitive_kernel_vector(a, d2);
    IntMat basis{x1, x2, y1, y2};
    Integer db = det(basis);
    if (!unimodular(db))
        return std::nullopt;
    IntMat p{basis[3] * db, -basis[1] * db, -basis[2] * db, basis[0] * db};
    if (mul(mul(p, a), basis) != IntMat{d1, 0, 0, d2})
        detail::contract_violation("eigenvector basis does not diagonalize");
    return p;
}

} // namespace zmat

/// The four nontrivial classes are decided by (trace, det); membership then
/// hinges on the eigenvector lattice being all of Z^2.
inline IntCleanClass classify_integer(const Mat2 &a)
{
    const zmat::IntMat m = zmat::entries(a);
    if (zmat::unimodular(zmat::det(m)))
        return {IntCleanTag::TrivialUnit};
    if (zmat::unimodular(zmat::det(zmat::IntMat{1 - m[0], -m[1], -m[2], 1 - m[3]})))
        return {IntCleanTag::TrivialOneMinusUnit};
    const Integer tr = zmat::trace(m), dt = zmat::det(m);
    int d1, d2;
    if (tr == 1 && dt == 0)
        d1 = 1, d2 = 0;
    else if (tr == -1 && dt == 0)
        d1 = -1, d2 = 0;
    else if (tr == 3 && dt == 2)
        d1 = 1, d2 = 2;
    else if (tr == 1 && dt == -2)
        d1 = -1, d2 = 2;
    else
        return {IntCleanTag::NotClean};
    auto p = zmat::eigen_transform(m, d1, d2);
    if (!p)
        return {IntCleanTag::NotClean};
    return {IntCleanTag::Diag, d1, d2, zmat::to_matrix(*p)};
}

/// Decides strong cleanness over Z straight from the definition: an
/// idempotent E commuting with a non-scalar A is a rational polynomial
/// alpha I + beta A, pinned down by sending the eigenvalues to 0 and 1.
inline bool integer_oracle(const Mat2 &a)
{
    using boost::multiprecision::cpp_rational;
    const zmat::IntMat m = zmat::entries(a);
    const zmat::IntMat one_minus{1 - m[0], -m[1], -m[2], 1 - m[3]};
    // E = 0 or E = I
    if (zmat::unimodular(zmat::det(m)) || zmat::unimodular(zmat::det(one_minus)))
        return true;
    if (m[1] == 0 && m[2] == 0 && m[0] == m[3])
        return false;
    const Integer tr = zmat::trace(m);
    const auto s = detail::exact_sqrt(tr * tr - 4 * zmat::det(m));
    if (!s || *s == 0)
        return false;
    for (int sign : {1, -1}) {
        cpp_rational beta(sign, *s);
        cpp_rational alpha = (1 - beta * tr) / 2;
        std::array<cpp_rational, 4> e;
        for (int i = 0; i < 4; ++i)
            e[i] = beta * cpp_rational(m[i]);
        e[0] += alpha;
        e[3] += alpha;
        bool integral = true;
        for (const auto &x : e)
            integral = integral && boost::multiprecision::denominator(x) == 1;
        if (!integral)
            continue;
        zmat::IntMat ei;
        for (int i = 0; i < 4; ++i)
            ei[i] = boost::multiprecision::numerator(e[i]);
        if (zmat::mul(ei, ei) != ei || zmat::mul(ei, m) != zmat::mul(m, ei))
            detail::contract_violation("polynomial idempotent fails its defining identities");
        if (zmat::unimodular(zmat::det({m[0] - ei[0], m[1] - ei[1], m[2] - ei[2], m[3] - ei[3]})))
            return true;
    }
    return false;
}

} // namespace cleanmat
