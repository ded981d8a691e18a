#pragma once

#include <array>
#include <string>
#include <string_view>

#include "cleanmat/literal.hpp"
#include "cleanmat/ring.hpp"

namespace cleanmat {

/// Column vector in R^2.
struct Vec2 {
    Element a;
    Element b;

    friend bool operator==(const Vec2 &, const Vec2 &) = default;
};

/// 2x2 matrix over one ring. Entries are row-major; in products the row
/// entry always multiplies from the left.
class Mat2 {
public:
    Mat2(Element a11, Element a12, Element a21, Element a22)
        : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)}
    {
        LocalRing r = e_[0].ring();
        for (const auto &x : e_)
            r.check_owner(x);
    }

    static Mat2 identity(const LocalRing &r) { return {r.one(), r.zero(), r.zero(), r.one()}; }
    static Mat2 zero(const LocalRing &r) { return {r.zero(), r.zero(), r.zero(), r.zero()}; }
    static Mat2 diag(const Element &a, const Element &b)
    {
        auto z = a.ring().zero();
        return {a, z, z, b};
    }
    /// Matrix whose columns are u and v.
    static Mat2 from_columns(const Vec2 &u, const Vec2 &v) { return {u.a, v.a, u.b, v.b}; }
    /// Matrix whose rows are u and v.
    static Mat2 from_rows(const Vec2 &u, const Vec2 &v) { return {u.a, u.b, v.a, v.b}; }

    /// 0-based entry access.
    const Element &operator()(int i, int j) const { return e_[2 * i + j]; }
    const std::array<Element, 4> &entries() const { return e_; }
    LocalRing ring() const { return e_[0].ring(); }

    Vec2 column(int j) const { return {(*this)(0, j), (*this)(1, j)}; }

    friend Mat2 operator+(const Mat2 &x, const Mat2 &y)
    {
        return {x.e_[0] + y.e_[0], x.e_[1] + y.e_[1], x.e_[2] + y.e_[2], x.e_[3] + y.e_[3]};
    }

    friend Mat2 operator-(const Mat2 &x, const Mat2 &y)
    {
        return {x.e_[0] - y.e_[0], x.e_[1] - y.e_[1], x.e_[2] - y.e_[2], x.e_[3] - y.e_[3]};
    }

    friend Mat2 operator*(const Mat2 &x, const Mat2 &y)
    {
        return {x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]};
    }

    friend Vec2 operator*(const Mat2 &x, const Vec2 &v)
    {
        return {x.e_[0] * v.a + x.e_[1] * v.b, x.e_[2] * v.a + x.e_[3] * v.b};
    }

    /// Row vector times matrix.
    friend Vec2 operator*(const Vec2 &v, const Mat2 &x)
    {
        return {v.a * x.e_[0] + v.b * x.e_[2], v.a * x.e_[1] + v.b * x.e_[3]};
    }

    friend bool operator==(const Mat2 &, const Mat2 &) = default;

    bool is_zero() const
    {
        for (const auto &x : e_)
            if (!x.is_zero())
                return false;
        return true;
    }

    /// `[[a,b],[c,d]]` with element literals.
    std::string to_string() const
    {
        return "[[" + e_[0].to_string() + "," + e_[1].to_string() + "],[" + e_[2].to_string() + "," +
               e_[3].to_string() + "]]";
    }

private:
    std::array<Element, 4> e_;
};

inline Mat2 pow(const Mat2 &a, unsigned e)
{
    Mat2 r = Mat2::identity(a.ring());
    Mat2 base = a;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Parses `[[a,b],[c,d]]`.
inline Mat2 parse_matrix(const LocalRing &ring, std::string_view text)
{
    detail::Cursor cur(text);
    cur.expect('[');
    std::size_t inner_start = cur.position();
    // strip the outer brackets and split into the two rows
    std::size_t close = text.find_last_of(']');
    if (close == std::string_view::npos || close < inner_start)
        cur.fail("expected ']'");
    for (std::size_t i = close + 1; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError(i, "unexpected trailing input");
    auto rows = detail::split_top_level(text.substr(inner_start, close - inner_start), inner_start);
    if (rows.size() != 2)
        throw ParseError(inner_start, "a 2x2 matrix needs exactly two rows");
    std::vector<Element> entries;
    for (auto [row, at] : rows) {
        std::size_t open = row.find('['), end = row.find_last_of(']');
        if (open == std::string_view::npos || end == std::string_view::npos || end < open)
            throw ParseError(at, "expected a bracketed row");
        for (std::size_t i = 0; i < row.size(); ++i)
            if ((i < open || i > end) && !std::isspace(static_cast<unsigned char>(row[i])))
                throw ParseError(at + i, "unexpected character outside row brackets");
        auto cells = detail::split_top_level(row.substr(open + 1, end - open - 1), at + open + 1);
        if (cells.size() != 2)
            throw ParseError(at, "each row needs exactly two entries");
        for (auto [cell, cat] : cells)
            entries.push_back(parse_element(ring, cell, cat));
    }
    return {entries[0], entries[1], entries[2], entries[3]};
}

namespace detail {

inline void require_local(const LocalRing &r, const char *what)
{
    if (!r.is_local())
        throw Error(ErrorKind::NotLocal, std::string(what) + " needs a local ring; Z is served by zmat");
}

} // namespace detail

/// Entry-wise reduction to the residue field.
inline Mat2 residue_matrix(const Mat2 &a)
{
    auto view = a.ring().residue();
    return {view.reduce(a(0, 0)), view.reduce(a(0, 1)), view.reduce(a(1, 0)), view.reduce(a(1, 1))};
}

/// Rank of a matrix over a (commutative) residue field, by elimination.
inline int field_rank(const Mat2 &f)
{
    if (f.is_zero())
        return 0;
    const Element det = f(0, 0) * f(1, 1) - f(0, 1) * f(1, 0);
    return det.is_zero() ? 1 : 2;
}

inline int residue_rank(const Mat2 &a) { return field_rank(residue_matrix(a)); }

/// A in GL_2(R), decided on the residue matrix (units lift modulo J).
inline bool is_invertible(const Mat2 &a)
{
    detail::require_local(a.ring(), "is_invertible");
    return residue_rank(a) == 2;
}

/// All entries lie in J(R).
inline bool in_radical(const Mat2 &a)
{
    detail::require_local(a.ring(), "in_radical");
    for (const auto &x : a.entries())
        if (!a.ring().in_radical(x))
            return false;
    return true;
}

/// Two-sided inverse by Gauss-Jordan with unit pivots. Row operations
/// multiply from the left, so this is correct over noncommutative rings.
inline Mat2 invert2(const Mat2 &a)
{
    LocalRing r = a.ring();
    detail::require_local(r, "invert2");
    if (!is_invertible(a))
        throw Error(ErrorKind::NotInvertible, a.to_string() + " is not invertible");
    // rows of [A | I]
    std::array<std::array<Element, 4>, 2> rows{{{a(0, 0), a(0, 1), r.one(), r.zero()},
                                                {a(1, 0), a(1, 1), r.zero(), r.one()}}};
    auto scale = [](Element c, std::array<Element, 4> &row) {
        for (auto &x : row)
            x = c * x;
    };
    auto subtract = [](std::array<Element, 4> &row, Element c, const std::array<Element, 4> &other) {
        for (int i = 0; i < 4; ++i)
            row[i] = row[i] - c * other[i];
    };
    if (!r.is_unit(rows[0][0]))
        std::swap(rows[0], rows[1]);
    if (!r.is_unit(rows[0][0]))
        detail::contract_violation("no unit pivot in first column of an invertible matrix");
    scale(r.invert(rows[0][0]), rows[0]);
    subtract(rows[1], rows[1][0], rows[0]);
    if (!r.is_unit(rows[1][1]))
        detail::contract_violation("no unit pivot in second column of an invertible matrix");
    scale(r.invert(rows[1][1]), rows[1]);
    subtract(rows[0], rows[0][1], rows[1]);
    Mat2 inv{rows[0][2], rows[0][3], rows[1][2], rows[1][3]};
    if (!(inv * a == Mat2::identity(r)) || !(a * inv == Mat2::identity(r)))
        detail::contract_violation("computed inverse is not two-sided");
    return inv;
}

/// P A P^{-1}; the one similarity orientation used everywhere.
inline Mat2 conjugate(const Mat2 &p, const Mat2 &a) { return p * a * invert2(p); }

/// Over finite owners A is nilpotent iff A^(2 nu) = 0 where J^nu = 0;
/// over the domains Z and Z_(p) iff A^2 = 0.
inline bool is_nilpotent(const Mat2 &a)
{
    if (auto nu = a.ring().radical_nilpotency_index())
        return pow(a, static_cast<unsigned>(2 * *nu)).is_zero();
    return (a * a).is_zero();
}

/// Smallest e >= 1 with A^e = 0; requires is_nilpotent(A).
inline unsigned nilpotency_index(const Mat2 &a)
{
    Mat2 p = a;
    for (unsigned e = 1;; ++e) {
        if (p.is_zero())
            return e;
        if (e > 64)
            throw Error(ErrorKind::NotApplicable, "matrix is not nilpotent");
        p = p * a;
    }
}

} // namespace cleanmat
