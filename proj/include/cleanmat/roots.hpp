#pragma once

#include <boost/multiprecision/integer.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cleanmat/ring.hpp"

namespace cleanmat {

/// f(t) = t^2 + t*a1 + a0, coefficients to the right of the powers of t.
struct MonicQuadratic {
    Element a1;
    Element a0;

    /// t^2 - t(1 + w1) - w0.
    static MonicQuadratic from_w(const Element &w0, const Element &w1)
    {
        LocalRing r = w0.ring();
        r.check_owner(w1);
        return {-(r.one() + w1), -w0};
    }

    LocalRing ring() const { return a1.ring(); }
    Element w0() const { return -a0; }
    Element w1() const { return -(ring().one() + a1); }

    /// f lies in W: a0 and 1 + a1 in J(R).
    bool in_W() const
    {
        LocalRing r = ring();
        r.check_owner(a0);
        return r.in_radical(a0) && r.in_radical(r.one() + a1);
    }

    Element value_at_zero() const { return a0; }
    Element value_at_one() const { return ring().one() + a1 + a0; }

    std::string to_string() const;

    friend bool operator==(const MonicQuadratic &, const MonicQuadratic &) = default;
};

namespace detail {

/// A literal that needs no parentheses as a factor: a number, a fraction
/// or a single symbol, possibly negated.
inline bool is_atom(const std::string &lit)
{
    for (std::size_t i = lit[0] == '-' ? 1 : 0; i < lit.size(); ++i)
        if (lit[i] == '+' || lit[i] == '-' || lit[i] == '*' || lit[i] == '^')
            return false;
    return true;
}

} // namespace detail

/// Polynomial in a central t from coefficients listed low to high, e.g.
/// `t^2-t-4` or `t^2+(1+w)*t+w`.
inline std::string format_poly(std::span<const Element> coeffs)
{
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const std::string lit = coeffs[i].to_string();
        if (lit == "0")
            continue;
        const std::string power = i == 0 ? "" : i == 1 ? "t" : "t^" + std::to_string(i);
        std::string term;
        if (i == 0)
            term = lit;
        else if (lit == "1")
            term = power;
        else if (lit == "-1")
            term = "-" + power;
        else if (detail::is_atom(lit))
            term = lit + "*" + power;
        else
            term = "(" + lit + ")*" + power;
        if (!out.empty() && term[0] != '-')
            out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

inline std::string MonicQuadratic::to_string() const
{
    const std::vector<Element> coeffs{a0, a1, ring().one()};
    return format_poly(coeffs);
}

/// lambda^2 + lambda*a1 + a0.
inline Element left_eval(const MonicQuadratic &f, const Element &lambda)
{
    LocalRing r = f.ring();
    r.check_owner(f.a0);
    r.check_owner(lambda);
    return lambda * lambda + lambda * f.a1 + f.a0;
}

/// lambda^2 + a1*lambda + a0.
inline Element right_eval(const MonicQuadratic &f, const Element &lambda)
{
    LocalRing r = f.ring();
    r.check_owner(f.a0);
    r.check_owner(lambda);
    return lambda * lambda + f.a1 * lambda + f.a0;
}

enum class RootMethod { Enumeration, Discriminant, Lifting };

inline const char *to_string(RootMethod m)
{
    switch (m) {
    case RootMethod::Enumeration: return "Enumeration";
    case RootMethod::Discriminant: return "Discriminant";
    case RootMethod::Lifting: return "Lifting";
    }
    return "?";
}

struct RootTargets {
    bool in_j = true;
    bool one_plus_j = true;
    bool unit = true;
    bool nilpotent = true;

    static RootTargets all() { return {}; }
    static RootTargets clean() { return {true, true, false, false}; }
    static RootTargets pi() { return {false, false, true, true}; }
};

/// Roots found per subset; an absent field means no root of that kind
/// exists (when the method is complete for the owner).
struct RootReport {
    std::optional<Element> rootInJ;
    std::optional<Element> rootIn1PlusJ;
    std::optional<Element> rootUnit;
    std::optional<Element> rootNilpotent;
    RootMethod method = RootMethod::Enumeration;

    bool empty() const { return !rootInJ && !rootIn1PlusJ && !rootUnit && !rootNilpotent; }
};

/// First root in enumeration order within each requested subset.
inline RootReport find_roots_enumerate(const MonicQuadratic &f, RootTargets targets = RootTargets::all())
{
    LocalRing r = f.ring();
    r.check_owner(f.a0);
    if (!r.is_finite())
        throw Error(ErrorKind::InfiniteRing, "enumeration needs a finite ring, got " + r.name());
    RootReport report;
    auto first_root = [&](Subset subset, bool nilpotent_only) -> std::optional<Element> {
        for (const auto &x : r.enumerate(subset))
            if ((!nilpotent_only || r.is_nilpotent(x)) && left_eval(f, x).is_zero())
                return x;
        return std::nullopt;
    };
    if (targets.in_j)
        report.rootInJ = first_root(Subset::Radical, false);
    if (targets.one_plus_j)
        report.rootIn1PlusJ = first_root(Subset::OnePlusRadical, false);
    if (targets.unit)
        report.rootUnit = first_root(Subset::Units, false);
    if (targets.nilpotent)
        report.rootNilpotent = first_root(Subset::All, true);
    return report;
}

namespace detail {

inline Fraction as_fraction(const Element &a)
{
    if (const auto *f = std::get_if<Fraction>(&a.payload()))
        return *f;
    return {std::get<Integer>(a.payload()), 1};
}

inline std::optional<Integer> exact_sqrt(const Integer &n)
{
    if (n < 0)
        return std::nullopt;
    Integer s = boost::multiprecision::sqrt(n);
    if (s * s != n)
        return std::nullopt;
    return s;
}

} // namespace detail

/// Roots over Z or Z_(p) from the discriminant a1^2 - 4 a0. Rational roots
/// are kept only when they lie in the owner.
inline RootReport find_roots_rational(const MonicQuadratic &f)
{
    LocalRing r = f.ring();
    r.check_owner(f.a0);
    const Family fam = r.spec().family;
    if (fam != Family::LocalizedIntegers && fam != Family::Integers)
        throw Error(ErrorKind::NotApplicable, "discriminant method needs Z or Z_(p), got " + r.name());
    RootReport report;
    report.method = RootMethod::Discriminant;
    Fraction a1 = detail::as_fraction(f.a1), a0 = detail::as_fraction(f.a0);
    Fraction disc = detail::make_fraction(a1.num * a1.num * a0.den - 4 * a0.num * a1.den * a1.den,
                                          a1.den * a1.den * a0.den);
    auto sn = detail::exact_sqrt(disc.num);
    auto sd = detail::exact_sqrt(disc.den);
    if (!sn || !sd)
        return report;
    // (-a1 - s)/2 first, then (-a1 + s)/2
    for (int sign : {-1, 1}) {
        Fraction root = detail::make_fraction(-a1.num * *sd + sign * *sn * a1.den, 2 * a1.den * *sd);
        std::optional<Element> lambda;
        if (fam == Family::Integers) {
            if (root.den == 1)
                lambda = r.from_integer(root.num);
        } else if (root.den % r.spec().p != 0) {
            lambda = r.fraction(root.num, root.den);
        }
        if (!lambda || !left_eval(f, *lambda).is_zero())
            continue;
        if (lambda->is_zero() && !report.rootNilpotent)
            report.rootNilpotent = lambda;
        if (fam == Family::Integers) {
            if ((root.num == 1 || root.num == -1) && !report.rootUnit)
                report.rootUnit = lambda;
            continue;
        }
        if (r.in_radical(*lambda)) {
            if (!report.rootInJ)
                report.rootInJ = lambda;
        } else {
            if (!report.rootUnit)
                report.rootUnit = lambda;
            if (r.in_radical(*lambda - r.one()) && !report.rootIn1PlusJ)
                report.rootIn1PlusJ = lambda;
        }
    }
    return report;
}

/// Complete root search for the owner: enumeration on finite rings,
/// discriminant on Z and Z_(p).
inline RootReport find_roots(const MonicQuadratic &f, RootTargets targets = RootTargets::all())
{
    if (f.ring().is_finite())
        return find_roots_enumerate(f, targets);
    return find_roots_rational(f);
}

/// Right roots: left roots of the same coefficients over the opposite ring.
inline RootReport right_roots(const MonicQuadratic &f, RootTargets targets = RootTargets::all())
{
    LocalRing r = f.ring();
    LocalRing op = r.opposite();
    RootReport flipped = find_roots({op.adopt(f.a1), op.adopt(f.a0)}, targets);
    RootReport report;
    report.method = flipped.method;
    auto back = [&r](const std::optional<Element> &x) -> std::optional<Element> {
        if (!x)
            return std::nullopt;
        return r.adopt(*x);
    };
    report.rootInJ = back(flipped.rootInJ);
    report.rootIn1PlusJ = back(flipped.rootIn1PlusJ);
    report.rootUnit = back(flipped.rootUnit);
    report.rootNilpotent = back(flipped.rootNilpotent);
    return report;
}

// --- two-sided linear equations ----------------------------------------------

namespace detail {

/// Solves M x = c over F_p by Gauss-Jordan elimination; free variables are
/// set to zero. M is given column by column.
inline std::optional<std::vector<std::int64_t>> solve_mod_p(std::vector<std::vector<std::int64_t>> cols,
                                                             std::vector<std::int64_t> rhs, std::int64_t p)
{
    const std::size_t rows = rhs.size(), ncols = cols.size();
    // augmented row-major copy
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(ncols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j)
            m[i][j] = mod_floor(cols[j][i], p);
        m[i][ncols] = mod_floor(rhs[i], p);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[row]);
        std::int64_t inv = inverse_mod(m[row][col], p);
        for (auto &v : m[row])
            v = v * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            std::int64_t factor = m[i][col];
            for (std::size_t j = 0; j <= ncols; ++j)
                m[i][j] = mod_floor(m[i][j] - factor * m[row][j], p);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (m[i][ncols] != 0)
            return std::nullopt;
    std::vector<std::int64_t> x(ncols, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = m[i][ncols];
    return x;
}

} // namespace detail

/// x with a*x - x*b = c, for a in 1+J and b in J or the other way round.
/// Prime-characteristic digit rings are solved as an F_p-linear system in
/// the payload digits; Z/p^k and Z_(p) are commutative and use (a-b)^{-1} c.
inline Element solve_two_sided_linear(const Element &a, const Element &b, const Element &c)
{
    LocalRing r = a.ring();
    r.check_owner(b);
    r.check_owner(c);
    if (!r.is_local())
        throw Error(ErrorKind::NotLocal, "two-sided linear equations need a local ring");
    const Element one = r.one();
    const bool config = (r.in_radical(a - one) && r.in_radical(b)) || (r.in_radical(a) && r.in_radical(b - one));
    if (!config)
        throw Error(ErrorKind::NotApplicable, "a*x - x*b = c needs one of a, b in J and the other in 1+J");
    Element x = r.zero();
    const Family fam = r.spec().family;
    if (fam == Family::ModPrimePower || fam == Family::LocalizedIntegers) {
        x = r.invert(a - b) * c;
    } else {
        const auto &impl = r.impl_ptr();
        const int dim = impl->digit_count;
        std::vector<std::vector<std::int64_t>> cols;
        for (int j = 0; j < dim; ++j) {
            Digits e = impl->zero_digits();
            e[j] = 1;
            Element basis(impl, e);
            Element image = a * basis - basis * b;
            cols.emplace_back(image.digits().begin(), image.digits().end());
        }
        std::vector<std::int64_t> rhs(c.digits().begin(), c.digits().end());
        auto sol = detail::solve_mod_p(std::move(cols), std::move(rhs), r.spec().p);
        if (!sol)
            throw Error(ErrorKind::NoSolution, "a*x - x*b = c has no solution over " + r.name());
        Digits d(sol->begin(), sol->end());
        x = Element(impl, std::move(d));
    }
    if (!(a * x - x * b == c))
        throw Error(ErrorKind::NoSolution, "a*x - x*b = c has no solution over " + r.name());
    return x;
}

// --- lifting over truncated (skew) polynomial rings --------------------------

namespace detail {

/// Degree-k equation of t^2 - t(1+w1) - w0 = 0 in coefficients:
///   t_k * alpha - t_0 * t_k = rhs
/// with alpha = 1 - s^k(t_0) + s^k(b_0) and
///   rhs = sum_{i=1}^{k-1} t_i s^i(t_{k-i}) - sum_{i=0}^{k-1} t_i s^i(b_{k-i}) - c_k,
/// where w1 = sum b_i x^i, w0 = sum c_i x^i and s is the twist.
struct LiftingStep {
    Element alpha;
    Element rhs;
};

inline LiftingStep lifting_step(const LocalRing &s, const std::vector<Element> &t, const std::vector<Element> &b,
                                const std::vector<Element> &c, int k)
{
    LocalRing base = s.base();
    Element alpha = base.one() - s.twist(t[0], k) + s.twist(b[0], k);
    Element rhs = -c[k];
    for (int i = 1; i < k; ++i)
        rhs += t[i] * s.twist(t[k - i], i);
    for (int i = 0; i < k; ++i)
        rhs -= t[i] * s.twist(b[k - i], i);
    return {alpha, rhs};
}

} // namespace detail

/// A left root in J(S) of t^2 - t(1+w1) - w0, built degree by degree: t_0
/// from the base field, then each t_k from the two-sided linear equation of
/// degree k.
inline Element lift_root_truncated(const LocalRing &s, const Element &w0, const Element &w1)
{
    if (!s.spec().is_truncated() || s.is_reversed())
        throw Error(ErrorKind::NotApplicable, "lifting needs a truncated polynomial ring, got " + s.name());
    s.check_owner(w0);
    s.check_owner(w1);
    if (!s.in_radical(w0) || !s.in_radical(w1))
        throw Error(ErrorKind::NotApplicable, "lifting needs w0, w1 in J");
    const int n = s.spec().n;
    LocalRing base = s.base();
    std::vector<Element> b, c, t;
    for (int i = 0; i < n; ++i) {
        b.push_back(s.coefficient(w1, i));
        c.push_back(s.coefficient(w0, i));
    }
    auto t0 = find_roots_enumerate(MonicQuadratic::from_w(c[0], b[0]), {true, false, false, false}).rootInJ;
    if (!t0)
        throw Error(ErrorKind::BaseRootMissing, "no root in J of the degree-0 equation over " + base.name());
    t.push_back(*t0);
    for (int k = 1; k < n; ++k) {
        t.push_back(base.zero());
        auto step = detail::lifting_step(s, t, b, c, k);
        // t_0 * t_k - t_k * alpha = -rhs
        t[k] = solve_two_sided_linear(t[0], step.alpha, -step.rhs);
    }
    Element root = s.from_coefficients(t);
    if (!s.in_radical(root) || !left_eval(MonicQuadratic::from_w(w0, w1), root).is_zero())
        detail::contract_violation("lifted value is not a root in J");
    return root;
}

} // namespace cleanmat
