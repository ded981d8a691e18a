#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cleanmat/clean2.hpp"
#include "cleanmat/roots.hpp"

namespace cleanmat {

/// Coefficients low to high in a central indeterminate t.
using Poly = std::vector<Element>;

/// f = g0*g1 = h1*h0 with g0(0), g1(1), h0(0), h1(1) units. `starred` records
/// that the residue Bezout identities were found and checked.
struct FactorizationWitness {
    Poly g0;
    Poly g1;
    Poly h0;
    Poly h1;
    bool starred = false;
};

/// Thrown by star_factorize when f has no factorization; carries f.
class NoFactorizationError : public Error {
public:
    explicit NoFactorizationError(MonicQuadratic f)
        : Error(ErrorKind::NoFactorization, f.to_string() + " has no (*)-factorization"), witness_(std::move(f))
    {
    }

    const MonicQuadratic &witness() const { return witness_; }

private:
    MonicQuadratic witness_;
};

namespace poly {

inline Poly of(const MonicQuadratic &f) { return {f.a0, f.a1, f.ring().one()}; }

inline void trim(Poly &p)
{
    while (p.size() > 1 && p.back().is_zero())
        p.pop_back();
}

inline Poly mul(const Poly &x, const Poly &y)
{
    LocalRing r = x[0].ring();
    Poly out(x.size() + y.size() - 1, r.zero());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] += x[i] * y[j];
    trim(out);
    return out;
}

inline Poly add(const Poly &x, const Poly &y)
{
    LocalRing r = x[0].ring();
    Poly out(std::max(x.size(), y.size()), r.zero());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i)
        out[i] += y[i];
    trim(out);
    return out;
}

inline Poly sub(const Poly &x, const Poly &y)
{
    LocalRing r = x[0].ring();
    Poly out(std::max(x.size(), y.size()), r.zero());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i)
        out[i] -= y[i];
    trim(out);
    return out;
}

inline bool is_zero(const Poly &p) { return p.size() == 1 && p[0].is_zero(); }

inline Element at_zero(const Poly &p) { return p[0]; }

inline Element at_one(const Poly &p)
{
    Element s = p[0].ring().zero();
    for (const auto &c : p)
        s += c;
    return s;
}

inline bool monic(const Poly &p) { return p.back() == p.back().ring().one(); }

inline std::string to_string(const Poly &p) { return format_poly(p); }

/// Quotient and remainder over a field.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly &b)
{
    LocalRing f = b[0].ring();
    Poly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, f.zero());
    const Element lead_inv = f.invert(b.back());
    while (!is_zero(a) && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Element c = a.back() * lead_inv;
        q[shift] = c;
        Poly term(shift + 1, f.zero());
        term[shift] = c;
        a = sub(a, mul(term, b));
    }
    trim(q);
    return {q, a};
}

/// u, v with u*a + v*b = 1 over the residue field, when a and b are coprime.
inline std::optional<std::pair<Poly, Poly>> bezout(const Poly &a, const Poly &b)
{
    LocalRing f = a[0].ring();
    Poly r0 = a, r1 = b;
    Poly u0{f.one()}, u1{f.zero()}, v0{f.zero()}, v1{f.one()};
    while (!is_zero(r1)) {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::exchange(r1, rem);
        u0 = std::exchange(u1, sub(u0, mul(q, u1)));
        v0 = std::exchange(v1, sub(v0, mul(q, v1)));
    }
    if (r0.size() != 1 || r0[0].is_zero())
        return std::nullopt;
    Poly scale{f.invert(r0[0])};
    return std::pair{mul(scale, u0), mul(scale, v0)};
}

inline Poly residue(const Poly &p)
{
    auto view = p[0].ring().residue();
    Poly out;
    for (const auto &c : p)
        out.push_back(view.reduce(c));
    trim(out);
    return out;
}

} // namespace poly

namespace detail {

/// Residue Bezout identities: u*g0 + v*g1 = 1 and h0*u' + h1*v' = 1.
inline bool residues_coprime(const FactorizationWitness &w)
{
    const Poly g0 = poly::residue(w.g0), g1 = poly::residue(w.g1);
    const Poly h0 = poly::residue(w.h0), h1 = poly::residue(w.h1);
    const Poly one{g0[0].ring().one()};
    auto left = poly::bezout(g0, g1);
    auto right = poly::bezout(h0, h1);
    if (!left || !right)
        return false;
    Poly lhs = poly::add(poly::mul(left->first, g0), poly::mul(left->second, g1));
    Poly rhs = poly::add(poly::mul(h0, right->first), poly::mul(h1, right->second));
    return lhs == one && rhs == one;
}

} // namespace detail

/// Both products, the four unit conditions, and (if starred) the residue
/// Bezout identities.
inline bool verify_factorization(const MonicQuadratic &f, const FactorizationWitness &w)
{
    LocalRing r = f.ring();
    for (const Poly *p : {&w.g0, &w.g1, &w.h0, &w.h1}) {
        if (p->empty())
            return false;
        for (const auto &c : *p)
            if (!(c.ring() == r))
                return false;
        if (!poly::monic(*p))
            return false;
    }
    const Poly target = poly::of(f);
    if (!(poly::mul(w.g0, w.g1) == target) || !(poly::mul(w.h1, w.h0) == target))
        return false;
    if (!r.is_unit(poly::at_zero(w.g0)) || !r.is_unit(poly::at_one(w.g1)) || !r.is_unit(poly::at_zero(w.h0)) ||
        !r.is_unit(poly::at_one(w.h1)))
        return false;
    return !w.starred || detail::residues_coprime(w);
}

/// Trivial split when f(1) or f(0) is a unit; otherwise
/// f = (t - t1)(t + a1 + t1) = (t - t0)(t + a1 + t0) from left roots t0 in J
/// and t1 in 1+J.
inline FactorizationWitness star_factorize(const MonicQuadratic &f)
{
    LocalRing r = f.ring();
    detail::require_local(r, "star_factorize");
    const Poly one{r.one()};
    const Poly full = poly::of(f);
    FactorizationWitness w;
    if (r.is_unit(f.value_at_one()))
        w = {one, full, one, full};
    else if (r.is_unit(f.value_at_zero()))
        w = {full, one, full, one};
    else {
        auto roots = detail::clean_roots(f);
        if (!roots.in_j || !roots.one_plus_j)
            throw NoFactorizationError(f);
        const Element &t0 = *roots.in_j, &t1 = *roots.one_plus_j;
        w.g0 = {-t1, r.one()};
        w.g1 = {f.a1 + t1, r.one()};
        w.h1 = {-t0, r.one()};
        w.h0 = {f.a1 + t0, r.one()};
    }
    w.starred = detail::residues_coprime(w);
    if (!w.starred || !verify_factorization(f, w))
        detail::contract_violation("constructed factorization does not verify");
    return w;
}

} // namespace cleanmat
