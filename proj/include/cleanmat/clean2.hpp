#pragma once

#include <optional>

#include "cleanmat/companion.hpp"
#include "cleanmat/roots.hpp"

namespace cleanmat {

enum class CleanStatus { TrivialUnit, TrivialOneMinusUnit, NontrivialClean, NotClean };

inline const char *to_string(CleanStatus s)
{
    switch (s) {
    case CleanStatus::TrivialUnit: return "TrivialUnit";
    case CleanStatus::TrivialOneMinusUnit: return "TrivialOneMinusUnit";
    case CleanStatus::NontrivialClean: return "NontrivialClean";
    case CleanStatus::NotClean: return "NotClean";
    }
    return "?";
}

/// conjugate(P, A) == diag(t0, t1).
struct DiagonalForm {
    Element t0;
    Element t1;
    Mat2 P;
};

/// A = E + U with E idempotent, U invertible and EU = UE.
struct CleanCertificate {
    Mat2 E;
    Mat2 U;
    /// Present for nontrivial certificates: 1 - t0 in J, t1 in J.
    std::optional<DiagonalForm> diag;
};

struct CleanDecision {
    CleanStatus status;
    std::optional<CleanCertificate> certificate;
    /// For NotClean: a quadratic in W without a root in J.
    std::optional<MonicQuadratic> witness;
    /// Absent for the trivial cases.
    std::optional<RootMethod> method;
};

/// E^2 = E, A = E + U, EU = UE and U invertible.
inline bool verify_certificate(const Mat2 &a, const CleanCertificate &cert)
{
    const Mat2 &e = cert.E;
    const Mat2 &u = cert.U;
    if (!(a.ring() == e.ring()) || !(a.ring() == u.ring()))
        return false;
    return e * e == e && a == e + u && e * u == u * e && is_invertible(u);
}

/// conjugate(P, A) = diag(t0, t1) with 1 - t0 and t1 in J.
inline bool verify_diagonal(const Mat2 &a, const DiagonalForm &d)
{
    LocalRing r = a.ring();
    if (!is_invertible(d.P))
        return false;
    return conjugate(d.P, a) == Mat2::diag(d.t0, d.t1) && r.in_radical(r.one() - d.t0) && r.in_radical(d.t1);
}

/// Clean decomposition from the eigenrows (1, lambdaJ) and (1, lambda1J) of
/// the companion matrix. E projects onto the J-eigenline, so U = A - E acts
/// as a unit on both lines.
inline CleanCertificate build_certificate(const CompanionForm &companion, const Element &lambdaJ,
                                          const Element &lambda1J, const Mat2 &a)
{
    LocalRing r = a.ring();
    const Mat2 c = companion.matrix();
    const Vec2 v1{r.one(), lambdaJ};
    const Vec2 v2{r.one(), lambda1J};
    for (const auto &[v, lambda] : {std::pair{v1, lambdaJ}, std::pair{v2, lambda1J}})
        if (!(v * c == Vec2{lambda * v.a, lambda * v.b}))
            detail::contract_violation("eigenrow equation fails for a claimed root");
    const Mat2 q = Mat2::from_rows(v2, v1);
    const Mat2 q_inv = invert2(q);
    const Mat2 ec = q_inv * Mat2::diag(r.zero(), r.one()) * q;
    const Mat2 &p = companion.transform;
    const Mat2 p_inv = invert2(p);
    const Mat2 e = p_inv * ec * p;
    CleanCertificate cert{e, a - e, DiagonalForm{lambda1J, lambdaJ, q * p}};
    if (!verify_certificate(a, cert) || !verify_diagonal(a, *cert.diag))
        detail::contract_violation("constructed clean certificate does not verify");
    return cert;
}

namespace detail {

struct CleanRoots {
    std::optional<Element> in_j;
    std::optional<Element> one_plus_j;
    RootMethod method;
};

/// Roots in J and 1+J of f in W. Truncated rings lift both roots (the one in
/// 1+J as 1 - mu with mu a root in J of f(1 - t)) and cross-check existence
/// against enumeration.
inline CleanRoots clean_roots(const MonicQuadratic &f)
{
    LocalRing r = f.ring();
    if (r.spec().is_truncated() && !r.is_reversed()) {
        Element lj = lift_root_truncated(r, f.w0(), f.w1());
        Element mu = lift_root_truncated(r, f.w0() + f.w1(), -f.w1());
        Element l1j = r.one() - mu;
        RootReport check = find_roots_enumerate(f, RootTargets::clean());
        if (!check.rootInJ || !check.rootIn1PlusJ)
            contract_violation("lifting found roots that enumeration does not");
        return {lj, l1j, RootMethod::Lifting};
    }
    RootReport rep = r.is_finite() ? find_roots_enumerate(f, RootTargets::clean()) : find_roots_rational(f);
    return {rep.rootInJ, rep.rootIn1PlusJ, rep.method};
}

} // namespace detail

inline CleanDecision decide_strongly_clean(const Mat2 &a)
{
    LocalRing r = a.ring();
    detail::require_local(r, "decide_strongly_clean");
    const Mat2 id = Mat2::identity(r);
    if (is_invertible(a))
        return {CleanStatus::TrivialUnit, CleanCertificate{Mat2::zero(r), a, std::nullopt}, std::nullopt, std::nullopt};
    if (is_invertible(id - a))
        return {CleanStatus::TrivialOneMinusUnit, CleanCertificate{id, a - id, std::nullopt}, std::nullopt,
                std::nullopt};
    CompanionForm comp = reduce_to_companion(a);
    MonicQuadratic f = MonicQuadratic::from_w(comp.w0(), comp.w1());
    detail::CleanRoots roots = detail::clean_roots(f);
    if (roots.in_j && roots.one_plus_j)
        return {CleanStatus::NontrivialClean, build_certificate(comp, *roots.in_j, *roots.one_plus_j, a),
                std::nullopt, roots.method};
    if (roots.in_j || roots.one_plus_j)
        detail::contract_violation("a quadratic in W has a root in only one of J and 1+J");
    return {CleanStatus::NotClean, std::nullopt, f, roots.method};
}

enum class Verdict { Yes, No, Unknown };

inline const char *to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

/// Ring-level answer. A No carries either a quadratic without the required
/// roots or a matrix witness.
struct RingVerdict {
    Verdict verdict;
    std::optional<MonicQuadratic> witness;
    std::optional<Mat2> matrix_witness;
};

/// M_2(R) strongly clean iff every f in W has a left root in J(R).
/// Finite rings are swept over J x J; Z_(p) is scanned along
/// w0 = p, 2p, ..., bound*p with w1 = 0.
inline RingVerdict ring_is_strongly_clean(const LocalRing &r, std::optional<std::uint64_t> search_bound = std::nullopt)
{
    detail::require_local(r, "ring_is_strongly_clean");
    if (r.is_finite()) {
        const bool lift = r.spec().is_truncated() && !r.is_reversed();
        const auto radical = r.enumerate(Subset::Radical);
        for (const auto &w0 : radical) {
            for (const auto &w1 : radical) {
                MonicQuadratic f = MonicQuadratic::from_w(w0, w1);
                if (lift) {
                    lift_root_truncated(r, w0, w1);
                    continue;
                }
                if (!find_roots_enumerate(f, {true, false, false, false}).rootInJ)
                    return {Verdict::No, f, std::nullopt};
            }
        }
        return {Verdict::Yes, std::nullopt, std::nullopt};
    }
    const std::uint64_t bound = search_bound.value_or(1000);
    for (std::uint64_t i = 1; i <= bound; ++i) {
        MonicQuadratic f = MonicQuadratic::from_w(r.from_integer(Integer(i) * r.spec().p), r.zero());
        if (!find_roots_rational(f).rootInJ)
            return {Verdict::No, f, std::nullopt};
    }
    return {Verdict::Unknown, std::nullopt, std::nullopt};
}

/// Diagonal form read off a nontrivial certificate: the unit side is spanned
/// by a column of I - E, the radical side by a column of E.
inline DiagonalForm diagonalize_clean(const Mat2 &a, const CleanCertificate &cert)
{
    LocalRing r = a.ring();
    detail::require_local(r, "diagonalize_clean");
    const Mat2 id = Mat2::identity(r);
    if (cert.E.is_zero() || cert.E == id)
        throw Error(ErrorKind::TrivialCertificate, "E is 0 or I; there is no splitting to diagonalize");
    if (!verify_certificate(a, cert))
        throw Error(ErrorKind::NotApplicable, "certificate does not verify for " + a.to_string());
    auto generator = [&r](const Mat2 &m) -> Vec2 {
        for (int j = 0; j < 2; ++j) {
            Vec2 col = m.column(j);
            if (r.is_unit(col.a) || r.is_unit(col.b))
                return col;
        }
        detail::contract_violation("image of a nontrivial idempotent has no unimodular column");
    };
    // A v = v t: read t off a unit coordinate of v
    auto eigenvalue = [&](const Vec2 &v) {
        Vec2 av = a * v;
        return r.is_unit(v.a) ? r.invert(v.a) * av.a : r.invert(v.b) * av.b;
    };
    Vec2 d = generator(id - cert.E);
    Vec2 c = generator(cert.E);
    Mat2 basis = Mat2::from_columns(d, c);
    DiagonalForm out{eigenvalue(d), eigenvalue(c), invert2(basis)};
    if (!verify_diagonal(a, out))
        detail::contract_violation("diagonal form from certificate does not verify");
    return out;
}

} // namespace cleanmat
