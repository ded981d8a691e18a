#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cleanmat/clean2.hpp"
#include "cleanmat/zmat.hpp"

namespace cleanmat {

enum class PiStatus { TrivialUnit, TrivialNilpotent, Nontrivial, No };

inline const char *to_string(PiStatus s)
{
    switch (s) {
    case PiStatus::TrivialUnit: return "TrivialUnit";
    case PiStatus::TrivialNilpotent: return "TrivialNilpotent";
    case PiStatus::Nontrivial: return "Nontrivial";
    case PiStatus::No: return "No";
    }
    return "?";
}

/// conjugate(P, A) = diag(t0, t1) with t0 a unit and t1 nilpotent.
struct PiCertificate {
    Element t0;
    Element t1;
    Mat2 P;
};

struct PiDecision {
    PiStatus status;
    std::optional<PiCertificate> certificate;
    /// Smallest e with A^e = 0, for TrivialNilpotent.
    std::optional<unsigned> nilpotency;
    /// For No: the quadratic t^2 - t*r - w lacking a unit or nilpotent root,
    /// or the matrix itself when no quadratic is involved.
    std::optional<MonicQuadratic> witness;
    std::optional<Mat2> matrix_witness;
    std::optional<RootMethod> method;
};

namespace detail {

/// Exact conjugation check that also works over Z, where invert2 does not
/// apply: P A = D P with P invertible.
inline bool conjugates_to(const Mat2 &p, const Mat2 &a, const Mat2 &d)
{
    LocalRing r = a.ring();
    if (r.is_local())
        return is_invertible(p) && conjugate(p, a) == d;
    auto m = zmat::entries(p);
    return zmat::unimodular(zmat::det(m)) && p * a == d * p;
}

inline bool element_nilpotent(const Element &x)
{
    LocalRing r = x.ring();
    return r.is_local() ? r.is_nilpotent(x) : x.is_zero();
}

inline bool element_unit(const Element &x)
{
    LocalRing r = x.ring();
    if (r.is_local())
        return r.is_unit(x);
    const auto &v = std::get<Integer>(x.payload());
    return v == 1 || v == -1;
}

inline PiDecision decide_pi_integer(const Mat2 &a)
{
    const auto m = zmat::entries(a);
    if (zmat::unimodular(zmat::det(m)))
        return {PiStatus::TrivialUnit};
    if ((a * a).is_zero())
        return {PiStatus::TrivialNilpotent, std::nullopt, nilpotency_index(a)};
    const Integer tr = zmat::trace(m), dt = zmat::det(m);
    if (dt == 0 && (tr == 1 || tr == -1)) {
        if (auto p = zmat::eigen_transform(m, tr, 0)) {
            LocalRing z = a.ring();
            return {PiStatus::Nontrivial, PiCertificate{z.from_integer(tr), z.zero(), zmat::to_matrix(*p)}};
        }
    }
    PiDecision no{PiStatus::No};
    no.matrix_witness = a;
    return no;
}

} // namespace detail

/// Unit and nilpotent parts are read from the companion [[0, w], [1, r]]:
/// the left roots of t^2 - t*r - w give the eigenrows.
inline PiDecision decide_strongly_pi_regular(const Mat2 &a)
{
    LocalRing r = a.ring();
    if (!r.is_local())
        return detail::decide_pi_integer(a);
    if (is_invertible(a))
        return {PiStatus::TrivialUnit};
    auto nilpotent_or_no = [&a]() {
        if (is_nilpotent(a))
            return PiDecision{PiStatus::TrivialNilpotent, std::nullopt, nilpotency_index(a)};
        PiDecision no{PiStatus::No};
        no.matrix_witness = a;
        return no;
    };
    if (in_radical(a))
        return nilpotent_or_no();
    CompanionForm comp = reduce_to_companion_pi(a);
    // r in J puts A^2 in M_2(J)
    if (r.in_radical(comp.r()))
        return nilpotent_or_no();
    MonicQuadratic f{-comp.r(), -comp.w()};
    RootReport roots = find_roots(f, RootTargets::pi());
    if (!roots.rootUnit || !roots.rootNilpotent) {
        PiDecision no{PiStatus::No};
        no.witness = f;
        no.method = roots.method;
        return no;
    }
    const Element &lu = *roots.rootUnit;
    const Element &ln = *roots.rootNilpotent;
    const Mat2 q = Mat2::from_rows({r.one(), lu}, {r.one(), ln});
    PiCertificate cert{lu, ln, q * comp.transform};
    if (!detail::conjugates_to(cert.P, a, Mat2::diag(lu, ln)) || !r.is_unit(lu) || !r.is_nilpotent(ln))
        detail::contract_violation("constructed pi-regular certificate does not verify");
    return {PiStatus::Nontrivial, cert, std::nullopt, std::nullopt, std::nullopt, roots.method};
}

/// Exact conjugation, t0 a unit, t1 nilpotent.
inline bool verify_pi_certificate(const Mat2 &a, const PiCertificate &cert)
{
    if (!(a.ring() == cert.P.ring()))
        return false;
    return detail::conjugates_to(cert.P, a, Mat2::diag(cert.t0, cert.t1)) && detail::element_unit(cert.t0) &&
           detail::element_nilpotent(cert.t1);
}

/// M_2(R) strongly pi-regular iff M_2(J) is nil and t^2 - t*u - w has a unit
/// and a nilpotent left root for every unit u and every w in J.
inline RingVerdict ring_is_m2_pi_regular(const LocalRing &r)
{
    if (!r.is_finite())
        throw Error(ErrorKind::InfiniteRing, "ring-level pi-regularity sweep needs a finite ring, got " + r.name());
    const auto radical = r.enumerate(Subset::Radical);
    for (const auto &a : radical)
        for (const auto &b : radical)
            for (const auto &c : radical)
                for (const auto &d : radical) {
                    Mat2 m{a, b, c, d};
                    if (!is_nilpotent(m))
                        return {Verdict::No, std::nullopt, m};
                }
    for (const auto &u : r.enumerate(Subset::Units)) {
        for (const auto &w : radical) {
            MonicQuadratic f{-u, -w};
            RootReport rep = find_roots_enumerate(f, RootTargets::pi());
            if (!rep.rootUnit || !rep.rootNilpotent)
                return {Verdict::No, f, std::nullopt};
        }
    }
    return {Verdict::Yes, std::nullopt, std::nullopt};
}

/// Smallest n with R^2 = ker(A^n) + im(A^n) and ker(A^n) meeting im(A^n)
/// only in 0, computed on explicit subsets of the finite module R^2.
inline unsigned fitting_decompose(const Mat2 &a)
{
    LocalRing r = a.ring();
    if (!r.is_finite())
        throw Error(ErrorKind::InfiniteRing, "Fitting decomposition needs a finite ring, got " + r.name());
    const auto elems = r.enumerate(Subset::All);
    const std::uint64_t q = elems.size();
    std::vector<Vec2> module;
    module.reserve(q * q);
    for (const auto &x : elems)
        for (const auto &y : elems)
            module.push_back({x, y});
    auto key = [&r, q](const Vec2 &v) { return r.index_of(v.a) * q + r.index_of(v.b); };
    std::set<std::uint64_t> prev_kernel, prev_image;
    Mat2 power = a;
    for (unsigned n = 1; n <= q * q; ++n) {
        std::set<std::uint64_t> kernel, image;
        for (const auto &v : module) {
            Vec2 image_v = power * v;
            if (image_v.a.is_zero() && image_v.b.is_zero())
                kernel.insert(key(v));
            image.insert(key(image_v));
        }
        bool meets_trivially = true;
        for (auto k : kernel)
            if (k != 0 && image.count(k)) {
                meets_trivially = false;
                break;
            }
        if (meets_trivially && kernel.size() * image.size() == q * q)
            return n;
        // both chains have stabilized without splitting
        if (n > 1 && kernel == prev_kernel && image == prev_image)
            break;
        prev_kernel = std::move(kernel);
        prev_image = std::move(image);
        power = power * a;
    }
    throw Error(ErrorKind::NotPiRegular, a.to_string() + " has no Fitting decomposition");
}

} // namespace cleanmat
