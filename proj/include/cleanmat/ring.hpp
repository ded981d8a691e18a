#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cleanmat/error.hpp"
#include "cleanmat/galois.hpp"
#include "cleanmat/ring_spec.hpp"

namespace cleanmat {

using Integer = boost::multiprecision::cpp_int;
using Digits = boost::container::small_vector<std::int32_t, 8>;

/// Reduced fraction with positive denominator.
struct Fraction {
    Integer num;
    Integer den{1};

    friend bool operator==(const Fraction &, const Fraction &) = default;
};

/// Canonical payloads: Integer for Z, Fraction for Z_(p), prime-field digit
/// vectors for every finite family.
using Payload = std::variant<Integer, Fraction, Digits>;

enum class Subset { All, Radical, OnePlusRadical, Units };

class Element;
class LocalRing;
class ResidueView;

namespace detail {

struct RingImpl;
using RingPtr = std::shared_ptr<const RingImpl>;

inline bool same_ring(const RingImpl *a, const RingImpl *b);

} // namespace detail

/// A ring element in canonical form, bound to the ring that produced it.
/// Equality is owner equality plus payload identity.
class Element {
public:
    Element(detail::RingPtr ring, Payload value) : ring_(std::move(ring)), value_(std::move(value)) {}

    LocalRing ring() const;
    const Payload &payload() const { return value_; }
    const Digits &digits() const { return std::get<Digits>(value_); }
    bool is_zero() const;
    std::string to_string() const;

    friend bool operator==(const Element &a, const Element &b)
    {
        return detail::same_ring(a.ring_.get(), b.ring_.get()) && a.value_ == b.value_;
    }

    friend Element operator+(const Element &a, const Element &b);
    friend Element operator-(const Element &a, const Element &b);
    friend Element operator*(const Element &a, const Element &b);
    friend Element operator-(const Element &a);

    Element &operator+=(const Element &b) { return *this = *this + b; }
    Element &operator-=(const Element &b) { return *this = *this - b; }
    Element &operator*=(const Element &b) { return *this = *this * b; }

    const detail::RingImpl &impl() const { return *ring_; }
    const detail::RingPtr &impl_ptr() const { return ring_; }

private:
    detail::RingPtr ring_;
    Payload value_;
};

/// Handle to one concrete local ring (or Z). Cheap to copy; all state is
/// immutable and shared.
class LocalRing {
public:
    explicit LocalRing(detail::RingPtr impl) : impl_(std::move(impl)) {}

    static LocalRing make(const RingSpec &spec);

    const RingSpec &spec() const;
    std::string name() const;
    bool is_reversed() const;
    bool is_local() const { return spec().family != Family::Integers; }
    bool is_finite() const;
    bool is_commutative() const;
    /// |R| for finite rings.
    std::optional<std::uint64_t> cardinality() const;
    /// Smallest nu with J(R)^nu = 0, for the families where J is nilpotent.
    std::optional<int> radical_nilpotency_index() const;

    Element zero() const;
    Element one() const;
    Element from_int(long long v) const { return from_integer(Integer(v)); }
    Element from_integer(const Integer &v) const;
    /// num/den; the denominator must be a unit of the ring.
    Element fraction(const Integer &num, const Integer &den) const;
    /// Field generator w (GF-based families only).
    Element generator() const;
    /// Truncation variable x (truncated families only).
    Element variable() const;

    Element add(const Element &a, const Element &b) const;
    Element sub(const Element &a, const Element &b) const;
    Element mul(const Element &a, const Element &b) const;
    Element neg(const Element &a) const;
    Element pow(const Element &a, unsigned e) const;

    bool is_unit(const Element &a) const;
    bool in_radical(const Element &a) const;
    bool is_nilpotent(const Element &a) const;
    Element invert(const Element &a) const;

    ResidueView residue() const;
    std::vector<Element> enumerate(Subset subset = Subset::All) const;
    /// Position of a in enumerate(All).
    std::uint64_t index_of(const Element &a) const;
    Element element_at(std::uint64_t index) const;

    /// Same elements, multiplication reversed.
    LocalRing opposite() const;
    /// Rebinds an element of this ring or of its opposite twin to this ring.
    Element adopt(const Element &a) const;

    // Truncated families: coefficient access over the Galois base.
    LocalRing base() const;
    Element coefficient(const Element &a, int i) const;
    Element from_coefficients(std::span<const Element> coeffs) const;
    /// sigma^i(b) for b in the base, where sigma is the Frobenius power of
    /// the skew relation (identity for TruncatedPoly).
    Element twist(const Element &b, int i) const;

    std::string format(const Element &a) const;

    void check_owner(const Element &a) const;

    const detail::RingPtr &impl_ptr() const { return impl_; }

    friend bool operator==(const LocalRing &a, const LocalRing &b)
    {
        return detail::same_ring(a.impl_.get(), b.impl_.get());
    }

private:
    Element wrap(Payload v) const { return Element(impl_, std::move(v)); }

    detail::RingPtr impl_;
};

/// R -> R/J(R) together with the canonical lift back.
class ResidueView {
public:
    ResidueView(LocalRing ring, LocalRing field) : ring_(std::move(ring)), field_(std::move(field)) {}

    const LocalRing &ring() const { return ring_; }
    const LocalRing &field() const { return field_; }
    Element reduce(const Element &a) const;
    Element lift(const Element &a) const;

private:
    LocalRing ring_;
    LocalRing field_;
};

namespace detail {

inline Integer integer_gcd(Integer a, Integer b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

inline Fraction make_fraction(Integer num, Integer den)
{
    if (den == 0)
        throw Error(ErrorKind::NotAUnit, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Integer g = integer_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0)
        den = 1;
    return {std::move(num), std::move(den)};
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t q)
{
    std::int64_t r0 = q, r1 = mod_floor(a, q), s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t t = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
    }
    if (r0 != 1)
        throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not invertible mod " + std::to_string(q));
    return mod_floor(s0, q);
}

struct RingImpl {
    RingSpec spec;
    bool reversed = false;
    std::shared_ptr<const GaloisArith> gf; // GF-based families
    std::int64_t q = 0;                   // p^k for Z/p^k
    int digit_count = 0;                  // finite payload length
    std::int64_t digit_base = 0;          // radix of each payload digit
    RingPtr residue_field;                // null for Z, and for GF (its own residue)

    mutable std::once_flag enum_once;
    mutable std::vector<Digits> enum_all, enum_radical, enum_one_plus, enum_units;

    bool finite() const
    {
        return spec.family != Family::Integers && spec.family != Family::LocalizedIntegers;
    }

    std::uint64_t size() const
    {
        std::uint64_t s = 1;
        for (int i = 0; i < digit_count; ++i) {
            if (s > (std::uint64_t{1} << 40))
                return s;
            s *= static_cast<std::uint64_t>(digit_base);
        }
        return s;
    }

    int m() const { return spec.m; }
    int slots() const { return spec.family == Family::GaloisField ? 1 : spec.n; }

    std::span<const std::int32_t> slot(const Digits &d, int i) const { return {d.data() + i * m(), static_cast<std::size_t>(m())}; }
    std::span<std::int32_t> slot(Digits &d, int i) const { return {d.data() + i * m(), static_cast<std::size_t>(m())}; }

    Digits zero_digits() const { return Digits(digit_count, 0); }

    // --- additive structure -------------------------------------------------

    Payload add(const Payload &a, const Payload &b) const
    {
        switch (spec.family) {
        case Family::Integers: return std::get<Integer>(a) + std::get<Integer>(b);
        case Family::LocalizedIntegers: {
            auto &x = std::get<Fraction>(a);
            auto &y = std::get<Fraction>(b);
            return make_fraction(x.num * y.den + y.num * x.den, x.den * y.den);
        }
        case Family::ModPrimePower: {
            auto &x = std::get<Digits>(a);
            auto &y = std::get<Digits>(b);
            return Digits{static_cast<std::int32_t>((static_cast<std::int64_t>(x[0]) + y[0]) % q)};
        }
        default: {
            auto &x = std::get<Digits>(a);
            auto &y = std::get<Digits>(b);
            Digits r(digit_count);
            for (int i = 0; i < digit_count; ++i)
                r[i] = static_cast<std::int32_t>((static_cast<std::int64_t>(x[i]) + y[i]) % spec.p);
            return r;
        }
        }
    }

    Payload neg(const Payload &a) const
    {
        switch (spec.family) {
        case Family::Integers: return Integer(-std::get<Integer>(a));
        case Family::LocalizedIntegers: {
            auto &x = std::get<Fraction>(a);
            return Fraction{-x.num, x.den};
        }
        default: {
            auto &x = std::get<Digits>(a);
            Digits r(digit_count);
            for (int i = 0; i < digit_count; ++i)
                r[i] = static_cast<std::int32_t>(mod_floor(-static_cast<std::int64_t>(x[i]), digit_base));
            return r;
        }
        }
    }

    // --- multiplication -----------------------------------------------------

    Payload mul(const Payload &a, const Payload &b) const { return reversed ? mul_forward(b, a) : mul_forward(a, b); }

    Payload mul_forward(const Payload &a, const Payload &b) const
    {
        switch (spec.family) {
        case Family::Integers: return Integer(std::get<Integer>(a) * std::get<Integer>(b));
        case Family::LocalizedIntegers: {
            auto &x = std::get<Fraction>(a);
            auto &y = std::get<Fraction>(b);
            return make_fraction(x.num * y.num, x.den * y.den);
        }
        case Family::ModPrimePower: {
            auto &x = std::get<Digits>(a);
            auto &y = std::get<Digits>(b);
            return Digits{static_cast<std::int32_t>(static_cast<std::int64_t>(x[0]) * y[0] % q)};
        }
        case Family::GaloisField: {
            Digits r(digit_count);
            gf->mul(std::get<Digits>(a), std::get<Digits>(b), r);
            return r;
        }
        default: return mul_truncated(std::get<Digits>(a), std::get<Digits>(b));
        }
    }

    // (a_i x^i)(b_j x^j) = a_i sigma^i(b_j) x^{i+j}
    Digits mul_truncated(const Digits &a, const Digits &b) const
    {
        const int n = spec.n;
        Digits r = zero_digits();
        Digits twisted(m()), prod(m());
        for (int i = 0; i < n; ++i) {
            auto ai = slot(a, i);
            if (gf->is_zero(ai))
                continue;
            for (int j = 0; i + j < n; ++j) {
                auto bj = slot(b, j);
                if (gf->is_zero(bj))
                    continue;
                gf->frobenius(bj, spec.s * i, twisted);
                gf->mul(ai, twisted, prod);
                auto out = slot(r, i + j);
                gf->add(out, prod, out);
            }
        }
        return r;
    }

    // --- units --------------------------------------------------------------

    bool is_unit(const Payload &a) const
    {
        switch (spec.family) {
        case Family::Integers:
            throw Error(ErrorKind::NotLocal, "Z is not local; its unit test lives in zmat");
        case Family::LocalizedIntegers: return std::get<Fraction>(a).num % spec.p != 0;
        case Family::ModPrimePower: return std::get<Digits>(a)[0] % spec.p != 0;
        default: return !gf->is_zero(slot(std::get<Digits>(a), 0));
        }
    }

    Payload invert(const Payload &a) const
    {
        if (spec.family == Family::Integers) {
            auto &v = std::get<Integer>(a);
            if (v == 1 || v == -1)
                return v;
            throw Error(ErrorKind::NotAUnit, v.str() + " is not a unit of Z");
        }
        if (!is_unit(a))
            throw Error(ErrorKind::NotAUnit, "element lies in the radical");
        switch (spec.family) {
        case Family::LocalizedIntegers: {
            auto &x = std::get<Fraction>(a);
            return make_fraction(x.den, x.num);
        }
        case Family::ModPrimePower:
            return Digits{static_cast<std::int32_t>(inverse_mod(std::get<Digits>(a)[0], q))};
        case Family::GaloisField: {
            Digits r(digit_count);
            gf->invert(std::get<Digits>(a), r);
            return r;
        }
        default: {
            // Right inverse degree by degree; over a local ring it is two-sided,
            // and R and R^op share inverses.
            auto &x = std::get<Digits>(a);
            Digits r = zero_digits();
            Digits inv0(m()), acc(m()), twisted(m()), prod(m());
            gf->invert(slot(x, 0), inv0);
            std::copy(inv0.begin(), inv0.end(), slot(r, 0).begin());
            for (int k = 1; k < spec.n; ++k) {
                std::fill(acc.begin(), acc.end(), 0);
                for (int i = 1; i <= k; ++i) {
                    gf->frobenius(slot(r, k - i), spec.s * i, twisted);
                    gf->mul(slot(x, i), twisted, prod);
                    gf->add(acc, prod, acc);
                }
                gf->mul(inv0, acc, prod);
                Digits zero(m(), 0);
                gf->sub(zero, prod, slot(r, k));
            }
            return r;
        }
        }
    }

    // --- enumeration --------------------------------------------------------

    Digits digits_at(std::uint64_t idx) const
    {
        Digits d(digit_count);
        for (int i = digit_count - 1; i >= 0; --i) {
            d[i] = static_cast<std::int32_t>(idx % static_cast<std::uint64_t>(digit_base));
            idx /= static_cast<std::uint64_t>(digit_base);
        }
        return d;
    }

    std::uint64_t index_of(const Digits &d) const
    {
        std::uint64_t idx = 0;
        for (int i = 0; i < digit_count; ++i)
            idx = idx * static_cast<std::uint64_t>(digit_base) + static_cast<std::uint64_t>(d[i]);
        return idx;
    }

    const std::vector<Digits> &enumeration(Subset subset) const
    {
        std::call_once(enum_once, [this] {
            const std::uint64_t total = size();
            if (total > (std::uint64_t{1} << 22))
                throw Error(ErrorKind::TooLarge, spec.to_string() + " is too large to enumerate");
            Digits one = one_digits();
            for (std::uint64_t i = 0; i < total; ++i) {
                Digits d = digits_at(i);
                bool unit = is_unit(d);
                enum_all.push_back(d);
                (unit ? enum_units : enum_radical).push_back(d);
                Payload shifted = add(Payload(d), neg(Payload(one)));
                if (!is_unit(shifted))
                    enum_one_plus.push_back(d);
            }
        });
        switch (subset) {
        case Subset::All: return enum_all;
        case Subset::Radical: return enum_radical;
        case Subset::OnePlusRadical: return enum_one_plus;
        case Subset::Units: return enum_units;
        }
        return enum_all;
    }

    Digits one_digits() const
    {
        Digits d = zero_digits();
        d[0] = 1;
        return d;
    }
};

inline bool same_ring(const RingImpl *a, const RingImpl *b)
{
    return a == b || (a->spec == b->spec && a->reversed == b->reversed);
}

inline RingPtr build_ring(const RingSpec &spec, bool reversed = false);

inline RingPtr prime_residue_field(std::int64_t p) { return build_ring(RingSpec::galois(p, 1)); }

inline RingPtr construct_ring(const RingSpec &spec, bool reversed);

/// Rings are interned per (spec, orientation) so equal rings share state.
inline RingPtr build_ring(const RingSpec &spec, bool reversed)
{
    static std::mutex mutex;
    static std::map<std::pair<std::string, bool>, RingPtr> cache;
    validate(spec);
    auto key = std::make_pair(spec.to_string(), reversed);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    RingPtr built = construct_ring(spec, reversed);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(built)).first->second;
}

inline RingPtr construct_ring(const RingSpec &spec, bool reversed)
{
    auto impl = std::make_shared<RingImpl>();
    impl->spec = spec;
    impl->reversed = reversed;
    switch (spec.family) {
    case Family::Integers: break;
    case Family::LocalizedIntegers: impl->residue_field = prime_residue_field(spec.p); break;
    case Family::ModPrimePower:
        impl->q = 1;
        for (int i = 0; i < spec.k; ++i)
            impl->q *= spec.p;
        impl->digit_count = 1;
        impl->digit_base = impl->q;
        impl->residue_field = prime_residue_field(spec.p);
        break;
    case Family::GaloisField:
        impl->gf = std::make_shared<GaloisArith>(spec.p, spec.m);
        impl->digit_count = spec.m;
        impl->digit_base = spec.p;
        break;
    case Family::TruncatedPoly:
    case Family::TruncatedSkew: {
        impl->spec.s = spec.family == Family::TruncatedPoly ? 0 : spec.s;
        auto base = build_ring(RingSpec::galois(spec.p, spec.m));
        impl->gf = base->gf;
        impl->digit_count = spec.m * spec.n;
        impl->digit_base = spec.p;
        impl->residue_field = base;
        break;
    }
    }
    return impl;
}

inline std::string format_galois(const RingImpl &r, std::span<const std::int32_t> d)
{
    std::string out;
    for (int j = 0; j < r.m(); ++j) {
        if (d[j] == 0)
            continue;
        if (!out.empty())
            out += "+";
        std::string coeff = std::to_string(d[j]);
        if (j == 0)
            out += coeff;
        else {
            if (d[j] != 1)
                out += coeff + "*";
            out += j == 1 ? "w" : "w^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Element

inline LocalRing Element::ring() const { return LocalRing(ring_); }

inline bool Element::is_zero() const { return *this == ring().zero(); }

inline std::string Element::to_string() const { return ring().format(*this); }

inline Element operator+(const Element &a, const Element &b) { return a.ring().add(a, b); }
inline Element operator-(const Element &a, const Element &b) { return a.ring().sub(a, b); }
inline Element operator*(const Element &a, const Element &b) { return a.ring().mul(a, b); }
inline Element operator-(const Element &a) { return a.ring().neg(a); }

// ---------------------------------------------------------------------------
// LocalRing

inline LocalRing LocalRing::make(const RingSpec &spec) { return LocalRing(detail::build_ring(spec)); }

inline const RingSpec &LocalRing::spec() const { return impl_->spec; }

inline std::string LocalRing::name() const { return (impl_->reversed ? "op " : "") + spec().to_string(); }

inline bool LocalRing::is_reversed() const { return impl_->reversed; }

inline bool LocalRing::is_finite() const { return impl_->finite(); }

inline bool LocalRing::is_commutative() const
{
    return spec().family != Family::TruncatedSkew || spec().s == 0 || spec().n == 1;
}

inline std::optional<std::uint64_t> LocalRing::cardinality() const
{
    if (!is_finite())
        return std::nullopt;
    return impl_->size();
}

inline std::optional<int> LocalRing::radical_nilpotency_index() const
{
    switch (spec().family) {
    case Family::ModPrimePower: return spec().k;
    case Family::GaloisField: return 1;
    case Family::TruncatedPoly:
    case Family::TruncatedSkew: return spec().n;
    default: return std::nullopt;
    }
}

inline void LocalRing::check_owner(const Element &a) const
{
    if (!detail::same_ring(impl_.get(), &a.impl()))
        throw Error(ErrorKind::OwnerMismatch,
                    "element of " + LocalRing(a.impl_ptr()).name() + " used in " + name());
}

inline Element LocalRing::zero() const { return from_int(0); }

inline Element LocalRing::one() const { return from_int(1); }

inline Element LocalRing::from_integer(const Integer &v) const
{
    switch (spec().family) {
    case Family::Integers: return wrap(v);
    case Family::LocalizedIntegers: return wrap(Fraction{v, 1});
    case Family::ModPrimePower: {
        Integer r = v % impl_->q;
        if (r < 0)
            r += impl_->q;
        return wrap(Digits{static_cast<std::int32_t>(r)});
    }
    default: {
        Integer r = v % spec().p;
        if (r < 0)
            r += spec().p;
        Digits d = impl_->zero_digits();
        d[0] = static_cast<std::int32_t>(r);
        return wrap(std::move(d));
    }
    }
}

inline Element LocalRing::fraction(const Integer &num, const Integer &den) const
{
    if (spec().family == Family::LocalizedIntegers) {
        Fraction f = detail::make_fraction(num, den);
        if (f.den % spec().p == 0)
            throw Error(ErrorKind::NotAUnit, "denominator divisible by " + std::to_string(spec().p));
        return wrap(std::move(f));
    }
    return mul(from_integer(num), invert(from_integer(den)));
}

inline Element LocalRing::generator() const
{
    if (!spec().has_galois_base())
        throw Error(ErrorKind::NotApplicable, "w is only defined over Galois-field based rings");
    Digits d = impl_->zero_digits();
    if (spec().m == 1)
        d[0] = static_cast<std::int32_t>(detail::mod_floor(-impl_->gf->modulus()[0], spec().p));
    else
        d[1] = 1;
    return wrap(std::move(d));
}

inline Element LocalRing::variable() const
{
    if (!spec().is_truncated())
        throw Error(ErrorKind::NotApplicable, "x is only defined over truncated polynomial rings");
    Digits d = impl_->zero_digits();
    if (spec().n > 1)
        d[spec().m] = 1;
    return wrap(std::move(d));
}

inline Element LocalRing::add(const Element &a, const Element &b) const
{
    check_owner(a);
    check_owner(b);
    return wrap(impl_->add(a.payload(), b.payload()));
}

inline Element LocalRing::sub(const Element &a, const Element &b) const
{
    check_owner(a);
    check_owner(b);
    return wrap(impl_->add(a.payload(), impl_->neg(b.payload())));
}

inline Element LocalRing::mul(const Element &a, const Element &b) const
{
    check_owner(a);
    check_owner(b);
    return wrap(impl_->mul(a.payload(), b.payload()));
}

inline Element LocalRing::neg(const Element &a) const
{
    check_owner(a);
    return wrap(impl_->neg(a.payload()));
}

inline Element LocalRing::pow(const Element &a, unsigned e) const
{
    Element r = one();
    Element base = a;
    while (e > 0) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

inline bool LocalRing::is_unit(const Element &a) const
{
    check_owner(a);
    return impl_->is_unit(a.payload());
}

inline bool LocalRing::in_radical(const Element &a) const { return !is_unit(a); }

inline bool LocalRing::is_nilpotent(const Element &a) const
{
    check_owner(a);
    if (auto nu = radical_nilpotency_index())
        return pow(a, static_cast<unsigned>(*nu)).is_zero();
    // Z and Z_(p) are domains
    return a.is_zero();
}

inline Element LocalRing::invert(const Element &a) const
{
    check_owner(a);
    return wrap(impl_->invert(a.payload()));
}

inline ResidueView LocalRing::residue() const
{
    switch (spec().family) {
    case Family::Integers: throw Error(ErrorKind::NotLocal, "Z has no residue field view");
    case Family::GaloisField: return ResidueView(*this, LocalRing(detail::build_ring(spec())));
    default: return ResidueView(*this, LocalRing(impl_->residue_field));
    }
}

inline std::vector<Element> LocalRing::enumerate(Subset subset) const
{
    if (!is_finite())
        throw Error(ErrorKind::InfiniteRing, name() + " cannot be enumerated");
    const auto &payloads = impl_->enumeration(subset);
    std::vector<Element> out;
    out.reserve(payloads.size());
    for (const auto &d : payloads)
        out.push_back(wrap(d));
    return out;
}

inline std::uint64_t LocalRing::index_of(const Element &a) const
{
    check_owner(a);
    if (!is_finite())
        throw Error(ErrorKind::InfiniteRing, name() + " has no element index");
    return impl_->index_of(a.digits());
}

inline Element LocalRing::element_at(std::uint64_t index) const
{
    if (!is_finite())
        throw Error(ErrorKind::InfiniteRing, name() + " has no element index");
    return wrap(impl_->digits_at(index));
}

inline LocalRing LocalRing::opposite() const { return LocalRing(detail::build_ring(spec(), !impl_->reversed)); }

inline Element LocalRing::adopt(const Element &a) const
{
    if (a.impl().spec != spec())
        throw Error(ErrorKind::OwnerMismatch, "cannot adopt an element of " + LocalRing(a.impl_ptr()).name());
    return wrap(a.payload());
}

inline LocalRing LocalRing::base() const
{
    if (!spec().is_truncated())
        throw Error(ErrorKind::NotApplicable, name() + " is not a truncated polynomial ring");
    return LocalRing(impl_->residue_field);
}

inline Element LocalRing::coefficient(const Element &a, int i) const
{
    check_owner(a);
    LocalRing b = base();
    Digits d(spec().m, 0);
    if (i >= 0 && i < spec().n) {
        auto s = impl_->slot(a.digits(), i);
        std::copy(s.begin(), s.end(), d.begin());
    }
    return Element(b.impl_ptr(), std::move(d));
}

inline Element LocalRing::from_coefficients(std::span<const Element> coeffs) const
{
    LocalRing b = base();
    Digits d = impl_->zero_digits();
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) < spec().n; ++i) {
        b.check_owner(coeffs[i]);
        const auto &cd = coeffs[i].digits();
        std::copy(cd.begin(), cd.end(), impl_->slot(d, static_cast<int>(i)).begin());
    }
    return wrap(std::move(d));
}

inline Element LocalRing::twist(const Element &b, int i) const
{
    LocalRing bs = base();
    bs.check_owner(b);
    Digits d(spec().m);
    impl_->gf->frobenius(b.digits(), spec().s * i, d);
    return Element(bs.impl_ptr(), std::move(d));
}

inline std::string LocalRing::format(const Element &a) const
{
    check_owner(a);
    switch (spec().family) {
    case Family::Integers: return std::get<Integer>(a.payload()).str();
    case Family::LocalizedIntegers: {
        auto &f = std::get<Fraction>(a.payload());
        return f.den == 1 ? f.num.str() : f.num.str() + "/" + f.den.str();
    }
    case Family::ModPrimePower: return std::to_string(a.digits()[0]);
    case Family::GaloisField: return detail::format_galois(*impl_, impl_->slot(a.digits(), 0));
    default: break;
    }
    const char var = spec().family == Family::TruncatedSkew ? 'x' : 'y';
    std::string out;
    for (int i = 0; i < spec().n; ++i) {
        auto s = impl_->slot(a.digits(), i);
        if (impl_->gf->is_zero(s))
            continue;
        std::string c = detail::format_galois(*impl_, s);
        std::string term;
        if (i == 0)
            term = c;
        else {
            std::string power = i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i);
            if (c == "1")
                term = power;
            else if (c.find('+') == std::string::npos)
                term = c + "*" + power;
            else
                term = "(" + c + ")*" + power;
        }
        out += (out.empty() ? "" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// ResidueView

inline Element ResidueView::reduce(const Element &a) const
{
    ring_.check_owner(a);
    const auto &spec = ring_.spec();
    switch (spec.family) {
    case Family::LocalizedIntegers: {
        auto &f = std::get<Fraction>(a.payload());
        Integer num = f.num % spec.p, den = f.den % spec.p;
        if (num < 0)
            num += spec.p;
        std::int64_t v = detail::mod_floor(static_cast<std::int64_t>(num) * detail::inverse_mod(static_cast<std::int64_t>(den), spec.p), spec.p);
        return Element(field_.impl_ptr(), Digits{static_cast<std::int32_t>(v)});
    }
    case Family::ModPrimePower:
        return Element(field_.impl_ptr(), Digits{static_cast<std::int32_t>(a.digits()[0] % spec.p)});
    case Family::GaloisField: return Element(field_.impl_ptr(), a.payload());
    default: {
        Digits d(a.digits().begin(), a.digits().begin() + spec.m);
        return Element(field_.impl_ptr(), std::move(d));
    }
    }
}

inline Element ResidueView::lift(const Element &a) const
{
    field_.check_owner(a);
    const auto &spec = ring_.spec();
    switch (spec.family) {
    case Family::LocalizedIntegers: return ring_.from_int(a.digits()[0]);
    case Family::ModPrimePower: return ring_.from_int(a.digits()[0]);
    case Family::GaloisField: return Element(ring_.impl_ptr(), a.payload());
    default: {
        Digits d(spec.m * spec.n, 0);
        std::copy(a.digits().begin(), a.digits().end(), d.begin());
        return Element(ring_.impl_ptr(), std::move(d));
    }
    }
}

} // namespace cleanmat
