#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cleanmat/clean2.hpp"

namespace cleanmat::oracle {

inline constexpr std::uint64_t kDefaultMaxSize = 256;

/// Addition and multiplication tables on element indices, built once per
/// ring. Everything below works on indices only.
struct Tables {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> mul;
    std::vector<std::uint32_t> neg;
    std::uint32_t zero = 0;
    std::uint32_t one = 0;
    std::vector<char> unit;

    std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * n + b]; }
    std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
};

using IdxMat = std::array<std::uint32_t, 4>;

namespace detail {

inline std::shared_ptr<const Tables> build_tables(const LocalRing &r)
{
    auto t = std::make_shared<Tables>();
    const auto elems = r.enumerate(Subset::All);
    t->n = static_cast<std::uint32_t>(elems.size());
    const std::uint32_t n = t->n;
    t->add.resize(n * n);
    t->mul.resize(n * n);
    t->neg.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        t->neg[i] = static_cast<std::uint32_t>(r.index_of(-elems[i]));
        for (std::uint32_t j = 0; j < n; ++j) {
            t->add[i * n + j] = static_cast<std::uint32_t>(r.index_of(elems[i] + elems[j]));
            t->mul[i * n + j] = static_cast<std::uint32_t>(r.index_of(elems[i] * elems[j]));
        }
    }
    t->zero = static_cast<std::uint32_t>(r.index_of(r.zero()));
    t->one = static_cast<std::uint32_t>(r.index_of(r.one()));
    // units by explicit two-sided inverse search
    t->unit.assign(n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n && !t->unit[i]; ++j)
            if (t->mul[i * n + j] == t->one && t->mul[j * n + i] == t->one)
                t->unit[i] = 1;
    return t;
}

inline void check_size(const LocalRing &r, std::uint64_t max_size)
{
    if (!r.is_finite())
        throw Error(ErrorKind::InfiniteRing, "oracle needs a finite ring, got " + r.name());
    if (*r.cardinality() > max_size)
        throw Error(ErrorKind::TooLarge, r.name() + " exceeds the oracle size guard of " + std::to_string(max_size));
}

template <class T> class PerRingCache {
public:
    template <class F> std::shared_ptr<const T> get(const LocalRing &r, F build)
    {
        const std::string key = r.name();
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end())
                return it->second;
        }
        auto built = build(r);
        std::lock_guard lock(mutex_);
        return cache_.emplace(key, std::move(built)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const T>> cache_;
};

inline IdxMat mat_mul(const Tables &t, const IdxMat &x, const IdxMat &y)
{
    return {t.plus(t.times(x[0], y[0]), t.times(x[1], y[2])), t.plus(t.times(x[0], y[1]), t.times(x[1], y[3])),
            t.plus(t.times(x[2], y[0]), t.times(x[3], y[2])), t.plus(t.times(x[2], y[1]), t.times(x[3], y[3]))};
}

inline IdxMat mat_sub(const Tables &t, const IdxMat &x, const IdxMat &y)
{
    return {t.plus(x[0], t.neg[y[0]]), t.plus(x[1], t.neg[y[1]]), t.plus(x[2], t.neg[y[2]]),
            t.plus(x[3], t.neg[y[3]])};
}

/// Image of the column vector (a, b) as a single index a*n + b.
inline std::uint32_t apply(const Tables &t, const IdxMat &m, std::uint32_t a, std::uint32_t b)
{
    return t.plus(t.times(m[0], a), t.times(m[1], b)) * t.n + t.plus(t.times(m[2], a), t.times(m[3], b));
}

/// An endomorphism of the finite module R^2 is invertible iff injective.
inline bool invertible(const Tables &t, const IdxMat &m)
{
    std::vector<char> seen(static_cast<std::size_t>(t.n) * t.n, 0);
    for (std::uint32_t a = 0; a < t.n; ++a)
        for (std::uint32_t b = 0; b < t.n; ++b) {
            auto v = apply(t, m, a, b);
            if (seen[v])
                return false;
            seen[v] = 1;
        }
    return true;
}

inline IdxMat to_indices(const Mat2 &m)
{
    LocalRing r = m.ring();
    IdxMat out;
    for (int i = 0; i < 4; ++i)
        out[i] = static_cast<std::uint32_t>(r.index_of(m.entries()[i]));
    return out;
}

inline Mat2 to_matrix(const LocalRing &r, const IdxMat &m)
{
    return {r.element_at(m[0]), r.element_at(m[1]), r.element_at(m[2]), r.element_at(m[3])};
}

inline PerRingCache<Tables> &table_cache()
{
    static PerRingCache<Tables> cache;
    return cache;
}

inline PerRingCache<std::vector<IdxMat>> &idempotent_cache()
{
    static PerRingCache<std::vector<IdxMat>> cache;
    return cache;
}

inline std::shared_ptr<const Tables> tables(const LocalRing &r) { return table_cache().get(r, build_tables); }

/// Idempotents in index order of (e11, e12, e21, e22). The (1,1) entry of
/// E^2 = E involves only e11, e12, e21, which prunes the scan.
inline std::shared_ptr<const std::vector<IdxMat>> idempotents(const LocalRing &r)
{
    return idempotent_cache().get(r, [](const LocalRing &ring) {
        auto t = tables(ring);
        auto out = std::make_shared<std::vector<IdxMat>>();
        const std::uint32_t n = t->n;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c) {
                    if (t->plus(t->times(a, a), t->times(b, c)) != a)
                        continue;
                    for (std::uint32_t d = 0; d < n; ++d) {
                        IdxMat e{a, b, c, d};
                        if (mat_mul(*t, e, e) == e)
                            out->push_back(e);
                    }
                }
        return out;
    });
}

} // namespace detail

/// Every E in M_2(R) with E^2 = E.
inline std::vector<Mat2> enumerate_idempotents(const LocalRing &r, std::uint64_t max_size = kDefaultMaxSize)
{
    detail::check_size(r, max_size);
    std::vector<Mat2> out;
    for (const auto &e : *detail::idempotents(r))
        out.push_back(detail::to_matrix(r, e));
    return out;
}

/// First idempotent E commuting with A with A - E invertible.
inline std::optional<CleanCertificate> brute_clean(const Mat2 &a, std::uint64_t max_size = kDefaultMaxSize)
{
    LocalRing r = a.ring();
    detail::check_size(r, max_size);
    auto t = detail::tables(r);
    const IdxMat ai = detail::to_indices(a);
    for (const auto &e : *detail::idempotents(r)) {
        if (detail::mat_mul(*t, e, ai) != detail::mat_mul(*t, ai, e))
            continue;
        const IdxMat u = detail::mat_sub(*t, ai, e);
        if (!detail::invertible(*t, u))
            continue;
        CleanCertificate cert{detail::to_matrix(r, e), detail::to_matrix(r, u), std::nullopt};
        if (!verify_certificate(a, cert))
            cleanmat::detail::contract_violation("oracle certificate fails verification");
        return cert;
    }
    return std::nullopt;
}

/// Smallest n with R^2 = ker(A^n) (+) im(A^n): the addition map
/// ker x im -> R^2 must be a bijection.
inline std::optional<unsigned> brute_pi(const Mat2 &a, std::uint64_t max_size = kDefaultMaxSize)
{
    LocalRing r = a.ring();
    detail::check_size(r, max_size);
    auto t = detail::tables(r);
    const std::uint32_t n = t->n;
    const std::uint32_t total = n * n;
    const IdxMat ai = detail::to_indices(a);
    IdxMat power = ai;
    std::vector<char> prev_image;
    std::size_t prev_kernel_size = 0;
    for (unsigned e = 1; e <= total; ++e) {
        std::vector<std::uint32_t> kernel, image;
        std::vector<char> in_image(total, 0);
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y) {
                auto v = detail::apply(*t, power, x, y);
                if (v == t->zero * n + t->zero)
                    kernel.push_back(x * n + y);
                if (!in_image[v]) {
                    in_image[v] = 1;
                    image.push_back(v);
                }
            }
        if (kernel.size() * image.size() == total) {
            std::vector<char> hit(total, 0);
            bool bijective = true;
            for (auto k : kernel) {
                for (auto i : image) {
                    auto s = t->plus(k / n, i / n) * n + t->plus(k % n, i % n);
                    if (hit[s]) {
                        bijective = false;
                        break;
                    }
                    hit[s] = 1;
                }
                if (!bijective)
                    break;
            }
            if (bijective)
                return e;
        }
        if (e > 1 && in_image == prev_image && kernel.size() == prev_kernel_size)
            return std::nullopt;
        prev_image = std::move(in_image);
        prev_kernel_size = kernel.size();
        power = detail::mat_mul(*t, power, ai);
    }
    return std::nullopt;
}

} // namespace cleanmat::oracle
