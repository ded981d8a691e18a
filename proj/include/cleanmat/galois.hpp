#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cleanmat/error.hpp"

namespace cleanmat::detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t q)
{
    a %= q;
    return a < 0 ? a + q : a;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t q)
{
    std::int64_t r = 1 % q;
    base = mod_floor(base, q);
    while (e > 0) {
        if (e & 1)
            r = r * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return r;
}

inline std::int64_t smallest_primitive_root(std::int64_t p)
{
    if (p == 2)
        return 1;
    std::vector<std::int64_t> factors;
    std::int64_t n = p - 1;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        factors.push_back(n);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto f : factors)
            ok = ok && pow_mod(g, (p - 1) / f, p) != 1;
        if (ok)
            return g;
    }
    contract_violation("no primitive root");
}

/// Coefficients c_0..c_{m-1} of the monic defining polynomial
/// x^m + c_{m-1} x^{m-1} + ... + c_0 used for GF(p^m).
///
/// Small cases use the Conway polynomials. Anything else falls back to the
/// lexicographically first monic irreducible (degree 1: x - g with g the
/// least primitive root, which is again the Conway choice).
inline std::vector<std::int32_t> defining_polynomial(std::int64_t p, int m)
{
    static const std::map<std::pair<std::int64_t, int>, std::vector<std::int32_t>> conway = {
        {{2, 2}, {1, 1}},       {{2, 3}, {1, 1, 0}},    {{2, 4}, {1, 1, 0, 0}},
        {{2, 5}, {1, 0, 1, 0, 0}}, {{3, 2}, {2, 2}},    {{3, 3}, {1, 2, 0}},
        {{3, 4}, {2, 0, 0, 2}}, {{5, 2}, {2, 4}},       {{5, 3}, {3, 3, 0}},
        {{7, 2}, {3, 6}},       {{7, 3}, {4, 0, 6}},    {{11, 2}, {2, 7}},
        {{13, 2}, {2, 12}},
    };
    if (m == 1)
        return {static_cast<std::int32_t>(mod_floor(-smallest_primitive_root(p), p))};
    if (auto it = conway.find({p, m}); it != conway.end())
        return it->second;

    // Trial division by every monic polynomial of degree <= m/2.
    auto divides = [p](const std::vector<std::int64_t> &f, const std::vector<std::int64_t> &g) {
        std::vector<std::int64_t> r = f; // both monic, low-to-high
        int dg = static_cast<int>(g.size()) - 1;
        for (int d = static_cast<int>(r.size()) - 1; d >= dg; --d) {
            std::int64_t c = r[d];
            if (c == 0)
                continue;
            for (int j = 0; j <= dg; ++j)
                r[d - dg + j] = mod_floor(r[d - dg + j] - c * g[j], p);
        }
        for (int j = 0; j < dg; ++j)
            if (r[j] != 0)
                return false;
        return true;
    };
    auto monic_from_index = [p](std::int64_t idx, int deg) {
        std::vector<std::int64_t> f(deg + 1, 0);
        f[deg] = 1;
        for (int j = 0; j < deg; ++j) {
            f[j] = idx % p;
            idx /= p;
        }
        return f;
    };
    std::int64_t count = 1;
    for (int j = 0; j < m; ++j) {
        count *= p;
        if (count > (std::int64_t{1} << 24))
            throw Error(ErrorKind::InvalidSpec, "GF(p^m) too large for irreducible search");
    }
    for (std::int64_t idx = 0; idx < count; ++idx) {
        auto f = monic_from_index(idx, m);
        if (f[0] == 0)
            continue;
        bool irreducible = true;
        for (int deg = 1; irreducible && 2 * deg <= m; ++deg) {
            std::int64_t gcount = 1;
            for (int j = 0; j < deg; ++j)
                gcount *= p;
            for (std::int64_t gi = 0; irreducible && gi < gcount; ++gi)
                irreducible = !divides(f, monic_from_index(gi, deg));
        }
        if (irreducible)
            return {f.begin(), f.begin() + m};
    }
    contract_violation("no irreducible polynomial found");
}

/// Arithmetic in GF(p^m) on coefficient vectors over the prime field,
/// written in the power basis 1, w, ..., w^{m-1} of the defining polynomial.
/// Small fields are served from lookup tables.
class GaloisArith {
public:
    GaloisArith(std::int64_t p, int m) : p_(p), m_(m), modulus_(defining_polynomial(p, m))
    {
        for (int i = 0; i < m; ++i) {
            if (q_ > (std::int64_t{1} << 40) / p)
                throw Error(ErrorKind::InvalidSpec, "GF(p^m) too large");
            q_ *= p;
        }
        if (q_ <= kTableLimit)
            build_tables();
    }

    std::int64_t p() const { return p_; }
    int m() const { return m_; }
    std::int64_t order() const { return q_; }
    const std::vector<std::int32_t> &modulus() const { return modulus_; }

    void add(const auto &a, const auto &b, auto &&out) const
    {
        for (int i = 0; i < m_; ++i)
            out[i] = static_cast<std::int32_t>((a[i] + static_cast<std::int64_t>(b[i])) % p_);
    }

    void sub(const auto &a, const auto &b, auto &&out) const
    {
        for (int i = 0; i < m_; ++i)
            out[i] = static_cast<std::int32_t>(mod_floor(static_cast<std::int64_t>(a[i]) - b[i], p_));
    }

    void mul(const auto &a, const auto &b, auto &&out) const
    {
        if (!mul_table_.empty()) {
            decode(mul_table_[code(a) * q_ + code(b)], out);
            return;
        }
        mul_direct(a, b, out);
    }

    /// out = a^(p^power), the power-th iterate of Frobenius.
    void frobenius(const auto &a, int power, auto &&out) const
    {
        power = ((power % m_) + m_) % m_;
        if (!frob_table_.empty()) {
            decode(frob_table_[power][code(a)], out);
            return;
        }
        std::vector<std::int32_t> cur(a.begin(), a.end());
        for (int i = 0; i < power; ++i) {
            std::vector<std::int32_t> acc(m_, 0);
            acc[0] = 1;
            for (std::int64_t e = 0; e < p_; ++e) {
                std::vector<std::int32_t> next(m_);
                mul_direct(acc, cur, next);
                acc = std::move(next);
            }
            cur = std::move(acc);
        }
        std::copy(cur.begin(), cur.end(), out.begin());
    }

    bool is_zero(const auto &a) const
    {
        for (int i = 0; i < m_; ++i)
            if (a[i] != 0)
                return false;
        return true;
    }

    /// Inverse of a nonzero element as a^(q-2).
    void invert(const auto &a, auto &&out) const
    {
        if (is_zero(a))
            throw Error(ErrorKind::NotAUnit, "zero has no inverse in GF(p^m)");
        std::vector<std::int32_t> result(m_, 0), base(a.begin(), a.end()), tmp(m_);
        result[0] = 1;
        for (std::int64_t e = q_ - 2; e > 0; e >>= 1) {
            if (e & 1) {
                mul(result, base, tmp);
                result = tmp;
            }
            mul(base, base, tmp);
            base = tmp;
        }
        std::copy(result.begin(), result.end(), out.begin());
    }

    std::int64_t code(const auto &a) const
    {
        std::int64_t c = 0;
        for (int i = m_ - 1; i >= 0; --i)
            c = c * p_ + a[i];
        return c;
    }

    void decode(std::int64_t c, auto &&out) const
    {
        for (int i = 0; i < m_; ++i) {
            out[i] = static_cast<std::int32_t>(c % p_);
            c /= p_;
        }
    }

private:
    static constexpr std::int64_t kTableLimit = 256;

    void mul_direct(const auto &a, const auto &b, auto &&out) const
    {
        std::vector<std::int64_t> prod(2 * m_ - 1, 0);
        for (int i = 0; i < m_; ++i) {
            if (a[i] == 0)
                continue;
            for (int j = 0; j < m_; ++j)
                prod[i + j] = (prod[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p_;
        }
        for (int d = 2 * m_ - 2; d >= m_; --d) {
            std::int64_t c = prod[d];
            if (c == 0)
                continue;
            // w^m = -(c_0 + ... + c_{m-1} w^{m-1})
            for (int j = 0; j < m_; ++j)
                prod[d - m_ + j] = mod_floor(prod[d - m_ + j] - c * modulus_[j], p_);
            prod[d] = 0;
        }
        for (int i = 0; i < m_; ++i)
            out[i] = static_cast<std::int32_t>(prod[i]);
    }

    void build_tables()
    {
        std::vector<std::int32_t> a(m_), b(m_), c(m_);
        mul_table_.assign(q_ * q_, 0);
        for (std::int64_t i = 0; i < q_; ++i) {
            decode(i, a);
            for (std::int64_t j = 0; j < q_; ++j) {
                decode(j, b);
                mul_direct(a, b, c);
                mul_table_[i * q_ + j] = static_cast<std::int32_t>(code(c));
            }
        }
        frob_table_.assign(m_, std::vector<std::int32_t>(q_));
        for (std::int64_t i = 0; i < q_; ++i)
            frob_table_[0][i] = static_cast<std::int32_t>(i);
        for (int pw = 1; pw < m_; ++pw) {
            for (std::int64_t i = 0; i < q_; ++i) {
                // x -> x^p applied to the previous iterate
                std::int64_t x = frob_table_[pw - 1][i];
                std::int64_t acc = 1; // code of the identity
                for (std::int64_t e = 0; e < p_; ++e)
                    acc = mul_table_[acc * q_ + x];
                frob_table_[pw][i] = static_cast<std::int32_t>(acc);
            }
        }
    }

    std::int64_t p_;
    int m_;
    std::int64_t q_ = 1;
    std::vector<std::int32_t> modulus_;
    std::vector<std::int32_t> mul_table_;
    std::vector<std::vector<std::int32_t>> frob_table_;
};

} // namespace cleanmat::detail
