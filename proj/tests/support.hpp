#pragma once

#include <random>
#include <string>
#include <vector>

#include "cleanmat/cleanmat.hpp"

namespace testing_support {

using namespace cleanmat;

inline LocalRing ring(const char *spec) { return parse_ring(spec); }

inline Element el(const LocalRing &r, const char *text) { return parse_element(r, text); }

inline Mat2 mat(const LocalRing &r, const char *text) { return parse_matrix(r, text); }

/// The finite rings every property is checked on.
inline std::vector<std::string> finite_rings()
{
    return {"Zmod(2,2)",         "Zmod(2,3)",         "Zmod(3,2)",           "GF(2,1)",
            "GF(2,2)",           "Trunc(GF(2,1),2)", "Trunc(GF(2,1),3)",    "SkewTrunc(GF(2,2),1,2)"};
}

/// Every matrix over a finite ring, indexed by its four entry positions.
inline Mat2 matrix_at(const LocalRing &r, std::uint64_t idx)
{
    const std::uint64_t n = *r.cardinality();
    return {r.element_at(idx / (n * n * n)), r.element_at(idx / (n * n) % n), r.element_at(idx / n % n),
            r.element_at(idx % n)};
}

inline std::uint64_t matrix_count(const LocalRing &r)
{
    const std::uint64_t n = *r.cardinality();
    return n * n * n * n;
}

inline Element random_element(const LocalRing &r, std::mt19937_64 &rng)
{
    if (r.is_finite())
        return r.element_at(std::uniform_int_distribution<std::uint64_t>(0, *r.cardinality() - 1)(rng));
    const long long num = std::uniform_int_distribution<long long>(-40, 40)(rng);
    if (!r.is_local())
        return r.from_int(num);
    const long long p = r.spec().p;
    long long den;
    do
        den = std::uniform_int_distribution<long long>(1, 30)(rng);
    while (den % p == 0);
    return r.fraction(num, den);
}

inline Mat2 random_matrix(const LocalRing &r, std::mt19937_64 &rng)
{
    return {random_element(r, rng), random_element(r, rng), random_element(r, rng), random_element(r, rng)};
}

} // namespace testing_support
