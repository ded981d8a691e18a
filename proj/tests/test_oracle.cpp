#include <gtest/gtest.h>

#include "cleanmat/oracle.hpp"
#include "support.hpp"

using namespace testing_support;

TEST(Oracle, IdempotentCounts)
{
    auto f2 = ring("GF(2,1)");
    auto idem = oracle::enumerate_idempotents(f2);
    EXPECT_EQ(idem.size(), 8u);
    auto z4 = ring("Zmod(2,2)");
    std::size_t recount = 0;
    for (std::uint64_t i = 0; i < matrix_count(z4); ++i) {
        Mat2 e = matrix_at(z4, i);
        if (e * e == e)
            ++recount;
    }
    EXPECT_EQ(oracle::enumerate_idempotents(z4).size(), recount);
}

TEST(Oracle, ZeroAndIdentityAlwaysPresent)
{
    for (const auto &spec : finite_rings()) {
        auto r = ring(spec.c_str());
        auto idem = oracle::enumerate_idempotents(r);
        EXPECT_NE(std::find(idem.begin(), idem.end(), Mat2::zero(r)), idem.end()) << spec;
        EXPECT_NE(std::find(idem.begin(), idem.end(), Mat2::identity(r)), idem.end()) << spec;
        for (const auto &e : idem)
            EXPECT_EQ(e * e, e);
    }
}

TEST(Oracle, BruteClean)
{
    auto z4 = ring("Zmod(2,2)");
    Mat2 a = mat(z4, "[[0,2],[1,1]]");
    auto cert = oracle::brute_clean(a);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(verify_certificate(a, *cert));

    auto id = oracle::brute_clean(Mat2::identity(z4));
    ASSERT_TRUE(id);
    EXPECT_EQ(id->E, Mat2::zero(z4));
    EXPECT_EQ(id->U, Mat2::identity(z4));

    auto f2 = ring("GF(2,1)");
    Mat2 n = mat(f2, "[[0,1],[0,0]]");
    auto nc = oracle::brute_clean(n);
    ASSERT_TRUE(nc);
    EXPECT_EQ(nc->E, Mat2::identity(f2));
    EXPECT_EQ(nc->U, n - Mat2::identity(f2));
}

TEST(Oracle, BrutePi)
{
    auto z4 = ring("Zmod(2,2)");
    EXPECT_EQ(oracle::brute_pi(Mat2::identity(z4)), 1u);
    EXPECT_EQ(oracle::brute_pi(mat(z4, "[[0,2],[1,1]]")), 2u);
    auto t = ring("Trunc(GF(2,1),2)");
    EXPECT_EQ(oracle::brute_pi(mat(t, "[[0,y],[0,0]]")), 2u);
}

TEST(Oracle, Guards)
{
    try {
        oracle::enumerate_idempotents(ring("Zloc(2)"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfiniteRing);
    }
    try {
        oracle::enumerate_idempotents(ring("GF(2,2)"), 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

TEST(Oracle, ExistenceIndependentOfScanOrder)
{
    auto r = ring("Trunc(GF(2,1),2)");
    auto idem = oracle::enumerate_idempotents(r);
    for (std::uint64_t i = 0; i < matrix_count(r); ++i) {
        Mat2 a = matrix_at(r, i);
        bool reverse_hit = false;
        for (auto it = idem.rbegin(); it != idem.rend() && !reverse_hit; ++it)
            reverse_hit = *it * a == a * *it && is_invertible(a - *it);
        ASSERT_EQ(oracle::brute_clean(a).has_value(), reverse_hit) << a.to_string();
    }
}
