#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

TEST(Matrix2, Invertibility)
{
    auto r = ring("Zmod(2,2)");
    EXPECT_TRUE(is_invertible(mat(r, "[[1,2],[2,1]]")));
    EXPECT_FALSE(is_invertible(mat(r, "[[0,2],[1,1]]")));
    EXPECT_EQ(invert2(mat(r, "[[1,3],[1,2]]")), mat(r, "[[2,3],[1,3]]"));
    EXPECT_EQ(invert2(Mat2::identity(r)), Mat2::identity(r));
    try {
        invert2(mat(r, "[[0,2],[1,1]]"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    }
}

TEST(Matrix2, Nilpotency)
{
    auto r = ring("Zmod(2,2)");
    EXPECT_TRUE(is_nilpotent(mat(r, "[[2,2],[2,2]]")));
    EXPECT_EQ(nilpotency_index(mat(r, "[[2,2],[2,2]]")), 2u);
    EXPECT_TRUE(is_nilpotent(mat(r, "[[0,1],[0,0]]")));
    EXPECT_FALSE(is_nilpotent(mat(r, "[[0,2],[1,1]]")));
    EXPECT_TRUE(in_radical(mat(r, "[[2,0],[0,2]]")));
}

TEST(Matrix2, NoncommutativeProduct)
{
    auto s = ring("SkewTrunc(GF(2,2),1,2)");
    Mat2 a = mat(s, "[[x,0],[0,0]]"), b = mat(s, "[[w,0],[0,0]]");
    EXPECT_EQ(a * b, mat(s, "[[w^2*x,0],[0,0]]"));
    EXPECT_NE(a * b, b * a);
}

TEST(Matrix2, ParseErrors)
{
    auto r = ring("Zmod(2,2)");
    EXPECT_THROW(mat(r, "[[1,2],[3]]"), ParseError);
    EXPECT_THROW(mat(r, "[[1,2],[3,4]"), ParseError);
    EXPECT_THROW(mat(r, "1,2,3,4"), ParseError);
}

TEST(Matrix2, RoundTripAndConjugation)
{
    for (const auto &spec : finite_rings()) {
        auto r = ring(spec.c_str());
        std::mt19937_64 rng(3);
        for (int i = 0; i < 200; ++i) {
            Mat2 a = random_matrix(r, rng), p = random_matrix(r, rng);
            ASSERT_EQ(parse_matrix(r, a.to_string()), a) << spec;
            if (is_invertible(a))
                EXPECT_EQ(a * invert2(a), Mat2::identity(r));
            if (is_invertible(p)) {
                Mat2 pi = invert2(p);
                EXPECT_EQ(p * pi, Mat2::identity(r));
                EXPECT_EQ(pi * p, Mat2::identity(r));
                EXPECT_EQ(conjugate(p, a), p * a * pi);
            }
        }
    }
}

TEST(Matrix2, InvertibleIffResidueInvertible)
{
    for (const char *spec : {"Zmod(2,2)", "Trunc(GF(2,1),2)", "GF(2,1)"}) {
        auto r = ring(spec);
        for (std::uint64_t i = 0; i < matrix_count(r); ++i) {
            Mat2 a = matrix_at(r, i);
            bool brute = false;
            for (std::uint64_t j = 0; j < matrix_count(r) && !brute; ++j)
                brute = a * matrix_at(r, j) == Mat2::identity(r);
            ASSERT_EQ(is_invertible(a), brute) << spec << " " << a.to_string();
        }
    }
}

TEST(Matrix2, PowersAndNilpotencyIndex)
{
    auto r = ring("Trunc(GF(2,1),3)");
    Mat2 a = mat(r, "[[y,0],[0,y]]");
    EXPECT_EQ(pow(a, 3), Mat2::zero(r));
    EXPECT_EQ(nilpotency_index(a), 3u);
    EXPECT_EQ(pow(a, 0), Mat2::identity(r));
}
