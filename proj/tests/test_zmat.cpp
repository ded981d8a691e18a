#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

Mat2 int_matrix(int a, int b, int c, int d)
{
    auto z = ring("Z");
    return {z.from_int(a), z.from_int(b), z.from_int(c), z.from_int(d)};
}

bool transform_diagonalizes(const Mat2 &a, const IntCleanClass &cls)
{
    auto z = a.ring();
    const Mat2 &p = *cls.transform;
    auto pm = zmat::entries(p);
    return zmat::unimodular(zmat::det(pm)) && p * a == Mat2::diag(z.from_int(cls.d1), z.from_int(cls.d2)) * p;
}

} // namespace

TEST(Zmat, Examples)
{
    Mat2 a = int_matrix(1, 1, 0, 2);
    auto cls = classify_integer(a);
    ASSERT_EQ(cls.tag, IntCleanTag::Diag);
    EXPECT_EQ(cls.d1, 1);
    EXPECT_EQ(cls.d2, 2);
    EXPECT_TRUE(transform_diagonalizes(a, cls));
    EXPECT_TRUE(integer_oracle(a));

    Mat2 b = int_matrix(-1, 1, 0, 2);
    EXPECT_EQ(classify_integer(b).tag, IntCleanTag::NotClean);
    EXPECT_FALSE(integer_oracle(b));

    Mat2 c = int_matrix(0, 0, 0, 1);
    auto cc = classify_integer(c);
    ASSERT_EQ(cc.tag, IntCleanTag::Diag);
    EXPECT_EQ(cc.d1, 1);
    EXPECT_EQ(cc.d2, 0);
    EXPECT_EQ(*cc.transform, int_matrix(0, 1, 1, 0));

    EXPECT_FALSE(integer_oracle(int_matrix(5, 0, 0, 5)));
    EXPECT_EQ(classify_integer(int_matrix(5, 0, 0, 5)).tag, IntCleanTag::NotClean);
}

TEST(Zmat, TrivialTags)
{
    EXPECT_EQ(classify_integer(int_matrix(2, 1, 1, 1)).tag, IntCleanTag::TrivialUnit);
    EXPECT_EQ(classify_integer(int_matrix(0, 0, 0, 0)).tag, IntCleanTag::TrivialOneMinusUnit);
    EXPECT_EQ(classify_integer(int_matrix(2, 0, 0, 0)).tag, IntCleanTag::TrivialOneMinusUnit);
}

TEST(Zmat, ExplicitIdempotent)
{
    // E = A - I for A = [[1,1],[0,2]]
    Mat2 a = int_matrix(1, 1, 0, 2);
    Mat2 e = int_matrix(0, 1, 0, 1);
    EXPECT_EQ(e * e, e);
    EXPECT_EQ(e * a, a * e);
    EXPECT_EQ(a - e, Mat2::identity(a.ring()));
}

TEST(Zmat, RejectsOtherRings)
{
    try {
        classify_integer(Mat2::identity(ring("Zmod(2,2)")));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotApplicable);
    }
}

TEST(Zmat, PrimitiveEigenvectors)
{
    auto m = zmat::entries(int_matrix(-1, 1, 0, 2));
    auto [x1, y1] = zmat::primitive_kernel_vector(m, -1);
    EXPECT_EQ(x1, 1);
    EXPECT_EQ(y1, 0);
    auto [x2, y2] = zmat::primitive_kernel_vector(m, 2);
    EXPECT_EQ(x2, 1);
    EXPECT_EQ(y2, 3);
    EXPECT_FALSE(zmat::eigen_transform(m, -1, 2));
}

TEST(Zmat, SweepAgreesWithOracle)
{
    std::set<std::pair<int, int>> classes;
    std::size_t total = 0;
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b)
            for (int c = -6; c <= 6; ++c)
                for (int d = -6; d <= 6; ++d) {
                    Mat2 m = int_matrix(a, b, c, d);
                    auto cls = classify_integer(m);
                    ASSERT_EQ(cls.tag != IntCleanTag::NotClean, integer_oracle(m)) << m.to_string();
                    if (cls.tag == IntCleanTag::Diag) {
                        ASSERT_TRUE(transform_diagonalizes(m, cls)) << m.to_string();
                        classes.insert({cls.d1, cls.d2});
                    }
                    ++total;
                }
    EXPECT_EQ(total, 28561u);
    EXPECT_EQ(classes, (std::set<std::pair<int, int>>{{1, 0}, {-1, 0}, {1, 2}, {-1, 2}}));
}
