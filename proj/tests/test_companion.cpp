#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

TEST(Companion, AlreadyCompanion)
{
    auto r = ring("Zmod(2,2)");
    auto c = reduce_to_companion(mat(r, "[[0,0],[1,1]]"));
    EXPECT_EQ(c.w0(), r.zero());
    EXPECT_EQ(c.w1(), r.zero());
    EXPECT_EQ(c.transform, Mat2::identity(r));
}

TEST(Companion, ReducesToTrivialParameters)
{
    auto r = ring("Zmod(2,2)");
    Mat2 a = mat(r, "[[1,2],[2,0]]");
    auto c = reduce_to_companion(a);
    EXPECT_EQ(c.w0(), r.zero());
    EXPECT_EQ(c.w1(), r.zero());
    EXPECT_EQ(conjugate(c.transform, a), c.matrix());
}

TEST(Companion, ScalarResidueNotApplicable)
{
    auto r = ring("Zmod(2,2)");
    try {
        reduce_to_companion(Mat2::identity(r));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotApplicable);
    }
}

TEST(Companion, PiReduction)
{
    auto r = ring("Zmod(2,2)");
    auto c = reduce_to_companion_pi(mat(r, "[[0,2],[1,1]]"));
    EXPECT_EQ(c.kind, CompanionKind::PiCase);
    EXPECT_EQ(c.w(), el(r, "2"));
    EXPECT_EQ(c.r(), r.one());
    EXPECT_EQ(c.transform, Mat2::identity(r));
    EXPECT_THROW(reduce_to_companion_pi(mat(r, "[[2,2],[2,2]]")), Error);

    auto f = ring("GF(2,1)");
    Mat2 a = mat(f, "[[1,1],[1,1]]");
    auto p = reduce_to_companion_pi(a);
    EXPECT_EQ(p.kind, CompanionKind::PiCase);
    EXPECT_EQ(conjugate(p.transform, a), p.matrix());
}

namespace {

/// Residue has rank one and eigenvalues {0, 1}.
bool clean_case(const Mat2 &a)
{
    Mat2 res = residue_matrix(a);
    LocalRing f = res.ring();
    return field_rank(res) == 1 && field_rank(res - Mat2::identity(f)) == 1;
}

bool pi_case(const Mat2 &a)
{
    Mat2 res = residue_matrix(a);
    return field_rank(res) == 1 && !(res * res).is_zero();
}

} // namespace

class CompanionExhaustive : public ::testing::TestWithParam<std::string> {};

TEST_P(CompanionExhaustive, EveryEligibleMatrixReduces)
{
    auto r = ring(GetParam().c_str());
    std::size_t clean_count = 0, pi_count = 0;
    for (std::uint64_t i = 0; i < matrix_count(r); ++i) {
        Mat2 a = matrix_at(r, i);
        if (clean_case(a)) {
            auto c = reduce_to_companion(a);
            ASSERT_TRUE(is_invertible(c.transform));
            ASSERT_EQ(conjugate(c.transform, a), c.matrix()) << a.to_string();
            ASSERT_TRUE(r.in_radical(c.w0()));
            ASSERT_TRUE(r.in_radical(c.w1()));
            ++clean_count;
        }
        if (pi_case(a)) {
            auto c = reduce_to_companion_pi(a);
            ASSERT_EQ(conjugate(c.transform, a), c.matrix()) << a.to_string();
            ASSERT_TRUE(r.in_radical(c.w()));
            ++pi_count;
        }
    }
    EXPECT_GT(clean_count, 0u);
    EXPECT_GT(pi_count, 0u);
}

INSTANTIATE_TEST_SUITE_P(Rings, CompanionExhaustive,
                         ::testing::Values("Zmod(2,2)", "Trunc(GF(2,1),2)", "GF(2,1)", "Zmod(3,1)"),
                         [](const auto &info) {
                             std::string s;
                             for (char c : info.param)
                                 if (std::isalnum(static_cast<unsigned char>(c)))
                                     s += c;
                             return s;
                         });

TEST(Companion, SampledOnLargerRings)
{
    for (const char *spec : {"SkewTrunc(GF(2,2),1,2)", "Zmod(3,2)", "Zloc(2)"}) {
        auto r = ring(spec);
        std::mt19937_64 rng(5);
        int checked = 0;
        for (int i = 0; i < 3000 && checked < 300; ++i) {
            Mat2 a = random_matrix(r, rng);
            if (!clean_case(a))
                continue;
            auto c = reduce_to_companion(a);
            ASSERT_EQ(conjugate(c.transform, a), c.matrix()) << spec << " " << a.to_string();
            ++checked;
        }
        EXPECT_GT(checked, 0) << spec;
    }
}

TEST(Companion, IdentityOverCommutativeRing)
{
    auto r = ring("Zmod(3,2)");
    Mat2 a = mat(r, "[[4,3],[1,6]]");
    auto c = reduce_to_companion(a);
    EXPECT_EQ(r.one() + c.w1(), a(0, 0) + a(1, 1));
    EXPECT_EQ(-c.w0(), a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
}

TEST(Companion, CayleyHamiltonStyleIdentity)
{
    for (const auto &spec : finite_rings()) {
        auto r = ring(spec.c_str());
        std::mt19937_64 rng(9);
        for (int n = 1; n <= 4; ++n)
            for (int i = 0; i < 50; ++i) {
                std::vector<Element> lower;
                for (int k = 0; k < n; ++k)
                    lower.push_back(random_element(r, rng));
                ASSERT_TRUE(check_companion_identity(lower)) << spec;
            }
    }
}
