#include <gtest/gtest.h>

#include "cleanmat/oracle.hpp"
#include "support.hpp"

using namespace testing_support;

TEST(PiRegular, NontrivialExample)
{
    auto r = ring("Zmod(2,2)");
    Mat2 a = mat(r, "[[0,2],[1,1]]");
    auto d = decide_strongly_pi_regular(a);
    ASSERT_EQ(d.status, PiStatus::Nontrivial);
    ASSERT_TRUE(d.certificate);
    EXPECT_EQ(d.certificate->t0, el(r, "3"));
    EXPECT_EQ(d.certificate->t1, el(r, "2"));
    EXPECT_EQ(d.certificate->t1 * d.certificate->t1, r.zero());
    EXPECT_TRUE(verify_pi_certificate(a, *d.certificate));
}

TEST(PiRegular, TrivialCases)
{
    auto r = ring("Zmod(2,2)");
    auto nil = decide_strongly_pi_regular(mat(r, "[[0,1],[0,0]]"));
    EXPECT_EQ(nil.status, PiStatus::TrivialNilpotent);
    EXPECT_EQ(nil.nilpotency, 2u);
    EXPECT_EQ(decide_strongly_pi_regular(Mat2::identity(r)).status, PiStatus::TrivialUnit);
    auto rad = decide_strongly_pi_regular(mat(r, "[[2,2],[0,2]]"));
    EXPECT_EQ(rad.status, PiStatus::TrivialNilpotent);
}

TEST(PiRegular, Integers)
{
    auto z = ring("Z");
    auto no = decide_strongly_pi_regular(mat(z, "[[1,1],[0,2]]"));
    EXPECT_EQ(no.status, PiStatus::No);
    EXPECT_EQ(decide_strongly_pi_regular(mat(z, "[[2,1],[1,1]]")).status, PiStatus::TrivialUnit);
    EXPECT_EQ(decide_strongly_pi_regular(mat(z, "[[0,3],[0,0]]")).status, PiStatus::TrivialNilpotent);
    Mat2 idem = mat(z, "[[1,1],[0,0]]");
    auto yes = decide_strongly_pi_regular(idem);
    ASSERT_EQ(yes.status, PiStatus::Nontrivial);
    EXPECT_TRUE(verify_pi_certificate(idem, *yes.certificate));
    Mat2 neg = mat(z, "[[-1,5],[0,0]]");
    auto yes2 = decide_strongly_pi_regular(neg);
    ASSERT_EQ(yes2.status, PiStatus::Nontrivial);
    EXPECT_TRUE(verify_pi_certificate(neg, *yes2.certificate));
}

TEST(PiRegular, LocalizedRing)
{
    auto r = ring("Zloc(2)");
    // eigenvalues 3 (unit) and 0 (nilpotent)
    Mat2 a = mat(r, "[[1,2],[1,2]]");
    auto d = decide_strongly_pi_regular(a);
    ASSERT_EQ(d.status, PiStatus::Nontrivial);
    EXPECT_TRUE(verify_pi_certificate(a, *d.certificate));
    // eigenvalues 1 and 2: 2 is neither a unit nor nilpotent
    EXPECT_EQ(decide_strongly_pi_regular(mat(r, "[[1,1],[0,2]]")).status, PiStatus::No);
}

TEST(PiRegular, FittingDecomposition)
{
    auto r = ring("Zmod(2,2)");
    EXPECT_EQ(fitting_decompose(Mat2::identity(r)), 1u);
    EXPECT_EQ(fitting_decompose(mat(r, "[[0,2],[1,1]]")), 2u);
    EXPECT_EQ(fitting_decompose(mat(r, "[[0,1],[0,0]]")), 2u);
    try {
        fitting_decompose(mat(ring("Zloc(2)"), "[[0,1],[0,0]]"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfiniteRing);
    }
}

TEST(PiRegular, FiniteRingsHaveNoNegatives)
{
    auto r = ring("Trunc(GF(2,1),2)");
    for (std::uint64_t i = 0; i < matrix_count(r); ++i)
        EXPECT_NE(decide_strongly_pi_regular(matrix_at(r, i)).status, PiStatus::No);
}

TEST(PiRegular, RingLevel)
{
    for (const char *spec : {"Zmod(2,2)", "Zmod(2,3)", "Zmod(3,2)", "Zmod(5,2)", "Trunc(GF(2,1),2)",
                             "SkewTrunc(GF(2,2),1,2)", "GF(2,1)", "GF(3,1)"})
        EXPECT_EQ(ring_is_m2_pi_regular(ring(spec)).verdict, Verdict::Yes) << spec;
    EXPECT_THROW(ring_is_m2_pi_regular(ring("Zloc(2)")), Error);
}

class PiExhaustive : public ::testing::TestWithParam<std::string> {};

TEST_P(PiExhaustive, AgreesWithFittingAndImpliesClean)
{
    auto r = ring(GetParam().c_str());
    for (std::uint64_t i = 0; i < matrix_count(r); ++i) {
        Mat2 a = matrix_at(r, i);
        auto d = decide_strongly_pi_regular(a);
        bool fitting = true;
        try {
            fitting_decompose(a);
        } catch (const Error &e) {
            ASSERT_EQ(e.kind(), ErrorKind::NotPiRegular);
            fitting = false;
        }
        ASSERT_EQ(d.status != PiStatus::No, fitting) << a.to_string();
        ASSERT_EQ(oracle::brute_pi(a).has_value(), fitting) << a.to_string();
        if (d.certificate)
            ASSERT_TRUE(verify_pi_certificate(a, *d.certificate));
        if (d.status != PiStatus::No)
            ASSERT_NE(decide_strongly_clean(a).status, CleanStatus::NotClean);
    }
}

INSTANTIATE_TEST_SUITE_P(Rings, PiExhaustive, ::testing::Values("Zmod(2,2)", "Trunc(GF(2,1),2)", "GF(2,1)", "Zmod(3,1)"),
                         [](const auto &info) {
                             std::string s;
                             for (char c : info.param)
                                 if (std::isalnum(static_cast<unsigned char>(c)))
                                     s += c;
                             return s;
                         });
