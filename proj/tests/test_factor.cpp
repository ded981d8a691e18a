#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

MonicQuadratic quad(const LocalRing &r, const char *a1, const char *a0) { return {el(r, a1), el(r, a0)}; }

} // namespace

TEST(Factor, NontrivialExample)
{
    auto r = ring("Zmod(2,2)");
    auto f = quad(r, "-1", "-2");
    auto w = star_factorize(f);
    EXPECT_EQ(w.g0, (Poly{el(r, "-3"), r.one()}));
    EXPECT_EQ(w.g1, (Poly{el(r, "2"), r.one()}));
    EXPECT_TRUE(r.is_unit(poly::at_zero(w.g0)));
    EXPECT_TRUE(r.is_unit(poly::at_one(w.g1)));
    EXPECT_TRUE(w.starred);
    EXPECT_TRUE(verify_factorization(f, w));
    EXPECT_EQ(poly::to_string(w.g0), "t+1");
    EXPECT_EQ(poly::to_string(w.g1), "t+2");
}

TEST(Factor, TrivialCases)
{
    auto r = ring("Zmod(2,2)");
    auto sq = quad(r, "0", "0");
    auto w = star_factorize(sq);
    EXPECT_EQ(w.g0, Poly{r.one()});
    EXPECT_EQ(w.g1, poly::of(sq));
    EXPECT_TRUE(verify_factorization(sq, w));

    auto f0 = quad(r, "0", "1");
    auto w0 = star_factorize(f0);
    EXPECT_EQ(w0.g0, poly::of(f0));
    EXPECT_EQ(w0.g1, Poly{r.one()});
    EXPECT_TRUE(verify_factorization(f0, w0));
}

TEST(Factor, LocalizedCounterexample)
{
    auto r = ring("Zloc(2)");
    auto f = quad(r, "-1", "-4");
    try {
        star_factorize(f);
        FAIL();
    } catch (const NoFactorizationError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoFactorization);
        EXPECT_EQ(e.witness(), f);
    }
    auto g = quad(r, "-1", "-2");
    EXPECT_TRUE(verify_factorization(g, star_factorize(g)));
}

TEST(Factor, TamperedWitnessFails)
{
    auto r = ring("Zmod(2,2)");
    auto f = quad(r, "-1", "-2");
    auto w = star_factorize(f);
    w.g1[0] += r.one();
    EXPECT_FALSE(verify_factorization(f, w));

    auto w2 = star_factorize(f);
    std::swap(w2.g0, w2.g1);
    EXPECT_FALSE(verify_factorization(f, w2));
}

TEST(Factor, PolynomialHelpers)
{
    auto f = ring("GF(2,1)");
    Poly t{f.zero(), f.one()}, t1{f.one(), f.one()};
    auto b = poly::bezout(t, t1);
    ASSERT_TRUE(b);
    EXPECT_EQ(poly::add(poly::mul(b->first, t), poly::mul(b->second, t1)), Poly{f.one()});
    EXPECT_FALSE(poly::bezout(t, poly::mul(t, t1)));
    auto [q, rem] = poly::divmod(poly::mul(t, t1), t1);
    EXPECT_EQ(q, t);
    EXPECT_TRUE(poly::is_zero(rem));
}

class FactorExhaustive : public ::testing::TestWithParam<std::string> {};

TEST_P(FactorExhaustive, SucceedsExactlyWhenPredicted)
{
    auto r = ring(GetParam().c_str());
    auto view = r.residue();
    const Poly t_bar{view.field().zero(), view.field().one()};
    const Poly t_minus_one{-view.field().one(), view.field().one()};
    for (const auto &a1 : r.enumerate())
        for (const auto &a0 : r.enumerate()) {
            MonicQuadratic f{a1, a0};
            const bool trivial = r.is_unit(f.value_at_zero()) || r.is_unit(f.value_at_one());
            const bool roots = f.in_W() && find_roots_enumerate(f, RootTargets::clean()).rootInJ.has_value();
            try {
                auto w = star_factorize(f);
                ASSERT_TRUE(trivial || roots) << f.to_string();
                ASSERT_TRUE(w.starred);
                ASSERT_TRUE(verify_factorization(f, w));
                if (!trivial) {
                    EXPECT_EQ(poly::residue(w.g0), t_minus_one);
                    EXPECT_EQ(poly::residue(w.g1), t_bar);
                    EXPECT_EQ(poly::residue(w.h1), t_bar);
                    EXPECT_EQ(poly::residue(w.h0), t_minus_one);
                }
            } catch (const NoFactorizationError &) {
                ASSERT_FALSE(trivial || roots) << f.to_string();
            }
        }
}

INSTANTIATE_TEST_SUITE_P(Rings, FactorExhaustive,
                         ::testing::Values("Zmod(2,2)", "Zmod(2,3)", "Zmod(3,2)", "Trunc(GF(2,1),3)",
                                           "SkewTrunc(GF(2,2),1,2)"),
                         [](const auto &info) {
                             std::string s;
                             for (char c : info.param)
                                 if (std::isalnum(static_cast<unsigned char>(c)))
                                     s += c;
                             return s;
                         });
