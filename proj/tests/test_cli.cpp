#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "cleanmat/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    int code = cleanmat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

cleanmat::cli::json run_json(std::vector<std::string> args)
{
    args.push_back("--json");
    auto o = run(args);
    return cleanmat::cli::json::parse(o.out);
}

bool verifies(const std::string &document)
{
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("cleanmat_doc_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    {
        std::ofstream f(path);
        f << document;
    }
    auto o = run({"verify", "--input", path.string()});
    std::filesystem::remove(path);
    return o.code == 0 && o.out.find("verified: true") != std::string::npos;
}

} // namespace

TEST(Cli, DecideJson)
{
    auto o = run({"decide", "--ring", "Zmod(2,2)", "--matrix", "[[0,2],[1,1]]", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    auto doc = cleanmat::cli::json::parse(o.out);
    EXPECT_EQ(doc["decision"], "NontrivialClean");
    EXPECT_EQ(doc["certificate"]["E"], cleanmat::cli::json::parse(R"([["3","2"],["3","2"]])"));
    EXPECT_EQ(doc["certificate"]["U"], cleanmat::cli::json::parse(R"([["1","0"],["2","3"]])"));
    EXPECT_EQ(doc["verified"], true);
    EXPECT_TRUE(verifies(o.out));
}

TEST(Cli, SurveyLocalized)
{
    auto o = run({"survey", "--ring", "Zloc(2)", "--mode", "clean"});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.out.find("verdict: No"), std::string::npos);
    EXPECT_NE(o.out.find("witness: t^2-t-4"), std::string::npos);
}

TEST(Cli, SurveyFiniteRings)
{
    EXPECT_EQ(run({"survey", "--ring", "SkewTrunc(GF(2,2),1,2)"}).code, 0);
    EXPECT_EQ(run({"survey", "--ring", "Zmod(2,2)", "--mode", "pi"}).code, 0);
    EXPECT_EQ(run({"survey", "--ring", "Zmod(2,2)", "--mode", "bogus"}).code, 64);
}

TEST(Cli, ClassifyInt)
{
    auto o = run({"classify-int", "--matrix", "[[-1,1],[0,2]]"});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.out.find("NotClean"), std::string::npos);
    auto doc = run_json({"classify-int", "--matrix", "[[1,1],[0,2]]"});
    EXPECT_EQ(doc["decision"], "Diag");
    EXPECT_TRUE(verifies(doc.dump()));
}

TEST(Cli, DecideNegative)
{
    auto o = run({"decide", "--ring", "Zloc(2)", "--matrix", "[[0,4],[1,1]]", "--json"});
    EXPECT_EQ(o.code, 2);
    auto doc = cleanmat::cli::json::parse(o.out);
    EXPECT_EQ(doc["decision"], "NotClean");
    EXPECT_EQ(doc["witness"], "t^2-t-4");
    EXPECT_TRUE(verifies(o.out));
}

TEST(Cli, PiAndFactorRoundTrip)
{
    auto pi = run({"pi", "--ring", "Zmod(2,2)", "--matrix", "[[0,2],[1,1]]", "--json"});
    ASSERT_EQ(pi.code, 0) << pi.err;
    EXPECT_TRUE(verifies(pi.out));

    auto nil = run({"pi", "--ring", "Zmod(2,2)", "--matrix", "[[0,1],[0,0]]", "--json"});
    ASSERT_EQ(nil.code, 0);
    EXPECT_TRUE(verifies(nil.out));

    auto zno = run({"pi", "--ring", "Z", "--matrix", "[[1,1],[0,2]]"});
    EXPECT_EQ(zno.code, 2);

    auto f = run({"factor", "--ring", "Zmod(2,2)", "--poly", "-1,-2", "--json"});
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_TRUE(verifies(f.out));

    auto nf = run({"factor", "--ring", "Zloc(2)", "--poly=-1,-4", "--json"});
    EXPECT_EQ(nf.code, 2);
    EXPECT_TRUE(verifies(nf.out));
}

TEST(Cli, SkewRingRoundTrip)
{
    auto o = run({"decide", "--ring", "SkewTrunc(GF(2,2),1,2)", "--matrix", "[[0,w*x],[1,1+x]]", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_TRUE(verifies(o.out));
}

TEST(Cli, TamperedDocumentFailsVerification)
{
    auto doc = run_json({"decide", "--ring", "Zmod(2,2)", "--matrix", "[[0,2],[1,1]]"});
    doc["certificate"]["U"][1][1] = "1";
    EXPECT_FALSE(verifies(doc.dump()));
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 64);
    EXPECT_EQ(run({"decide", "--ring", "Zmod(2,2)"}).code, 64);
    EXPECT_EQ(run({"decide", "--ring", "Zmod(2,2)", "--matrix", "[[0,2],[1]]"}).code, 64);
    EXPECT_EQ(run({"decide", "--ring", "Zmod(6,1)", "--matrix", "[[0,2],[1,1]]"}).code, 64);
    EXPECT_EQ(run({"decide", "--ring", "Nope", "--matrix", "[[0,2],[1,1]]"}).code, 64);
    auto o = run({"decide", "--ring", "Zmod(2,2)", "--matrix", "[[0,2],[1,x]]"});
    EXPECT_EQ(o.code, 64);
    EXPECT_NE(o.err.find("position"), std::string::npos);
}

TEST(Cli, TextOutputIsFlat)
{
    auto o = run({"decide", "--ring", "Zmod(2,2)", "--matrix", "[[0,2],[1,1]]"});
    EXPECT_NE(o.out.find("decision: NontrivialClean"), std::string::npos);
    EXPECT_NE(o.out.find("certificate.E: [[3,2],[3,2]]"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("verified: true"), std::string::npos);
}

TEST(Cli, Selftest)
{
    auto o = run({"selftest", "--ring", "Zmod(2,2)"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("clean 256/256 agree"), std::string::npos);
    EXPECT_NE(o.out.find("pi 256/256 agree"), std::string::npos);
}
