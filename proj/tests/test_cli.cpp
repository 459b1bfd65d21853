#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "weakind/cli.hpp"

using namespace weakind;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, ParseAndNormalize) {
    auto p = call({"parse", "x+2*y"});
    EXPECT_EQ(p.code, 0);
    EXPECT_EQ(p.out, "x + S(S(0))*y\n");
    EXPECT_EQ(call({"normalize", "(x + y)*(x + y)"}).out, "x^2 + 2*x*y + y^2\n");
    auto j = json::parse(call({"--format", "json", "normalize", "S(x)*x"}).out);
    EXPECT_EQ(j["polynomial"], "x^2 + x");
    EXPECT_EQ(j["degree"], 2);
}

TEST(Cli, IdentityExitCodes) {
    EXPECT_EQ(call({"identity", "x*(y + z) = x*y + x*z"}).code, 0);
    auto r = call({"identity", "x*x = x"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "not an identity\n");
    EXPECT_EQ(call({"identity", "x != x"}).code, 2);
}

TEST(Cli, Decide) {
    auto sat = call({"decide", "x*x + y = 5"});
    EXPECT_EQ(sat.code, 0);
    EXPECT_EQ(sat.out, "sat (const-poly) witness: x=0, y=5\n");
    EXPECT_EQ(call({"decide", "S(x) = x"}).out, "sat (poly-poly) witness: all-omega\n");
    auto unsat = call({"--format", "json", "decide", "2*x = 3"});
    EXPECT_EQ(unsat.code, 1);
    auto j = json::parse(unsat.out);
    EXPECT_EQ(j["status"], "unsat");
    EXPECT_EQ(j["case"], "const-poly");
    EXPECT_TRUE(j["witness"].is_null());
}

TEST(Cli, DecideCorpusReportsBadLines) {
    auto path = temp_file("weakind_corpus_test.txt");
    {
        std::ofstream f(path);
        f << "# comment\n\nx + 1 = 3\nx + = 2\n2*x = 3  # trailing comment\nx <= y\n";
    }
    auto r = call({"decide", "--corpus", path.string()});
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    auto a = json::parse(ls[0]), b = json::parse(ls[1]), c = json::parse(ls[2]), d = json::parse(ls[3]);
    EXPECT_EQ(a["line"], 3);
    EXPECT_EQ(a["status"], "sat");
    EXPECT_EQ(a["witness"]["assignment"]["x"], 2);
    EXPECT_EQ(b["line"], 4);
    EXPECT_TRUE(b.contains("error"));
    EXPECT_EQ(c["status"], "unsat");
    EXPECT_EQ(c["input"], "2*x = 3");
    EXPECT_TRUE(d.contains("error"));
    std::filesystem::remove(path);

    EXPECT_EQ(call({"decide", "--corpus", "/nonexistent/corpus.txt"}).code, 2);
    EXPECT_EQ(call({"decide"}).code, 2);
}

TEST(Cli, EvalInModels) {
    EXPECT_EQ(call({"eval", "--model", "zx-plus", "--env", "x=poly:[1,0]", "x*x + 1"}).out, "poly:[1,0,1]\n");
    EXPECT_EQ(call({"eval", "--model", "left-absorb", "--env", "a=omega:0", "--env", "b=omega:1", "a + b = b + a"}).out,
              "false\n");
    EXPECT_EQ(call({"eval", "--model", "formal-sums", "--env", "x=sum:[(1,1)]", "S(x)"}).out, "sum:[(1,1),(1,0)]\n");
    EXPECT_EQ(call({"eval", "--model", "zx-plus", "--env", "x=nat:3", "x + x"}).out, "poly:[6]\n");
    EXPECT_EQ(call({"eval", "--model", "one-point", "x + 1"}).code, 2);
    EXPECT_EQ(call({"eval", "--model", "one-point", "--env", "x=omega:1", "x"}).code, 2);
    EXPECT_EQ(call({"eval", "--model", "nope", "--env", "x=nat:1", "x"}).code, 2);
    EXPECT_EQ(call({"eval", "--model", "one-point", "--env", "x", "x"}).code, 2);
}

TEST(Cli, CheckQ) {
    auto r = call({"check-q", "--model", "max-merge"});
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 9u);
    EXPECT_EQ(ls[0], "Q1 pass");
    EXPECT_EQ(ls[8].rfind("max-merge: pass on ", 0), 0u);
    auto j = json::parse(call({"--format", "json", "check-q", "--model", "formal-sums"}).out);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["axioms"].size(), 8u);
}

TEST(Cli, CheckInductionAndProp) {
    auto r = call({"check-ind", "--model", "max-merge", "--formula", "x + p = p", "--var", "x", "--env", "p=omega:0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("conclusion-fails-at omega:1", 0), 0u);
    auto ok = call({"--format", "json", "check-ind", "--model", "one-point", "--formula", "x*0 = 0", "--var", "x"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(json::parse(ok.out)["outcome"], "consistent-on-probes");
    EXPECT_EQ(call({"check-ind", "--model", "one-point", "--formula", "x + p = p", "--var", "x"}).code, 2);

    auto p = call({"check-prop", "--model", "one-point", "--item", "6"});
    EXPECT_EQ(p.code, 1);
    EXPECT_EQ(p.out, "6: x + y = x + z -> y = z: fails (omega:0, nat:0, nat:1)\n");
    EXPECT_EQ(call({"check-prop", "--model", "zx-plus", "--item", "3"}).code, 0);
    EXPECT_EQ(call({"check-prop", "--model", "zx-plus", "--item", "13"}).code, 2);
}

TEST(Cli, ClaimsRun) {
    auto r = call({"claims", "run"});
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 17u);
    EXPECT_EQ(ls.back(), "16/16 claims reproduced");
    auto j = call({"--format", "json", "--probe-bound", "24", "claims", "run"});
    for (const auto& l : lines(j.out)) EXPECT_TRUE(json::parse(l)["matched"].get<bool>()) << l;
}

TEST(Cli, SearchIsDeterministic) {
    std::vector<std::string> args = {"--format", "json", "--seed", "3", "search", "--model", "max-merge", "--shape", "eq",
                                     "--budget", "400"};
    auto a = call(args), b = call(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto ls = lines(a.out);
    auto summary = json::parse(ls.back());
    EXPECT_EQ(summary["kind"], "summary");
    EXPECT_EQ(summary["trials"], 400);
    EXPECT_EQ(summary["seed"], 3);
    EXPECT_EQ(summary["findings"], ls.size() - 1);
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) EXPECT_EQ(json::parse(ls[i])["outcome"], "conclusion-fails-at");
    EXPECT_EQ(call({"search", "--model", "max-merge", "--shape", "lt"}).code, 2);
}

TEST(Cli, SeedFromEnvironmentAndFlagPrecedence) {
    std::vector<std::string> base = {"--format", "json", "search", "--model", "zx-plus", "--shape", "leq", "--budget", "50"};
    auto seed_of = [](const Result& r) { return json::parse(lines(r.out).back())["seed"].get<std::uint64_t>(); };
    ::setenv("WEAKIND_SEED", "77", 1);
    EXPECT_EQ(seed_of(call(base)), 77u);
    auto flagged = base;
    flagged.insert(flagged.begin(), {"--seed", "5"});
    EXPECT_EQ(seed_of(call(flagged)), 5u);
    ::unsetenv("WEAKIND_SEED");
    EXPECT_EQ(seed_of(call(base)), 0u);
}

TEST(Cli, Bracket) {
    EXPECT_EQ(call({"bracket", "1,0,-2", "--q", "1", "--a", "0", "--b", "5"}).out, "1\n");
    EXPECT_EQ(call({"bracket", "1,0,-2", "--q", "10", "--a", "0", "--b", "20"}).out, "14\n");
    EXPECT_EQ(call({"bracket", "1,0,-2", "--q", "1", "--changes", "--lo", "-5", "--hi", "5"}).out, "{-2, 1}\n");
    EXPECT_EQ(call({"bracket", "1,0,-2", "--q", "1", "--a", "3", "--b", "5"}).code, 2);
    EXPECT_EQ(call({"bracket", "1,x", "--q", "1", "--a", "0", "--b", "5"}).code, 2);
    EXPECT_EQ(call({"bracket", "1,0,-2", "--q", "0", "--a", "0", "--b", "5"}).code, 2);
}

TEST(Cli, NormalFormAndPuiseux) {
    EXPECT_EQ(call({"nf", "X + 2 - X"}).out, "X^1 + 2X^0 - X^1\n");
    EXPECT_EQ(call({"nf", "X + 2 - X + X - 2"}).out, "X^1\n");
    EXPECT_EQ(call({"nf", "X - X + 3"}).out, "3X^0\n");
    auto j = json::parse(call({"--format", "json", "nf", "[[1,1],[-1,1],[2,0]]"}).out);
    EXPECT_EQ(j["nf"], json::parse("[[2,0]]"));
    EXPECT_TRUE(j["positive"].get<bool>());
    EXPECT_EQ(call({"nf", "X +"}).code, 2);

    auto ip = call({"puiseux", "ip", R"({"primes":[2,3],"terms":[[1,"1/2"],["-1/2",0]]})"});
    EXPECT_EQ(ip.code, 0);
    EXPECT_EQ(ip.out, "X^(1/2) - 1\n");
    EXPECT_EQ(call({"puiseux", "ip", R"({"primes":[2],"terms":[[1,1],[3,0]]})"}).code, 2);
    EXPECT_EQ(call({"puiseux", "ip", R"({"primes":[2],"terms":[[1,1],[3,0]],"terminates":true})"}).out, "X + 3\n");
    EXPECT_EQ(call({"puiseux", "ip", "{not json"}).code, 2);
}

TEST(Cli, UsageErrorsAndHelp) {
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"--format", "xml", "parse", "x"}).code, 2);
    auto bad = call({"parse", "x + )"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("position 4"), std::string::npos);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, OutputFile) {
    auto path = temp_file("weakind_output_test.txt");
    std::filesystem::remove(path);
    auto r = call({"--output", path.string(), "normalize", "x + x"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)), {});
    EXPECT_EQ(content, "2*x\n");
    std::filesystem::remove(path);
    EXPECT_EQ(call({"--output", "/nonexistent/dir/out.txt", "normalize", "x"}).code, 2);
}
