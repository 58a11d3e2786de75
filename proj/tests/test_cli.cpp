#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace braid;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "braidtool");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json first_json(const Outcome& o) { return Json::parse(o.out.substr(0, o.out.find('\n'))); }

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(Json::parse(line));
  return rows;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Wp, Examples) {
  Outcome o = invoke({"wp", "1 2 1 -2 -1 -2"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(first_json(o)["identity"], true);
  o = invoke({"wp", "1"});
  EXPECT_EQ(first_json(o)["identity"], false);
  EXPECT_EQ(first_json(o)["permutation"].dump(), "[2,1]");
  o = invoke({"wp", ""});
  EXPECT_EQ(first_json(o)["identity"], true);
}

TEST(Compare, Examples) {
  EXPECT_EQ(first_json(invoke({"compare", "dehornoy", "", "1"}))["result"], "LT");
  EXPECT_EQ(first_json(invoke({"compare", "pure", "", "1 1"}))["result"], "LT");
  const Outcome bad = invoke({"compare", "pure", "1", "1"});
  EXPECT_EQ(bad.code, cli::kDomainError);
  EXPECT_EQ(first_json(bad)["kind"], "domain");
}

TEST(Matrices, Examples) {
  const Json b = first_json(invoke({"burau", "1"}));
  EXPECT_EQ(b["matrix"].dump(), R"([[{"variable":"t","0":1,"1":-1},{"variable":"t","1":1}],[{"variable":"t","0":1},{"variable":"t"}]])");
  EXPECT_EQ(first_json(invoke({"modular", "1 2 1"}))["matrix"].dump(), "[[0,-1],[1,0]]");
  EXPECT_EQ(invoke({"modular", "1"}).code, cli::kDomainError);
}

TEST(Comb, EmptyBraid) {
  const Json j = first_json(invoke({"--n", "3", "comb", ""}));
  EXPECT_EQ(j["coordinates"].dump(), R"(["",""])");
}

TEST(Jones, Trefoil) {
  const Json j = first_json(invoke({"jones", "1 1 1"}));
  EXPECT_EQ(j["writhe"], 3);
  EXPECT_EQ(j["components"], 1);
  EXPECT_TRUE(j.contains("jones_q"));
}

TEST(Tl, TraceIsBracket) {
  const Json j = first_json(invoke({"tl", "1"}));
  EXPECT_EQ(j["trace"].dump(), R"({"variable":"A","3":-1})");
}

TEST(Errors, ExitCodes) {
  EXPECT_EQ(invoke({"wp", "1 x"}).code, cli::kParseError);
  EXPECT_EQ(invoke({"wp", "n=2; 2"}).code, cli::kParseError);
  EXPECT_EQ(invoke({"bogus"}).code, cli::kParseError);
  EXPECT_EQ(invoke({"--budget", "0", "compare", "dehornoy", "1 2", "2 1"}).code, cli::kBudgetExceeded);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Fuzz, ExitCodes) {
  Outcome o = invoke({"fuzz", "markov", "--trials", "0"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(first_json(o)["violations"], 0);
  o = invoke({"fuzz", "order", "--trials", "40", "--seed", "3"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(first_json(o)["trials"], 40);
}

TEST(Determinism, RepeatRunsAreByteIdentical) {
  const Outcome a = invoke({"fuzz", "markov", "--trials", "30", "--seed", "9"});
  const Outcome b = invoke({"fuzz", "markov", "--trials", "30", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
  const Outcome c = invoke({"fuzz", "order", "--trials", "30", "--seed", "9"});
  const Outcome d = invoke({"fuzz", "order", "--trials", "30", "--seed", "9"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Batch, PreservesOrderAndReportsLines) {
  std::string body = "# header comment\n\n";
  for (int k = 1; k <= 40; ++k) {
    body += "b" + std::to_string(k) + ": ";
    for (int r = 0; r < k % 7; ++r) body += "1 2 ";
    body += "\n";
  }
  body += "bad: 1 q\n";
  const std::string path = temp_file("braid_batch_order.txt", body);
  const Outcome o = invoke({"wp", "--file", path});
  const auto rows = json_lines(o.out);
  ASSERT_EQ(rows.size(), 41U);
  for (int k = 1; k <= 40; ++k) {
    EXPECT_EQ(rows[k - 1]["label"], "b" + std::to_string(k));
    EXPECT_EQ(rows[k - 1]["line"], k + 2);
    EXPECT_EQ(rows[k - 1]["degree"], 2 * (k % 7));
  }
  EXPECT_EQ(rows[40]["kind"], "parse");
  EXPECT_EQ(rows[40]["line"], 43);
  EXPECT_EQ(o.code, cli::kParseError);
  const Outcome again = invoke({"wp", "--file", path});
  EXPECT_EQ(again.out, o.out);
  std::remove(path.c_str());
}

TEST(Batch, CompareLines) {
  const std::string path = temp_file("braid_batch_compare.txt", "x: | 1 1\n1 1 | \n");
  const auto rows = json_lines(invoke({"compare", "pure", "--file", path}).out);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0]["result"], "LT");
  EXPECT_EQ(rows[0]["label"], "x");
  EXPECT_EQ(rows[1]["result"], "GT");
  std::remove(path.c_str());
}
