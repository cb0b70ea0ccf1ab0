#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "presentation.hpp"
#include "amalgam/errors.hpp"
#include "testing.hpp"

namespace amalgam::cli {
namespace {

const std::string kData = AMALGAM_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "amalgam");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string line(const Result& r) {
  std::string s = r.out;
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

const std::string two_cover = kData + "/two-cover.toml";
const std::string a5 = kData + "/a5.toml";

TEST(Cli, ReduceAndIdentity) {
  const auto r = call({"reduce", "abBA"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(line(r), "1");
  EXPECT_EQ(line(call({"reduce", "a^3 B b A"})), "aa");
  EXPECT_EQ(call({"reduce", "a?"}).code, kExitError);
}

TEST(Cli, SubgroupQueries) {
  EXPECT_EQ(line(call({"member", "ab", "-p", two_cover})), "false");
  EXPECT_EQ(line(call({"member", "aab", "-p", two_cover})), "true");
  EXPECT_EQ(line(call({"index", "-p", two_cover})), "2");
  EXPECT_EQ(line(call({"index", "-p", a5})), "60");
  EXPECT_EQ(line(call({"index", "-p", kData + "/cyclic-b.toml"})), "infinite");
  EXPECT_EQ(json_of(call({"basis", "-p", a5, "--json"}))["size"], 61);
}

TEST(Cli, DerivedAndFox) {
  EXPECT_EQ(line(call({"in-derived", "abAB", "--lambda", "1"})), "true");
  EXPECT_EQ(line(call({"in-derived", "abAB", "--lambda", "2"})), "false");
  EXPECT_EQ(line(call({"fox", "ab", "--gen", "1"})), "+1*1");
  EXPECT_EQ(line(call({"fox", "A", "--gen", "1"})), "-1*A");
  EXPECT_EQ(call({"fox", "A", "--gen", "3"}).code, kExitError);
  EXPECT_EQ(call({"in-derived", "a", "--lambda", "9"}).code, kExitBudget);
}

TEST(Cli, DoubleCommands) {
  EXPECT_EQ(line(call({"normalize", "A: a | Abar: b | Abar: a", "-p", kData + "/cyclic-b.toml"})), "A: ab | Abar: a");
  EXPECT_EQ(line(call({"deq", "A: b", "Abar: b", "-p", kData + "/cyclic-b.toml"})), "true");
  EXPECT_EQ(line(call({"retract", "A: a | Abar: A", "-p", kData + "/cyclic-b.toml"})), "1");
  EXPECT_EQ(line(call({"kernel-gen", "a", "-p", kData + "/cyclic-b.toml"})), "A: a | Abar: A");
  const auto pass = call({"ck-check", "-p", two_cover, "--sample", "a", "--sample", "b", "--sample", "ab"});
  EXPECT_EQ(pass.code, kExitOk);
  EXPECT_EQ(pass.out.rfind("pass", 0), 0u);
  const auto fail = json_of(call({"ck-check", "-p", kData + "/cyclic-a.toml", "--sample", "b", "--json"}));
  EXPECT_FALSE(fail["pass"]);
  EXPECT_EQ(fail["failures"].size(), 1u);
  EXPECT_EQ(line(call({"abelianize", "-p", two_cover})), "Z^2 + Z/2");
}

TEST(Cli, SwappedBar) {
  EXPECT_EQ(line(call({"retract", "Abar: a", "-p", kData + "/swap.toml"})), "b");
  EXPECT_EQ(line(call({"deq", "A: ab", "Abar: ba", "-p", kData + "/swap.toml"})), "true");
}

TEST(Cli, Witness) {
  const auto r = call({"witness", "A: a", "-p", two_cover, "--json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = json_of(r);
  EXPECT_EQ(j["type"], "solvable_quotient");
  EXPECT_EQ(j["lambda"], 1);
  EXPECT_EQ(j["budget"]["lambda_max"], 3);

  const auto cert = call({"witness", "Abar: AAA | A: a | Abar: a | A: a", "-p", two_cover, "--json", "--no-default-catalog"});
  ASSERT_EQ(cert.code, kExitOk);
  const auto cj = json_of(cert);
  EXPECT_EQ(cj["type"], "g_lambda_certificate");
  EXPECT_EQ(cj["syllable_proofs"].size(), 4u);
  EXPECT_EQ(cj["syllable_proofs"][0]["method"], "finite-quotient");

  const auto exhausted = call({"witness", "Abar: a | A: ABa | Abar: A | A: b", "-p", a5, "--json", "--catalog",
                               kData + "/small-catalog.toml", "--no-default-catalog"});
  EXPECT_EQ(exhausted.code, kExitBudget);
  EXPECT_EQ(json_of(exhausted)["type"], "exhausted");
  EXPECT_EQ(json_of(exhausted)["budget"]["catalog"].size(), 2u);

  EXPECT_EQ(call({"witness", "1", "-p", two_cover}).code, kExitError);
}

TEST(Cli, WitnessFromCatalogFile) {
  // C = <aa, bb, ab>; only Z3 and S3 in the catalog.
  const auto r = call({"witness", "A: a | Abar: A | A: b | Abar: AB | A: A | Abar: a", "-p", kData + "/even.toml", "--json",
                       "--catalog", kData + "/small-catalog.toml", "--no-default-catalog"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json_of(r);
  EXPECT_NE(j["type"], "exhausted");
}

TEST(Cli, NegativeDemo) {
  const auto r = call({"negative-demo", "--order-bound", "6", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["witness"], "exhausted");
  EXPECT_GT(j["homs_checked"].get<int>(), 0);
  EXPECT_TRUE(j["d_killed_by_all"]);
  EXPECT_TRUE(j["mechanism_holds"]);
  EXPECT_EQ(j["index"], 60);
  const auto again = call({"negative-demo", "--order-bound", "6", "--json"});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, EnvironmentOverrides) {
  ::setenv("AMALGAM_LAMBDA_MAX", "2", 1);
  const auto j = json_of(call({"witness", "A: a", "-p", two_cover, "--json"}));
  EXPECT_EQ(j["budget"]["lambda_max"], 2);
  const auto flag = json_of(call({"witness", "A: a", "-p", two_cover, "--json", "--lambda-max", "1"}));
  EXPECT_EQ(flag["budget"]["lambda_max"], 1);
  ::setenv("AMALGAM_LAMBDA_MAX", "zero", 1);
  EXPECT_EQ(call({"witness", "A: a", "-p", two_cover}).code, kExitError);
  ::unsetenv("AMALGAM_LAMBDA_MAX");
  ::setenv("AMALGAM_SYLLABLE_BOUND", "2", 1);
  EXPECT_EQ(call({"normalize", "A: a | Abar: a | A: a | Abar: a", "-p", kData + "/cyclic-b.toml"}).code, kExitBudget);
  ::unsetenv("AMALGAM_SYLLABLE_BOUND");
}

TEST(Cli, Errors) {
  EXPECT_EQ(call({}).code, kExitError);
  EXPECT_EQ(call({"frobnicate"}).code, kExitError);
  EXPECT_EQ(call({"member", "a"}).code, kExitError);
  EXPECT_EQ(call({"member", "a", "-p", "/nonexistent.toml"}).code, kExitError);
  const auto j = call({"member", "a", "-p", "/nonexistent.toml", "--json"});
  EXPECT_EQ(json_of(j)["error"], "parse");
  EXPECT_FALSE(j.err.empty());
  EXPECT_EQ(call({"negative-demo", "-p", two_cover}).code, kExitError);
  EXPECT_EQ(call({"negative-demo", "-p", kData + "/parity-quotient.toml"}).code, kExitError);
}

// Printed words and elements parse back to equal values.
TEST(CliProperty, RoundTrip) {
  testing::Rng rng(71);
  const Alphabet f2(2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto raw = testing::random_syllables(rng, f2, rng.uniform(0, 5), 4);
    const std::string text = to_string(raw);
    const auto normal = call({"normalize", text, "-p", two_cover});
    ASSERT_EQ(normal.code, kExitOk) << normal.err;
    EXPECT_EQ(line(call({"deq", line(normal), text, "-p", two_cover})), "true");
    EXPECT_EQ(line(call({"normalize", line(normal), "-p", two_cover})), line(normal));
    const Word w = testing::random_word(rng, f2, 0, 8);
    EXPECT_EQ(line(call({"reduce", line(call({"reduce", to_string(w), "--rank", "2"})), "--rank", "2"})), to_string(w));
  }
}

TEST(Presentation, Parsing) {
  std::istringstream good("rank = 2  # two generators\nsubgroup = [\n  \"aa\",\n  \"b\"\n]\nbar = [\"a\", \"b\"]\n");
  const Presentation p = parse_presentation(good);
  EXPECT_EQ(p.rank, 2);
  EXPECT_EQ(p.subgroup->size(), 2u);

  std::istringstream both("rank = 2\nsubgroup = [\"a\"]\nperm.a = [2,1]\nperm.b = [1,2]\n");
  EXPECT_THROW(parse_presentation(both), ParseError);
  std::istringstream neither("rank = 2\n");
  EXPECT_THROW(parse_presentation(neither), ParseError);
  std::istringstream bad_bar("rank = 2\nsubgroup = [\"a\"]\nbar = [\"a\"]\n");
  EXPECT_THROW(parse_presentation(bad_bar), ParseError);
  std::istringstream bad_word("rank = 2\nsubgroup = [\"ac\"]\n");
  EXPECT_THROW(parse_presentation(bad_word), ParseError);
  std::istringstream unknown("rank = 2\nsubgroup = [\"a\"]\nfoo = 1\n");
  EXPECT_THROW(parse_presentation(unknown), ParseError);
}

TEST(Presentation, QuotientDegree) {
  std::istringstream points("degree = 5\nperm.a = [2,3,4,5,1]\nperm.b = [2,3,1,4,5]\n");
  EXPECT_EQ(parse_presentation(points).quotient->degree, 5);
  std::istringstream order("degree = 60\nperm.a = [2,3,4,5,1]\nperm.b = [2,3,1,4,5]\n");
  EXPECT_EQ(parse_presentation(order).subgroup_graph().index(), 60u);
  std::istringstream wrong("degree = 7\nperm.a = [2,3,4,5,1]\nperm.b = [2,3,1,4,5]\n");
  EXPECT_THROW(parse_presentation(wrong), ParseError);
  std::istringstream mixed("perm.a = [2,1]\nperm.b = [2,3,1]\n");
  EXPECT_THROW(parse_presentation(mixed), ParseError);
  std::istringstream intransitive("perm.a = [2,1,3]\nperm.b = [2,1,3]\n");
  EXPECT_THROW(parse_presentation(intransitive), Error);
}

TEST(Presentation, Catalog) {
  const auto catalog = load_catalog(kData + "/small-catalog.toml");
  ASSERT_EQ(catalog.size(), 2u);
  EXPECT_EQ(catalog[0].name(), "Z3");
  EXPECT_EQ(catalog[1].order(), 6u);
  std::istringstream a5text("[A5]\nperm.a = [2,3,4,5,1]\nperm.b = [2,3,1,4,5]\n");
  EXPECT_THROW(parse_catalog(a5text), DomainError);
  std::istringstream loose("perm.a = [2,1]\n");
  EXPECT_THROW(parse_catalog(loose), ParseError);
}

}  // namespace
}  // namespace amalgam::cli
