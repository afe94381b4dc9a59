#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "modlie/cli.hpp"
#include "modlie_oracles.hpp"
#include "support.hpp"

using namespace modlie;
using namespace modlie::testing;

namespace {

const char* const kSl2F5 =
    "# sl2 over F_5\n"
    "algebra sl2\n"
    "field F 5\n"
    "basis e f h\n"
    "bracket e f = h\n"
    "bracket h e = 2*e\n"
    "bracket h f = -2*f\n";

const char* const kFsl2 =
    "algebra fsl2\n"
    "field F 2\n"
    "basis e f h\n"
    "bracket e f = h\n"
    "bracket h e = e\n"
    "bracket h f = f\n";

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const CliEnvironment env{std::string(kEmbeddedOracles)};
  const int code = run_cli(args, in, out, err, env);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("modlie_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

void expect_parse_error(const std::string& text, std::size_t line) {
  try {
    parse_algebra_file(text);
    FAIL() << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError) << text;
    EXPECT_EQ(e.witness(), std::vector<std::size_t>{line}) << text;
  }
}

}  // namespace

TEST(AlgebraFile, ParsesSl2) {
  const AlgebraFile af = parse_algebra_file(kSl2F5);
  EXPECT_EQ(af.name, "sl2");
  EXPECT_EQ(af.algebra.dim(), 3u);
  EXPECT_EQ(af.algebra, builtin_sl2(Field::prime(5)).algebra);
  EXPECT_EQ(parse_algebra_file(kFsl2).algebra, builtin_fsl2(Field::prime(2)));
}

TEST(AlgebraFile, RationalCoefficientsAndDefaults) {
  const AlgebraFile af = parse_algebra_file("field Q\nbasis a b\n\nbracket a b = 1/2*a - b + 3/4 * b\n");
  EXPECT_EQ(af.name, "unnamed");
  const Field q = Field::rationals();
  EXPECT_EQ(af.algebra.bracket_basis(0, 1), (Vec{q.parse("1/2"), q.parse("-1/4")}));
  EXPECT_EQ(parse_algebra_file("field F 3\nbasis a b\nbracket a b = 0\n").algebra.dim(), 2u);
}

TEST(AlgebraFile, ParseErrors) {
  expect_parse_error("field F 3\nbasis e f h\nbracket e e = h\n", 3);
  expect_parse_error("field F 3\nbasis e f h\nbracket e f = h\nbracket f e = h\n", 4);
  expect_parse_error("field F 3\nbasis e f h\nbracket e f = -h\nbracket f e = h\n", 4);
  expect_parse_error("field F 4\nbasis a\n", 1);
  expect_parse_error("field R\nbasis a\n", 1);
  expect_parse_error("field F 3\nbasis a a\n", 2);
  expect_parse_error("field F 3\nbasis a b\nbracket a c = a\n", 3);
  expect_parse_error("field F 3\nbasis a b\nbracket a b = 2*c\n", 3);
  expect_parse_error("field F 3\nbasis a b\nbracket a b = a +\n", 3);
  expect_parse_error("field F 3\nbasis a b\nbracket a b a\n", 3);
  expect_parse_error("field F 3\nbasis a b\nbrackets a b = a\n", 3);
  expect_parse_error("bracket a b = a\nfield F 3\nbasis a b\n", 1);
  expect_parse_error("field F 3\n", 1);
  expect_parse_error("basis a\n", 1);
  expect_parse_error("field F 3\nbasis a b\nbracket a b = x*a\n", 3);
}

TEST(AlgebraFile, JacobiViolationIsNotAParseError) {
  try {
    parse_algebra_file("field Q\nbasis a b c\nbracket a b = a\nbracket b c = b\nbracket a c = c\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::JacobiViolation);
  }
}

TEST(AlgebraFile, RoundTripsCatalog) {
  for (const Field& f : sample_fields()) {
    std::vector<LieAlgebra> algebras = catalog(f);
    algebras.push_back(builtin_gl(f, 3).algebra);
    algebras.push_back(builtin_sl(f, 3).algebra);
    for (const auto& L : algebras) {
      const AlgebraFile af = parse_algebra_file(emit_algebra_file(L, "x"));
      EXPECT_EQ(af.algebra, L);
      EXPECT_EQ(af.algebra.structure_constants(), L.structure_constants());
      EXPECT_EQ(af.algebra.labels(), L.labels());
    }
  }
}

TEST(AlgebraFile, RoundTripsRandomBases) {
  std::mt19937_64 rng(71);
  for (const Field& f : sample_fields()) {
    for (const auto& L : catalog(f)) {
      const LieAlgebra R = random_rebase(L, rng);
      EXPECT_EQ(parse_algebra_file(emit_algebra_file(R, "r")).algebra, R);
    }
  }
}

TEST(AlgebraFile, FormatsCombinations) {
  const LieAlgebra L = builtin_sl2(Field::prime(5)).algebra;
  const Field& f = L.field();
  EXPECT_EQ(format_combination(L, L.zero()), "0");
  EXPECT_EQ(format_combination(L, Vec{f.zero(), f.from_int(-2), f.zero()}), "3*f");
  EXPECT_EQ(format_combination(L, Vec{f.from_int(2), f.zero(), f.one()}), "2*e + h");
  const LieAlgebra Q = builtin_sl2(Field::rationals()).algebra;
  const Field& q = Q.field();
  EXPECT_EQ(format_combination(Q, Vec{q.zero(), q.from_int(-2), q.zero()}), "-2*f");
}

TEST(Matrices, ParseMatrixList) {
  const LieAlgebra L = builtin_sl2(Field::prime(3)).algebra;
  const auto bare = parse_matrix_list("[[0,1],[0,0]]\n[[0,0],[1,0]]\n[[1,0],[0,-1]]\n", L);
  ASSERT_EQ(bare.size(), 3u);
  EXPECT_EQ(bare[2], diagonal(L.field(), {1, -1}));
  const auto labelled = parse_matrix_list("h = [[1,0],[0,2]]\ne = [[0,1],[0,0]]\nf = [[0,0],[1,0]]\n", L);
  EXPECT_EQ(labelled, bare);
  EXPECT_THROW(parse_matrix_list("q = [[1]]\n", L), Error);
  EXPECT_THROW(parse_matrix("[[1,2],[3]]", L.field()), Error);
}

TEST(Cli, BuiltinThenCheck) {
  const CliRun b = run({"builtin", "fsl2", "--p", "2", "--emit"});
  ASSERT_EQ(b.code, 0);
  const CliRun c = run({"check", "-"}, b.out);
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("ok: fsl2"), std::string::npos);
  EXPECT_EQ(parse_algebra_file(b.out).algebra, builtin_fsl2(Field::prime(2)));
}

TEST(Cli, BuiltinWarningsAndErrors) {
  const CliRun sl2 = run({"builtin", "sl2", "--p", "2"});
  EXPECT_EQ(sl2.code, 0);
  EXPECT_NE(sl2.err.find("warning"), std::string::npos);
  EXPECT_EQ(run({"builtin", "fsl2", "--p", "3"}).code, 2);
  EXPECT_EQ(run({"builtin", "so3"}).code, 2);
  EXPECT_EQ(run({"builtin", "gl", "--p", "4"}).code, 2);
  const CliRun gl = run({"builtin", "gl", "--n", "3"});
  EXPECT_EQ(parse_algebra_file(gl.out).algebra, builtin_gl(Field::rationals(), 3).algebra);
}

TEST(Cli, AnalyzeFsl2Json) {
  const CliRun r = run({"analyze", "-", "--json"}, kFsl2);
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["solvable"], false);
  EXPECT_EQ(j["simple"], true);
  EXPECT_EQ(j["tool"], "modlie");
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["input_digest"], fnv1a_digest(kFsl2));
  EXPECT_EQ(j["killing_nondegenerate"], false);
  EXPECT_EQ(j["derived_series_dims"], json::array({3, 3}));
  EXPECT_EQ(j["ideals"].size(), 2u);
}

TEST(Cli, AnalyzeText) {
  const CliRun r = run({"analyze", "-"}, kSl2F5);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("simple: yes"), std::string::npos);
  EXPECT_NE(r.out.find("radical: 0"), std::string::npos);
  const CliRun q = run({"analyze", "-", "--json"}, "field Q\nbasis h x\nbracket h x = x\n");
  ASSERT_EQ(q.code, 0);
  EXPECT_EQ(json::parse(q.out)["radical"]["dim"], 2);
}

TEST(Cli, AnalyzeCapExceeded) {
  const CliRun r = run({"analyze", "-", "--cap", "5"}, emit_algebra_file(builtin_gl(Field::prime(3), 2).algebra, "gl"));
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, PmapCertificates) {
  const CliRun fsl = run({"pmap", "-"}, kFsl2);
  EXPECT_EQ(fsl.code, 1);
  EXPECT_NE(fsl.out.find("certificate: e"), std::string::npos);
  const CliRun js = run({"pmap", "-", "--json"}, kFsl2);
  EXPECT_EQ(js.code, 1);
  EXPECT_EQ(json::parse(js.out)["certificate"]["basis_element"], "e");
  const CliRun sl = run({"pmap", "-", "--json"}, emit_algebra_file(builtin_sl2(Field::prime(3)).algebra, "sl2"));
  ASSERT_EQ(sl.code, 0);
  const json j = json::parse(sl.out);
  EXPECT_EQ(j["images"]["h"], "h");
  EXPECT_EQ(j["images"]["e"], "0");
  EXPECT_EQ(j["solution_space"]["unique"], true);
  EXPECT_EQ(run({"pmap", "-"}, "field Q\nbasis a\n").code, 2);
}

TEST(Cli, RepCommand) {
  const std::string alg = write_temp("sl2f3.lie", emit_algebra_file(builtin_sl2(Field::prime(3)).algebra, "sl2"));
  const std::string good = write_temp("std.mats", "e = [[0,1],[0,0]]\nf = [[0,0],[1,0]]\nh = [[1,0],[0,-1]]\n");
  const std::string bad = write_temp("bad.mats", "e = [[0,0],[1,0]]\nf = [[0,1],[0,0]]\nh = [[1,0],[0,-1]]\n");
  const CliRun ok = run({"rep", alg, "--mats", good, "--json"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  const json j = json::parse(ok.out);
  EXPECT_EQ(j["invariant_subspaces"].size(), 2u);
  EXPECT_EQ(j["completely_reducible"], true);
  EXPECT_EQ(run({"rep", alg, "--mats", bad}).code, 1);
  EXPECT_EQ(run({"rep", alg, "--mats", good, "--cap", "2"}).code, 3);
  EXPECT_EQ(run({"rep", alg}).code, 2);
}

TEST(Cli, VerifyPaperPasses) {
  const CliRun r = run({"verify-paper"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  for (const auto& id : scenario_ids()) EXPECT_NE(r.out.find("[PASS] " + id), std::string::npos) << id;
}

TEST(Cli, VerifyPaperJsonSchema) {
  const CliRun r = run({"verify-paper", "--json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  std::vector<std::string> ids;
  for (const auto& c : j["checks"]) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : c.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"citation", "data", "scenario", "status"}));
    ids.push_back(c["scenario"]);
  }
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(ids, scenario_ids());
}

TEST(Cli, VerifyPaperSingleScenario) {
  const CliRun r = run({"verify-paper", "--scenario", "WEYL-5.5", "--json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["scenario"], "WEYL-5.5");
  EXPECT_EQ(run({"verify-paper", "--scenario", "NOPE"}).code, 2);
}

TEST(Cli, VerifyPaperCapSkips) {
  const CliRun r = run({"verify-paper", "--scenario", "WEYL-5.5", "--cap", "10", "--json"});
  EXPECT_EQ(r.code, 3);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["checks"][0]["status"], "skip");
  EXPECT_EQ(j["status"], "skip");
}

TEST(Cli, VerifyPaperOracleMismatchFails) {
  json oracles = json::parse(kEmbeddedOracles);
  oracles["WEYL-5.5"]["invariant_subspaces"] = 8;
  const std::string path = write_temp("oracles.json", oracles.dump());
  const CliRun r = run({"verify-paper", "--scenario", "WEYL-5.5", "--oracles", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("mismatch"), std::string::npos);
  const std::string broken = write_temp("broken.json", "{not json");
  EXPECT_EQ(run({"verify-paper", "--oracles", broken}).code, 2);
}

TEST(Cli, VerifyPaperRegeneratesOracles) {
  const auto path = (std::filesystem::temp_directory_path() / "modlie_test_regen.json").string();
  const CliRun r = run({"verify-paper", "--regen-oracles", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream file(path);
  const json regenerated = json::parse(file);
  EXPECT_EQ(regenerated, json::parse(kEmbeddedOracles));
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  const std::vector<std::vector<std::string>> commands{
      {"analyze", "-", "--json"}, {"pmap", "-", "--json"}, {"verify-paper", "--json"}};
  for (const auto& cmd : commands) {
    const std::string input = cmd[0] == "pmap" ? emit_algebra_file(builtin_heisenberg(Field::prime(3)).algebra, "h")
                                               : std::string(kSl2F5);
    const CliRun a = run(cmd, input);
    const CliRun b = run(cmd, input);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, ExitCodesOnCraftedInputs) {
  struct Case {
    std::vector<std::string> args;
    std::string input;
    int code;
  };
  const std::vector<Case> cases{
      {{"check", "-"}, kSl2F5, 0},
      {{"check", "-"}, kFsl2, 0},
      {{"check", "-"}, "field Q\nbasis a b c\nbracket a b = a\nbracket b c = b\nbracket a c = c\n", 1},
      {{"check", "-"}, "field F 3\nbasis e f h\nbracket e e = h\n", 2},
      {{"check", "-"}, "field F 3\nbasis e f\nbracket e f = e\nbracket f e = e\n", 2},
      {{"check", "-"}, "garbage\n", 2},
      {{"check", "/nonexistent/file"}, "", 2},
      {{"analyze", "-"}, kFsl2, 0},
      {{"pmap", "-"}, kFsl2, 1},
      {{"pmap", "-"}, kSl2F5, 0},
      {{"verify-paper", "--scenario", "LIE-5.1-p3"}, "", 0},
      {{"frobnicate"}, "", 2},
      {{}, "", 2},
      {{"check"}, "", 2},
  };
  for (const auto& c : cases) {
    const CliRun r = run(c.args, c.input);
    EXPECT_EQ(r.code, c.code) << (c.args.empty() ? "" : c.args[0]) << " / " << c.input << "\n" << r.err;
  }
}

TEST(Cli, ReportStatusMatchesExitCode) {
  for (const auto& [input, expected] :
       std::vector<std::pair<std::string, std::string>>{{kFsl2, "fail"}, {kSl2F5, "pass"}}) {
    const CliRun r = run({"pmap", "-", "--json"}, input);
    EXPECT_EQ(json::parse(r.out)["status"], expected);
    EXPECT_EQ(r.code, expected == "pass" ? 0 : 1);
  }
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run({"--version"}).out, std::string(kToolVersion) + "\n");
  EXPECT_EQ(run({"--help"}).code, 0);
}
