#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "report_json.hpp"

using namespace autrel;
using autrel::report::json;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(AUTREL_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(AUTREL_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST(Cli, RelationsElementary) {
  CliRun r = run("relations --map " + quote("x1+x2^2; x2"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("R: z1 - z2^2"), std::string::npos) << r.out;
}

TEST(Cli, Decompose2Identity) {
  CliRun r = run("decompose2 --map " + quote("x1; x2"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("(empty)"), std::string::npos) << r.out;
}

TEST(Cli, Classify3T5) {
  CliRun r = run("classify3 --rel " + quote("x3^2+5*x2^3") + " --weights 1,2,3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("tag: T5"), std::string::npos) << r.out;
}

TEST(Cli, DomainOutcomesExitOne) {
  EXPECT_EQ(run("classify3 --rel " + quote("x3^2+x1^4+x2^3") + " --weights 3,4,6").status, 1);
  EXPECT_EQ(run("classify3 --rel " + quote("x3^2+x1^2-2*x2^2") + " --weights 1,1,1").status, 1);
  EXPECT_EQ(run("decompose2 --map " + quote("x1^2; x2")).status, 1);
}

TEST(Cli, UsageAndIoErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("relations").status, 2);
  EXPECT_EQ(run("relations --map " + quote("x1 +; x2")).status, 2);
  EXPECT_EQ(run("verify --suite nope").status, 2);
  EXPECT_EQ(run("relations --map @/nonexistent/map.txt").status, 3);
}

TEST(Cli, MapFromFile) {
  std::string path = testing::TempDir() + "autrel_cli_map.txt";
  std::ofstream(path) << "x1 + x2^2\nx2\n";
  CliRun r = run("relations --map @" + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("R: z1 - z2^2"), std::string::npos);
}

TEST(Cli, ComposeAndInvert) {
  CliRun c = run("compose --word " + quote("E 1 x2^2; T 1 2"));
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("map: (x2, x1 + x2^2)"), std::string::npos) << c.out;
  CliRun i = run("invert --word " + quote("E 1 x2^2; T 1 2"));
  EXPECT_EQ(i.status, 0);
  EXPECT_NE(i.out.find("E 1 -x2^2"), std::string::npos) << i.out;
}

TEST(CliJson, RelationsReparse) {
  CliRun r = run("relations --json --map " + quote(test::kNagata));
  ASSERT_EQ(r.status, 0);
  RelationReport rep = report::relation_report_from_json(json::parse(r.out));
  ASSERT_TRUE(rep.R);
  EXPECT_EQ(*rep.R, test::P("x2^2 + x1*x3", 3));
  json j = json::parse(r.out);
  j.erase("map");
  EXPECT_EQ(report::to_json(rep), j);
}

TEST(CliJson, EverySubcommandReparses) {
  CliRun d = run("decompose2 --json --map " + quote("x1+x2^2; x2 + (x1+x2^2)^3"));
  ASSERT_EQ(d.status, 0);
  Decomposition dec = report::decomposition_from_json(json::parse(d.out));
  EXPECT_EQ(expand(dec.word), test::M("x1+x2^2; x2 + (x1+x2^2)^3"));

  CliRun c = run("classify3 --json --rel " + quote("x3^2+5*x2^3") + " --weights 1,2,3");
  ASSERT_EQ(c.status, 0);
  json cj = json::parse(c.out);
  ClassifyOutcome o = report::classify_outcome_from_json(cj);
  EXPECT_EQ(o.type.tag, RelationTag::T5);
  auto nf = report::normal_form_from_json(cj);
  ASSERT_TRUE(nf);
  cj.erase("R");
  cj.erase("d");
  EXPECT_EQ(report::to_json(o, nf), cj);

  CliRun l = run("lnd-witness --json --word " + quote("E 1 x2^2"));
  ASSERT_EQ(l.status, 0);
  LndWitness w = report::lnd_witness_from_json(json::parse(l.out));
  EXPECT_EQ(w.index, 1u);
  EXPECT_EQ(w.verdict.kind, NilpotenceVerdict::Kind::LocallyNilpotent);

  CliRun v = run("verify --json --suite jvdk-roundtrip --seed 4 --count 5");
  ASSERT_EQ(v.status, 0);
  SuiteResult s = report::suite_result_from_json(json::parse(v.out));
  EXPECT_EQ(s.cases, 5u);
  EXPECT_EQ(report::to_json(s), json::parse(v.out));
}

TEST(CliGolden, ByteIdentical) {
  EXPECT_EQ(run("relations --map " + quote(test::kNagata)).out, golden("relations_nagata.txt"));
  EXPECT_EQ(run("decompose2 --json --map " + quote("x1+x2^2; x2 + (x1+x2^2)^3")).out,
            golden("decompose2_stacked.json"));
  EXPECT_EQ(run("classify3 --json --rel " + quote("x3^2+5*x2^3") + " --weights 1,2,3").out,
            golden("classify3_t5.json"));
  EXPECT_EQ(run("verify --json --suite classify-soundness --seed 3 --count 26").out, golden("verify_classify.json"));
  EXPECT_EQ(run("lnd-witness --word " + quote("E 1 x2^2")).out, golden("lnd_elementary.txt"));
}
