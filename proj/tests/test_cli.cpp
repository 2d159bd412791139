#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "inalg/cli.hpp"
#include "inalg/io.hpp"
#include "inalg/problem.hpp"

using namespace inalg;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(INALG_TEST_DATA) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

cli::Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return cli::run(args, in);
}

}  // namespace

TEST(Problem, ParsesBlocksWeightsAndParameters) {
  auto p = parse_problem(
      "# comment\nring x, y, z\norder lex\nweight a 3,2,1\nweight b 1,1,1\n"
      "ideal\n  x*y - z,   # trailing comment\n  x^2 - y,\nend\ncap 5\ndmax 7\nfiber -1/2\n");
  EXPECT_EQ(p.ring->nvars(), 3u);
  EXPECT_EQ(*p.order, OrderSpec::lex(3));
  EXPECT_EQ(*p.weight_a, (WeightVector{3, 2, 1}));
  EXPECT_EQ(*p.weight_b, WeightVector::ones(3));
  ASSERT_EQ(p.gens.size(), 2u);
  EXPECT_EQ(to_string(p.gens[0]), "x*y - z");  // canonical sort
  EXPECT_EQ(*p.cap, 5);
  EXPECT_EQ(*p.dmax, 7);
  EXPECT_EQ(*p.fiber, Rational(-1, 2));
}

TEST(Problem, InlineBlockAndPairs) {
  auto p = parse_problem("ring x, y\npairs x^2 > y, y > x\n");
  EXPECT_EQ(p.kind, BlockKind::Pairs);
  EXPECT_EQ(p.pairs.size(), 2u);
  EXPECT_EQ(p.order_or_default(), OrderSpec::revlex(2));
}

TEST(Problem, ErrorsCarryLineAndColumn) {
  auto expect_at = [](const std::string& text, std::size_t line, std::size_t col) {
    try {
      parse_problem(text);
      ADD_FAILURE() << "no error for: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_EQ(e.column(), col) << e.what();
    }
  };
  expect_at("ring x, y\nideal\n  x + q\nend\n", 3, 7);
  expect_at("ring x, y\nideal x, y\nideal x\n", 3, 1);
  expect_at("ring x, y\nweight 1,2,3\nideal x\n", 2, 8);
  expect_at("ring x, x\nideal x\n", 1, 9);
  expect_at("ring x, y\npairs x > w\n", 2, 11);
  expect_at("ring x, y\nfrobnicate\nideal x\n", 2, 1);
  expect_at("ideal x\n", 1, 1);
}

TEST(Cli, GroebnerBasisReport) {
  auto o = run({"gb", std::string(INALG_TEST_DATA) + "/twisted_cubic.txt"});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.out,
            "# reduced Groebner basis, 4 elements\n"
            "ring x, y, z\norder lex\nideal\n  y^3 - z^2\n  x*z - y^2\n  x*y - z\n  x^2 - y\nend\n");
}

TEST(Cli, HilbertOfNonFinitelyGeneratedAlgebra) {
  auto o = run({"hilbert", "-", "--dmax", "5"}, data("nofinsagbi.txt"));
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_NE(o.out.find("function: 1,1,2,3,4,5\n"), std::string::npos) << o.out;
}

TEST(Cli, WeightCommand) {
  auto empty = run({"weight", "-"}, data("empty_pairs.txt"));
  EXPECT_EQ(empty.exit_code, 0);
  EXPECT_EQ(empty.out, "1 1 1\n");
  auto bad = run({"weight", "-"}, data("contradiction.txt"));
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.out, "infeasible\ncertificate: 1 1\n");
  auto tab = run({"weight", "-", "--tableau"}, data("twisted_cubic.txt"));
  EXPECT_EQ(tab.exit_code, 0);
  EXPECT_NE(tab.out.find("x^2 > y:  2*w_x - w_y >= 1"), std::string::npos) << tab.out;
}

TEST(Cli, SagbiReportsCertificate) {
  auto o = run({"sagbi", "-"}, data("worse_algebra.txt"));
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_NE(o.out.find("sagbi test: passed"), std::string::npos);
  EXPECT_NE(o.out.find("relation 1: "), std::string::npos);
  EXPECT_NE(o.out.find("remainder: 0"), std::string::npos);
  auto capped = run({"sagbi", "-", "--cap", "4"}, data("nofinsagbi.txt"));
  EXPECT_NE(capped.out.find("status: truncated at degree 4"), std::string::npos) << capped.out;
  EXPECT_NE(capped.out.find("# initial monomials: x, x*y, x*y^2, x*y^3"), std::string::npos);
}

TEST(Cli, FamilyFiberAndFreeness) {
  auto o = run({"family", "-", "--weight", "1,1", "--fiber", "2"},
               "ring x, y\nideal x^2 - y\n");
  EXPECT_EQ(o.exit_code, 0) << o.err;
  EXPECT_NE(o.out.find("  x^2 - y*t\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("freeness: free through degree 4"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("# fiber t = 2"), std::string::npos);
  EXPECT_NE(o.out.find("  x^2 - 2*y\n"), std::string::npos) << o.out;
}

TEST(Cli, DimAndBetti) {
  auto d = run({"dim", "-"}, data("graded.txt"));
  EXPECT_EQ(d.out, "dimension: 1\n");
  auto b = run({"betti", "-", "--jmax", "4"}, "ring x, y\nideal x, y\n");
  EXPECT_EQ(b.exit_code, 0);
  EXPECT_NE(b.out.find("projdim: 2\nreg: 0\n"), std::string::npos) << b.out;
}

TEST(Cli, InputErrorsExitWithTwo) {
  auto o = run({"gb", "-"}, "ring x, y\nideal\n  x + w\nend\n");
  EXPECT_EQ(o.exit_code, 2);
  EXPECT_EQ(o.err, "error: line 3, column 7: unknown variable 'w'\n");
  EXPECT_EQ(run({"frob", "-"}, "").exit_code, 2);
  EXPECT_EQ(run({"gb", "-", "--order", "lex(x)"}, "ring x, y\nideal x\n").exit_code, 2);
  EXPECT_EQ(run({"sagbi", "-"}, "ring x, y\nideal x\n").exit_code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).exit_code, 2);
  EXPECT_EQ(run({"gb", "/definitely/missing"}).exit_code, 2);
}

TEST(Cli, OrderFlagOverridesFile) {
  auto o = run({"ini", "-", "--order", "revlex"}, data("twisted_cubic.txt"));
  EXPECT_NE(o.out.find("order revlex\n"), std::string::npos) << o.out;
}

TEST(Cli, VerifyScenario) {
  auto o = run({"verify", "leading"});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  EXPECT_NE(o.out.find("PASS leading: lex leading monomial"), std::string::npos);
}

TEST(Cli, ReportsReparseAsProblems) {
  for (const auto& cmd : {"gb", "ini"}) {
    auto o = run({cmd, "-"}, data("twisted_cubic.txt"));
    auto body = o.out.substr(o.out.find("ring"));
    auto p = parse_problem(body);
    EXPECT_FALSE(p.gens.empty());
  }
}
