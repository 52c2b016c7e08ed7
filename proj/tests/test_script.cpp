#include <doctest.h>

#include <sstream>

#include "birat/commands.hpp"
#include "birat/ideal_ops.hpp"
#include "helpers.hpp"

using namespace birat;
using namespace birat::testing;

TEST_CASE("a full session parses into validated objects") {
  SessionScript s = parse_script(
      "ring R = QQ[x, y, z];\n"
      "ring C = QQ[a, b, c] / (a*c - b^2);\n"
      "ring L = GF(7)[u, v];\n"
      "map F : R -> R = [y*z, x*z, x*y];\n"
      "map G : R -> C = [x^2, x*y, y^2];\n"
      "is-birational F;\n"
      "jacobian-dual F;\n"
      "is-same F F;\n"
      "bench-gabber 3 2;\n");

  CHECK(s.ring_names == std::vector<std::string>{"R", "C", "L"});
  CHECK(s.map_names == std::vector<std::string>{"F", "G"});
  CHECK(s.ring("C").ideal().size() == 1);
  CHECK(s.ring("L").ring()->field().characteristic() == 7);
  CHECK(s.map("F").degree() == 2);
  REQUIRE(s.commands.size() == 4);
  CHECK(s.commands[0].name == "is-birational");
  CHECK(s.commands[1].name == "jacobian-dual");
  CHECK(s.commands[2].args == std::vector<std::string>{"F", "F"});
  CHECK(s.commands[3].args == std::vector<std::string>{"3", "2"});
}

TEST_CASE("declarations are checked while parsing") {
  CHECK_THROWS_AS(parse_script("ring R = ZZ[x];"), ParseError);
  CHECK_THROWS_AS(parse_script("ring R = GF(6)[x];"), ParseError);
  CHECK_THROWS_AS(parse_script("ring R = QQ[x]; ring R = QQ[y];"), ParseError);
  CHECK_THROWS_AS(parse_script("map F : R -> R = [x];"), ParseError);
  CHECK_THROWS_AS(parse_script("ring R = QQ[x, y]; frobnicate R;"), ParseError);
  CHECK_THROWS_AS(parse_script("ring R = QQ[x, y]; is-birational F;"), ParseError);
  CHECK_THROWS_AS(parse_script("ring R = QQ[x, y]; is-same;"), ParseError);

  // positions surface in the message and fields
  try {
    parse_script("ring R = QQ[x, y];\nmap F : R -> S = [x, y];\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("not declared") != std::string::npos);
  }
}

TEST_CASE("commands run against the parsed session") {
  SessionScript s = parse_script(
      "ring R = QQ[x, y, z];\n"
      "map F : R -> R = [x^2*y, x^2*z, x*y*z];\n"
      "base-locus F;\n");
  CommandOptions o;
  CommandReport rep = run_command(s, s.commands[0], o);
  CHECK(rep.exit_code == 0);
  CHECK(rep.out == "ideal(y*z, x*z, x*y)\n");
}

TEST_CASE("boolean commands answer through the exit code") {
  SessionScript s = parse_script(
      "ring P2 = QQ[x, y, z];\n"
      "ring P1 = QQ[a, b];\n"
      "map pr : P2 -> P1 = [x, y];\n"
      "is-birational pr;\n"
      "inverse pr;\n");
  CommandOptions o;

  CommandReport yes = run_command(s, s.commands[0], o);
  CHECK(yes.exit_code == 2);
  CHECK(yes.out == "false\n");

  CommandReport inv = run_command(s, s.commands[1], o);
  CHECK(inv.exit_code == 2);
  CHECK(inv.out.empty());
  CHECK(!inv.err.empty());
}

TEST_CASE("run_script aggregates the worst exit code") {
  SessionScript s = parse_script(
      "ring R = QQ[x, y, z];\n"
      "map F : R -> R = [y*z, x*z, x*y];\n"
      "is-dominant F;\n"
      "is-embedding F;\n");
  CommandOptions o;
  CommandReport rep = run_script(s, o);
  CHECK(rep.exit_code == 2);  // dominant yes, embedding no
  CHECK(rep.out == "true\nfalse\n");
}

TEST_CASE("verbose mode traces the pipeline") {
  SessionScript s = parse_script(
      "ring R = QQ[x, y, z];\n"
      "map F : R -> R = [y*z, x*z, x*y];\n"
      "is-birational F;\n");
  CommandOptions o;
  o.verbose = true;
  std::ostringstream trace;
  o.trace_stream = &trace;
  CommandReport rep = run_command(s, s.commands[0], o);
  CHECK(rep.exit_code == 0);
  CHECK(!trace.str().empty());
}

TEST_CASE("rees command prints the relation generators") {
  SessionScript s = parse_script(
      "ring S2 = QQ[s, t];\n"
      "ring A2 = QQ[a, b, c];\n"
      "map v : S2 -> A2 = [s^2, s*t, t^2];\n"
      "rees v;\n");
  CommandOptions o;
  CommandReport rep = run_command(s, s.commands[0], o);
  CHECK(rep.exit_code == 0);
  CHECK(rep.out.find("ideal(") != std::string::npos);
  CHECK(rep.out.find("b^2") != std::string::npos);
}
