#include "spinform/io.hpp"
#include "spinform/verify.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace spinform;

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(SPINFORM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string run_cli_capture(const std::string& args, const std::string& tmp) {
  std::string cmd = std::string(SPINFORM_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
  if (std::system(cmd.c_str()) != 0) return "";
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("rational strings round-trip") {
  for (const char* s : {"0", "7", "-7", "3/4", "-22/7"})
    REQUIRE(rational_to_string(parse_rational(s)) == s);
  REQUIRE(parse_rational("6/4") == Rational(3, 2));
  REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("matrix json round-trips") {
  Mat m(2, 3);
  m.at(0, 0) = Rational(1, 2);
  m.at(1, 2) = Rational(-7, 3);
  REQUIRE(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("machine table format round-trips") {
  for (TableKind kind : {TableKind::Pairs, TableKind::Quadruples}) {
    TableDocument T = emit_table(3, kind);
    REQUIRE(table_from_machine(table_to_machine(T)) == T);
  }
  TableDocument C = emit_table(3, TableKind::Complex);
  REQUIRE(table_from_machine(table_to_machine(C)) == C);
}

TEST_CASE("cli exit codes") {
  REQUIRE(run_cli("build 3 1") == 0);
  REQUIRE(run_cli("build 0 0") == 2);
  REQUIRE(run_cli("bracket 0 1 --epsilon 1") == 0);
  REQUIRE(run_cli("verify --suite bogus") == 2);
  REQUIRE(run_cli("table --kind bogus") == 2);
}

TEST_CASE("cli build dump carries the gammas") {
  std::string tmp = "cli_test_dump.json";
  std::string text = run_cli_capture("build 3 1 --dump -", tmp);
  json doc = json::parse(text);
  REQUIRE(doc["p"] == 3);
  REQUIRE(doc["q"] == 1);
  REQUIRE(doc["gammas"].size() == 4);
  std::remove(tmp.c_str());
}

TEST_CASE("cli machine table parses and matches the published cell values") {
  std::string tmp = "cli_test_table.jsonl";
  std::string text = run_cli_capture("table --max-n 4 --kind pairs --format machine", tmp);
  TableDocument T = table_from_machine(text);
  const TableCell* c = T.find(2, 2);
  REQUIRE(c != nullptr);
  REQUIRE_FALSE(c->absent);
  REQUIRE(c->cell.countsString() == "6,2");
  std::string qtext = run_cli_capture("table --max-n 4 --kind quadruples --format machine", tmp);
  TableDocument Q = table_from_machine(qtext);
  REQUIRE(Q.find(1, 1) != nullptr);
  REQUIRE(Q.find(1, 1)->cell.countsString() == "2,1,0,1");
  std::remove(tmp.c_str());
}

TEST_CASE("threaded table emission agrees with the sequential one") {
  std::string tmp = "cli_test_table2.jsonl";
  std::string seq = run_cli_capture("table --max-n 4 --kind quadruples --format machine", tmp);
  std::string par =
      run_cli_capture("table --max-n 4 --kind quadruples --format machine --threads 4", tmp);
  REQUIRE(seq == par);
  std::remove(tmp.c_str());
}
