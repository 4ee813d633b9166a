#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <regex>

#include "doctest.h"
#include "properties.hpp"
#include "tticad/cli.hpp"

using namespace tticad;

namespace {
const std::vector<std::string> kXY = {"x", "y"};

int run_cli(const std::string& args) {
  std::string cmd = std::string(TTICAD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = std::string(TTICAD_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (std::size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}
}  // namespace

TEST_CASE("problem files") {
  Problem p = parse_problem(
      "# comment\n"
      "variables: x, y\n"
      "system: x^2+y^2-4 = 0 && (x-3)^2-(y+3) < 0\n"
      "system: 0 = 0\n");
  CHECK(p.variables == kXY);
  REQUIRE(p.systems.size() == 2);
  CHECK(p.systems[0][0].lhs == parse_polynomial("x^2 + y^2 - 4", kXY));
  CHECK(p.systems[0][1].rel == Relation::Lt);
  CHECK(p.systems[1][0].lhs.is_zero());
  CHECK(p.mode == Mode::Tti);
  // The identically true system is true everywhere.
  CAD cad = run(p).cad;
  for (const auto& c : cad.cells) CHECK(c.truth[1]);

  try {
    parse_problem("variables: x, y\nsystem: x/y = 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_problem("variables: x\nsystem: x + y = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("system: x = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("variables: x\nmode: fast\nsystem: x = 0\n"), ParseError);
  CHECK(parse_problem("variables: x\nmode: sign\nsystem: x = 0 and x > -1, x < 3\n").systems[0].size() == 3);
}

TEST_CASE("printing and parsing again is the identity on canonical forms") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-9, 9), e(0, 3);
  for (int i = 0; i < 100; ++i) {
    std::string text;
    for (int t = 0; t < 4; ++t) {
      text += (t ? " + " : "") + std::string("(") + std::to_string(c(rng)) + "/" + std::to_string(1 + e(rng)) +
              ")*x^" + std::to_string(e(rng)) + "*y^" + std::to_string(e(rng));
    }
    Polynomial p = parse_polynomial(text, kXY).canonical();
    CHECK(parse_polynomial(p.to_string(kXY), kXY) == p);
  }
}

TEST_CASE("processing orders") {
  auto o = parse_order("2, 1[2,1,3]", {3, 2});
  CHECK(o.systems == std::vector<int>{2, 1});
  CHECK_FALSE(o.constraints[0].has_value());
  CHECK(*o.constraints[1] == std::vector<int>{2, 1, 3});
  CHECK(format_order(o) == "2,1[2,1,3]");
  CHECK_THROWS_AS(parse_order("1", {1, 1}), ParseError);
  CHECK_THROWS_AS(parse_order("1,1", {1, 1}), ParseError);
  CHECK_THROWS_AS(parse_order("1[1,1],2", {2, 1}), ParseError);
  CHECK_THROWS_AS(parse_order("1,2]", {1, 1}), ParseError);
  CHECK_THROWS_AS(parse_order("3,1", {1, 1}), ParseError);

  Problem p = load_problem("eq2.txt");
  Problem q = apply_order(p, parse_order("2,1[2,1,3]", {3, 2}));
  CHECK(q.systems[0].size() == 2);
  CHECK(q.systems[1][0].lhs == p.systems[0][1].lhs);
  CHECK(equation_orders(p).size() == 4);
}

TEST_CASE("every equation order of the circle and parabola problem") {
  Problem p = load_problem("eq2.txt");
  std::size_t lo = SIZE_MAX, hi = 0;
  for (const auto& o : equation_orders(p)) {
    RunOptions opts;
    opts.order = format_order(o);
    std::size_t c = run(p, opts).cad.cells.size();
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  CHECK(lo == 65);
  CHECK(hi == 145);
}

TEST_CASE("summary line") {
  RunResult r = run(load_problem("eq1.txt"));
  CHECK(summary(r).rfind("63 cells, 22 full-dimensional, base line 19 cells\ncells per level: 19 63\n", 0) == 0);
  RunOptions sign;
  sign.mode = Mode::Sign;
  CHECK(summary(run(load_problem("eq1.txt"), sign)).rfind("231 cells, 72 full-dimensional, base line 31 cells", 0) ==
        0);
}

TEST_CASE("cell dumps") {
  RunResult r = run(load_problem("sqrt2.txt"));
  CellDump d = make_cell_dump(r);
  REQUIRE(d.cells.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(d.cells[static_cast<std::size_t>(i)].index == std::vector<int>{i + 1});
    CHECK(d.cells[static_cast<std::size_t>(i)].levels[0].section == (i % 2 == 1));
  }
  CHECK(d.cells[1].truth == std::vector<bool>{true});
  CHECK(d.cells[0].sample[0].value.find('/') != std::string::npos);
  CHECK(CellDump::from_json(d.to_json()) == d);

  RunResult e = run(load_problem("eq1.txt"));
  CellDump de = make_cell_dump(e);
  CHECK(de.cells.size() == 63);
  for (const auto& c : de.cells) CHECK(c.truth.size() == 2);
  CHECK(CellDump::from_json(de.to_json()) == de);

  Problem empty = parse_problem("variables: x\nsystem: 0 = 0\n");
  empty.systems.clear();
  CHECK(make_cell_dump(run(empty)).cells.size() == 1);

  CHECK_THROWS_AS(CellDump::from_json("{\"cells\": 3}"), ParseError);
  CHECK_THROWS_AS(CellDump::from_json("not json"), ParseError);
}

TEST_CASE("svg output") {
  RunResult r = run(load_problem("eq1.txt"));
  std::string svg = emit_svg(r.cad, default_box(r.cad));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg == emit_svg(r.cad, default_box(r.cad)));
  CHECK(count(svg, "<polygon") == 22);
  CHECK(count(svg, "<circle") == 63 - 22 - count(svg, "<polyline"));

  Problem line = parse_problem("variables: x, y\nsystem: x = 0\n");
  RunResult rl = run(line);
  CHECK(count(emit_svg(rl.cad, default_box(rl.cad)), "<polygon") == 2);
  CHECK(rl.cad.full_dimensional_count() == 2);
  CHECK(cells_per_level(rl.cad) == std::vector<std::size_t>{3, 3});

  Problem empty = line;
  empty.systems.clear();
  RunResult re = run(empty);
  CHECK(count(emit_svg(re.cad, default_box(re.cad)), "<polygon") == 1);

  RunResult r3 = run(load_problem("sphere_plane.txt"));
  CHECK_THROWS_AS(emit_svg(r3.cad, default_box(r3.cad)), UnsupportedDimension);
}

TEST_CASE("bench table") {
  std::string t = format_bench({{"eq1", 2, "ok", 63, 0.01}, {"big", 4, "timeout", 0, 5}});
  CHECK(std::regex_search(t, std::regex(R"(\neq1 +2 ok +63 +0\.010\n)")));
  CHECK(std::regex_search(t, std::regex(R"(\nbig +4 timeout +- +5\.000\n)")));
}

TEST_CASE("exit codes of the command line tool") {
  std::string corpus = TTICAD_CORPUS_DIR;
  CHECK(run_cli("decompose " + corpus + "/eq1.txt") == 0);
  CHECK(run_cli("decompose " + corpus + "/eq1.txt --dump-tree --trace") == 0);
  CHECK(run_cli("combdiag --r-max 2") == 0);
  CHECK(run_cli("decompose --bench " + corpus + "/eq1.txt " + corpus + "/sqrt2.txt") == 0);
  CHECK(run_cli("decompose " + temp_file("bad.txt", "variables: x, y\nsystem: x/y = 0\n")) == 2);
  CHECK(run_cli("decompose " + corpus + "/eq1.txt --order 3") == 2);
  CHECK(run_cli("decompose " + corpus + "/sphere_plane.txt --svg " + std::string(TTICAD_TEST_TMP) + "/s.svg") == 2);
  CHECK(run_cli("decompose " + corpus + "/eq1_sign.txt --max-nodes 10") == 3);
  CHECK(run_cli("decompose " + corpus + "/eq2_sign.txt --timeout 0.000001") == 3);

  std::string json = std::string(TTICAD_TEST_TMP) + "/eq1.json";
  CHECK(run_cli("decompose " + corpus + "/eq1.txt --json " + json) == 0);
  std::ifstream in(json);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(CellDump::from_json(ss.str()).cells.size() == 63);
}
