// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "properties.hpp"
#include "trace_shape.hpp"
#include "tticad/combdiag.hpp"
#include "tticad/ttialgo.hpp"

using namespace tticad;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string counts(const CAD& cad) {
  std::ostringstream os;
  os << cad.cells.size() << " cells, " << cad.full_dimensional_count() << " full-dimensional, line "
     << cad.base_line_count();
  return os.str();
}

Outcome eq1_tti() {
  CAD cad = run(load_problem("eq1.txt")).cad;
  bool ok = cad.cells.size() == 63 && cad.full_dimensional_count() == 22 && cad.base_line_count() == 19;
  return {ok, counts(cad)};
}

Outcome eq1_sign() {
  RunOptions o;
  o.mode = Mode::Sign;
  CAD cad = run(load_problem("eq1.txt"), o).cad;
  bool ok = cad.cells.size() == 231 && cad.full_dimensional_count() == 72 && cad.base_line_count() == 31;
  return {ok, counts(cad)};
}

Outcome eq2_orders() {
  Problem p = load_problem("eq2.txt");
  std::size_t first = run(p).cad.cells.size();
  std::size_t lo = SIZE_MAX, hi = 0;
  auto orders = equation_orders(p);
  for (const auto& o : orders) {
    RunOptions opts;
    opts.order = format_order(o);
    std::size_t c = run(p, opts).cad.cells.size();
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  RunOptions sign;
  sign.mode = Mode::Sign;
  std::size_t s = run(p, sign).cad.cells.size();
  std::ostringstream os;
  os << "first system first " << first << ", " << orders.size() << " orders in [" << lo << ", " << hi
     << "], sign-invariant " << s;
  return {first == 69 && lo == 65 && hi == 145 && s == 611, os.str()};
}

Outcome branch_cut() {
  CAD cad = run(load_problem("branch_cut.txt")).cad;
  return {cad.cells.size() == 97, std::to_string(cad.cells.size()) + " cells"};
}

Outcome diagrams() {
  int shapes = 0, good = 0;
  for (int r = 1; r <= 4; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; t <= 3; ++t) {
        if (s == 0 && t == 0) continue;
        ++shapes;
        DiagramShape sh{r, s, t};
        auto L = systems_of_shape(sh);
        mpz_class two_rst = mpz_class(1) << (r * (s + t) + 1);
        mpz_class base = s + (1 << t), pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(r));
        bool ok = build_diagram_list(L, DiagramVariant::Complete).node_count() == two_rst - 2 &&
                  build_diagram_list(L, DiagramVariant::Partial).node_count() == 2 * pw - 2;
        good += ok ? 1 : 0;
      }
  return {shapes == 60 && good == 60, std::to_string(good) + "/" + std::to_string(shapes) + " shapes agree"};
}

std::string tree_shape(const Node* n, const std::vector<std::string>& names) {
  std::vector<std::string> kids;
  for (const auto& c : n->children) kids.push_back(tree_shape(c.get(), names));
  std::sort(kids.begin(), kids.end());
  std::string s = n->kind == NodeKind::Root ? "root" : node_label(n, names);
  if (kids.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < kids.size(); ++i) s += (i ? "; " : "") + kids[i];
  return s + ")";
}

Outcome example_tree() {
  std::vector<std::string> names = {"x1", "x2"};
  auto P = [&](const char* s) { return parse_polynomial(s, names).canonical().to_string(names); };
  CCTree t(2);
  Decomposer d(t);
  d.intersect_path(t.leaves().front(), {parse_polynomial("x1*(x2^2 + x2 + x1)", names), Rel::SignOnly});
  std::vector<std::string> fams = {
      P("x1") + " = 0(any x2)",
      P("4*x1 - 1") + " = 0(" + P("2*x2 + 1") + " != 0; " + P("2*x2 + 1") + " = 0)",
      P("x1*(4*x1 - 1)") + " != 0(" + P("x2^2 + x2 + x1") + " != 0; " + P("x2^2 + x2 + x1") + " = 0)",
  };
  std::sort(fams.begin(), fams.end());
  std::string expect = "root(" + fams[0] + "; " + fams[1] + "; " + fams[2] + ")";
  std::string got = tree_shape(t.root(), names);
  bool ok = got == expect && validate_cct(t).empty();
  return {ok, ok ? "tree matches" : got};
}

Outcome properties() {
  std::mt19937 rng(99);
  int trees = 0, bad_trees = 0, cads = 0, bad_cyl = 0, sampled = 0, bad_truth = 0;
  for (const auto& f : corpus_files()) {
    Problem p = load_problem(f);
    RunResult r = run(p);
    ++trees;
    ++cads;
    bad_trees += validate_cct(*r.cad.tree).empty() ? 0 : 1;
    bad_cyl += check_cylindricity(r.cad).empty() ? 0 : 1;
    if (p.variables.size() <= 3) {
      ++sampled;
      bad_truth += truth_violations(r.cad, systems_of(r.problem), rng).empty() ? 0 : 1;
    }
  }
  int roots_bad = 0;
  std::mt19937 prng(8);
  for (int i = 0; i < 200; ++i) {
    Polynomial q = oracle::random_univariate(prng, 0, 8, 9);
    Rational bound = 1;
    Rational lead = abs(q.lc(0).constant_value());
    for (const auto& c : q.coeffs(0)) bound = std::max(bound, Rational(1 + abs(c.constant_value()) / lead));
    int got = static_cast<int>(isolate_roots(q, 0, {}).size());
    roots_bad += got == oracle::sturm_count(q, -bound, bound) ? 0 : 1;
  }
  std::ostringstream os;
  os << "validator " << trees - bad_trees << "/" << trees << ", truth sampling " << sampled - bad_truth << "/"
     << sampled << ", Sturm " << 200 - roots_bad << "/200, cylindricity " << cads - bad_cyl << "/" << cads;
  return {bad_trees == 0 && bad_truth == 0 && roots_bad == 0 && bad_cyl == 0, os.str()};
}

Outcome case_flow() {
  std::vector<std::string> xy = {"x", "y"};
  auto P = [&](const char* s) { return parse_polynomial(s, xy); };
  auto f1 = P("x^2 + y^2 - 4"), g1 = P("(x-3)^2 - (y+3)");
  auto f2 = P("(x-6)^2 + y^2 - 4"), g2 = P("(x-3)^2 + (y-2)");
  std::vector<ComplexSystem> L = {{{{f1, Rel::Eq}, {g1, Rel::Neq}}}, {{{f2, Rel::Eq}, {g2, Rel::Neq}}}};
  std::vector<TraceEntry> trace;
  tticcd(L, 2, {}, &trace, xy);
  auto c = [&](const Polynomial& p) { return p.canonical().to_string(xy); };
  std::set<std::string> expect = {
      braced({c(f1) + " = 0", c(f2) + " = 0"}) + " -> sign-invariant: " + braced({c(g1) + " ?", c(g2) + " ?"}),
      braced({c(f1) + " = 0", c(f2) + " != 0"}) + " -> truth-invariant: " + braced({c(g1) + " != 0"}),
      braced({c(f1) + " != 0"}) + " -> truth-invariant: " + braced({c(f2) + " = 0", c(g2) + " != 0"}),
  };
  bool ok = trace_shape(trace, xy) == expect;
  return {ok, std::to_string(trace.size()) + " cases"};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"two circles, truth-table invariant: 63 / 22 / 19", eq1_tti},
      {"two circles, sign-invariant: 231 / 72 / 31", eq1_sign},
      {"circle and parabola: 69 first, orders span 65..145, sign-invariant 611", eq2_orders},
      {"branch cuts in four variables: 97 cells", branch_cut},
      {"combination diagram sizes match closed forms on 60 shapes", diagrams},
      {"worked example tree", example_tree},
      {"property suites", properties},
      {"case analysis of two circles", case_flow},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
