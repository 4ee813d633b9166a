#include "doctest.h"
#include "tticad/combdiag.hpp"

using namespace tticad;

namespace {
const auto kFull = DiagramVariant::Complete;
const auto kPart = DiagramVariant::Partial;

long walked_nodes(const CombinationDiagram& d) {
  long n = 0;
  d.walk([&](const DiagramNode&, int) { ++n; });
  return n;
}

long walked_leaves(const CombinationDiagram& d) {
  long n = 0;
  d.walk([&](const DiagramNode& node, int) { n += node.children.empty(); });
  return n;
}
}  // namespace

TEST_CASE("single system diagrams") {
  AbstractSystem p = {{"p", true}};
  CHECK(build_diagram(p, kFull).node_count() == 2);
  CHECK(build_diagram(p, kPart).node_count() == 2);

  AbstractSystem pq = {{"q", false}, {"p", true}};
  auto d0 = build_diagram(pq, kFull);
  auto d1 = build_diagram(pq, kPart);
  CHECK(d0.node_count() == 6);
  CHECK(d1.node_count() == 4);
  CHECK(walked_nodes(d0) == 6);
  CHECK(walked_nodes(d1) == 4);
  CHECK(d1.to_string() == "p = 0\n  q = 0\n  q != 0\np != 0\n");

  CHECK(build_diagram({}, kFull).null());
  CHECK(build_diagram({}, kPart).null());
}

TEST_CASE("partial diagram leaves the equation's nonzero branch childless") {
  AbstractSystem cs = {{"e1", true}, {"e2", true}, {"c", false}};
  auto d = build_diagram(cs, kPart);
  d.walk([](const DiagramNode& n, int) {
    if (n.label[0] == 'e' && !n.zero) CHECK(n.children.empty());
  });
  CHECK(walked_leaves(d) == 2 + 2);
}

TEST_CASE("list diagrams") {
  AbstractSystem pq = {{"p", true}, {"q", false}};
  CHECK(build_diagram_list({pq}, kPart).node_count() == build_diagram(pq, kPart).node_count());
  CHECK(build_diagram_list({pq, pq}, kPart).node_count() == 16);
  CHECK(walked_nodes(build_diagram_list({pq, pq}, kPart)) == 16);
  CHECK(build_diagram_list({}, kFull).null());
  CHECK(build_diagram_list({{}, pq}, kFull).node_count() == 6);
}

TEST_CASE("closed forms") {
  CHECK(closed_form({1, 1, 1}, kFull) == 6);
  CHECK(closed_form({1, 1, 1}, kPart) == 4);
  CHECK(closed_form({2, 1, 1}, kPart) == 16);
  for (int t = 0; t <= 4; ++t) CHECK(closed_form({1, 0, t}, kFull) == closed_form({1, 0, t}, kPart));
}

TEST_CASE("enumerated counts agree with the closed forms on all small shapes") {
  for (int r = 1; r <= 4; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; t <= 3; ++t) {
        if (s == 0 && t == 0) continue;
        DiagramShape sh{r, s, t};
        auto L = systems_of_shape(sh);
        for (auto v : {kFull, kPart}) {
          auto d = build_diagram_list(L, v);
          CAPTURE(r); CAPTURE(s); CAPTURE(t);
          CHECK(d.node_count() == closed_form(sh, v));
          if (closed_form(sh, v) < 200000) CHECK(walked_nodes(d) == closed_form(sh, v).get_si());
        }
      }
}
