#include <random>

#include "doctest.h"
#include "tticad/cctree.hpp"
#include "tticad/parser.hpp"
#include "tticad/regchain.hpp"

using namespace tticad;

namespace {
const std::vector<std::string> kX12 = {"x1", "x2"};
Polynomial P(const std::string& s) { return parse_polynomial(s, kX12); }

Node* add(CCTree& t, Node* parent, NodeKind k, const std::string& p) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->poly = k == NodeKind::Any ? Polynomial() : P(p);
  return t.insert_child(parent, std::move(n));
}
}  // namespace

TEST_CASE("initial trees") {
  for (int n = 1; n <= 4; ++n) {
    CCTree t(n);
    CHECK(t.leaves().size() == 1);
    CHECK(t.node_count() == static_cast<std::size_t>(n));
    CHECK(t.is_complete());
    CHECK(validate_cct(t).empty());
  }
  CHECK_THROWS_AS(CCTree(0), ArityError);
}

TEST_CASE("make_complete adds the missing inequation sibling") {
  CCTree t(2);
  t.root()->children.clear();
  Node* e = add(t, t.root(), NodeKind::Eq, "x1");
  add(t, e, NodeKind::Any, "");
  CHECK_FALSE(t.is_complete());
  make_complete(t);
  CHECK(t.is_complete());
  CHECK(format_tree(t, kX12) == "x1 = 0:\n  any x2\nx1 != 0:\n  any x2\n");
  CHECK(validate_cct(t).empty());
  std::string before = format_tree(t, kX12);
  make_complete(t);
  CHECK(format_tree(t, kX12) == before);
}

TEST_CASE("truncation cascades and records removed equations") {
  CCTree t(2);
  Node* leaf = t.leaves().front();
  refine(t, leaf, P("x2 - x1"));
  refine(t, t.leaves().front(), P("x1 - 1"));
  // Remove every leaf below x1 = 1.
  for (Node* l : t.leaves()) {
    if (l->parent->kind == NodeKind::Eq) t.truncate(l);
  }
  CHECK(format_tree(t, kX12).find("x1 - 1 = 0") == std::string::npos);
  CHECK(t.root()->tombstones.size() == 1);
  make_complete(t);
  CHECK(t.is_complete());
  CHECK(validate_cct(t).empty());
}

TEST_CASE("validator reports broken families") {
  CCTree t(2);
  t.root()->children.clear();
  Node* a = add(t, t.root(), NodeKind::Eq, "x1 - 1");
  Node* b = add(t, t.root(), NodeKind::Eq, "x1^2 - 1");
  t.extend_with_any(a);
  t.extend_with_any(b);
  auto v = validate_cct(t);
  bool coprime = false, complete = false;
  for (const auto& x : v) {
    coprime |= x.kind == "coprime";
    complete |= x.kind == "completeness";
  }
  CHECK(coprime);
  CHECK(complete);
}

TEST_CASE("path membership") {
  CCTree t(2);
  t.root()->children.clear();
  Node* e = add(t, t.root(), NodeKind::Eq, "x1");
  Node* leaf = add(t, e, NodeKind::Any, "");
  std::vector<Rational> p1 = {0, 5}, p2 = {1, 0}, p3 = {0};
  CHECK(path_membership(p1, leaf));
  CHECK_FALSE(path_membership(p2, leaf));
  CHECK_THROWS_AS(path_membership(p3, leaf), ArityError);
}

TEST_CASE("next_path_todo enumerates marked leaves leftmost first") {
  CCTree t(2);
  refine(t, t.leaves().front(), P("x1*(x2^2 + x2 + x1)"));
  for (Node* l : t.leaves()) l->todo = 3;
  std::size_t count = 0;
  Node* prev = nullptr;
  while (Node* n = next_path_todo(t, 3)) {
    CHECK(n != prev);
    n->todo = -1;
    prev = n;
    ++count;
  }
  CHECK(count == t.leaves().size());
  CHECK(next_path_todo(t, 3) == nullptr);
}

TEST_CASE("sibling zero sets partition sampled points") {
  CCTree t(2);
  refine(t, t.leaves().front(), P("x1*(x2^2 + x2 + x1)"));
  refine(t, t.leaves().front(), P("x2 - x1^2"));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> pt = {Rational(d(rng), 4), Rational(d(rng), 2)};
    pt[0].canonicalize();
    pt[1].canonicalize();
    int hits = 0;
    for (const Node* l : t.leaves()) hits += path_membership(pt, l) ? 1 : 0;
    CHECK(hits == 1);
  }
  CHECK(validate_cct(t).empty());
}
