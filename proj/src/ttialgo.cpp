#include "tticad/ttialgo.hpp"

#include <algorithm>

#include "tticad/regchain.hpp"

namespace tticad {

Decomposer::Decomposer(CCTree& tree, Limits limits, std::vector<std::string> names)
    : tree_(tree), limits_(limits), names_(std::move(names)) {}

void Decomposer::check_limits() const {
  if (limits_.max_nodes != 0 && tree_.node_count() > limits_.max_nodes)
    throw ResourceLimitError("tree exceeded " + std::to_string(limits_.max_nodes) + " nodes");
  if (limits_.deadline && std::chrono::steady_clock::now() > *limits_.deadline)
    throw ResourceLimitError("time limit exceeded");
}

std::string Decomposer::show(const Polynomial& p) const { return p.to_string(names_); }

void Decomposer::record(const std::string& action) {
  for (const auto& e : trace_) {
    if (e.conditions == conditions_ && e.action == action) return;
  }
  trace_.push_back(TraceEntry{conditions_, action});
}

std::vector<Node*> Decomposer::intersect_path(Node* leaf, const Constraint& c) {
  check_limits();
  std::vector<Node*> keep;
  if (c.poly.is_constant()) {
    bool zero = c.poly.is_zero();
    bool drop = (c.rel == Rel::Eq && !zero) || (c.rel == Rel::Neq && zero);
    if (drop) {
      tree_.truncate(leaf);
    } else {
      keep.push_back(leaf);
    }
    return keep;
  }
  Tracked res = refine(tree_, leaf, c.poly);
  std::vector<Node*> drop;
  for (const auto& it : res.items()) {
    bool zero = it.tag == 1;
    if ((c.rel == Rel::Eq && !zero) || (c.rel == Rel::Neq && zero)) {
      drop.push_back(it.node);
    } else {
      keep.push_back(it.node);
    }
  }
  for (Node* n : drop) tree_.truncate(n);
  return keep;
}

void Decomposer::intersect_poly_set(const std::vector<Constraint>& F, Node* leaf) {
  if (F.empty()) return;
  std::vector<Constraint> rest(F.begin() + 1, F.end());
  int frame = next_frame_++;
  for (Node* n : intersect_path(leaf, F.front())) n->todo = frame;
  while (Node* c = next_path_todo(tree_, frame)) {
    c->todo = -1;
    intersect_poly_set(rest, c);
  }
}

namespace {

std::string describe(const std::vector<Constraint>& cs, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& c : cs) {
    if (!s.empty()) s += ", ";
    s += c.poly.to_string(names);
    if (c.rel == Rel::Eq) s += " = 0";
    if (c.rel == Rel::Neq) s += " != 0";
  }
  return s;
}

}  // namespace

void Decomposer::intersect_lcs(std::vector<ComplexSystem> L, Node* leaf) {
  L.erase(std::remove_if(L.begin(), L.end(), [](const ComplexSystem& s) { return s.constraints.empty(); }),
          L.end());
  if (L.empty()) return;
  if (L.size() == 1) {
    record("truth-invariant: " + describe(L.front().constraints, names_));
    intersect_poly_set(L.front().constraints, leaf);
    make_complete(tree_);
    return;
  }
  std::size_t cs_index = L.size();
  std::size_t ec_index = 0;
  for (std::size_t i = 0; i < L.size() && cs_index == L.size(); ++i) {
    for (std::size_t j = 0; j < L[i].constraints.size(); ++j) {
      if (L[i].constraints[j].rel == Rel::Eq) {
        cs_index = i;
        ec_index = j;
        break;
      }
    }
  }
  if (cs_index == L.size()) {
    std::vector<Constraint> F;
    for (const auto& s : L) {
      for (const auto& c : s.constraints) {
        Constraint k{c.poly.canonical(), Rel::SignOnly};
        if (k.poly.is_constant()) continue;
        if (std::find(F.begin(), F.end(), k) == F.end()) F.push_back(k);
      }
    }
    record("sign-invariant: " + describe(F, names_));
    intersect_poly_set(F, leaf);
    return;
  }
  Polynomial p = L[cs_index].constraints[ec_index].poly;
  Polynomial pc = p.canonical();

  std::vector<ComplexSystem> on_zero = L;
  auto& cons = on_zero[cs_index].constraints;
  cons.erase(std::remove_if(cons.begin(), cons.end(),
                            [&](const Constraint& c) { return c.rel == Rel::Eq && c.poly.canonical() == pc; }),
             cons.end());
  std::vector<ComplexSystem> off_zero = L;
  off_zero.erase(off_zero.begin() + static_cast<std::ptrdiff_t>(cs_index));

  int frame = next_frame_++;
  for (Node* n : intersect_path(leaf, Constraint{p, Rel::SignOnly})) n->todo = frame;
  while (Node* c = next_path_todo(tree_, frame)) {
    c->todo = -1;
    bool zero = reduce(p, c).is_zero();
    conditions_.push_back(show(pc) + (zero ? " = 0" : " != 0"));
    intersect_lcs(zero ? on_zero : off_zero, c);
    conditions_.pop_back();
  }
}

CCTree tticcd(const std::vector<ComplexSystem>& L, int n, Limits limits,
              std::vector<TraceEntry>* trace, std::vector<std::string> names) {
  CCTree tree(n);
  Decomposer d(tree, limits, std::move(names));
  d.intersect_lcs(L, tree.leaves().front());
  make_complete(tree);
  if (trace != nullptr) *trace = d.trace();
  return tree;
}

}  // namespace tticad
