#include "tticad/regchain.hpp"

#include <map>

#include "tticad/subresultant.hpp"

namespace tticad {

namespace {

Node* ancestor_at_level(Node* n, int level) {
  while (n->level > level) n = n->parent;
  return n;
}

std::vector<std::size_t> relative_path(const Node* anc, const Node* n) {
  std::vector<std::size_t> out;
  for (; n != anc; n = n->parent) out.push_back(n->index_in_parent());
  return {out.rbegin(), out.rend()};
}

Node* follow(Node* n, const std::vector<std::size_t>& rel) {
  for (auto i : rel) n = n->children.at(i).get();
  return n;
}

// Reduces p modulo the chain of the path ending at parent and makes it
// primitive in var.  The leading coefficient must be nowhere zero there, so
// the content is too and the zero set over the path is unchanged.
Polynomial clean(const Polynomial& p, const Node* parent, int var) {
  Polynomial r = reduce(p, parent);
  if (r.degree(var) != p.degree(var)) throw InvariantError("reduction lowered the main degree");
  return primitive_part(r, var);
}

Tracked handle_main(CCTree& tree, Node* node, const Polynomial& r);

}  // namespace

Polynomial reduce(const Polynomial& q, const Node* node) {
  Polynomial r = q;
  for (const Node* m = node; m != nullptr && m->parent != nullptr; m = m->parent) {
    if (r.is_zero()) break;
    if (m->kind != NodeKind::Eq) continue;
    int v = m->level - 1;
    if (r.degree(v) >= m->poly.degree(v)) r = prem(r, m->poly, v);
  }
  return r.canonical();
}

Tracked refine(CCTree& tree, Node* node, const Polynomial& q) {
  Tracked out(tree);
  Polynomial r = reduce(q, node);
  if (r.is_zero()) {
    out.add(node, 1);
    return out;
  }
  if (r.is_constant()) {
    out.add(node, 0);
    return out;
  }
  int level = r.mvar() + 1;
  if (level > node->level) throw InvariantError("polynomial involves variables below the node");
  if (level < node->level) {
    Node* anc = ancestor_at_level(node, level);
    auto rel = relative_path(anc, node);
    Tracked sub = refine(tree, anc, r);
    for (const auto& it : sub.items()) out.add(follow(it.node, rel), it.tag);
    return out;
  }
  int var = level - 1;
  Polynomial lc = r.lc(var);
  // On an Eq node the gcd with the chain polynomial copes with a vanishing
  // leading coefficient of r, so only other nodes peel it first.
  if (lc.is_constant() || node->kind == NodeKind::Eq) return handle_main(tree, node, r);

  std::size_t idx = node->index_in_parent();
  Tracked work(tree);
  {
    Tracked sub = refine(tree, node->parent, lc);
    for (const auto& it : sub.items()) work.add(it.node->children.at(idx).get(), it.tag);
  }
  Polynomial red = r.reductum(var);
  while (!work.empty()) {
    TrackedItem it = work.pop();
    out.append(it.tag == 1 ? refine(tree, it.node, red) : handle_main(tree, it.node, r));
  }
  return out;
}

Tracked regular_gcd(CCTree& tree, Node* parent, const Polynomial& a0, const Polynomial& b0,
                    int var, bool b_may_degenerate) {
  const Polynomial* a = &a0;
  const Polynomial* b = &b0;
  if (a->degree(var) < b->degree(var)) std::swap(a, b);
  unsigned q = b->degree(var);
  if (q == 0) throw DegenerateInputError("regular_gcd needs both inputs to involve the variable");
  auto chain = subresultant_chain(*a, *b, var);
  Tracked out(tree);
  Tracked work(tree);
  work.add(parent, 0);
  while (!work.empty()) {
    TrackedItem it = work.pop();
    unsigned j = static_cast<unsigned>(it.tag);
    if (j >= q) {
      Polynomial lcb = b->lc(var);
      if (!b_may_degenerate || lcb.is_constant()) {
        out.add(it.node, 0, *b);
        continue;
      }
      Tracked sub = refine(tree, it.node, lcb);
      for (auto& r : sub.items()) out.add(r.node, r.tag == 1 ? 1 : 0, *b);
      continue;
    }
    Polynomial s = psc(chain, j, var);
    if (s.is_zero()) {
      work.add(it.node, static_cast<int>(j + 1));
      continue;
    }
    Tracked sub = refine(tree, it.node, s);
    for (auto& r : sub.items()) {
      if (r.tag == 1) {
        work.add(r.node, static_cast<int>(j + 1));
      } else {
        out.add(r.node, 0, primitive_part(chain[j], var));
      }
    }
  }
  return out;
}

Tracked squarefree_part(CCTree& tree, Node* parent, const Polynomial& r, int var) {
  Tracked out(tree);
  if (r.degree(var) <= 1) {
    out.add(parent, 0, r);
    return out;
  }
  Tracked g = regular_gcd(tree, parent, r, r.derivative(var), var);
  for (const auto& it : g.items()) {
    Polynomial u = it.poly.degree(var) == 0 ? r : pquo(r, it.poly, var);
    out.add(it.node, 0, clean(u, it.node, var));
  }
  return out;
}

namespace {

Tracked handle_main(CCTree& tree, Node* node, const Polynomial& r) {
  Tracked out(tree);
  int var = node->level - 1;
  std::size_t idx = node->index_in_parent();
  if (node->kind == NodeKind::Eq) {
    Polynomial t = node->poly;
    unsigned dt = t.degree(var);
    Tracked work(tree);
    {
      Tracked g = regular_gcd(tree, node->parent, t, r, var, true);
      for (auto& it : g.items()) work.add(it.node->children.at(idx).get(), it.tag, it.poly);
    }
    while (!work.empty()) {
      TrackedItem it = work.pop();
      if (it.tag == 1) {
        // Every subresultant coefficient and lc(r) vanish: r drops degree here.
        out.append(refine(tree, it.node, r.reductum(var)));
        continue;
      }
      unsigned dg = it.poly.degree(var);
      if (dg == 0) {
        out.add(it.node, 0);
      } else if (dg == dt) {
        out.add(it.node, 1);
      } else {
        Node* parent = it.node->parent;
        Polynomial g = clean(it.poly, parent, var);
        Polynomial rest = clean(pquo(t, it.poly, var), parent, var);
        Node* zero = tree.split_copy(it.node);
        zero->poly = g;
        it.node->poly = rest;
        CCTree::sort_children(parent);
        out.add(zero, 1);
        out.add(it.node, 0);
      }
    }
    return out;
  }

  Tracked work(tree);
  {
    Tracked sq = squarefree_part(tree, node->parent, r, var);
    for (auto& it : sq.items()) work.add(it.node->children.at(idx).get(), 0, it.poly);
  }
  while (!work.empty()) {
    TrackedItem it = work.pop();
    Node* n = it.node;
    if (n->kind == NodeKind::Any) {
      Node* zero = tree.split_copy(n);
      zero->kind = NodeKind::Eq;
      zero->poly = it.poly;
      n->kind = NodeKind::Neq;
      n->poly = it.poly;
      CCTree::sort_children(n->parent);
      out.add(zero, 1);
      out.add(n, 0);
      continue;
    }
    // Neq(h): only the roots of u outside the existing Eq siblings are new.
    Polynomial h = n->poly;
    Polynomial u = it.poly;
    std::size_t nidx = n->index_in_parent();
    Tracked parts(tree);
    {
      Tracked g = regular_gcd(tree, n->parent, h, u, var);
      for (auto& gi : g.items()) {
        Polynomial w = gi.poly.degree(var) == 0 ? u : pquo(u, gi.poly, var);
        parts.add(gi.node->children.at(nidx).get(), 0, std::move(w));
      }
    }
    while (!parts.empty()) {
      TrackedItem p = parts.pop();
      if (p.poly.degree(var) == 0) {
        out.add(p.node, 0);
        continue;
      }
      Node* parent = p.node->parent;
      Polynomial w = clean(p.poly, parent, var);
      Node* zero = tree.split_copy(p.node);
      zero->kind = NodeKind::Eq;
      zero->poly = w;
      p.node->poly = (p.node->poly * w).canonical();
      CCTree::sort_children(parent);
      out.add(zero, 1);
      out.add(p.node, 0);
    }
  }
  return out;
}

}  // namespace

// Path-context interface -----------------------------------------------------

PathContext context_of(const Node* node) {
  PathContext ctx;
  for (const Node* n : path_to(node)) ctx.push_back(ContextConstraint{n->kind, n->poly});
  return ctx;
}

CCTree tree_from_context(const PathContext& ctx, int depth, Node** node_at_ctx_end) {
  int n = std::max<int>(depth, static_cast<int>(ctx.size()));
  CCTree tree(std::max(n, 1));
  Node* cur = tree.root();
  for (const auto& c : ctx) {
    cur = cur->children.front().get();
    cur->kind = c.kind;
    cur->poly = c.kind == NodeKind::Any ? Polynomial() : c.poly;
  }
  if (node_at_ctx_end != nullptr) *node_at_ctx_end = cur;
  return tree;
}

std::vector<Case<Verdict>> regularity_test(const Polynomial& p, const PathContext& ctx) {
  Node* end = nullptr;
  CCTree tree = tree_from_context(ctx, static_cast<int>(ctx.size()), &end);
  std::vector<Case<Verdict>> out;
  if (ctx.empty()) {
    if (!p.is_constant()) throw ArityError("polynomial involves variables beyond the context");
    out.push_back({ctx, p.is_zero() ? Verdict::IdenticallyZero : Verdict::Invertible});
    return out;
  }
  Tracked res = refine(tree, end, p);
  for (const auto& it : res.items()) {
    out.push_back({context_of(it.node), it.tag == 1 ? Verdict::IdenticallyZero : Verdict::Invertible});
  }
  return out;
}

namespace {

// A tree holding ctx plus one "any" level for var; returns the node at the end of ctx.
CCTree working_tree(const PathContext& ctx, int var, Node** end) {
  if (var != static_cast<int>(ctx.size())) throw ArityError("main variable must sit directly above the context");
  return tree_from_context(ctx, var + 1, end);
}

}  // namespace

std::vector<Case<Polynomial>> regular_gcd(const Polynomial& p, const Polynomial& q, int var,
                                          const PathContext& ctx) {
  if (p.degree(var) == 0 || q.degree(var) == 0)
    throw DegenerateInputError("regular_gcd inputs must involve the main variable");
  Node* end = nullptr;
  CCTree tree = working_tree(ctx, var, &end);
  std::vector<Case<Polynomial>> out;
  Tracked res = regular_gcd(tree, end, p, q, var);
  for (const auto& it : res.items()) {
    Polynomial g = it.poly.degree(var) == 0 ? Polynomial(1) : clean(it.poly, it.node, var);
    out.push_back({context_of(it.node), g});
  }
  return out;
}

std::vector<Case<SquarefreeCase>> squarefree_mod_ctx(const Polynomial& p, int var,
                                                     const PathContext& ctx) {
  Node* end = nullptr;
  CCTree tree = working_tree(ctx, var, &end);
  Node* top = end->children.front().get();
  Tracked res = refine(tree, top, p);
  std::map<const Node*, SquarefreeCase> by_parent;
  std::vector<const Node*> order;
  for (const auto& it : res.items()) {
    const Node* parent = it.node->parent;
    if (by_parent.find(parent) == by_parent.end()) order.push_back(parent);
    auto& c = by_parent[parent];
    if (it.tag == 1) {
      if (it.node->kind == NodeKind::Eq) {
        c.factors.push_back(it.node->poly);
      } else {
        c.vanishes = true;
      }
    }
  }
  std::vector<Case<SquarefreeCase>> out;
  for (const Node* parent : order) {
    PathContext c = context_of(parent);
    c.resize(ctx.size());
    out.push_back({c, by_parent[parent]});
  }
  return out;
}

}  // namespace tticad
