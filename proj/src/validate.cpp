#include <random>

#include "tticad/cctree.hpp"
#include "tticad/regchain.hpp"
#include "tticad/subresultant.hpp"

namespace tticad {

namespace {

std::string describe_path(const Node* n) {
  std::string s;
  for (const Node* m : path_to(n)) {
    if (!s.empty()) s += " / ";
    s += node_label(m, {});
  }
  return s.empty() ? "root" : s;
}

bool sample_point(const Node* parent, std::mt19937& rng, std::vector<Rational>& pt) {
  auto path = path_to(parent);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  for (int attempt = 0; attempt < 100; ++attempt) {
    pt.clear();
    bool ok = true;
    for (const Node* n : path) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      pt.push_back(v);
      if (n->kind == NodeKind::Neq && n->poly.eval(pt) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Polynomial specialize(const Polynomial& p, const std::vector<Rational>& pt) {
  Polynomial r = p;
  for (std::size_t i = 0; i < pt.size(); ++i) r = r.substitute(static_cast<int>(i), pt[i]);
  return r;
}

class Validator {
 public:
  Validator(unsigned samples, std::vector<Violation>& out) : samples_(samples), out_(out) {}

  void family(const Node* p) {
    if (p->children.empty()) return;
    std::string where = describe_path(p);
    int level = p->level + 1;
    int var = level - 1;
    std::vector<const Node*> eqs;
    const Node* neq = nullptr;
    int anys = 0, neqs = 0;
    for (const auto& c : p->children) {
      if (c->level != level || c->parent != p) add("structure", where, "child has the wrong level or parent");
      switch (c->kind) {
        case NodeKind::Any: ++anys; break;
        case NodeKind::Eq: eqs.push_back(c.get()); break;
        case NodeKind::Neq: ++neqs; neq = c.get(); break;
        case NodeKind::Root: add("structure", where, "root kind below the root"); break;
      }
      if (c->kind == NodeKind::Eq || c->kind == NodeKind::Neq) {
        if (c->poly.mvar() != var) add("structure", where, node_label(c.get(), {}) + ": main variable mismatch");
      }
    }
    if (anys > 0 && p->children.size() != 1) add("structure", where, "'any' node with siblings");
    if (anys == 0 && neqs != 1) add("completeness", where, "family needs exactly one inequation node");
    if (neqs > 0 && eqs.empty()) add("completeness", where, "inequation node without equation siblings");

    PathContext ctx = context_of(p);
    std::vector<const Node*> constrained = eqs;
    if (neq != nullptr) constrained.push_back(neq);
    for (const Node* c : constrained) {
      if (c->poly.mvar() != var) continue;
      for (const auto& cs : regularity_test(c->poly.lc(var), ctx)) {
        if (cs.result == Verdict::IdenticallyZero)
          add("leading-coefficient", where, node_label(c, {}) + ": leading coefficient vanishes on part of the path");
      }
    }
    unsigned total = 0;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const Polynomial& t = eqs[i]->poly;
      if (t.mvar() != var) continue;
      total += t.degree(var);
      if (squarefree_part(t, var).degree(var) != t.degree(var))
        add("squarefree", where, node_label(eqs[i], {}) + " is not squarefree");
      if (t.degree(var) >= 2) {
        for (const auto& cs : regular_gcd(t, t.derivative(var), var, ctx)) {
          if (cs.result.degree(var) > 0)
            add("squarefree", where, node_label(eqs[i], {}) + " has a repeated root on part of the path");
        }
      }
      for (std::size_t j = i + 1; j < eqs.size(); ++j) {
        const Polynomial& s = eqs[j]->poly;
        if (s.mvar() != var) continue;
        if (gcd(t, s).degree(var) > 0) add("coprime", where, node_label(eqs[i], {}) + " and " + node_label(eqs[j], {}) + " share a factor");
        for (const auto& cs : regular_gcd(t, s, var, ctx)) {
          if (cs.result.degree(var) > 0)
            add("coprime", where, node_label(eqs[i], {}) + " and " + node_label(eqs[j], {}) + " share a root on part of the path");
        }
      }
      if (neq != nullptr && neq->poly.mvar() == var) {
        if (!reduce(prem(neq->poly, t, var), p).is_zero())
          add("completeness", where, "inequation polynomial is not a multiple of " + node_label(eqs[i], {}));
      }
    }
    if (neq != nullptr && neq->poly.mvar() == var && neq->poly.degree(var) != total)
      add("completeness", where, "inequation polynomial degree differs from the product of its siblings");

    sampled_check(p, eqs, where, var);
  }

 private:
  unsigned samples_;
  std::vector<Violation>& out_;
  std::mt19937 rng_{12345};

  void add(const std::string& kind, const std::string& where, const std::string& detail) {
    out_.push_back(Violation{kind, where, detail});
  }

  void sampled_check(const Node* p, const std::vector<const Node*>& eqs, const std::string& where, int var) {
    for (const Node* m : path_to(p)) {
      if (m->kind == NodeKind::Eq) return;
    }
    std::vector<Rational> pt;
    for (unsigned s = 0; s < samples_; ++s) {
      if (!sample_point(p, rng_, pt)) return;
      std::vector<Polynomial> images;
      for (const Node* e : eqs) images.push_back(specialize(e->poly, pt));
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].degree(var) != eqs[i]->poly.degree(var)) {
          add("leading-coefficient", where, "degree drops at a sampled point");
          return;
        }
        if (gcd(images[i], images[i].derivative(var)).degree(var) > 0) {
          add("squarefree", where, "repeated root at a sampled point");
          return;
        }
        for (std::size_t j = i + 1; j < images.size(); ++j) {
          if (gcd(images[i], images[j]).degree(var) > 0) {
            add("coprime", where, "common root at a sampled point");
            return;
          }
        }
      }
    }
  }
};

}  // namespace

std::vector<Violation> validate_cct(const CCTree& tree, unsigned samples) {
  std::vector<Violation> out;
  Validator v(samples, out);
  auto rec = [&](auto&& self, const Node* n) -> void {
    if (n->children.empty()) {
      if (n->level != tree.depth()) out.push_back({"completeness", describe_path(n), "leaf above full depth"});
      return;
    }
    v.family(n);
    for (const auto& c : n->children) self(self, c.get());
  };
  rec(rec, tree.root());
  return out;
}

}  // namespace tticad
