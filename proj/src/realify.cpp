#include "tticad/realify.hpp"

#include <algorithm>
#include <map>

#include "tticad/regchain.hpp"

namespace tticad {

SemiAlgebraicSystem normalize_system(const std::vector<RawConstraint>& raw) {
  SemiAlgebraicSystem s;
  for (const auto& r : raw) {
    switch (r.rel) {
      case Relation::Eq: s.constraints.push_back({r.lhs, SasRel::Eq}); break;
      case Relation::Neq: s.constraints.push_back({r.lhs, SasRel::Neq}); break;
      case Relation::Gt: s.constraints.push_back({r.lhs, SasRel::Gt}); break;
      case Relation::Ge: s.constraints.push_back({r.lhs, SasRel::Geq}); break;
      case Relation::Lt: s.constraints.push_back({-r.lhs, SasRel::Gt}); break;
      case Relation::Le: s.constraints.push_back({-r.lhs, SasRel::Geq}); break;
    }
  }
  return s;
}

ComplexSystem corresponding_complex_system(const SemiAlgebraicSystem& s) {
  ComplexSystem cs;
  for (const auto& c : s.constraints) {
    Rel r = Rel::SignOnly;
    if (c.rel == SasRel::Eq) r = Rel::Eq;
    if (c.rel == SasRel::Neq || c.rel == SasRel::Gt) r = Rel::Neq;
    cs.constraints.push_back({c.poly, r});
  }
  // Equations lead, each group keeping its input order.
  std::stable_partition(cs.constraints.begin(), cs.constraints.end(),
                        [](const Constraint& c) { return c.rel == Rel::Eq; });
  return cs;
}

int Cell::dimension() const {
  int d = 0;
  for (int i : index) d += i % 2;
  return d;
}

std::size_t CAD::full_dimensional_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.full_dimensional(); }));
}

std::size_t CAD::base_line_count() const {
  int top = 0;
  for (const auto& c : cells) top = std::max(top, c.index.front());
  return static_cast<std::size_t>(top);
}

namespace {

struct Root {
  CoordPtr value;
  const Node* owner;
  Polynomial poly;
  int k;
};

Rational upper_of(const CoordPtr& c) { return c->rational ? c->value : c->hi; }
Rational lower_of(const CoordPtr& c) { return c->rational ? c->value : c->lo; }

// A rational strictly between two adjacent distinct roots a < b.
Rational between(const CoordPtr& a, const CoordPtr& b) {
  for (int guard = 0; guard < 10000; ++guard) {
    Rational u = upper_of(a), l = lower_of(b);
    if (u < l) return (u + l) / 2;
    if (u == l && !a->rational && !b->rational) return u;
    if (!a->rational) a->bisect();
    if (!b->rational) b->bisect();
  }
  throw InvariantError("adjacent roots could not be separated");
}

class Lifter {
 public:
  Lifter(CAD& cad) : cad_(cad) {}

  void lift(const Node* p, std::vector<CoordPtr>& prefix, std::vector<int>& idx, std::vector<CellLevel>& lv) {
    if (p->children.empty()) {
      Cell c;
      c.index = idx;
      c.levels = lv;
      c.sample = prefix;
      c.leaf = p;
      cad_.cells.push_back(std::move(c));
      return;
    }
    int var = p->level;
    if (p->children.size() == 1 && p->children.front()->kind == NodeKind::Any) {
      push(prefix, idx, lv, Coordinate::make_rational(var, 0), 1, CellLevel{});
      lift(p->children.front().get(), prefix, idx, lv);
      pop(prefix, idx, lv);
      return;
    }
    std::vector<Root> roots;
    std::vector<Polynomial> family;
    const Node* neq = nullptr;
    for (const auto& c : p->children) {
      if (c->kind == NodeKind::Neq) neq = c.get();
      if (c->kind != NodeKind::Eq) continue;
      family.push_back(c->poly);
      auto rs = isolate_roots(c->poly, var, prefix);
      for (std::size_t k = 0; k < rs.size(); ++k) roots.push_back(Root{rs[k], c.get(), c->poly, static_cast<int>(k + 1)});
    }
    if (neq == nullptr) throw InvariantError("family without an inequation node reached lifting");
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return compare(a.value, b.value) < 0; });
    std::size_t m = roots.size();
    CellLevel sector;
    sector.family = family;
    for (std::size_t i = 0; i <= m; ++i) {
      Rational s;
      if (m == 0) {
        s = 0;
      } else if (i == 0) {
        s = lower_of(roots[0].value) - 1;
      } else if (i == m) {
        s = upper_of(roots[m - 1].value) + 1;
      } else {
        s = between(roots[i - 1].value, roots[i].value);
      }
      sector.below.reset();
      sector.above.reset();
      if (i > 0) sector.below = RootRef{roots[i - 1].poly, roots[i - 1].k};
      if (i < m) sector.above = RootRef{roots[i].poly, roots[i].k};
      push(prefix, idx, lv, Coordinate::make_rational(var, s), static_cast<int>(2 * i + 1), sector);
      lift(neq, prefix, idx, lv);
      pop(prefix, idx, lv);
      if (i == m) break;
      CellLevel sec{true, roots[i].poly, roots[i].k, family};
      push(prefix, idx, lv, roots[i].value, static_cast<int>(2 * i + 2), sec);
      lift(roots[i].owner, prefix, idx, lv);
      pop(prefix, idx, lv);
    }
  }

 private:
  CAD& cad_;

  static void push(std::vector<CoordPtr>& prefix, std::vector<int>& idx, std::vector<CellLevel>& lv, CoordPtr c,
                   int i, CellLevel l) {
    prefix.push_back(std::move(c));
    idx.push_back(i);
    lv.push_back(std::move(l));
  }
  static void pop(std::vector<CoordPtr>& prefix, std::vector<int>& idx, std::vector<CellLevel>& lv) {
    prefix.pop_back();
    idx.pop_back();
    lv.pop_back();
  }
};

}  // namespace

CAD make_semialgebraic(std::shared_ptr<const CCTree> tree) {
  CAD cad;
  cad.n = tree->depth();
  cad.tree = tree;
  std::vector<CoordPtr> prefix;
  std::vector<int> idx;
  std::vector<CellLevel> lv;
  Lifter(cad).lift(tree->root(), prefix, idx, lv);
  return cad;
}

namespace {

bool holds(SasRel rel, int sg) {
  switch (rel) {
    case SasRel::Eq: return sg == 0;
    case SasRel::Neq: return sg != 0;
    case SasRel::Gt: return sg > 0;
    case SasRel::Geq: return sg >= 0;
  }
  return false;
}

}  // namespace

bool evaluate_truth_at(const SemiAlgebraicSystem& s, std::span<const Rational> point) {
  for (const auto& k : s.constraints) {
    if (!holds(k.rel, sgn(k.poly.eval(point)))) return false;
  }
  return true;
}

bool evaluate_truth(const SemiAlgebraicSystem& s, const Cell& c) {
  for (const auto& k : s.constraints) {
    int sg = sign_at(k.poly, c.sample);
    bool ok = holds(k.rel, sg);
    if (!ok) return false;
  }
  return true;
}

namespace {

void annotate(CAD& cad, const std::vector<SemiAlgebraicSystem>& L) {
  for (auto& c : cad.cells) {
    c.truth.clear();
    for (const auto& s : L) c.truth.push_back(evaluate_truth(s, c));
  }
}

void check_arity(const std::vector<SemiAlgebraicSystem>& L, int n) {
  for (const auto& s : L) {
    for (const auto& c : s.constraints) {
      if (c.poly.mvar() >= n) throw ArityError("constraint involves more than " + std::to_string(n) + " variables");
    }
  }
}

}  // namespace

CAD rc_tticad(const std::vector<SemiAlgebraicSystem>& L, int n, Limits limits, std::vector<TraceEntry>* trace,
              std::vector<std::string> names) {
  check_arity(L, n);
  std::vector<ComplexSystem> complex;
  for (const auto& s : L) complex.push_back(corresponding_complex_system(s));
  auto tree = std::make_shared<CCTree>(tticcd(complex, n, limits, trace, std::move(names)));
  CAD cad = make_semialgebraic(tree);
  annotate(cad, L);
  return cad;
}

CAD sign_invariant_cad(const std::vector<SemiAlgebraicSystem>& L, int n, Limits limits) {
  check_arity(L, n);
  ComplexSystem all;
  for (const auto& s : L) {
    for (const auto& c : s.constraints) {
      Constraint k{c.poly.canonical(), Rel::SignOnly};
      if (k.poly.is_constant()) continue;
      if (std::find(all.constraints.begin(), all.constraints.end(), k) == all.constraints.end())
        all.constraints.push_back(k);
    }
  }
  auto tree = std::make_shared<CCTree>(tticcd({all}, n, limits));
  CAD cad = make_semialgebraic(tree);
  annotate(cad, L);
  return cad;
}

std::vector<std::string> check_cylindricity(const CAD& cad) {
  std::vector<std::string> out;
  auto key_str = [](const std::vector<int>& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
  };
  std::map<std::vector<int>, const Cell*> first;
  std::map<std::vector<int>, std::map<int, CoordPtr>> stacks;
  for (const auto& c : cad.cells) {
    if (c.index.size() != static_cast<std::size_t>(cad.n) || c.sample.size() != c.index.size() ||
        c.levels.size() != c.index.size()) {
      out.push_back("cell " + key_str(c.index) + " has inconsistent dimensions");
      continue;
    }
    for (std::size_t k = 0; k < c.index.size(); ++k) {
      if (c.levels[k].section != (c.index[k] % 2 == 0))
        out.push_back("cell " + key_str(c.index) + " level " + std::to_string(k + 1) + " kind disagrees with its index");
      std::vector<int> prefix(c.index.begin(), c.index.begin() + static_cast<std::ptrdiff_t>(k + 1));
      auto [it, fresh] = first.emplace(prefix, &c);
      if (!fresh) {
        const Cell& o = *it->second;
        for (std::size_t j = 0; j <= k; ++j) {
          bool same = o.levels[j].section == c.levels[j].section && o.levels[j].poly == c.levels[j].poly &&
                      o.levels[j].root_index == c.levels[j].root_index &&
                      compare(o.sample[j], c.sample[j]) == 0;
          if (!same) {
            out.push_back("cells " + key_str(o.index) + " and " + key_str(c.index) + " share index prefix " +
                          key_str(prefix) + " but differ in projection");
            break;
          }
        }
      }
      std::vector<int> base(c.index.begin(), c.index.begin() + static_cast<std::ptrdiff_t>(k));
      stacks[base].emplace(c.index[k], c.sample[k]);
    }
  }
  for (const auto& [base, stack] : stacks) {
    int expect = 1;
    CoordPtr prev;
    for (const auto& [i, coord] : stack) {
      if (i != expect) {
        out.push_back("stack over " + key_str(base) + " skips index " + std::to_string(expect));
        break;
      }
      if (prev && compare(prev, coord) >= 0) {
        out.push_back("stack over " + key_str(base) + " is not increasing at index " + std::to_string(i));
        break;
      }
      prev = coord;
      ++expect;
    }
    if (!stack.empty() && stack.rbegin()->first % 2 == 0)
      out.push_back("stack over " + key_str(base) + " ends with a section");
  }
  return out;
}

bool cell_contains(const Cell& cell, std::span<const Rational> point) {
  std::vector<CoordPtr> prefix;
  for (std::size_t k = 0; k < std::min(cell.levels.size(), point.size()); ++k) {
    int var = static_cast<int>(k);
    const CellLevel& l = cell.levels[k];
    auto root = [&](const RootRef& r) -> CoordPtr {
      auto rs = isolate_roots(r.poly, var, prefix);
      if (static_cast<int>(rs.size()) < r.root_index) return nullptr;
      return rs[static_cast<std::size_t>(r.root_index - 1)];
    };
    const Rational& v = point[k];
    if (l.section) {
      CoordPtr r = root(RootRef{l.poly, l.root_index});
      if (!r || compare(r, v) != 0) return false;
    } else {
      if (l.below) {
        CoordPtr r = root(*l.below);
        if (!r || compare(r, v) >= 0) return false;
      }
      if (l.above) {
        CoordPtr r = root(*l.above);
        if (!r || compare(r, v) <= 0) return false;
      }
    }
    prefix.push_back(Coordinate::make_rational(var, v));
  }
  return true;
}

std::vector<Rational> random_interior_point(const Cell& cell, std::mt19937& rng) {
  if (!cell.full_dimensional()) throw std::invalid_argument("random_interior_point needs a full-dimensional cell");
  std::vector<Rational> pt;
  std::vector<CoordPtr> prefix;
  std::uniform_int_distribution<int> frac(1, 999), far(1, 50);
  for (std::size_t k = 0; k < cell.index.size(); ++k) {
    int var = static_cast<int>(k);
    const CellLevel& l = cell.levels[k];
    auto root = [&](const RootRef& r) {
      auto rs = isolate_roots(r.poly, var, prefix);
      if (static_cast<int>(rs.size()) < r.root_index) throw InvariantError("sector bound lost over the cell");
      return rs[static_cast<std::size_t>(r.root_index - 1)];
    };
    Rational u(frac(rng), 1000);
    Rational v;
    if (!l.below && !l.above) {
      v = Rational(frac(rng) - 500, 7);
    } else if (!l.below) {
      v = lower_of(root(*l.above)) - Rational(far(rng), 5);
    } else if (!l.above) {
      v = upper_of(root(*l.below)) + Rational(far(rng), 5);
    } else {
      CoordPtr a = root(*l.below), b = root(*l.above);
      between(a, b);
      Rational lo = upper_of(a), hi = lower_of(b);
      v = lo + (hi - lo) * u;
    }
    v.canonicalize();
    pt.push_back(v);
    prefix.push_back(Coordinate::make_rational(var, v));
  }
  return pt;
}

}  // namespace tticad
