#include "tticad/combdiag.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace tticad {

namespace {

std::vector<DiagramNodePtr> build(AbstractSystem cs, DiagramVariant variant,
                                  const std::vector<DiagramNodePtr>& tail) {
  if (cs.empty()) return tail;
  auto it = std::find_if(cs.begin(), cs.end(), [](const auto& c) { return c.equational; });
  if (it == cs.end()) it = cs.begin();
  AbstractConstraint psi = *it;
  cs.erase(it);
  std::vector<DiagramNodePtr> rest = build(cs, variant, tail);
  auto zero = std::make_shared<DiagramNode>(DiagramNode{psi.label, true, rest});
  auto nonzero = std::make_shared<DiagramNode>(DiagramNode{psi.label, false, rest});
  if (psi.equational && variant == DiagramVariant::Partial) nonzero->children = tail;
  return {zero, nonzero};
}

template <class F>
mpz_class memo_sum(const std::vector<DiagramNodePtr>& roots, F leaf_value) {
  std::unordered_map<const DiagramNode*, mpz_class> memo;
  std::function<mpz_class(const DiagramNode*)> count = [&](const DiagramNode* n) {
    auto found = memo.find(n);
    if (found != memo.end()) return found->second;
    mpz_class c = leaf_value(*n);
    for (const auto& ch : n->children) c += count(ch.get());
    memo.emplace(n, c);
    return c;
  };
  mpz_class total = 0;
  for (const auto& r : roots) total += count(r.get());
  return total;
}

}  // namespace

mpz_class CombinationDiagram::node_count() const {
  return memo_sum(roots, [](const DiagramNode&) { return mpz_class(1); });
}

mpz_class CombinationDiagram::leaf_count() const {
  return memo_sum(roots, [](const DiagramNode& n) { return mpz_class(n.children.empty() ? 1 : 0); });
}

void CombinationDiagram::walk(const std::function<void(const DiagramNode&, int)>& visit) const {
  std::function<void(const DiagramNode&, int)> rec = [&](const DiagramNode& n, int depth) {
    visit(n, depth);
    for (const auto& ch : n.children) rec(*ch, depth + 1);
  };
  for (const auto& r : roots) rec(*r, 0);
}

std::string CombinationDiagram::to_string() const {
  std::ostringstream os;
  walk([&](const DiagramNode& n, int depth) {
    os << std::string(2 * depth, ' ') << n.label << (n.zero ? " = 0" : " != 0") << "\n";
  });
  return os.str();
}

CombinationDiagram build_diagram(const AbstractSystem& cs, DiagramVariant variant) {
  return {variant, build(cs, variant, {})};
}

CombinationDiagram build_diagram_list(const std::vector<AbstractSystem>& systems,
                                      DiagramVariant variant) {
  std::vector<DiagramNodePtr> tail;
  for (auto it = systems.rbegin(); it != systems.rend(); ++it) tail = build(*it, variant, tail);
  return {variant, tail};
}

mpz_class closed_form(const DiagramShape& shape, DiagramVariant variant) {
  mpz_class v;
  if (variant == DiagramVariant::Complete) {
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(shape.r * (shape.s + shape.t) + 1));
    return v - 2;
  }
  mpz_class base = shape.s;
  base += mpz_class(1) << shape.t;
  mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(shape.r));
  return 2 * v - 2;
}

std::vector<AbstractSystem> systems_of_shape(const DiagramShape& shape) {
  std::vector<AbstractSystem> out;
  for (int i = 1; i <= shape.r; ++i) {
    AbstractSystem cs;
    for (int k = 1; k <= shape.s; ++k)
      cs.push_back({"e" + std::to_string(i) + "_" + std::to_string(k), true});
    for (int k = 1; k <= shape.t; ++k)
      cs.push_back({"c" + std::to_string(i) + "_" + std::to_string(k), false});
    out.push_back(cs);
  }
  return out;
}

}  // namespace tticad
