#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace tticad {

struct AbstractConstraint {
  std::string label;
  bool equational = false;
};

using AbstractSystem = std::vector<AbstractConstraint>;

enum class DiagramVariant { Complete, Partial };

struct DiagramNode;
using DiagramNodePtr = std::shared_ptr<const DiagramNode>;

/// One case "label = 0" or "label != 0".  Identical continuations are shared,
/// so the diagram is stored as a DAG while denoting the unfolded tree.
struct DiagramNode {
  std::string label;
  bool zero = false;
  std::vector<DiagramNodePtr> children;
};

struct CombinationDiagram {
  DiagramVariant variant = DiagramVariant::Complete;
  std::vector<DiagramNodePtr> roots;

  bool null() const { return roots.empty(); }
  mpz_class node_count() const;
  mpz_class leaf_count() const;
  // Preorder over the unfolded tree; depth starts at 0.
  void walk(const std::function<void(const DiagramNode&, int)>& visit) const;
  std::string to_string() const;
};

struct DiagramShape {
  int r = 1;
  int s = 0;
  int t = 0;
};

CombinationDiagram build_diagram(const AbstractSystem& cs, DiagramVariant variant);
CombinationDiagram build_diagram_list(const std::vector<AbstractSystem>& systems,
                                      DiagramVariant variant);
mpz_class closed_form(const DiagramShape& shape, DiagramVariant variant);

/// r systems, each with s equations e<i>_<k> followed by t others c<i>_<k>.
std::vector<AbstractSystem> systems_of_shape(const DiagramShape& shape);

}  // namespace tticad
