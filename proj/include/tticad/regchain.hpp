#pragma once

// Case-splitting engine: regularity tests, regular gcds and squarefree parts
// modulo the constraints of a tree path.

#include <vector>

#include "tticad/cctree.hpp"

namespace tticad {

/// Raised when an internal consistency check fails.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Pseudo-reduction of q modulo the Eq-polynomials on the path root..node,
/// highest level first.  Zero iff q vanishes on the path by the chain alone.
Polynomial reduce(const Polynomial& q, const Node* node);

/// Splits node (and, where forced, its ancestors) until q is either
/// identically zero or nowhere zero on each resulting node.  Returns the
/// nodes that replace `node`, tag 1 where q vanishes and tag 0 elsewhere.
/// q may only involve x_1..x_level.
Tracked refine(CCTree& tree, Node* node, const Polynomial& q);

/// Regular gcd of a and b in variable var over the path ending at parent
/// (whose level is var).  The leading coefficient of the higher-degree input
/// must be nowhere zero on that path, and so must the other one's unless
/// b_may_degenerate is set; then cases where every subresultant coefficient
/// and the lower input's leading coefficient vanish come back with tag 1.
/// Returns replacement nodes of parent with the gcd.
Tracked regular_gcd(CCTree& tree, Node* parent, const Polynomial& a, const Polynomial& b, int var,
                    bool b_may_degenerate = false);

/// Squarefree part of r in var over the path ending at parent, with the
/// same leading-coefficient requirement.
Tracked squarefree_part(CCTree& tree, Node* parent, const Polynomial& r, int var);

// Path-context interface -----------------------------------------------------

struct ContextConstraint {
  NodeKind kind = NodeKind::Any;  // Any, Eq or Neq
  Polynomial poly;
};

/// One constraint per level, lowest level first.
using PathContext = std::vector<ContextConstraint>;

enum class Verdict { IdenticallyZero, Invertible };

template <class R>
struct Case {
  PathContext context;
  R result;
};

struct SquarefreeCase {
  bool vanishes = false;  // p is identically zero on the case
  std::vector<Polynomial> factors;
};

PathContext context_of(const Node* node);
/// A tree of depth max(ctx.size(), depth) whose first path is ctx followed by "any" nodes.
CCTree tree_from_context(const PathContext& ctx, int depth, Node** node_at_ctx_end);

std::vector<Case<Verdict>> regularity_test(const Polynomial& p, const PathContext& ctx);
/// var is the 0-based index of the main variable, equal to ctx.size().
std::vector<Case<Polynomial>> regular_gcd(const Polynomial& p, const Polynomial& q, int var,
                                          const PathContext& ctx);
std::vector<Case<SquarefreeCase>> squarefree_mod_ctx(const Polynomial& p, int var,
                                                     const PathContext& ctx);

}  // namespace tticad
