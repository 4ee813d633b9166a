#pragma once

// Complex cylindrical trees: each node of depth i carries "any x_i",
// "p = 0" or "p != 0" with p in Q[x_1..x_i] of main variable x_i.

#include <deque>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tticad/polynomial.hpp"

namespace tticad {

enum class NodeKind { Root, Any, Eq, Neq };

struct Node {
  NodeKind kind = NodeKind::Root;
  Polynomial poly;  // zero for Root and Any
  int level = 0;    // the node constrains x_level (variable index level-1)
  Node* parent = nullptr;
  std::vector<std::unique_ptr<Node>> children;
  /// Pending-work marker on leaves: the id of the processing frame that
  /// still has to visit this path, or -1.
  int todo = -1;
  /// Polynomials of Eq children removed by truncation.
  std::vector<Polynomial> tombstones;

  bool is_leaf() const { return children.empty(); }
  std::size_t index_in_parent() const;
  /// Deep copy, attached to new_parent (not inserted into its child list).
  std::unique_ptr<Node> clone(Node* new_parent) const;
};

class CCTree;

struct TrackedItem {
  Node* node;
  int tag = 0;
  Polynomial poly;
};

/// A work or result list of nodes that stays valid under refinement: when a
/// node's ancestor is duplicated, the duplicate of every tracked node below
/// it is added with the same payload; truncated nodes are dropped.
class Tracked {
 public:
  explicit Tracked(CCTree& tree);
  Tracked(Tracked&& other) noexcept;
  Tracked(const Tracked&) = delete;
  Tracked& operator=(const Tracked&) = delete;
  Tracked& operator=(Tracked&&) = delete;
  ~Tracked();

  void add(Node* node, int tag = 0, Polynomial poly = {});
  void append(Tracked&& other);
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  TrackedItem pop();
  const std::deque<TrackedItem>& items() const { return items_; }

 private:
  friend class CCTree;
  CCTree* tree_;
  std::deque<TrackedItem> items_;
};

class CCTree {
 public:
  /// The initial tree: one path of n "any" nodes.
  explicit CCTree(int n);
  CCTree(const CCTree& other);
  CCTree& operator=(const CCTree& other);
  CCTree(CCTree&&) noexcept = default;
  CCTree& operator=(CCTree&&) noexcept = default;

  int depth() const { return depth_; }
  Node* root() { return root_.get(); }
  const Node* root() const { return root_.get(); }

  /// All leaves at depth n exist and every family is closed.
  bool is_complete() const;
  std::vector<Node*> leaves();
  std::vector<const Node*> leaves() const;
  std::size_t node_count() const;

  /// Appends "any" nodes below node down to depth n.
  void extend_with_any(Node* node);
  /// Inserts a child and restores the canonical child order.
  Node* insert_child(Node* parent, std::unique_ptr<Node> child);
  /// Eq children by polynomial order, then the Neq child.
  static void sort_children(Node* parent);
  /// Inserts a deep copy of node as its sibling (appended; call
  /// sort_children after adjusting the copy) and updates trackers.
  Node* split_copy(Node* node);
  /// Removes a leaf; childless ancestors are removed too.  Returns the
  /// nearest surviving ancestor.
  Node* truncate(Node* leaf);

 private:
  friend class Tracked;
  int depth_;
  std::unique_ptr<Node> root_;
  std::vector<Tracked*> trackers_;
};

/// Nodes root..leaf excluding the root.
std::vector<const Node*> path_to(const Node* node);

/// Restores completeness after truncation: missing Neq siblings and
/// truncated Eq branches are re-added with "any" continuations.
void make_complete(CCTree& tree);

/// Leftmost leaf carrying the given marker, or nullptr.
Node* next_path_todo(CCTree& tree, int frame);

struct Violation {
  std::string kind;  // "structure", "squarefree", "coprime", "completeness", "leading-coefficient"
  std::string where;
  std::string detail;
};

/// Checks the defining conditions of a complete tree family by family.
std::vector<Violation> validate_cct(const CCTree& tree, unsigned samples = 20);

/// True iff pt satisfies every constraint on the path root..leaf.
bool path_membership(std::span<const Rational> pt, const Node* leaf);

std::string node_label(const Node* node, std::span<const std::string> names);
/// Indented text rendering, one node per line.
std::string format_tree(const CCTree& tree, std::span<const std::string> names = {});

}  // namespace tticad
