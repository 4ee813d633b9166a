#include "tticad/cctree.hpp"

#include <algorithm>
#include <sstream>

namespace tticad {

std::size_t Node::index_in_parent() const {
  for (std::size_t i = 0; i < parent->children.size(); ++i) {
    if (parent->children[i].get() == this) return i;
  }
  throw std::logic_error("node not found in its parent");
}

std::unique_ptr<Node> Node::clone(Node* new_parent) const {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->poly = poly;
  n->level = level;
  n->parent = new_parent;
  n->todo = todo;
  n->tombstones = tombstones;
  n->children.reserve(children.size());
  for (const auto& c : children) n->children.push_back(c->clone(n.get()));
  return n;
}

// ---------------------------------------------------------------------------

Tracked::Tracked(CCTree& tree) : tree_(&tree) { tree_->trackers_.push_back(this); }

Tracked::Tracked(Tracked&& other) noexcept : tree_(other.tree_), items_(std::move(other.items_)) {
  for (auto& t : tree_->trackers_) {
    if (t == &other) t = this;
  }
  other.tree_ = nullptr;
}

Tracked::~Tracked() {
  if (tree_ == nullptr) return;
  auto& v = tree_->trackers_;
  v.erase(std::remove(v.begin(), v.end(), this), v.end());
}

void Tracked::add(Node* node, int tag, Polynomial poly) {
  items_.push_back(TrackedItem{node, tag, std::move(poly)});
}

void Tracked::append(Tracked&& other) {
  for (auto& it : other.items_) items_.push_back(std::move(it));
  other.items_.clear();
}

TrackedItem Tracked::pop() {
  TrackedItem it = std::move(items_.front());
  items_.pop_front();
  return it;
}

// ---------------------------------------------------------------------------

CCTree::CCTree(int n) : depth_(n), root_(std::make_unique<Node>()) {
  if (n < 1) throw ArityError("a tree needs at least one variable");
  if (n > kMaxVars) throw ArityError("too many variables");
  extend_with_any(root_.get());
}

CCTree::CCTree(const CCTree& other) : depth_(other.depth_), root_(other.root_->clone(nullptr)) {}

CCTree& CCTree::operator=(const CCTree& other) {
  if (this != &other) {
    depth_ = other.depth_;
    root_ = other.root_->clone(nullptr);
  }
  return *this;
}

void CCTree::extend_with_any(Node* node) {
  while (node->level < depth_) {
    auto c = std::make_unique<Node>();
    c->kind = NodeKind::Any;
    c->level = node->level + 1;
    c->parent = node;
    c->todo = -1;
    Node* raw = c.get();
    node->children.push_back(std::move(c));
    node = raw;
  }
}

void CCTree::sort_children(Node* parent) {
  std::stable_sort(parent->children.begin(), parent->children.end(),
                   [](const std::unique_ptr<Node>& a, const std::unique_ptr<Node>& b) {
                     bool ae = a->kind == NodeKind::Eq, be = b->kind == NodeKind::Eq;
                     if (ae != be) return ae;
                     if (ae) return a->poly < b->poly;
                     return false;
                   });
}

Node* CCTree::insert_child(Node* parent, std::unique_ptr<Node> child) {
  child->parent = parent;
  child->level = parent->level + 1;
  Node* raw = child.get();
  parent->children.push_back(std::move(child));
  sort_children(parent);
  return raw;
}

namespace {

// Child indices leading from anc down to n, or false if anc is not an ancestor-or-self.
bool relative_path(const Node* anc, const Node* n, std::vector<std::size_t>& out) {
  out.clear();
  while (n != nullptr && n != anc) {
    if (n->parent == nullptr) return false;
    out.push_back(n->index_in_parent());
    n = n->parent;
  }
  if (n == nullptr) return false;
  std::reverse(out.begin(), out.end());
  return true;
}

Node* follow(Node* n, const std::vector<std::size_t>& rel) {
  for (auto i : rel) n = n->children.at(i).get();
  return n;
}

}  // namespace

Node* CCTree::split_copy(Node* node) {
  Node* parent = node->parent;
  parent->children.push_back(node->clone(parent));
  Node* copy = parent->children.back().get();
  std::vector<std::size_t> rel;
  for (Tracked* t : trackers_) {
    std::size_t n = t->items_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (relative_path(node, t->items_[i].node, rel)) {
        TrackedItem dup = t->items_[i];
        dup.node = follow(copy, rel);
        t->items_.push_back(std::move(dup));
      }
    }
  }
  return copy;
}

Node* CCTree::truncate(Node* leaf) {
  Node* cur = leaf;
  while (cur->parent != nullptr) {
    Node* parent = cur->parent;
    if (cur->kind == NodeKind::Eq) parent->tombstones.push_back(cur->poly);
    for (Tracked* t : trackers_) {
      auto& items = t->items_;
      items.erase(std::remove_if(items.begin(), items.end(),
                                 [cur](const TrackedItem& it) { return it.node == cur; }),
                  items.end());
    }
    parent->children.erase(parent->children.begin() +
                           static_cast<std::ptrdiff_t>(cur->index_in_parent()));
    if (!parent->children.empty() || parent->parent == nullptr) return parent;
    cur = parent;
  }
  return cur;
}

bool CCTree::is_complete() const {
  bool ok = true;
  auto rec = [&](auto&& self, const Node* n) -> void {
    if (!ok) return;
    if (n->children.empty()) {
      if (n->level != depth_) ok = false;
      return;
    }
    bool has_eq = false, has_neq = false, has_any = false;
    for (const auto& c : n->children) {
      has_eq |= c->kind == NodeKind::Eq;
      has_neq |= c->kind == NodeKind::Neq;
      has_any |= c->kind == NodeKind::Any;
    }
    if (has_any ? n->children.size() != 1 : !has_neq) ok = false;
    if (has_neq && !has_eq) ok = false;
    for (const auto& c : n->children) self(self, c.get());
  };
  rec(rec, root_.get());
  return ok;
}

std::vector<Node*> CCTree::leaves() {
  std::vector<Node*> out;
  auto rec = [&](auto&& self, Node* n) -> void {
    if (n->children.empty()) {
      if (n->parent != nullptr) out.push_back(n);
      return;
    }
    for (auto& c : n->children) self(self, c.get());
  };
  rec(rec, root_.get());
  return out;
}

std::vector<const Node*> CCTree::leaves() const {
  std::vector<const Node*> out;
  for (Node* n : const_cast<CCTree*>(this)->leaves()) out.push_back(n);
  return out;
}

std::size_t CCTree::node_count() const {
  std::size_t count = 0;
  auto rec = [&](auto&& self, const Node* n) -> void {
    ++count;
    for (const auto& c : n->children) self(self, c.get());
  };
  rec(rec, root_.get());
  return count - 1;
}

std::vector<const Node*> path_to(const Node* node) {
  std::vector<const Node*> out;
  for (; node != nullptr && node->parent != nullptr; node = node->parent) out.push_back(node);
  std::reverse(out.begin(), out.end());
  return out;
}

void make_complete(CCTree& tree) {
  auto rec = [&](auto&& self, Node* n) -> void {
    if (n->level == tree.depth()) return;
    if (n->children.empty()) {
      tree.extend_with_any(n);
      n->tombstones.clear();
      return;
    }
    bool has_neq = false, has_any = false;
    Polynomial product(1);
    for (const auto& c : n->children) {
      has_neq |= c->kind == NodeKind::Neq;
      has_any |= c->kind == NodeKind::Any;
      if (c->kind == NodeKind::Eq) product *= c->poly;
    }
    std::vector<Node*> kids;
    for (auto& c : n->children) kids.push_back(c.get());
    if (!has_any && !has_neq) {
      auto neq = std::make_unique<Node>();
      neq->kind = NodeKind::Neq;
      neq->poly = product.canonical();
      tree.extend_with_any(tree.insert_child(n, std::move(neq)));
    } else if (!has_any) {
      for (const auto& p : n->tombstones) {
        auto eq = std::make_unique<Node>();
        eq->kind = NodeKind::Eq;
        eq->poly = p;
        tree.extend_with_any(tree.insert_child(n, std::move(eq)));
      }
    }
    n->tombstones.clear();
    for (Node* c : kids) self(self, c);
  };
  rec(rec, tree.root());
}

Node* next_path_todo(CCTree& tree, int frame) {
  Node* found = nullptr;
  auto rec = [&](auto&& self, Node* n) -> void {
    if (found != nullptr) return;
    if (n->children.empty()) {
      if (n->parent != nullptr && n->todo == frame) found = n;
      return;
    }
    for (auto& c : n->children) self(self, c.get());
  };
  rec(rec, tree.root());
  return found;
}

bool path_membership(std::span<const Rational> pt, const Node* leaf) {
  auto path = path_to(leaf);
  if (pt.size() != path.size()) {
    throw ArityError("point has " + std::to_string(pt.size()) + " coordinates, path has " +
                     std::to_string(path.size()) + " levels");
  }
  for (const Node* n : path) {
    if (n->kind == NodeKind::Any) continue;
    Rational v = n->poly.eval(pt.subspan(0, n->level));
    if ((n->kind == NodeKind::Eq) != (v == 0)) return false;
  }
  return true;
}

std::string node_label(const Node* node, std::span<const std::string> names) {
  switch (node->kind) {
    case NodeKind::Root:
      return "root";
    case NodeKind::Any: {
      int v = node->level - 1;
      return "any " + (static_cast<std::size_t>(v) < names.size() ? names[v]
                                                                  : "x" + std::to_string(node->level));
    }
    case NodeKind::Eq:
      return node->poly.to_string(names) + " = 0";
    case NodeKind::Neq:
      return node->poly.to_string(names) + " != 0";
  }
  return "";
}

std::string format_tree(const CCTree& tree, std::span<const std::string> names) {
  std::ostringstream os;
  auto rec = [&](auto&& self, const Node* n, int indent) -> void {
    for (const auto& c : n->children) {
      os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << node_label(c.get(), names);
      os << (c->children.empty() ? "\n" : ":\n");
      self(self, c.get(), indent + 1);
    }
  };
  rec(rec, tree.root(), 0);
  return os.str();
}

}  // namespace tticad
