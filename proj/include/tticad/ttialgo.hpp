#pragma once

// Truth-table invariant complex cylindrical decomposition.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "tticad/cctree.hpp"

namespace tticad {

enum class Rel { Eq, Neq, SignOnly };

struct Constraint {
  Polynomial poly;
  Rel rel = Rel::SignOnly;
  bool operator==(const Constraint&) const = default;
};

struct ComplexSystem {
  std::vector<Constraint> constraints;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_nodes = 0;  // 0: unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// One step of the case analysis: the equational decisions taken so far and
/// what was done under them.
struct TraceEntry {
  std::vector<std::string> conditions;
  std::string action;
};

class Decomposer {
 public:
  Decomposer(CCTree& tree, Limits limits = {}, std::vector<std::string> names = {});

  /// Refines the tree at leaf so c is sign-invariant above it; for Eq and
  /// Neq constraints, leaves where c is false are removed.  Returns the
  /// surviving leaves that replace `leaf`.
  std::vector<Node*> intersect_path(Node* leaf, const Constraint& c);
  void intersect_poly_set(const std::vector<Constraint>& F, Node* leaf);
  void intersect_lcs(std::vector<ComplexSystem> L, Node* leaf);

  const std::vector<TraceEntry>& trace() const { return trace_; }

 private:
  CCTree& tree_;
  Limits limits_;
  std::vector<std::string> names_;
  int next_frame_ = 0;
  std::vector<std::string> conditions_;
  std::vector<TraceEntry> trace_;

  void check_limits() const;
  void record(const std::string& action);
  std::string show(const Polynomial& p) const;
};

/// Complete tree with every system truth-invariant on every path.
CCTree tticcd(const std::vector<ComplexSystem>& L, int n, Limits limits = {},
              std::vector<TraceEntry>* trace = nullptr, std::vector<std::string> names = {});

}  // namespace tticad
