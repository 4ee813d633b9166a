#pragma once

// From complex trees to real cylindrical decompositions with truth values.

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tticad/algebraic.hpp"
#include "tticad/cctree.hpp"
#include "tticad/parser.hpp"
#include "tticad/ttialgo.hpp"

namespace tticad {

enum class SasRel { Eq, Gt, Geq, Neq };

struct SasConstraint {
  Polynomial poly;  // constraint reads poly REL 0
  SasRel rel = SasRel::Eq;
};

struct SemiAlgebraicSystem {
  std::vector<SasConstraint> constraints;
};

/// Rewrites p < 0 as -p > 0 and p <= 0 as -p >= 0.
SemiAlgebraicSystem normalize_system(const std::vector<RawConstraint>& raw);

/// eq -> eq, neq -> neq, gt -> neq, geq -> sign-only.
ComplexSystem corresponding_complex_system(const SemiAlgebraicSystem& s);

struct RootRef {
  Polynomial poly;
  int root_index = 0;
};

struct CellLevel {
  bool section = false;
  Polynomial poly;                  // the section's defining polynomial
  int root_index = 0;               // 1-based among the real roots of poly over the base cell
  std::vector<Polynomial> family;   // Eq polynomials whose roots form this stack
  std::optional<RootRef> below;     // sectors only: the bounding sections, if any
  std::optional<RootRef> above;
};

struct Cell {
  std::vector<int> index;  // 1-based stack positions; even = section
  std::vector<CellLevel> levels;
  std::vector<CoordPtr> sample;
  std::vector<bool> truth;
  const Node* leaf = nullptr;

  int dimension() const;
  bool full_dimensional() const { return dimension() == static_cast<int>(index.size()); }
};

struct CAD {
  int n = 0;
  std::shared_ptr<const CCTree> tree;
  std::vector<Cell> cells;

  std::size_t full_dimensional_count() const;
  /// Number of cells of the induced decomposition of the x_1 line.
  std::size_t base_line_count() const;
};

/// Real cells refining the complex tree, lexicographically ordered.
CAD make_semialgebraic(std::shared_ptr<const CCTree> tree);

bool evaluate_truth(const SemiAlgebraicSystem& s, const Cell& c);
bool evaluate_truth_at(const SemiAlgebraicSystem& s, std::span<const Rational> point);

/// Truth-table invariant decomposition of the systems.
CAD rc_tticad(const std::vector<SemiAlgebraicSystem>& L, int n, Limits limits = {},
              std::vector<TraceEntry>* trace = nullptr, std::vector<std::string> names = {});

/// Sign-invariant decomposition for every polynomial of the systems; truth
/// values are still recorded per system.
CAD sign_invariant_cad(const std::vector<SemiAlgebraicSystem>& L, int n, Limits limits = {});

/// Empty when cells sharing an index prefix have identical projections and
/// each stack is a strictly increasing sector/section alternation.
std::vector<std::string> check_cylindricity(const CAD& cad);

/// Whether the point satisfies the cell's section/sector description.  A
/// shorter point is tested against the cell's projection.
bool cell_contains(const Cell& cell, std::span<const Rational> point);
/// A random rational point inside a full-dimensional cell.
std::vector<Rational> random_interior_point(const Cell& cell, std::mt19937& rng);

}  // namespace tticad
