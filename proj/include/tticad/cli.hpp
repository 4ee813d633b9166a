#pragma once

// Problem orchestration and output formats behind the command line tool.

#include <optional>
#include <string>
#include <vector>

#include "tticad/parser.hpp"
#include "tticad/realify.hpp"

namespace tticad {

/// Processing order: systems by 1-based position, each optionally with a
/// permutation of its own constraints, e.g. "2,1[2,1,3]".
struct ProcessingOrder {
  std::vector<int> systems;
  std::vector<std::optional<std::vector<int>>> constraints;
};

/// Throws ParseError unless text names a permutation of the sizes given.
ProcessingOrder parse_order(const std::string& text, const std::vector<std::size_t>& system_sizes);
std::string format_order(const ProcessingOrder& order);
Problem apply_order(const Problem& problem, const ProcessingOrder& order);
/// Every order obtained by permuting systems and the equations inside each
/// system; other constraints keep their place after the equations.
std::vector<ProcessingOrder> equation_orders(const Problem& problem);

struct RunOptions {
  std::optional<Mode> mode;
  std::optional<std::string> order;
  Limits limits;
};

struct RunResult {
  Problem problem;  // after applying the order
  Mode mode = Mode::Tti;
  CAD cad;
  std::vector<TraceEntry> trace;
  double seconds = 0;
};

/// Throws ParseError for a bad order, ResourceLimitError when a cap is hit.
RunResult run(const Problem& problem, const RunOptions& options = {});
std::vector<SemiAlgebraicSystem> systems_of(const Problem& problem);
/// Number of cells of the induced decomposition of R^k, for k = 1..n.
std::vector<std::size_t> cells_per_level(const CAD& cad);
std::string summary(const RunResult& result);

struct SampleDump {
  bool rational = true;
  std::string value;  // "num/den" when rational
  std::string poly;   // otherwise a root of poly inside (lo, hi)
  std::string lo, hi;
  bool operator==(const SampleDump&) const = default;
};

struct BoundDump {
  std::string poly;
  int root_index = 0;
  bool operator==(const BoundDump&) const = default;
};

struct LevelDump {
  bool section = false;
  std::optional<BoundDump> root;  // sections
  std::optional<BoundDump> below;
  std::optional<BoundDump> above;
  bool operator==(const LevelDump&) const = default;
};

struct CellRecord {
  std::vector<int> index;
  int dimension = 0;
  std::vector<LevelDump> levels;
  std::vector<SampleDump> sample;
  std::vector<bool> truth;
  bool operator==(const CellRecord&) const = default;
};

struct CellDump {
  std::vector<std::string> variables;
  std::vector<std::string> systems;
  std::string mode;
  std::vector<CellRecord> cells;
  bool operator==(const CellDump&) const = default;

  std::string to_json() const;
  /// Throws ParseError on malformed input.
  static CellDump from_json(const std::string& text);
};

CellDump make_cell_dump(const RunResult& result);

struct Box {
  double xmin, xmax, ymin, ymax;
};

class UnsupportedDimension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default drawing window: every sample point plus a margin of 1.
Box default_box(const CAD& cad);
/// Draws a decomposition of the plane; cells are shaded by truth vector.
std::string emit_svg(const CAD& cad, const Box& box, const std::vector<std::string>& names = {"x", "y"});

struct BenchRow {
  std::string problem;
  int n = 0;
  std::string status;  // "ok", "timeout", "error"
  std::size_t cells = 0;
  double seconds = 0;
};

std::string format_bench(const std::vector<BenchRow>& rows);

}  // namespace tticad
