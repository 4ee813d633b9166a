#pragma once

// Exact real sample coordinates and real root isolation over them.

#include <memory>
#include <vector>

#include "tticad/polynomial.hpp"

namespace tticad {

struct Interval {
  Rational lo, hi;
};

struct Coordinate;
using CoordPtr = std::shared_ptr<Coordinate>;

/// A real number that is either rational or the unique root of
/// def(prefix, x_var) in the open interval (lo, hi).  Endpoints are never
/// roots; refinement may discover the root is rational.
struct Coordinate {
  int var = 0;
  bool rational = true;
  Rational value;                // when rational
  Polynomial def;                // in x_0..x_var, nonzero leading coefficient at prefix
  std::vector<CoordPtr> prefix;  // coordinates of x_0..x_var-1
  Rational lo, hi;
  int sign_lo = 0;               // sign of def(prefix, lo)

  static CoordPtr make_rational(int var, Rational v);
  /// Halves the isolating interval.
  void bisect();
  /// Bisects until the interval is narrower than width (or the value is exact).
  void refine_to(const Rational& width);
  Interval enclosure() const;
  double approx() const;
};

/// Sign of p at the point; p may only involve x_0..x_{point.size()-1}.
int sign_at(const Polynomial& p, const std::vector<CoordPtr>& point);
/// Exact zero test using the defining polynomials of the coordinates.
bool is_zero_at(const Polynomial& p, const std::vector<CoordPtr>& point);
/// Encloses p's value using the current coordinate intervals.
Interval eval_interval(const Polynomial& p, const std::vector<CoordPtr>& point);

/// -1, 0, 1; distinct numbers are separated by refinement.  Throws
/// InvariantError-like std::logic_error if equality cannot be decided.
int compare(const CoordPtr& a, const CoordPtr& b);
int compare(const CoordPtr& a, const Rational& b);

/// Real roots of p(prefix, x_var) in increasing order.  p must not vanish
/// identically over the prefix.  When the prefix is rational, p need not be
/// squarefree; otherwise it must be squarefree over the prefix.
std::vector<CoordPtr> isolate_roots(const Polynomial& p, int var, const std::vector<CoordPtr>& prefix);

/// Number of sign variations in a sequence, zeros skipped.
int sign_variations(const std::vector<int>& signs);

}  // namespace tticad
