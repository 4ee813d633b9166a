#pragma once

// Exact sparse multivariate polynomials over Q with a fixed variable ordering
// x1 < x2 < ... < xn.  Variables are addressed by 0-based index internally;
// the "level" of a variable is index + 1.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tticad {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kMaxVars = 8;

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by divexact when the divisor does not divide the dividend.
class ExactnessError : public PolyError {
 public:
  using PolyError::PolyError;
};

/// Raised when an operation is given too few coordinates.
class ArityError : public PolyError {
 public:
  using PolyError::PolyError;
};

/// Raised for degenerate inputs such as the resultant of two constants.
class DegenerateInputError : public PolyError {
 public:
  using PolyError::PolyError;
};

using Monomial = std::array<std::uint16_t, kMaxVars>;

struct Term {
  Monomial exp{};
  Rational coef;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(Rational c);

  static Polynomial variable(int var, unsigned degree = 1);
  static Polynomial monomial(const Monomial& m, Rational c);
  /// Builds sum_i coeffs[i] * var^i.
  static Polynomial from_coeffs(int var, std::span<const Polynomial> coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; throws if the polynomial is not constant.
  Rational constant_value() const;

  /// Greatest variable index present, or -1 for constants.
  int mvar() const;
  unsigned degree(int var) const;
  unsigned total_degree() const;
  bool depends_on(int var) const { return degree(var) > 0; }

  /// Leading coefficient with respect to var (a polynomial free of var).
  Polynomial lc(int var) const;
  /// p - lc(p,var) * var^deg.
  Polynomial reductum(int var) const;
  /// coeffs[i] is the coefficient of var^i.
  std::vector<Polynomial> coeffs(int var) const;
  Polynomial coeff(int var, unsigned degree) const;
  Polynomial derivative(int var) const;

  /// Leading term in the lex order with the highest variable most significant.
  const Term& leading_term() const { return terms_.front(); }
  const std::vector<Term>& terms() const { return terms_; }

  Rational eval(std::span<const Rational> point) const;
  Polynomial substitute(int var, const Rational& value) const;
  /// Substitutes var := q.
  Polynomial compose(int var, const Polynomial& q) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Deterministic total order (by main variable, degree, then terms).
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  /// Rational content: positive c with p / c integral and primitive.
  Rational numeric_content() const;
  /// Primitive over the integers with positive leading coefficient.
  Polynomial canonical() const;
  /// Sign of the leading coefficient (0 for the zero polynomial).
  int leading_sign() const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::vector<Term> terms_;  // sorted, leading term first, no zero coefficients
  void normalize();
  friend class PolyBuilder;
};

/// Lexicographic monomial comparison, highest variable most significant.
int compare_monomials(const Monomial& a, const Monomial& b);

/// Exact quotient p / q; throws ExactnessError if q does not divide p.
Polynomial divexact(const Polynomial& p, const Polynomial& q);
/// Pseudo-remainder lc(q)^(deg p - deg q + 1) * p mod q with respect to var.
Polynomial prem(const Polynomial& p, const Polynomial& q, int var);
/// Pseudo-quotient matching prem.
Polynomial pquo(const Polynomial& p, const Polynomial& q, int var);
/// Sparse pseudo-remainder: only multiplies by lc(q) as often as needed.
Polynomial sprem(const Polynomial& p, const Polynomial& q, int var);

/// Greatest common divisor over Q[x1..xn], canonical.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// gcd of the coefficients of p with respect to var.
Polynomial content(const Polynomial& p, int var);
Polynomial primitive_part(const Polynomial& p, int var);

std::string rational_to_string(const Rational& q);

}  // namespace tticad
