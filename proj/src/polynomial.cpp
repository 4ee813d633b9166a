#include "tticad/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace tticad {

int compare_monomials(const Monomial& a, const Monomial& b) {
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

void check_var(int var) {
  if (var < 0 || var >= kMaxVars) throw ArityError("variable index out of range");
}

}  // namespace

class PolyBuilder {
 public:
  static Polynomial from_unsorted(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }
  static Polynomial from_sorted(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }
};

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return compare_monomials(a.exp, b.exp) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && compare_monomials(out.back().exp, t.exp) == 0) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, Rational(c)});
}

Polynomial::Polynomial(Rational c) {
  c.canonicalize();
  if (c != 0) terms_.push_back(Term{Monomial{}, std::move(c)});
}

Polynomial Polynomial::variable(int var, unsigned degree) {
  check_var(var);
  Monomial m{};
  m[var] = static_cast<std::uint16_t>(degree);
  return monomial(m, Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, Rational c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back(Term{m, std::move(c)});
  return p;
}

Polynomial Polynomial::from_coeffs(int var, std::span<const Polynomial> coeffs) {
  check_var(var);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& t : coeffs[i].terms_) {
      Term u = t;
      u.exp[var] = static_cast<std::uint16_t>(u.exp[var] + i);
      terms.push_back(std::move(u));
    }
  }
  return PolyBuilder::from_unsorted(std::move(terms));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && compare_monomials(terms_[0].exp, Monomial{}) == 0);
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw PolyError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

int Polynomial::mvar() const {
  if (terms_.empty()) return -1;
  // The leading term carries the highest variable present.
  const auto& e = terms_.front().exp;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (e[i] > 0) return i;
  }
  return -1;
}

unsigned Polynomial::degree(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exp[var]);
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (auto e : t.exp) s += e;
    d = std::max(d, s);
  }
  return d;
}

Polynomial Polynomial::coeff(int var, unsigned degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] == degree) {
      Term u = t;
      u.exp[var] = 0;
      out.push_back(std::move(u));
    }
  }
  return PolyBuilder::from_unsorted(std::move(out));
}

Polynomial Polynomial::lc(int var) const {
  if (is_zero()) return {};
  return coeff(var, degree(var));
}

Polynomial Polynomial::reductum(int var) const {
  if (is_zero()) return {};
  unsigned d = degree(var);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] != d) out.push_back(t);
  }
  return PolyBuilder::from_sorted(std::move(out));
}

std::vector<Polynomial> Polynomial::coeffs(int var) const {
  std::vector<std::vector<Term>> buckets(is_zero() ? 0 : degree(var) + 1);
  for (const auto& t : terms_) {
    Term u = t;
    u.exp[var] = 0;
    buckets[t.exp[var]].push_back(std::move(u));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(PolyBuilder::from_unsorted(std::move(b)));
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term u = t;
    u.coef *= t.exp[var];
    u.exp[var] = static_cast<std::uint16_t>(u.exp[var] - 1);
    out.push_back(std::move(u));
  }
  return PolyBuilder::from_unsorted(std::move(out));
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  int mv = mvar();
  if (mv >= static_cast<int>(point.size())) {
    throw ArityError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates but polynomial involves x" + std::to_string(mv + 1));
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int i = 0; i <= mv; ++i) {
      for (unsigned k = 0; k < t.exp[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(int var, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u = t;
    if (t.exp[var] > 0) {
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), t.exp[var]);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), t.exp[var]);
      pw.canonicalize();
      u.coef *= pw;
      u.exp[var] = 0;
    }
    out.push_back(std::move(u));
  }
  return PolyBuilder::from_unsorted(std::move(out));
}

Polynomial Polynomial::compose(int var, const Polynomial& q) const {
  auto cs = coeffs(var);
  Polynomial r;
  for (std::size_t i = cs.size(); i-- > 0;) {
    r = r * q + cs[i];
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare_monomials(a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (subtract) t.coef = -t.coef;
      out.push_back(std::move(t));
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back(Term{a[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && compare_monomials(b.terms_[0].exp, Monomial{}) == 0) {
    return a * b.terms_[0].coef;
  }
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.push_back(Term{mono_mul(s.exp, t.exp), s.coef * t.coef});
    }
  }
  return PolyBuilder::from_unsorted(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (compare_monomials(a.terms_[i].exp, b.terms_[i].exp) != 0) return false;
    if (a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  int ma = a.mvar(), mb = b.mvar();
  if (ma != mb) return ma < mb;
  if (ma >= 0) {
    unsigned da = a.degree(ma), db = b.degree(mb);
    if (da != db) return da < db;
  }
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare_monomials(a.terms_[i].exp, b.terms_[i].exp);
    if (c != 0) return c < 0;
    if (a.terms_[i].coef != b.terms_[i].coef) return a.terms_[i].coef < b.terms_[i].coef;
  }
  return a.terms_.size() < b.terms_.size();
}

Rational Polynomial::numeric_content() const {
  if (terms_.empty()) return Rational(0);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Polynomial Polynomial::canonical() const {
  if (terms_.empty()) return {};
  Rational c = numeric_content();
  if (terms_.front().coef < 0) c = -c;
  Polynomial r = *this;
  Rational inv = 1 / c;
  r *= inv;
  return r;
}

int Polynomial::leading_sign() const {
  if (terms_.empty()) return 0;
  return sgn(terms_.front().coef);
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    bool is_const = compare_monomials(t.exp, Monomial{}) == 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || is_const) {
      os << c.get_str();
      wrote = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.exp[i] == 0) continue;
      if (wrote) os << "*";
      if (static_cast<std::size_t>(i) < names.size()) {
        os << names[i];
      } else {
        os << "x" << (i + 1);
      }
      if (t.exp[i] > 1) os << "^" << t.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial divexact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw ExactnessError("division by zero polynomial");
  if (q.is_constant()) {
    Polynomial r = p;
    r *= Rational(1) / q.constant_value();
    return r;
  }
  Polynomial rem = p;
  std::vector<Term> quot;
  const Term& lt = q.leading_term();
  while (!rem.is_zero()) {
    const Term& r0 = rem.leading_term();
    if (!divides(lt.exp, r0.exp)) throw ExactnessError("divexact: divisor does not divide dividend");
    Term t{mono_div(r0.exp, lt.exp), r0.coef / lt.coef};
    quot.push_back(t);
    rem -= q * Polynomial::monomial(t.exp, t.coef);
  }
  return PolyBuilder::from_unsorted(std::move(quot));
}

namespace {

// Shared pseudo-division loop.  Returns {quotient, remainder, steps}.
struct PDiv {
  Polynomial q, r;
  unsigned steps = 0;
};

PDiv pseudo_divide(const Polynomial& p, const Polynomial& d, int var) {
  if (d.is_zero()) throw DegenerateInputError("pseudo-division by zero");
  PDiv out;
  out.r = p;
  unsigned dd = d.degree(var);
  Polynomial lcd = d.lc(var);
  Polynomial red = d.reductum(var);
  while (!out.r.is_zero() && out.r.degree(var) >= dd) {
    unsigned dr = out.r.degree(var);
    Polynomial t = out.r.lc(var) * Polynomial::variable(var, dr - dd);
    out.q = out.q * lcd + t;
    // lcd * r - t * d, computed without cancelling the leading part explicitly
    out.r = out.r.reductum(var) * lcd - t * red;
    ++out.steps;
  }
  return out;
}

}  // namespace

Polynomial prem(const Polynomial& p, const Polynomial& q, int var) {
  unsigned dp = p.degree(var), dq = q.degree(var);
  if (p.is_zero()) return {};
  if (dp < dq) {
    return p * q.lc(var).pow(0);
  }
  PDiv d = pseudo_divide(p, q, var);
  unsigned e = dp - dq + 1;
  if (d.steps < e) d.r *= q.lc(var).pow(e - d.steps);
  return d.r;
}

Polynomial pquo(const Polynomial& p, const Polynomial& q, int var) {
  unsigned dp = p.degree(var), dq = q.degree(var);
  if (p.is_zero() || dp < dq) return {};
  PDiv d = pseudo_divide(p, q, var);
  unsigned e = dp - dq + 1;
  if (d.steps < e) d.q *= q.lc(var).pow(e - d.steps);
  return d.q;
}

Polynomial sprem(const Polynomial& p, const Polynomial& q, int var) {
  if (p.is_zero() || p.degree(var) < q.degree(var)) return p;
  return pseudo_divide(p, q, var).r;
}

Polynomial content(const Polynomial& p, int var) {
  if (p.is_zero()) return {};
  Polynomial g;
  for (const auto& c : p.coeffs(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, int var) {
  if (p.is_zero()) return {};
  return divexact(p, content(p, var)).canonical();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  int v = std::max(a.mvar(), b.mvar());
  if (a.degree(v) == 0) return gcd(a, content(b, v));
  if (b.degree(v) == 0) return gcd(content(a, v), b);
  Polynomial ca = content(a, v), cb = content(b, v);
  Polynomial g = gcd(ca, cb);
  Polynomial pa = divexact(a, ca), pb = divexact(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  Polynomial h;
  while (true) {
    Polynomial r = prem(pa, pb, v);
    if (r.is_zero()) {
      h = pb;
      break;
    }
    if (r.degree(v) == 0) {
      h = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  if (h.degree(v) > 0) h = primitive_part(h, v);
  return (g * h).canonical();
}

}  // namespace tticad
