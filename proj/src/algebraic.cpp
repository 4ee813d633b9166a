#include "tticad/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

#include "tticad/subresultant.hpp"

namespace tticad {

namespace {

Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational rpow(const Rational& q, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

Interval ipow(const Interval& a, unsigned e) {
  if (e == 0) return {Rational(1), Rational(1)};
  Rational l = rpow(a.lo, e), h = rpow(a.hi, e);
  if (e % 2 == 1 || a.lo >= 0) return {l, h};
  if (a.hi <= 0) return {h, l};
  return {Rational(0), std::max(l, h)};
}

Interval imul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Polynomial substitute_rationals(Polynomial p, const std::vector<CoordPtr>& point) {
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i]->rational && p.depends_on(static_cast<int>(i))) p = p.substitute(static_cast<int>(i), point[i]->value);
  }
  return p;
}

void check_point(const Polynomial& p, const std::vector<CoordPtr>& point) {
  if (p.mvar() >= static_cast<int>(point.size()))
    throw ArityError("polynomial involves more variables than the point has coordinates");
}

}  // namespace

CoordPtr Coordinate::make_rational(int var, Rational v) {
  auto c = std::make_shared<Coordinate>();
  c->var = var;
  c->rational = true;
  v.canonicalize();
  c->value = v;
  c->lo = c->hi = v;
  return c;
}

void Coordinate::bisect() {
  if (rational) return;
  Rational m = (lo + hi) / 2;
  int s = sign_at(def.substitute(var, m), prefix);
  if (s == 0) {
    rational = true;
    value = m;
    lo = hi = m;
  } else if (s == sign_lo) {
    lo = m;
  } else {
    hi = m;
  }
}

void Coordinate::refine_to(const Rational& width) {
  int guard = 0;
  while (!rational && hi - lo > width) {
    bisect();
    if (++guard > 100000) throw std::logic_error("coordinate refinement does not converge");
  }
}

Interval Coordinate::enclosure() const {
  if (rational) return {value, value};
  return {lo, hi};
}

double Coordinate::approx() const {
  if (rational) return value.get_d();
  Rational eps(1);
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), 40);
  const_cast<Coordinate*>(this)->refine_to(eps * (1 + rabs(lo) + rabs(hi)));
  if (rational) return value.get_d();
  return Rational((lo + hi) / 2).get_d();
}

Interval eval_interval(const Polynomial& p, const std::vector<CoordPtr>& point) {
  check_point(p, point);
  Interval sum{Rational(0), Rational(0)};
  std::vector<Interval> enc;
  enc.reserve(point.size());
  for (const auto& c : point) enc.push_back(c->enclosure());
  for (const auto& t : p.terms()) {
    Interval term{t.coef, t.coef};
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.exp[i] > 0) term = imul(term, ipow(enc[i], t.exp[i]));
    }
    sum.lo += term.lo;
    sum.hi += term.hi;
  }
  return sum;
}

bool is_zero_at(const Polynomial& p, const std::vector<CoordPtr>& point) {
  check_point(p, point);
  Polynomial q = substitute_rationals(p, point);
  if (q.is_constant()) return q.is_zero();
  int j = q.mvar();
  const Coordinate& c = *point[j];
  Polynomial D = substitute_rationals(c.def, point);
  Polynomial r = q.degree(j) >= D.degree(j) ? prem(q, D, j) : q;
  while (true) {
    if (r.is_zero()) return true;
    if (r.degree(j) == 0) return is_zero_at(r, point);
    if (!is_zero_at(r.lc(j), point)) break;
    r = r.reductum(j);
  }
  auto S = subresultant_chain(D, r, j);
  unsigned dr = r.degree(j);
  Polynomial g = r;
  unsigned gi = dr;
  for (unsigned i = 0; i < dr; ++i) {
    Polynomial ps = psc(S, i, j);
    if (!ps.is_zero() && !is_zero_at(ps, point)) {
      g = S[i];
      gi = i;
      break;
    }
  }
  if (gi == 0) return false;
  int sl = sign_at(g.substitute(j, c.lo), point);
  int sh = sign_at(g.substitute(j, c.hi), point);
  return sl * sh < 0;
}

int sign_at(const Polynomial& p, const std::vector<CoordPtr>& point) {
  check_point(p, point);
  Polynomial q = substitute_rationals(p, point);
  bool zero_checked = false;
  for (int iter = 0; iter < 100000; ++iter) {
    if (q.is_constant()) return q.leading_sign();
    Interval I = eval_interval(q, point);
    if (I.lo > 0) return 1;
    if (I.hi < 0) return -1;
    if (!zero_checked) {
      zero_checked = true;
      if (is_zero_at(q, point)) return 0;
    }
    for (int v = 0; v <= q.mvar(); ++v) {
      if (q.depends_on(v)) {
        point[v]->bisect();
        point[v]->bisect();
      }
    }
    q = substitute_rationals(q, point);
  }
  throw std::logic_error("sign determination does not terminate");
}

int compare(const CoordPtr& a, const CoordPtr& b) {
  if (a == b) return 0;
  for (int iter = 0; iter < 2000; ++iter) {
    if (a->rational && b->rational) return a->value < b->value ? -1 : (a->value > b->value ? 1 : 0);
    Interval ia = a->enclosure(), ib = b->enclosure();
    if (ia.hi <= ib.lo) return -1;
    if (ia.lo >= ib.hi) return 1;
    if (!a->rational && (b->rational || ia.hi - ia.lo >= ib.hi - ib.lo)) {
      a->bisect();
    } else {
      b->bisect();
    }
  }
  throw std::logic_error("could not separate two real algebraic numbers");
}

int compare(const CoordPtr& a, const Rational& b) { return compare(a, Coordinate::make_rational(a->var, b)); }

int sign_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

namespace {

using Coeffs = std::vector<Polynomial>;  // index = degree

void taylor_shift(Coeffs& c, const Rational& a) {
  std::size_t n = c.size();
  if (n < 2 || a == 0) return;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t j = n - 1; j-- > k;) c[j] += c[j + 1] * a;
  }
}

Polynomial eval_coeffs(const Coeffs& c, const Rational& x) {
  Polynomial r;
  for (std::size_t i = c.size(); i-- > 0;) r = r * Polynomial(x) + c[i];
  return r;
}

class Isolator {
 public:
  Isolator(Coeffs c, const std::vector<CoordPtr>& prefix) : c_(std::move(c)), prefix_(prefix) {}

  int sign_value(const Rational& x) { return sign_at(eval_coeffs(c_, x), prefix_); }

  // Upper bound on the number of roots in the open interval (a, b).
  int descartes(const Rational& a, const Rational& b) {
    Coeffs q = c_;
    taylor_shift(q, a);
    Rational w = b - a, pw = 1;
    for (auto& x : q) {
      x *= pw;
      pw *= w;
    }
    std::reverse(q.begin(), q.end());
    taylor_shift(q, Rational(1));
    std::vector<int> signs;
    signs.reserve(q.size());
    for (const auto& x : q) signs.push_back(sign_at(x, prefix_));
    return sign_variations(signs);
  }

  void run(const Rational& a, const Rational& b, std::vector<std::pair<Rational, Rational>>& out,
           std::vector<bool>& exact, int depth) {
    int v = descartes(a, b);
    if (v == 0) return;
    if (v == 1) {
      out.emplace_back(a, b);
      exact.push_back(false);
      return;
    }
    if (depth > 400) throw std::logic_error("root isolation did not terminate (input not squarefree?)");
    Rational m = (a + b) / 2;
    if (sign_value(m) != 0) {
      run(a, m, out, exact, depth + 1);
      run(m, b, out, exact, depth + 1);
      return;
    }
    Rational eps = (b - a) / 4;
    while (sign_value(m - eps) == 0 || sign_value(m + eps) == 0 || descartes(m - eps, m + eps) != 1) eps /= 2;
    run(a, m - eps, out, exact, depth + 1);
    out.emplace_back(m, m);
    exact.push_back(true);
    run(m + eps, b, out, exact, depth + 1);
  }

 private:
  Coeffs c_;
  const std::vector<CoordPtr>& prefix_;
};

}  // namespace

std::vector<CoordPtr> isolate_roots(const Polynomial& p, int var, const std::vector<CoordPtr>& prefix) {
  if (static_cast<int>(prefix.size()) != var) throw ArityError("prefix length must equal the variable index");
  if (p.mvar() > var) throw ArityError("polynomial involves variables above the isolation variable");
  Polynomial q = substitute_rationals(p, prefix);
  while (!q.is_zero() && q.degree(var) > 0 && is_zero_at(q.lc(var), prefix)) q = q.reductum(var);
  if (q.is_zero() || (q.degree(var) == 0 && is_zero_at(q, prefix)))
    throw DegenerateInputError("polynomial vanishes identically over the prefix");
  if (q.degree(var) == 0) return {};
  bool univariate = q.mvar() == var && q.terms().size() > 0;
  for (int v = 0; v < var && univariate; ++v) univariate = !q.depends_on(v);
  if (univariate) q = squarefree_part(q, var);
  if (univariate && q.degree(var) == 1) {
    Rational root = -q.coeff(var, 0).constant_value() / q.coeff(var, 1).constant_value();
    return {Coordinate::make_rational(var, root)};
  }
  Coeffs c = q.coeffs(var);
  std::size_t n = c.size() - 1;

  // Cauchy bound from enclosures of the coefficients.
  Interval lc = eval_interval(c[n], prefix);
  for (int guard = 0; lc.lo <= 0 && lc.hi >= 0; ++guard) {
    if (guard > 10000) throw std::logic_error("leading coefficient enclosure does not exclude zero");
    for (int v = 0; v < var; ++v) {
      if (c[n].depends_on(v)) prefix[v]->bisect();
    }
    lc = eval_interval(c[n], prefix);
  }
  Rational low = std::min(rabs(lc.lo), rabs(lc.hi));
  Rational high = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Interval e = eval_interval(c[i], prefix);
    high = std::max({high, rabs(e.lo), rabs(e.hi)});
  }
  Rational bound = 1 + high / low;
  Rational B = 1;
  while (B <= bound) B *= 2;

  Isolator iso(c, prefix);
  std::vector<std::pair<Rational, Rational>> iv;
  std::vector<bool> exact;
  iso.run(-B, B, iv, exact, 0);
  std::vector<CoordPtr> out;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (exact[i]) {
      out.push_back(Coordinate::make_rational(var, iv[i].first));
      continue;
    }
    auto k = std::make_shared<Coordinate>();
    k->var = var;
    k->rational = false;
    k->def = q;
    k->prefix = prefix;
    k->lo = iv[i].first;
    k->hi = iv[i].second;
    k->sign_lo = iso.sign_value(k->lo);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace tticad
