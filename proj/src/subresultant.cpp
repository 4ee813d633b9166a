#include "tticad/subresultant.hpp"

#include <utility>

namespace tticad {

std::vector<Polynomial> subresultant_chain(const Polynomial& a, const Polynomial& b, int var) {
  unsigned p = a.degree(var), q = b.degree(var);
  if (p < q || q == 0 || b.is_zero())
    throw DegenerateInputError("subresultant_chain needs deg a >= deg b >= 1");
  std::vector<Polynomial> S(p);
  Polynomial lcb = b.lc(var);
  if (p > q) {
    S[p - 1] = b;
    S[q] = b * lcb.pow(p - q - 1);
  }
  Polynomial s = lcb.pow(p - q);
  Polynomial A = b;
  Polynomial B = prem(a, -b, var);
  while (!B.is_zero()) {
    unsigned d = A.degree(var), e = B.degree(var);
    S[d - 1] = B;
    Polynomial C = B;
    Polynomial lcB = B.lc(var);
    for (unsigned k = 1; k + e < d; ++k) C = divexact(lcB * C, s);
    S[e] = C;
    if (e == 0) break;
    B = divexact(prem(A, -B, var), s.pow(d - e) * A.lc(var));
    A = std::move(C);
    s = A.lc(var);
  }
  return S;
}

Polynomial psc(const std::vector<Polynomial>& chain, unsigned j, int var) {
  return chain.at(j).coeff(var, j);
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, int var) {
  unsigned p = a.degree(var), q = b.degree(var);
  if (a.is_zero() || b.is_zero()) return {};
  if (p == 0 && q == 0) throw DegenerateInputError("resultant of two polynomials free of the variable");
  if (p < q) {
    Polynomial r = resultant(b, a, var);
    return (p * q) % 2 == 1 ? -r : r;
  }
  if (q == 0) return b.pow(p);
  return subresultant_chain(a, b, var)[0];
}

Polynomial discriminant(const Polynomial& p, int var) {
  unsigned n = p.degree(var);
  if (n == 0) throw DegenerateInputError("discriminant of a polynomial free of the variable");
  if (n == 1) return Polynomial(1);
  Polynomial r = divexact(resultant(p, p.derivative(var), var), p.lc(var));
  return (n * (n - 1) / 2) % 2 == 1 ? -r : r;
}

Polynomial squarefree_part(const Polynomial& p, int var) {
  if (p.degree(var) <= 1) return primitive_part(p, var);
  Polynomial g = gcd(p, p.derivative(var));
  if (g.degree(var) == 0) return primitive_part(p, var);
  return primitive_part(divexact(p, g), var);
}

std::vector<Polynomial> squarefree_factorization(const Polynomial& p, int var) {
  std::vector<Polynomial> out;
  Polynomial f = primitive_part(p, var);
  if (f.degree(var) == 0) return out;
  // Yun's algorithm.
  Polynomial df = f.derivative(var);
  Polynomial a = gcd(f, df);
  Polynomial b = divexact(f, a);
  Polynomial c = divexact(df, a);
  Polynomial d = c - b.derivative(var);
  while (b.degree(var) > 0) {
    Polynomial g = gcd(b, d);
    out.push_back(g.degree(var) > 0 ? primitive_part(g, var) : Polynomial(1));
    b = divexact(b, g);
    c = divexact(d, g);
    d = c - b.derivative(var);
  }
  while (!out.empty() && out.back().degree(var) == 0) out.pop_back();
  return out;
}

}  // namespace tticad
