#pragma once

// Subresultant chains, resultants, discriminants and squarefree parts.

#include <vector>

#include "tticad/polynomial.hpp"

namespace tticad {

/// Subresultant chain of a and b with respect to var, deg a >= deg b >= 1.
/// Entry j holds S_j (possibly zero) for 0 <= j < deg a; S_j equals the
/// determinant polynomial of the j-th Sylvester submatrix.
std::vector<Polynomial> subresultant_chain(const Polynomial& a, const Polynomial& b, int var);

/// Principal subresultant coefficient: coefficient of var^j in S_j.
Polynomial psc(const std::vector<Polynomial>& chain, unsigned j, int var);

/// Resultant with respect to var.  Throws DegenerateInputError when both
/// inputs are free of var.
Polynomial resultant(const Polynomial& a, const Polynomial& b, int var);

/// Discriminant with respect to var (res(p, p') / lc(p) up to the usual sign).
Polynomial discriminant(const Polynomial& p, int var);

/// Squarefree part of p as a polynomial in var (primitive, canonical).
Polynomial squarefree_part(const Polynomial& p, int var);

/// Squarefree factorisation p = c * prod f_i^i of a primitive polynomial in var.
/// Returns (f_1, f_2, ...), trailing constants removed.
std::vector<Polynomial> squarefree_factorization(const Polynomial& p, int var);

}  // namespace tticad
