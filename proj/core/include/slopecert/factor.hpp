// Factorization of univariate integer polynomials (Berlekamp mod p, Hensel
// lifting, Zassenhaus recombination). Fully deterministic: prime choice,
// splitting order and subset enumeration are all fixed by the input.
#pragma once

#include "slopecert/unipoly.hpp"

#include <utility>
#include <vector>

namespace slopecert {

/// Irreducible factors of a squarefree integer-primitive polynomial, each
/// integer-primitive with positive leading coefficient, sorted canonically
/// (degree, then coefficient sequence).
std::vector<UniPoly> factor_squarefree(const UniPoly& u);

/// Full factorization over Q up to a rational unit: (irreducible, multiplicity)
/// pairs for any nonzero nonconstant input.
std::vector<std::pair<UniPoly, int>> factor(const UniPoly& u);

bool is_irreducible(const UniPoly& u);

}  // namespace slopecert
