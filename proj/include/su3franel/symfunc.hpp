#pragma once

#include <map>
#include <utility>
#include <vector>

#include "su3franel/exact_arith.hpp"
#include "su3franel/laurent.hpp"
#include "su3franel/weights.hpp"

namespace su3franel {

enum class Basis { Monomial, Character };

// Weyl-invariant function presented as a finite coefficient map over
// dominant weights, in either the monomial or the character basis.
struct SymFn {
  Basis basis = Basis::Monomial;
  std::map<Weight, Integer> coeffs;

  void add(const Weight& w, const Integer& c);
  Integer at(const Weight& w) const;  // 0 when absent

  friend bool operator==(const SymFn&, const SymFn&) = default;
};

// Product rule for monomial symmetric functions: M_{p,q} * M_{r,s} expanded
// back into the monomial basis from the six cross tuples, with the
// stabilizer factors and the 1/(G_{p,q} G_{r,s}) prefactor. Coincident
// tuples accumulate with multiplicity. All resulting coefficients are
// non-negative integers; non-exact division is an internal error.
SymFn monomial_product(const Weight& w1, const Weight& w2);

// Multiplicity of the weight w in the n-th power of the adjoint character,
// by the closed-form triple-binomial sum. Zero off the root lattice.
Integer weight_multiplicity(const Weight& w, int n);

// Square of the Weyl denominator in the monomial basis:
// -6 M00 + 2 M11 + M22 - 2 M30 - 2 M03.
SymFn denominator_squared_expansion();

// Monomial expansion of alternant(0,0) * alternant(w), assembled from the
// closed form with the boundary terms switched by p = 0, q = 0 guards.
SymFn denominator_alternant_expansion(const Weight& w);

// On: cross-check the solve against decompose_in_characters on every call.
// Off: skip. Default: On unless the library was compiled with NDEBUG.
enum class Validation { Default, On, Off };

// Multiplicities of the irreducible characters in the n-th adjoint power,
// obtained by the triangular linear solve that matches the monomial
// expansions of denominator^2 * chi^n against denominator * alternant(mu).
// Results are cached process-wide.
SymFn irrep_multiplicities(int n, Validation v = Validation::Default);

// Checks the closed-form expression of the irreducible multiplicity at w
// (supported for the seven low weights) against irrep_multiplicities.
bool irrep_formula_check(const Weight& w, int n);

// Coefficients (nu, c) with mult_w(n) = sum c * mult_nu(n-1), derived from
// the monomial product with the adjoint. Mirror weights are folded onto
// their p >= q representative (weight multiplicities are mirror-symmetric).
// Sorted in height order.
std::vector<std::pair<Weight, Integer>> step_coefficients(const Weight& w);

}  // namespace su3franel
