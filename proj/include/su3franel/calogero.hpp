#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "su3franel/exact_arith.hpp"
#include "su3franel/laurent.hpp"
#include "su3franel/weights.hpp"

namespace su3franel {

// Polynomial in the fundamental characters z1, z2 with rational
// coefficients and non-negative exponents.
class ZPoly {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Rational>;

  ZPoly() = default;
  static ZPoly constant(const Rational& c);
  static ZPoly monomial(int a, int b, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(int a, int b) const;

  void add_term(int a, int b, const Rational& c);

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const Rational& c, const ZPoly& f);
  ZPoly operator-() const;
  ZPoly pow(unsigned n) const;

  friend bool operator==(const ZPoly&, const ZPoly&) = default;

 private:
  TermMap terms_;
};

// Partial derivative with respect to z1.
ZPoly d_dz1(const ZPoly& f);

// Coupling constant of the trigonometric A2 Calogero-Sutherland model.
struct Coupling {
  Rational kappa;
};

// Effective Hamiltonian
//   (z1^2-3z2) d^2/dz1^2 + (z2^2-3z1) d^2/dz2^2 + (z1z2-9) d^2/dz1dz2
//   + (3k+1)(z1 d/dz1 + z2 d/dz2)
// applied to f. Acts within dominance-lower cones.
ZPoly apply_hamiltonian(const Coupling& k, const ZPoly& f);

// Eigenvalue at weight (m1, m2): m1^2 + m2^2 + m1 m2 + 3k(m1 + m2).
Rational eigenvalue(const Coupling& k, const Weight& w);

// Resonance between the target weight and a dominance-lower one: the
// triangular eigenproblem has no monic solution there.
class ResonanceError : public std::runtime_error {
 public:
  ResonanceError(const Weight& target, std::vector<Weight> colliding);
  const Weight& target() const { return target_; }
  const std::vector<Weight>& colliding() const { return colliding_; }

 private:
  Weight target_;
  std::vector<Weight> colliding_;
};

// Monic generalized Gegenbauer polynomial: the eigenfunction of the
// effective Hamiltonian with eigenvalue eigenvalue(k, w), supported on the
// monomials dominance-below w. kappa = 1 gives the irreducible character,
// kappa = 0 the monomial symmetric function. Throws ResonanceError when a
// lower weight shares the eigenvalue.
ZPoly gegenbauer(const Coupling& k, const Weight& w);

// Coefficients of the two lowering terms in the derivative identity
//   d/dz1 P^k_{m1,m2} = m1 P^{k+1}_{m1-1,m2} + A P^{k+1}_{m1-2,m2-1}
//                       + B P^{k+1}_{m1,m2-2}.
// Evaluated from factored forms after cancelling common affine factors in
// (m1, m2), so boundary values never divide by zero. A = 0 when m1 < 2 or
// m2 < 1; B = 0 when m2 < 2.
struct DerivativeCoefficients {
  Rational a;
  Rational b;
};
DerivativeCoefficients derivative_coefficients(const Coupling& k,
                                               const Weight& w);

// Exact check of the derivative identity above; terms with out-of-range
// indices are dropped (their coefficients vanish before cancellation).
bool verify_derivative_identity(const Coupling& k, const Weight& w);

// Change of variables z1 = x1+x2+(x1x2)^{-1}, z2 = x1x2+x1^{-1}+x2^{-1}.
// x_to_z peels leading z-monomials greedily and errors when f is not
// Weyl-invariant; z_to_x substitutes and errors if a non-integral
// coefficient would appear in the integer Laurent result.
ZPoly x_to_z(const XLaurent& f);
XLaurent z_to_x(const ZPoly& g);

}  // namespace su3franel
