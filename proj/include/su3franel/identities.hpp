#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "su3franel/exact_arith.hpp"
#include "su3franel/weights.hpp"

namespace su3franel {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree order with no trailing zeros.  Used for coefficient
// families that depend polynomially on the tensor-power index n.
class RatPoly {
 public:
  RatPoly() = default;  // zero polynomial
  explicit RatPoly(const Rational& constant);
  static RatPoly from_coefficients(std::vector<Rational> ascending);

  // Coefficients in ascending degree order, without trailing zeros.
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& x) const;
  Rational operator()(long x) const { return (*this)(Rational(x)); }

  RatPoly& operator+=(const RatPoly& other);
  RatPoly& operator-=(const RatPoly& other);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& c, const RatPoly& f);
  RatPoly operator-() const { return Rational(-1) * *this; }

  bool operator==(const RatPoly& other) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Polynomial with the given integer coefficients in ascending degree order:
// npoly({c0, c1, c2}) is c0 + c1 n + c2 n^2.
RatPoly npoly(std::vector<long> ascending);

// The linear polynomial n + k.
RatPoly nplus(long k);

// A closed form for one weight-multiplicity family: for every n >= 0,
//   prefactor(n) * a_{p,q}(n)  ==  sum over (shift, poly) of poly(n) * F(n+shift)
// where a_{p,q}(n) is the multiplicity of the weight in the n-th tensor
// power of the adjoint representation and F is the Franel sequence.
struct FranelExpression {
  Weight weight;
  RatPoly prefactor;
  // Pairs (shift, coefficient polynomial), sorted by increasing shift.
  std::vector<std::pair<long, RatPoly>> combination;

  bool operator==(const FranelExpression& other) const = default;
};

// The fixed catalog of ten such closed forms, covering the weights
// (0,0), (1,1), (3,0), (2,2), (3,3), (4,4), (5,5), (4,1), (5,2), (6,0).
const std::vector<FranelExpression>& franel_expression_catalog();

// Checks the stated equality exactly at one value of n.  Requires
// n + shift >= 0 for every shift in the combination.
bool franel_expression_holds_at(const FranelExpression& expr, unsigned long n);

// Sweeps franel_expression_holds_at over 0 <= n <= n_max.
bool verify_franel_expression(const FranelExpression& expr,
                              unsigned long n_max);

// Re-derives a closed form of the catalog's shape from data alone: solves
// the exact linear system for coefficient polynomials c_i of degree at most
// `degree`, one per requested shift, such that
//   prefactor(n) * a_w(n) == sum_i c_i(n) * F(n + shifts[i])
// holds at every sample point, with any free variables set to zero, and
// then validates the candidate on five held-out points past the largest
// sample.  Returns the polynomials aligned with `shifts` (zero polynomials
// included), or nothing when the system is inconsistent or the held-out
// validation fails.  Requires at least shifts.size() * (degree + 1) + 3
// distinct samples, all with sample + shift >= 0.
std::optional<std::vector<RatPoly>> express_in_franel(
    const Weight& w, const RatPoly& prefactor, const std::vector<long>& shifts,
    unsigned degree, const std::vector<unsigned long>& samples);

// True when the two closed forms concern the same weight family and differ
// (after cross-multiplying the prefactors) by an exact polynomial
// combination of shifted copies of the three-term Franel recurrence -- the
// only relations available among the F(n+j) with polynomial coefficients.
// Two valid closed forms of the same family always satisfy this; it makes
// "same identity" decidable even though the representation is not unique.
bool equivalent_modulo_recurrence(const FranelExpression& a,
                                  const FranelExpression& b);

// Action of the zero-coupling hypergeometric operator on powers of the
// adjoint character, expressed in the invariant coordinates: checks that
// applying the operator to the (n+2)-nd power equals
//   3(n+2) (z1 z2 - 3) * (n+1)-st power
//   + 3(n+2)(n+1) (z1^2 z2^2 - z1^3 - z2^3 - 3 z1 z2) * n-th power
// exactly, with every power expanded through the coordinate change.
bool verify_hamiltonian_identity(unsigned long n);

// Linear relations among the weight multiplicities a_{p,q}(n) obtained by
// matching coefficients in the identity above.  Supported targets:
//   (0,0):  (n+2) a22 + (n+3) a30 - (n-3) a11 - n a00 == 0
//   (3,0):  6(n^2+4n+1) a52 + 3n(n+5) a60 ==
//             -3n(n+5) a00 - 6(5n-11) a11 + 6(2n^2+n+15) a30
//             + 6(n^2-n+12) a22 - 6n(n+5) a33 - 6(5n-11) a41
// Throws std::invalid_argument for any other target.
bool check_coefficient_relation(const Weight& target, unsigned long n);

// The combination
//   h(m) = -m a00(m) + (m+1) a11(m) + m a22(m) + (m+3) a33(m) - 2(m+2) a41(m)
// evaluated from the closed-form multiplicities.  It vanishes for all m.
Integer bridge_combination(unsigned long m);

// The same combination h(m) rewritten through the Franel-expression
// catalog, returned as a map from shift j to the exact coefficient of
// F(m+j).  Requires m >= 0; the prefactors involved never vanish there.
std::map<long, Rational> bridge_franel_form(unsigned long m);

// The three-term contiguous relation of the Franel sequence at index n:
//   (n+1)^2 F(n+1) - (7n^2+7n+2) F(n) - 8n^2 F(n-1) == 0,   n >= 1,
// checked directly from computed Franel values.
bool verify_franel_recurrence_direct(unsigned long n);

// The same relation derived structurally: -2n * bridge_franel_form(n-2)
// must coincide, coefficient by coefficient, with the map
//   { F(n-2): 0, F(n-1): -8n^2, F(n): -(7n^2+7n+2), F(n+1): (n+1)^2 }.
// Requires n >= 2.
bool verify_franel_recurrence_bridge(unsigned long n);

// Sweeps both the direct check and the bridge check over 2 <= n <= n_max.
bool verify_franel_recurrence(unsigned long n_max);

struct DerivativeExpansionReport {
  // d/dz1 of the n-th power (in invariant coordinates) equals the sum over
  // weights of a_{p,q}(n) * [ p X(p-1,q) + q X(p-2,q-1) - (p+q) X(p,q-2) ],
  // where X(c,d) is the irreducible character in invariant coordinates and
  // terms with a negative index are dropped.
  bool character_expansion = false;
  // The same derivative equals n * z2 * (n-1)-st power.
  bool product_form = false;
  // The coefficient of X(0,1) in that derivative equals both
  //   a11(n) - 3 a30(n) + 2 a22(n)   and   n (b00(n-1) + b11(n-1)),
  // the b's being irreducible multiplicities of the (n-1)-st power.
  bool invariant_coefficient = false;

  bool all() const {
    return character_expansion && product_form && invariant_coefficient;
  }
};

// Runs the three checks above for one n >= 1.
DerivativeExpansionReport verify_derivative_expansions(unsigned long n);

}  // namespace su3franel
