#pragma once

#include <map>
#include <utility>

#include "su3franel/exact_arith.hpp"
#include "su3franel/weights.hpp"

namespace su3franel {

// Sparse Laurent polynomial in x1, x2 with integer coefficients. The third
// torus variable is eliminated on sight through x1*x2*x3 = 1, so a monomial
// x1^a x2^b x3^c is stored as the exponent pair (a-c, b-c).
class XLaurent {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Integer>;

  XLaurent() = default;
  static XLaurent constant(const Integer& c);
  static XLaurent monomial(int e1, int e2, const Integer& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Integer coefficient(int e1, int e2) const;
  Integer sum_of_coefficients() const;  // evaluation at x1 = x2 = 1

  void add_term(int e1, int e2, const Integer& c);

  XLaurent& operator+=(const XLaurent& o);
  XLaurent& operator-=(const XLaurent& o);
  friend XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }
  friend XLaurent operator-(XLaurent a, const XLaurent& b) { return a -= b; }
  friend XLaurent operator*(const XLaurent& a, const XLaurent& b);
  friend XLaurent operator*(const Integer& c, const XLaurent& f);
  XLaurent operator-() const;

  // Binary exponentiation.
  XLaurent pow(unsigned n) const;

  friend bool operator==(const XLaurent&, const XLaurent&) = default;

 private:
  TermMap terms_;
};

// Dominant representative of the Weyl orbit through the monomial
// x1^e1 x2^e2: sort (e1, e2, 0) descending into (u+, u0, u-) and return
// (u+ - u0, u0 - u-).
Weight dominant_representative(int e1, int e2);

// Monomial symmetric function M_w: sum over the distinct S3 images of
// (p+q, q, 0), each contributing one monomial with coefficient 1.
XLaurent monomial_symmetric_x(const Weight& w);

// Character of the adjoint representation, (x1+x2)(x1+x3)(x2+x3) after
// eliminating x3. Seven terms; the constant term is 2.
XLaurent adjoint_character_x();

// Weyl alternant: det of the 3x3 matrix with rows (x_i^{p+q+2}, x_i^{q+1}, 1).
XLaurent weyl_alternant_x(const Weight& w);

// Irreducible character by the Weyl formula, alternant(w) / alternant(0,0),
// computed by exact division. Results are cached process-wide.
XLaurent weyl_character_x(const Weight& w);

// Coefficients m_w of f = sum m_w M_w. Errors if f is not Weyl-invariant.
std::map<Weight, Integer> decompose_in_monomials(const XLaurent& f);

// Coefficients c_w of f = sum c_w char_w by peeling the highest surviving
// dominant weight. Signed coefficients allowed. Errors on non-invariant f.
std::map<Weight, Integer> decompose_in_characters(const XLaurent& f);

}  // namespace su3franel
