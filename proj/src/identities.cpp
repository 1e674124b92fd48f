#include "su3franel/identities.hpp"

#include <algorithm>

#include "su3franel/calogero.hpp"
#include "su3franel/laurent.hpp"
#include "su3franel/symfunc.hpp"

namespace su3franel {

RatPoly::RatPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

RatPoly RatPoly::from_coefficients(std::vector<Rational> ascending) {
  RatPoly p;
  p.coeffs_ = std::move(ascending);
  p.trim();
  return p;
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    value = value * x + *it;
  return value;
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly::from_coefficients(std::move(out));
}

RatPoly operator*(const Rational& c, const RatPoly& f) {
  if (c == 0) return RatPoly();
  std::vector<Rational> out = f.coeffs_;
  for (auto& v : out) v *= c;
  return RatPoly::from_coefficients(std::move(out));
}

RatPoly npoly(std::vector<long> ascending) {
  std::vector<Rational> coeffs;
  coeffs.reserve(ascending.size());
  for (long v : ascending) coeffs.emplace_back(v);
  return RatPoly::from_coefficients(std::move(coeffs));
}

RatPoly nplus(long k) { return npoly({k, 1}); }

const std::vector<FranelExpression>& franel_expression_catalog() {
  static const std::vector<FranelExpression> catalog = [] {
    const RatPoly one = npoly({1});
    std::vector<FranelExpression> c;
    c.push_back({Weight(0, 0), one, {{0, one}}});
    c.push_back({Weight(1, 1), npoly({6}), {{0, npoly({-2})}, {1, one}}});
    c.push_back({Weight(3, 0),
                 npoly({6}) * nplus(1),
                 {{0, npoly({-2, -2})}, {1, npoly({-9, -7})}, {2, nplus(2)}}});
    c.push_back({Weight(2, 2),
                 npoly({6}) * nplus(1),
                 {{0, npoly({6, 6})},
                  {1, npoly({12, 8})},
                  {2, npoly({-3, -1})}}});
    c.push_back({Weight(3, 3),
                 npoly({6}) * nplus(2),
                 {{0, npoly({-4, -2})},
                  {1, npoly({18, 9})},
                  {2, npoly({36, 15})},
                  {3, npoly({-7, -2})}}});
    c.push_back({Weight(4, 4),
                 npoly({6}) * nplus(1) * nplus(2) * nplus(3),
                 {{0, npoly({6}) * nplus(1) * nplus(2) * nplus(3)},
                  {1, npoly({16}) * nplus(2) * nplus(3) * npoly({3, 2})},
                  {2, npoly({4}) * nplus(3) * npoly({30, 27, 7})},
                  {3, npoly({36, -8, 8, 4})},
                  {4, npoly({-18, -11, -6, -1})}}});
    c.push_back({Weight(5, 5),
                 npoly({6}) * nplus(2) * nplus(3) * nplus(4),
                 {{0, npoly({-2}) * nplus(2) * nplus(3) * nplus(4)},
                  {1, npoly({25}) * nplus(2) * nplus(3) * nplus(4)},
                  {2, npoly({25}) * nplus(3) * nplus(4) * npoly({12, 5})},
                  {3, npoly({5}) * nplus(4) * npoly({141, 93, 16})},
                  {4, npoly({-5}) * nplus(6) * npoly({24, 23, 4})},
                  {5, nplus(8) * npoly({3, 6, 1})}}});
    c.push_back({Weight(4, 1),
                 npoly({12}) * nplus(1) * nplus(2),
                 {{0, npoly({-4}) * nplus(1) * nplus(2)},
                  {1, npoly({-2}) * nplus(2) * npoly({5, 3})},
                  {2, npoly({-12, -21, -7})},
                  {3, nplus(1) * nplus(3)}}});
    c.push_back({Weight(5, 2),
                 npoly({12}) * nplus(1) * nplus(2) * nplus(3),
                 {{0, npoly({-4}) * nplus(1) * nplus(2) * nplus(3)},
                  {1, npoly({-2}) * nplus(2) * nplus(3) * npoly({35, 27})},
                  {2, npoly({-1}) * nplus(3) * npoly({156, 157, 41})},
                  {3, npoly({99, 244, 111, 14})},
                  {4, npoly({0, -1}) * nplus(4) * nplus(5)}}});
    c.push_back({Weight(6, 0),
                 npoly({6}) * nplus(1) * nplus(2) * nplus(3),
                 {{0, npoly({6}) * nplus(1) * nplus(2) * nplus(3)},
                  {1, npoly({12}) * nplus(2) * nplus(3) * npoly({3, 2})},
                  {2, nplus(3) * npoly({54, 49, 13})},
                  {3, npoly({-62, -148, -72, -10})},
                  {4, nplus(4) * npoly({1, 4, 1})}}});
    return c;
  }();
  return catalog;
}

namespace {

Integer franel_at(long long index) {
  if (index < 0)
    throw std::invalid_argument("franel_at: negative index");
  return franel(static_cast<unsigned long>(index));
}

Integer aval(int p, int q, unsigned long n) {
  return weight_multiplicity(Weight(p, q), static_cast<int>(n));
}

}  // namespace

bool franel_expression_holds_at(const FranelExpression& expr,
                                unsigned long n) {
  const long nl = static_cast<long>(n);
  const Rational lhs =
      expr.prefactor(nl) *
      Rational(weight_multiplicity(expr.weight, static_cast<int>(n)));
  Rational rhs = 0;
  for (const auto& [shift, poly] : expr.combination)
    rhs += poly(nl) * Rational(franel_at(static_cast<long long>(n) + shift));
  return lhs == rhs;
}

bool verify_franel_expression(const FranelExpression& expr,
                              unsigned long n_max) {
  for (unsigned long n = 0; n <= n_max; ++n)
    if (!franel_expression_holds_at(expr, n)) return false;
  return true;
}

std::optional<std::vector<RatPoly>> express_in_franel(
    const Weight& w, const RatPoly& prefactor, const std::vector<long>& shifts,
    unsigned degree, const std::vector<unsigned long>& samples) {
  const std::size_t nshifts = shifts.size();
  if (nshifts == 0)
    throw std::invalid_argument("express_in_franel: no shifts given");
  {
    std::vector<long> sorted = shifts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("express_in_franel: duplicate shifts");
    for (unsigned long n : samples)
      if (static_cast<long long>(n) + sorted.front() < 0)
        throw std::invalid_argument(
            "express_in_franel: sample reaches a negative index");
    std::vector<unsigned long> sample_sorted = samples;
    std::sort(sample_sorted.begin(), sample_sorted.end());
    if (std::adjacent_find(sample_sorted.begin(), sample_sorted.end()) !=
        sample_sorted.end())
      throw std::invalid_argument("express_in_franel: duplicate samples");
  }

  const std::size_t cols = nshifts * (degree + 1);
  if (samples.size() < cols + 3)
    throw std::invalid_argument(
        "express_in_franel: need at least unknowns + 3 samples");
  const std::size_t rows = samples.size();

  // Augmented matrix of exact sample equations.
  std::vector<std::vector<Rational>> m(rows,
                                       std::vector<Rational>(cols + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    const unsigned long n = samples[r];
    std::size_t col = 0;
    for (std::size_t s = 0; s < nshifts; ++s) {
      const Rational f(franel_at(static_cast<long long>(n) + shifts[s]));
      Rational npow = 1;
      for (unsigned d = 0; d <= degree; ++d) {
        m[r][col++] = npow * f;
        npow *= Rational(static_cast<long>(n));
      }
    }
    m[r][cols] = prefactor(static_cast<long>(n)) *
                 Rational(weight_multiplicity(w, static_cast<int>(n)));
  }

  // Gauss-Jordan elimination to reduced row echelon form.
  std::vector<long> pivot_row(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const Rational lead = m[rank][col];
    for (std::size_t c = col; c <= cols; ++c) m[rank][c] /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c <= cols; ++c)
        m[r][c] -= factor * m[rank][c];
    }
    pivot_row[col] = static_cast<long>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;

  // Particular solution with every free variable set to zero.
  std::vector<Rational> sol(cols, 0);
  for (std::size_t col = 0; col < cols; ++col)
    if (pivot_row[col] >= 0)
      sol[col] = m[static_cast<std::size_t>(pivot_row[col])][cols];

  std::vector<RatPoly> polys;
  polys.reserve(nshifts);
  FranelExpression candidate;
  candidate.weight = w;
  candidate.prefactor = prefactor;
  std::size_t col = 0;
  for (std::size_t s = 0; s < nshifts; ++s) {
    std::vector<Rational> coeffs(
        sol.begin() + static_cast<long>(col),
        sol.begin() + static_cast<long>(col + degree + 1));
    col += degree + 1;
    polys.push_back(RatPoly::from_coefficients(std::move(coeffs)));
    candidate.combination.emplace_back(shifts[s], polys.back());
  }

  // Held-out validation on five points past the sample range.
  const unsigned long last =
      *std::max_element(samples.begin(), samples.end());
  for (unsigned long i = 1; i <= 5; ++i)
    if (!franel_expression_holds_at(candidate, last + i))
      return std::nullopt;
  return polys;
}

namespace {

// Exact polynomial quotient, or nothing when the division leaves a
// remainder.
std::optional<RatPoly> poly_divide_exact(const RatPoly& num,
                                         const RatPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return RatPoly();
  std::vector<Rational> rem = num.coefficients();
  const std::vector<Rational>& d = den.coefficients();
  if (rem.size() < d.size()) return std::nullopt;
  std::vector<Rational> quot(rem.size() - d.size() + 1, Rational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + d.size() - 1] / d.back();
    quot[k] = q;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  for (const Rational& r : rem)
    if (r != 0) return std::nullopt;
  return RatPoly::from_coefficients(std::move(quot));
}

}  // namespace

bool equivalent_modulo_recurrence(const FranelExpression& a,
                                  const FranelExpression& b) {
  if (!(a.weight == b.weight))
    throw std::invalid_argument(
        "equivalent_modulo_recurrence: different weight families");
  // Cross-multiplied difference: a.combination * b.prefactor minus
  // b.combination * a.prefactor, collected per shift.
  std::map<long, RatPoly> diff;
  for (const auto& [shift, poly] : a.combination)
    diff[shift] += poly * b.prefactor;
  for (const auto& [shift, poly] : b.combination)
    diff[shift] -= poly * a.prefactor;
  std::erase_if(diff, [](const auto& kv) { return kv.second.is_zero(); });

  // Peel shifted recurrences from the top shift down.  The recurrence
  // centered at index n+s contributes (n+s+1)^2 at shift s+1,
  // -(7(n+s)^2+7(n+s)+2) at shift s, and -8(n+s)^2 at shift s-1; only
  // s >= 1 keeps every index non-negative.
  while (!diff.empty()) {
    const long top = diff.rbegin()->first;
    if (top < 2) return false;
    const long s = top - 1;
    const auto lam = poly_divide_exact(diff[top], nplus(s + 1) * nplus(s + 1));
    if (!lam) return false;
    diff.erase(top);
    const RatPoly mid =
        *lam * (Rational(7) * (nplus(s) * nplus(s)) + npoly({7 * s + 2, 7}));
    diff[s] += mid;
    diff[s - 1] += Rational(8) * (*lam * (nplus(s) * nplus(s)));
    std::erase_if(diff, [](const auto& kv) { return kv.second.is_zero(); });
  }
  return true;
}

bool verify_hamiltonian_identity(unsigned long n) {
  const XLaurent chi = adjoint_character_x();
  const ZPoly zn = x_to_z(chi.pow(static_cast<unsigned>(n)));
  const ZPoly zn1 = x_to_z(chi.pow(static_cast<unsigned>(n) + 1));
  const ZPoly zn2 = x_to_z(chi.pow(static_cast<unsigned>(n) + 2));

  const ZPoly lhs = apply_hamiltonian(Coupling{Rational(0)}, zn2);

  ZPoly first;  // z1 z2 - 3
  first.add_term(1, 1, 1);
  first.add_term(0, 0, -3);
  ZPoly second;  // z1^2 z2^2 - z1^3 - z2^3 - 3 z1 z2
  second.add_term(2, 2, 1);
  second.add_term(3, 0, -1);
  second.add_term(0, 3, -1);
  second.add_term(1, 1, -3);

  const Rational c1 = Rational(3) * Rational(static_cast<long>(n) + 2);
  const Rational c2 = c1 * Rational(static_cast<long>(n) + 1);
  const ZPoly rhs = c1 * (first * zn1) + c2 * (second * zn);
  return lhs == rhs;
}

bool check_coefficient_relation(const Weight& target, unsigned long n) {
  const Integer N(static_cast<long>(n));
  if (target == Weight(0, 0)) {
    const Integer lhs = (N + 2) * aval(2, 2, n) + (N + 3) * aval(3, 0, n) -
                        (N - 3) * aval(1, 1, n) - N * aval(0, 0, n);
    return lhs == 0;
  }
  if (target == Weight(3, 0)) {
    const Integer lhs = 6 * (N * N + 4 * N + 1) * aval(5, 2, n) +
                        3 * N * (N + 5) * aval(6, 0, n);
    const Integer rhs = -3 * N * (N + 5) * aval(0, 0, n) -
                        6 * (5 * N - 11) * aval(1, 1, n) +
                        6 * (2 * N * N + N + 15) * aval(3, 0, n) +
                        6 * (N * N - N + 12) * aval(2, 2, n) -
                        6 * N * (N + 5) * aval(3, 3, n) -
                        6 * (5 * N - 11) * aval(4, 1, n);
    return lhs == rhs;
  }
  throw std::invalid_argument(
      "check_coefficient_relation: unsupported target weight");
}

Integer bridge_combination(unsigned long m) {
  const Integer M(static_cast<long>(m));
  return -M * aval(0, 0, m) + (M + 1) * aval(1, 1, m) + M * aval(2, 2, m) +
         (M + 3) * aval(3, 3, m) - 2 * (M + 2) * aval(4, 1, m);
}

std::map<long, Rational> bridge_franel_form(unsigned long m) {
  const long ml = static_cast<long>(m);
  const std::vector<std::pair<Weight, Rational>> parts = {
      {Weight(0, 0), Rational(-ml)},
      {Weight(1, 1), Rational(ml + 1)},
      {Weight(2, 2), Rational(ml)},
      {Weight(3, 3), Rational(ml + 3)},
      {Weight(4, 1), Rational(-2 * (ml + 2))},
  };
  const auto& catalog = franel_expression_catalog();
  std::map<long, Rational> form;
  for (const auto& [w, mult] : parts) {
    auto entry = std::find_if(catalog.begin(), catalog.end(),
                              [&](const auto& e) { return e.weight == w; });
    if (entry == catalog.end())
      throw std::logic_error("bridge_franel_form: catalog entry missing");
    const Rational pre = entry->prefactor(ml);
    if (pre == 0)
      throw std::logic_error("bridge_franel_form: vanishing prefactor");
    for (const auto& [shift, poly] : entry->combination)
      form[shift] += mult * poly(ml) / pre;
  }
  std::erase_if(form, [](const auto& kv) { return kv.second == 0; });
  return form;
}

bool verify_franel_recurrence_direct(unsigned long n) {
  if (n < 1)
    throw std::invalid_argument(
        "verify_franel_recurrence_direct: needs n >= 1");
  const Integer N(static_cast<long>(n));
  const Integer lhs = (N + 1) * (N + 1) * franel(n + 1) -
                      (7 * N * N + 7 * N + 2) * franel(n) -
                      8 * N * N * franel(n - 1);
  return lhs == 0;
}

bool verify_franel_recurrence_bridge(unsigned long n) {
  if (n < 2)
    throw std::invalid_argument(
        "verify_franel_recurrence_bridge: needs n >= 2");
  const Rational N(static_cast<long>(n));
  std::map<long, Rational> got;
  for (const auto& [shift, c] : bridge_franel_form(n - 2)) {
    const Rational scaled = Rational(-2) * N * c;
    if (scaled != 0) got[shift] = scaled;
  }
  std::map<long, Rational> expected;
  expected[1] = Rational(-8) * N * N;
  expected[2] = -(Rational(7) * N * N + Rational(7) * N + 2);
  expected[3] = (N + 1) * (N + 1);
  return got == expected;
}

bool verify_franel_recurrence(unsigned long n_max) {
  if (n_max < 2)
    throw std::invalid_argument("verify_franel_recurrence: needs n_max >= 2");
  for (unsigned long n = 2; n <= n_max; ++n)
    if (!verify_franel_recurrence_direct(n) ||
        !verify_franel_recurrence_bridge(n))
      return false;
  return true;
}

namespace {

ZPoly character_z(const Weight& w) { return x_to_z(weyl_character_x(w)); }

}  // namespace

DerivativeExpansionReport verify_derivative_expansions(unsigned long n) {
  if (n < 1)
    throw std::invalid_argument(
        "verify_derivative_expansions: needs n >= 1");
  DerivativeExpansionReport report;
  const XLaurent chi = adjoint_character_x();
  const ZPoly deriv = d_dz1(x_to_z(chi.pow(static_cast<unsigned>(n))));

  ZPoly expansion;
  for (const Weight& w : dominant_weights_in_power(static_cast<int>(n))) {
    const Integer a = weight_multiplicity(w, static_cast<int>(n));
    if (a == 0) continue;
    const Rational ar(a);
    if (w.p >= 1)
      expansion += (ar * Rational(w.p)) * character_z(Weight(w.p - 1, w.q));
    if (w.p >= 2 && w.q >= 1)
      expansion +=
          (ar * Rational(w.q)) * character_z(Weight(w.p - 2, w.q - 1));
    if (w.q >= 2)
      expansion -=
          (ar * Rational(w.p + w.q)) * character_z(Weight(w.p, w.q - 2));
  }
  report.character_expansion = (deriv == expansion);

  const ZPoly prev = x_to_z(chi.pow(static_cast<unsigned>(n) - 1));
  report.product_form = (deriv == Rational(static_cast<long>(n)) *
                                      (ZPoly::monomial(0, 1) * prev));

  const auto chars = decompose_in_characters(z_to_x(deriv));
  Integer coeff01 = 0;
  if (auto it = chars.find(Weight(0, 1)); it != chars.end())
    coeff01 = it->second;
  const Integer lhs = aval(1, 1, n) - 3 * aval(3, 0, n) + 2 * aval(2, 2, n);
  const SymFn b = irrep_multiplicities(static_cast<int>(n) - 1);
  const Integer rhs = Integer(static_cast<long>(n)) *
                      (b.at(Weight(0, 0)) + b.at(Weight(1, 1)));
  report.invariant_coefficient = (coeff01 == lhs && coeff01 == rhs);
  return report;
}

}  // namespace su3franel
