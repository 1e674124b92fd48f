#include "su3franel/calogero.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>

namespace su3franel {

ZPoly ZPoly::constant(const Rational& c) { return monomial(0, 0, c); }

ZPoly ZPoly::monomial(int a, int b, const Rational& c) {
  ZPoly f;
  f.add_term(a, b, c);
  return f;
}

Rational ZPoly::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void ZPoly::add_term(int a, int b, const Rational& c) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("ZPoly: negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

ZPoly operator*(const Rational& c, const ZPoly& f) {
  ZPoly out;
  for (const auto& [e, fc] : f.terms_) out.add_term(e.first, e.second, c * fc);
  return out;
}

ZPoly ZPoly::operator-() const { return Rational(-1) * *this; }

ZPoly ZPoly::pow(unsigned n) const {
  ZPoly result = constant(1);
  ZPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

ZPoly d_dz1(const ZPoly& f) {
  ZPoly out;
  for (const auto& [e, c] : f.terms())
    if (e.first >= 1) out.add_term(e.first - 1, e.second, Rational(e.first) * c);
  return out;
}

ZPoly apply_hamiltonian(const Coupling& k, const ZPoly& f) {
  const Rational first_order = Rational(3) * k.kappa + 1;
  ZPoly out;
  for (const auto& [e, c] : f.terms()) {
    const long a = e.first, b = e.second;
    // (z1^2 - 3 z2) d^2/dz1^2
    if (a >= 2) {
      const Rational w = Rational(a * (a - 1)) * c;
      out.add_term(a, b, w);
      out.add_term(a - 2, b + 1, Rational(-3) * w);
    }
    // (z2^2 - 3 z1) d^2/dz2^2
    if (b >= 2) {
      const Rational w = Rational(b * (b - 1)) * c;
      out.add_term(a, b, w);
      out.add_term(a + 1, b - 2, Rational(-3) * w);
    }
    // (z1 z2 - 9) d^2/dz1 dz2
    if (a >= 1 && b >= 1) {
      const Rational w = Rational(a * b) * c;
      out.add_term(a, b, w);
      out.add_term(a - 1, b - 1, Rational(-9) * w);
    }
    // (3k + 1)(z1 d/dz1 + z2 d/dz2)
    if (a + b > 0) out.add_term(a, b, first_order * Rational(a + b) * c);
  }
  return out;
}

Rational eigenvalue(const Coupling& k, const Weight& w) {
  const long m1 = w.p, m2 = w.q;
  return Rational(m1 * m1 + m2 * m2 + m1 * m2) +
         Rational(3) * k.kappa * Rational(m1 + m2);
}

namespace {

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(" << w.p << "," << w.q << ")";
  return os.str();
}

std::string resonance_message(const Weight& target,
                              const std::vector<Weight>& colliding) {
  std::ostringstream os;
  os << "gegenbauer: eigenvalue resonance at " << weight_str(target)
     << " with";
  for (const auto& v : colliding) os << " " << weight_str(v);
  return os.str();
}

// Monomials dominance-below w, inclusive: w - c1*a1 - c2*a2 with
// non-negative exponents.
std::vector<Weight> dominance_cone(const Weight& w) {
  std::vector<Weight> cone;
  const int bound = w.p + w.q;
  for (int c1 = 0; c1 <= bound; ++c1)
    for (int c2 = 0; c2 <= bound; ++c2) {
      const int a = w.p - 2 * c1 + c2, b = w.q + c1 - 2 * c2;
      if (a >= 0 && b >= 0) cone.emplace_back(a, b);
    }
  std::sort(cone.begin(), cone.end(), height_less);
  return cone;
}

}  // namespace

ResonanceError::ResonanceError(const Weight& target,
                               std::vector<Weight> colliding)
    : std::runtime_error(resonance_message(target, colliding)),
      target_(target),
      colliding_(std::move(colliding)) {}

ZPoly gegenbauer(const Coupling& k, const Weight& w) {
  std::vector<Weight> cone = dominance_cone(w);  // ascending height order
  const Rational eps_top = eigenvalue(k, w);

  std::vector<Weight> colliding;
  for (const Weight& nu : cone)
    if (!(nu == w) && eigenvalue(k, nu) == eps_top) colliding.push_back(nu);
  if (!colliding.empty()) throw ResonanceError(w, colliding);

  // Solve downward from the monic top; the Hamiltonian only lowers weights,
  // so the inflow into nu comes from already determined coefficients.
  std::map<Weight, Rational> coeff;
  std::map<Weight, ZPoly> images;  // Hamiltonian image of each monomial
  coeff[w] = 1;
  images.emplace(w, apply_hamiltonian(k, ZPoly::monomial(w.p, w.q)));
  for (auto it = cone.rbegin(); it != cone.rend(); ++it) {
    const Weight nu = *it;
    if (nu == w) continue;
    Rational inflow = 0;
    for (const auto& [mu, c] : coeff)
      inflow += c * images.at(mu).coefficient(nu.p, nu.q);
    const Rational c_nu = inflow / (eps_top - eigenvalue(k, nu));
    if (c_nu != 0) {
      images.emplace(nu, apply_hamiltonian(k, ZPoly::monomial(nu.p, nu.q)));
      coeff.emplace(nu, c_nu);
    }
  }

  ZPoly poly;
  for (const auto& [nu, c] : coeff) poly.add_term(nu.p, nu.q, c);

  // Runtime checks: support confined to the cone, and the eigenvalue
  // equation satisfied exactly.
  const ZPoly image = apply_hamiltonian(k, poly);
  for (const auto& [e, c] : image.terms()) {
    (void)c;
    if (!dominance_le(Weight(e.first, e.second), w))
      throw std::logic_error("gegenbauer: support escaped the dominance cone");
  }
  if (!(image == eps_top * poly))
    throw std::logic_error("gegenbauer: eigenvalue equation violated");
  return poly;
}

namespace {

// Affine form u0*m1 + u1*m2 + u2 with rational coefficients.
struct Affine {
  Rational m1, m2, c;

  Rational eval(long v1, long v2) const {
    return m1 * Rational(v1) + m2 * Rational(v2) + c;
  }
};

// If u = r * v for a rational r, return r.
std::optional<Rational> proportionality(const Affine& u, const Affine& v) {
  Rational r;
  if (v.m1 != 0)
    r = u.m1 / v.m1;
  else if (v.m2 != 0)
    r = u.m2 / v.m2;
  else if (v.c != 0)
    r = u.c / v.c;
  else
    return std::nullopt;
  if (u.m1 == r * v.m1 && u.m2 == r * v.m2 && u.c == r * v.c) return r;
  return std::nullopt;
}

// Product of num factors over product of den factors at (m1, m2), with
// proportional factor pairs cancelled first.
Rational cancel_and_evaluate(std::vector<Affine> num, std::vector<Affine> den,
                             long m1, long m2) {
  Rational scalar = 1;
  for (auto dit = den.begin(); dit != den.end();) {
    bool cancelled = false;
    for (auto nit = num.begin(); nit != num.end(); ++nit) {
      if (auto r = proportionality(*nit, *dit)) {
        scalar *= *r;
        num.erase(nit);
        dit = den.erase(dit);
        cancelled = true;
        break;
      }
    }
    if (!cancelled) ++dit;
  }
  Rational value = scalar;
  for (const auto& f : num) value *= f.eval(m1, m2);
  for (const auto& f : den) {
    const Rational d = f.eval(m1, m2);
    if (d == 0)
      throw std::runtime_error(
          "derivative_coefficients: vanishing denominator after cancellation");
    value /= d;
  }
  return value;
}

}  // namespace

DerivativeCoefficients derivative_coefficients(const Coupling& k,
                                               const Weight& w) {
  const long m1 = w.p, m2 = w.q;
  const Rational& kp = k.kappa;
  DerivativeCoefficients out{Rational(0), Rational(0)};

  if (m1 >= 2 && m2 >= 1) {
    // m1 (m1-1) m2 (m1+m2+k-1)(m1+m2+k)
    // over (m1+k-1)(m1+k)(m1+m2+2k-1)(m1+m2+2k)
    std::vector<Affine> num = {{1, 0, 0},
                               {1, 0, -1},
                               {0, 1, 0},
                               {1, 1, kp - 1},
                               {1, 1, kp}};
    std::vector<Affine> den = {{1, 0, kp - 1},
                               {1, 0, kp},
                               {1, 1, 2 * kp - 1},
                               {1, 1, 2 * kp}};
    out.a = cancel_and_evaluate(std::move(num), std::move(den), m1, m2);
  }
  if (m2 >= 2) {
    // -m2 (m2-1)(m1+m2+k) over (m2+k-1)(m2+k)
    std::vector<Affine> num = {{0, 1, 0}, {0, 1, -1}, {1, 1, kp}};
    std::vector<Affine> den = {{0, 1, kp - 1}, {0, 1, kp}};
    out.b = -cancel_and_evaluate(std::move(num), std::move(den), m1, m2);
  }
  return out;
}

bool verify_derivative_identity(const Coupling& k, const Weight& w) {
  const ZPoly lhs = d_dz1(gegenbauer(k, w));
  const Coupling k1{k.kappa + 1};
  ZPoly rhs;
  if (w.p >= 1)
    rhs += Rational(w.p) * gegenbauer(k1, Weight(w.p - 1, w.q));
  const DerivativeCoefficients cs = derivative_coefficients(k, w);
  if (w.p >= 2 && w.q >= 1 && cs.a != 0)
    rhs += cs.a * gegenbauer(k1, Weight(w.p - 2, w.q - 1));
  if (w.q >= 2 && cs.b != 0)
    rhs += cs.b * gegenbauer(k1, Weight(w.p, w.q - 2));
  return lhs == rhs;
}

namespace {

// Cached x-expansions of the z-monomials z1^a z2^b.
const XLaurent& z_monomial_x(int a, int b) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, XLaurent> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({a, b});
  if (it != cache.end()) return it->second;

  XLaurent z1;
  z1.add_term(1, 0, 1);
  z1.add_term(0, 1, 1);
  z1.add_term(-1, -1, 1);
  XLaurent z2;
  z2.add_term(1, 1, 1);
  z2.add_term(0, -1, 1);
  z2.add_term(-1, 0, 1);

  // Extend from a cached neighbour when possible (mutex is non-recursive,
  // so no recursive lookup here).
  XLaurent value;
  if (auto base = cache.find({a - 1, b}); a > 0 && base != cache.end())
    value = base->second * z1;
  else if (auto base2 = cache.find({a, b - 1}); b > 0 && base2 != cache.end())
    value = base2->second * z2;
  else
    value =
        z1.pow(static_cast<unsigned>(a)) * z2.pow(static_cast<unsigned>(b));
  return cache.emplace(std::pair(a, b), std::move(value)).first->second;
}

}  // namespace

ZPoly x_to_z(const XLaurent& f) {
  ZPoly g;
  XLaurent r = f;
  std::optional<Weight> prev;
  while (!r.is_zero()) {
    Weight top(0, 0);
    bool first = true;
    for (const auto& [e, c] : r.terms()) {
      (void)c;
      const Weight w = dominant_representative(e.first, e.second);
      if (first || height_less(top, w)) top = w;
      first = false;
    }
    if (prev && !height_less(top, *prev))
      throw std::invalid_argument("x_to_z: input is not Weyl-invariant");
    const Integer c = r.coefficient(top.p + top.q, top.q);
    if (c == 0)
      throw std::invalid_argument("x_to_z: input is not Weyl-invariant");
    g.add_term(top.p, top.q, Rational(c));
    r -= c * z_monomial_x(top.p, top.q);
    prev = top;
  }
  return g;
}

XLaurent z_to_x(const ZPoly& g) {
  std::map<XLaurent::Exponent, Rational> acc;
  for (const auto& [e, c] : g.terms()) {
    const XLaurent& m = z_monomial_x(e.first, e.second);
    for (const auto& [xe, xc] : m.terms()) {
      auto [it, inserted] = acc.try_emplace(xe, c * Rational(xc));
      if (!inserted) it->second += c * Rational(xc);
    }
  }
  XLaurent out;
  for (const auto& [xe, c] : acc) {
    if (c == 0) continue;
    if (c.get_den() != 1)
      throw std::invalid_argument("z_to_x: non-integral coefficient");
    out.add_term(xe.first, xe.second, c.get_num());
  }
  return out;
}

}  // namespace su3franel
