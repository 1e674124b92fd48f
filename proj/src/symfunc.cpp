#include "su3franel/symfunc.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>

namespace su3franel {

void SymFn::add(const Weight& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

Integer SymFn::at(const Weight& w) const {
  auto it = coeffs.find(w);
  return it == coeffs.end() ? Integer(0) : it->second;
}

namespace {

Weight weight_of_tuple(std::array<long, 3> u) {
  std::sort(u.begin(), u.end(), std::greater<long>());
  return Weight(static_cast<int>(u[0] - u[1]), static_cast<int>(u[1] - u[2]));
}

}  // namespace

SymFn monomial_product(const Weight& w1, const Weight& w2) {
  const long p = w1.p, q = w1.q, r = w2.p, s = w2.q;
  const std::array<std::array<long, 3>, 6> tuples = {{
      {p + q + r + s, q + s, 0},
      {p + q + s, q + r + s, 0},
      {p + q + r + s, q, s},
      {p + q + s, q, r + s},
      {p + q, q + r + s, s},
      {p + q, q + s, r + s},
  }};
  SymFn acc{Basis::Monomial, {}};
  for (const auto& t : tuples) {
    const Weight mu = weight_of_tuple(t);
    acc.add(mu, stabilizer_order(mu));
  }
  const Integer g = Integer(stabilizer_order(w1)) * stabilizer_order(w2);
  SymFn out{Basis::Monomial, {}};
  for (const auto& [mu, c] : acc.coeffs) {
    if (!mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t()))
      throw std::logic_error("monomial_product: non-exact stabilizer division");
    out.coeffs.emplace(mu, c / g);
  }
  return out;
}

Integer weight_multiplicity(const Weight& w, int n) {
  if (n < 0) throw std::invalid_argument("weight_multiplicity: n < 0");
  if (!in_root_lattice(w)) return 0;
  // Mirror symmetry: normalize to p >= q before applying the sum.
  const long p = std::max(w.p, w.q), q = std::min(w.p, w.q);
  const long l = (p + 2 * q) / 3;
  Integer sum = 0;
  for (long j = 0; j <= n; ++j) {
    const Integer b1 = binomial(n, j);
    if (b1 == 0) continue;
    const Integer b2 = binomial(n, j + q - l);
    if (b2 == 0) continue;
    const Integer b3 = binomial(n, j + q - 2 * l);
    if (b3 == 0) continue;
    sum += b1 * b2 * b3;
  }
  return sum;
}

SymFn denominator_squared_expansion() {
  SymFn f{Basis::Monomial, {}};
  f.add(Weight(0, 0), -6);
  f.add(Weight(1, 1), 2);
  f.add(Weight(2, 2), 1);
  f.add(Weight(3, 0), -2);
  f.add(Weight(0, 3), -2);
  return f;
}

SymFn denominator_alternant_expansion(const Weight& w) {
  const int p = w.p, q = w.q;
  SymFn f{Basis::Monomial, {}};
  // Each entry carries the stabilizer factor of its own weight.
  auto add_tilde = [&f](int c, int d, int sign) {
    const Weight v(c, d);
    f.add(v, Integer(sign) * stabilizer_order(v));
  };
  add_tilde(p + 2, q + 2, +1);
  add_tilde(p + 3, q, -1);
  add_tilde(p, q + 3, -1);
  add_tilde(p, q, -1);
  if (p >= 1) add_tilde(p - 1, q + 2, +1);
  if (q >= 1) add_tilde(p + 2, q - 1, +1);
  if (p == 0) add_tilde(1, q + 1, +1);
  if (q == 0) add_tilde(p + 1, 1, +1);
  return f;
}

namespace {

bool validation_enabled(Validation v) {
  switch (v) {
    case Validation::On:
      return true;
    case Validation::Off:
      return false;
    case Validation::Default:
#ifdef NDEBUG
      return false;
#else
      return true;
#endif
  }
  return true;
}

SymFn solve_irrep_multiplicities(int n) {
  const std::vector<Weight> candidates = dominant_weights_in_power(n);

  // Left side: monomial expansion of denominator^2 * chi^n, assembled from
  // the product rule and the closed-form weight multiplicities.
  SymFn lhs{Basis::Monomial, {}};
  const SymFn d2 = denominator_squared_expansion();
  for (const Weight& nu2 : candidates) {
    const Integer a = weight_multiplicity(nu2, n);
    if (a == 0) continue;
    for (const auto& [nu1, c1] : d2.coeffs) {
      const SymFn prod = monomial_product(nu1, nu2);
      for (const auto& [alpha, cp] : prod.coeffs) lhs.add(alpha, c1 * a * cp);
    }
  }

  // Triangular solve, highest weight first. The pivot equation for mu sits
  // at alpha = mu + (2,2), the unique top term of the mu-expansion; every
  // other expansion hitting alpha belongs to a dominance-higher, already
  // solved weight.
  SymFn b{Basis::Character, {}};
  std::map<Weight, SymFn> expansions;
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const Weight mu = *it;
    const Weight alpha(mu.p + 2, mu.q + 2);
    Integer rhs = lhs.at(alpha);
    for (const auto& [mu2, bval] : b.coeffs)
      rhs -= bval * expansions.at(mu2).at(alpha);
    SymFn e_mu = denominator_alternant_expansion(mu);
    const Integer pivot = e_mu.at(alpha);
    if (pivot == 0)
      throw std::runtime_error("irrep_multiplicities: vanishing pivot");
    if (!mpz_divisible_p(rhs.get_mpz_t(), pivot.get_mpz_t()))
      throw std::runtime_error("irrep_multiplicities: inconsistent system");
    const Integer bval = rhs / pivot;
    if (bval != 0) {
      b.coeffs.emplace(mu, bval);
      expansions.emplace(mu, std::move(e_mu));
    }
  }

  // Consistency across every target weight, not only the pivots.
  SymFn recon{Basis::Monomial, {}};
  for (const auto& [mu, bval] : b.coeffs)
    for (const auto& [alpha, c] : expansions.at(mu).coeffs)
      recon.add(alpha, bval * c);
  if (recon.coeffs != lhs.coeffs)
    throw std::runtime_error("irrep_multiplicities: inconsistent system");
  return b;
}

}  // namespace

SymFn irrep_multiplicities(int n, Validation v) {
  if (n < 0) throw std::invalid_argument("irrep_multiplicities: n < 0");
  const bool validate = validation_enabled(v);

  struct Entry {
    SymFn fn;
    bool validated = false;
  };
  static std::mutex mu;
  static std::map<int, Entry> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end() && (!validate || it->second.validated))
      return it->second.fn;
  }

  SymFn b = solve_irrep_multiplicities(n);
  if (validate) {
    const auto oracle = decompose_in_characters(adjoint_character_x().pow(n));
    if (oracle != b.coeffs)
      throw std::logic_error(
          "irrep_multiplicities: disagreement with the character-peeling "
          "oracle");
  }

  std::lock_guard lock(mu);
  auto& entry = cache[n];
  entry.fn = b;
  entry.validated = entry.validated || validate;
  return entry.fn;
}

bool irrep_formula_check(const Weight& w, int n) {
  using Term = std::pair<Weight, int>;
  std::vector<Term> combo;
  if (w == Weight(0, 0))
    combo = {{{0, 0}, 1}, {{1, 1}, -2}, {{3, 0}, 2}, {{2, 2}, -1}};
  else if (w == Weight(1, 1))
    combo = {{{1, 1}, 1}, {{3, 0}, -2}, {{4, 1}, 2}, {{3, 3}, -1}};
  else if (w == Weight(3, 0))
    combo = {{{3, 0}, 1},  {{2, 2}, -1}, {{4, 1}, -1},
             {{6, 0}, 1},  {{3, 3}, 1},  {{5, 2}, -1}};
  else if (w == Weight(2, 2))
    combo = {{{2, 2}, 1}, {{4, 1}, -2}, {{5, 2}, 2}, {{4, 4}, -1}};
  else if (w == Weight(4, 1))
    combo = {{{4, 1}, 1}, {{6, 0}, -1}, {{3, 3}, -1},
             {{7, 1}, 1}, {{4, 4}, 1},  {{6, 3}, -1}};
  else if (w == Weight(6, 0))
    combo = {{{6, 0}, 1}, {{5, 2}, -1}, {{7, 1}, -1},
             {{6, 3}, 1}, {{9, 0}, 1},  {{8, 2}, -1}};
  else if (w == Weight(3, 3))
    combo = {{{3, 3}, 1}, {{5, 2}, -2}, {{6, 3}, 2}, {{5, 5}, -1}};
  else
    throw std::invalid_argument(
        "irrep_formula_check: no closed form for this weight");

  Integer expected = 0;
  for (const auto& [nu, c] : combo) expected += c * weight_multiplicity(nu, n);
  return expected == irrep_multiplicities(n).at(w);
}

std::vector<std::pair<Weight, Integer>> step_coefficients(const Weight& w) {
  if (!in_root_lattice(w))
    throw std::invalid_argument("step_coefficients: weight not in root lattice");
  // Candidate predecessors differ from w by a weight of the adjoint.
  static constexpr int shifts[7][2] = {{0, 0},  {1, 1},  {-1, -1}, {2, -1},
                                       {-2, 1}, {-1, 2}, {1, -2}};
  const Weight adj(1, 1);
  std::map<Weight, Integer> folded;
  for (const auto& s : shifts) {
    const int np = w.p + s[0], nq = w.q + s[1];
    if (np < 0 || nq < 0) continue;
    const Weight nu(np, nq);
    Integer c = monomial_product(adj, nu).at(w);
    if (nu == w) c += 2;
    if (c == 0) continue;
    const Weight rep(std::max(np, nq), std::min(np, nq));
    auto [it, inserted] = folded.try_emplace(rep, c);
    if (!inserted) it->second += c;
  }
  return {folded.begin(), folded.end()};
}

}  // namespace su3franel
