#include "su3franel/laurent.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>

namespace su3franel {

XLaurent XLaurent::constant(const Integer& c) { return monomial(0, 0, c); }

XLaurent XLaurent::monomial(int e1, int e2, const Integer& c) {
  XLaurent f;
  f.add_term(e1, e2, c);
  return f;
}

Integer XLaurent::coefficient(int e1, int e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer XLaurent::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void XLaurent::add_term(int e1, int e2, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

XLaurent& XLaurent::operator+=(const XLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

XLaurent& XLaurent::operator-=(const XLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

XLaurent operator*(const XLaurent& a, const XLaurent& b) {
  XLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

XLaurent operator*(const Integer& c, const XLaurent& f) {
  XLaurent out;
  for (const auto& [e, fc] : f.terms_) out.add_term(e.first, e.second, c * fc);
  return out;
}

XLaurent XLaurent::operator-() const { return Integer(-1) * *this; }

XLaurent XLaurent::pow(unsigned n) const {
  XLaurent result = constant(1);
  XLaurent base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Weight dominant_representative(int e1, int e2) {
  std::array<int, 3> u = {e1, e2, 0};
  std::sort(u.begin(), u.end(), std::greater<int>());
  return Weight(u[0] - u[1], u[1] - u[2]);
}

XLaurent monomial_symmetric_x(const Weight& w) {
  std::array<int, 3> t = {w.p + w.q, w.q, 0};
  std::sort(t.begin(), t.end());
  XLaurent f;
  do {
    f.add_term(t[0] - t[2], t[1] - t[2], 1);
  } while (std::next_permutation(t.begin(), t.end()));
  return f;
}

XLaurent adjoint_character_x() {
  // x3 = (x1 x2)^{-1} in each factor.
  const XLaurent x1 = XLaurent::monomial(1, 0);
  const XLaurent x2 = XLaurent::monomial(0, 1);
  const XLaurent x3 = XLaurent::monomial(-1, -1);
  return (x1 + x2) * (x1 + x3) * (x2 + x3);
}

XLaurent weyl_alternant_x(const Weight& w) {
  const std::array<int, 3> a = {w.p + w.q + 2, w.q + 1, 0};
  // All six permutations sigma with their signs; x_i carries a[sigma[i]].
  static constexpr struct {
    int s0, s1, s2, sign;
  } perms[6] = {{0, 1, 2, +1}, {0, 2, 1, -1}, {1, 0, 2, -1},
                {1, 2, 0, +1}, {2, 0, 1, +1}, {2, 1, 0, -1}};
  XLaurent f;
  for (const auto& pm : perms)
    f.add_term(a[pm.s0] - a[pm.s2], a[pm.s1] - a[pm.s2], pm.sign);
  return f;
}

namespace {

// Exact division in the Laurent ring. Leading terms are taken with respect
// to the lexicographic order on exponent pairs, which is translation
// invariant, so no shifting into ordinary polynomials is needed. Each step
// removes the leading term of the true quotient; a step cap guards against
// a non-exact dividend.
XLaurent divide_exact(const XLaurent& num, const XLaurent& den,
                      std::size_t cap) {
  if (den.is_zero()) throw std::logic_error("divide_exact: zero divisor");
  XLaurent r = num, q;
  const auto dlt = std::prev(den.terms().end());
  while (!r.is_zero()) {
    if (cap-- == 0)
      throw std::logic_error("divide_exact: division left a remainder");
    const auto rlt = std::prev(r.terms().end());
    if (!mpz_divisible_p(rlt->second.get_mpz_t(), dlt->second.get_mpz_t()))
      throw std::logic_error("divide_exact: division left a remainder");
    const Integer c = rlt->second / dlt->second;
    const int e1 = rlt->first.first - dlt->first.first;
    const int e2 = rlt->first.second - dlt->first.second;
    q.add_term(e1, e2, c);
    r -= XLaurent::monomial(e1, e2, c) * den;
  }
  return q;
}

}  // namespace

XLaurent weyl_character_x(const Weight& w) {
  static std::mutex mu;
  static std::map<Weight, XLaurent> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  const std::size_t cap = 64u * (w.p + w.q + 2) * (w.p + w.q + 2) + 1024u;
  XLaurent chi =
      divide_exact(weyl_alternant_x(w), weyl_alternant_x(Weight(0, 0)), cap);
  std::lock_guard lock(mu);
  return cache.emplace(w, std::move(chi)).first->second;
}

std::map<Weight, Integer> decompose_in_monomials(const XLaurent& f) {
  std::map<Weight, Integer> out;
  std::set<XLaurent::Exponent> seen;
  for (const auto& [e, c] : f.terms()) {
    if (seen.count(e)) continue;
    const Weight w = dominant_representative(e.first, e.second);
    const Integer ref = f.coefficient(w.p + w.q, w.q);
    const XLaurent orbit = monomial_symmetric_x(w);
    for (const auto& [oe, oc] : orbit.terms()) {
      (void)oc;
      if (f.coefficient(oe.first, oe.second) != ref)
        throw std::invalid_argument(
            "decompose_in_monomials: input is not Weyl-invariant");
      seen.insert(oe);
    }
    if (ref != 0) out.emplace(w, ref);
  }
  return out;
}

std::map<Weight, Integer> decompose_in_characters(const XLaurent& f) {
  std::map<Weight, Integer> out;
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
    // A stalled peel means subtracting the top character re-introduced terms
    // at or above the previous top, which cannot happen for an invariant
    // input: each step strictly lowers the highest surviving orbit.
    if (prev && !height_less(top, *prev))
      throw std::invalid_argument(
          "decompose_in_characters: input is not Weyl-invariant");
    const Integer c = r.coefficient(top.p + top.q, top.q);
    if (c == 0)
      throw std::invalid_argument(
          "decompose_in_characters: input is not Weyl-invariant");
    out.emplace(top, c);
    r -= c * weyl_character_x(top);
    prev = top;
  }
  return out;
}

}  // namespace su3franel
