#include "su3franel/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace su3franel {

Weight::Weight(int p_, int q_) : p(p_), q(q_) {
  if (p_ < 0 || q_ < 0)
    throw std::invalid_argument("Weight: labels must be non-negative");
}

bool height_less(const Weight& a, const Weight& b) {
  const long sa = a.p + a.q, sb = b.p + b.q;
  const long qa = long(a.p) * a.p + long(a.p) * a.q + long(a.q) * a.q;
  const long qb = long(b.p) * b.p + long(b.p) * b.q + long(b.q) * b.q;
  return std::tuple(sa, qa, -a.p) < std::tuple(sb, qb, -b.p);
}

bool in_root_lattice(const Weight& w) { return (w.p + 2 * w.q) % 3 == 0; }

int stabilizer_order(const Weight& w) {
  if (w.p == 0 && w.q == 0) return 6;
  if (w.p == 0 || w.q == 0) return 2;
  return 1;
}

int weyl_orbit_size(const Weight& w) { return 6 / stabilizer_order(w); }

bool dominance_lt(const Weight& a, const Weight& b) {
  const int dp = b.p - a.p, dq = b.q - a.q;
  if (dp == 0 && dq == 0) return false;
  const int c1 = 2 * dp + dq, c2 = dp + 2 * dq;
  return c1 >= 0 && c2 >= 0 && c1 % 3 == 0 && c2 % 3 == 0;
}

bool dominance_le(const Weight& a, const Weight& b) {
  return a == b || dominance_lt(a, b);
}

Weight mirror(const Weight& w) { return Weight(w.q, w.p); }

long long irrep_dimension(const Weight& w) {
  return static_cast<long long>(w.p + 1) * (w.q + 1) * (w.p + w.q + 2) / 2;
}

std::vector<Weight> dominant_weights_in_power(int n) {
  if (n < 0) throw std::invalid_argument("dominant_weights_in_power: n < 0");
  std::vector<Weight> out;
  for (int p = 0; 2 * p <= 3 * n; ++p)
    for (int q = 0; p + 2 * q <= 3 * n && 2 * p + q <= 3 * n; ++q)
      if ((p + 2 * q) % 3 == 0) out.emplace_back(p, q);
  std::sort(out.begin(), out.end(), height_less);
  return out;
}

}  // namespace su3franel
